#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

// Runs the qbern executable with args (shell syntax); stderr is discarded.
inline Result run(const std::string& args, const std::string& stderr_target = "/dev/null") {
  std::string cmd = std::string(QBERN_CLI_PATH) + " " + args + " 2>" + stderr_target;
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace cli
