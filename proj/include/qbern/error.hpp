#pragma once

#include <stdexcept>
#include <string>

namespace qbern {

/// Malformed input or a violated precondition (negative index, k > n, bad
/// rational literal, empty grid set).
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input that is well formed but outside the domain of the mathematics:
/// q = 0 or q = 1, a series without an invertible constant term.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qbern
