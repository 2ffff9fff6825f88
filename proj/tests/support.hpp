#pragma once

#include <vector>

#include "qbern/qcore.hpp"

namespace test {

inline qbern::Rational R(const char* text) { return qbern::parse_rational(text); }
inline qbern::QParam Q(const char* text) { return qbern::QParam::parse(text); }

inline const std::vector<qbern::QParam>& sample_qs() {
  static const std::vector<qbern::QParam> qs{Q("1/2"), Q("1/3"), Q("3/4")};
  return qs;
}

}  // namespace test
