#pragma once

#include <cstdio>
#include <string>

namespace holo {

/// Six significant digits, `.` decimal separator, no locale dependence.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace holo
