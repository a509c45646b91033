#pragma once

#include <cmath>

namespace casimir::detail {

// lgamma without touching the global signgam.
inline double log_gamma(double x) {
#if defined(__GLIBC__) || defined(__APPLE__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

} // namespace casimir::detail
