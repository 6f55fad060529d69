#pragma once

#include <cmath>
#include <string>

#include "tnet/error.hpp"

namespace tnet {

// Binary entropy h(x) = -x log2 x - (1-x) log2 (1-x) on (0, 1).
inline double entropy(double x) {
  require(x > 0.0 && x < 1.0, ErrorCode::DomainError, "entropy needs 0 < x < 1, got " + std::to_string(x));
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Inverse of h restricted to (0, 1/2], by bisection.
//
// h is increasing on (0, 1/2]; 80 halvings of the initial bracket bring its
// width below 1e-24, far under the 1e-12 target.
inline double entropy_inverse(double y) {
  require(y > 0.0 && y <= 1.0, ErrorCode::DomainError,
          "entropy_inverse needs 0 < y <= 1, got " + std::to_string(y));
  if (y == 1.0) return 0.5;
  double lo = 0.0;
  double hi = 0.5;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= 0.0 || entropy(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// gamma_t = 1 / (t * h^{-1}(1/t)), the growth factor of VC-dimension under
// the t-subset lift. Undefined for t = 1.
inline double gamma(int t) {
  require(t >= 2, ErrorCode::DomainError, "gamma needs t >= 2, got " + std::to_string(t));
  return 1.0 / (t * entropy_inverse(1.0 / t));
}

}  // namespace tnet
