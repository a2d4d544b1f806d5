#include "jonesrt/bounds.h"

#include <cmath>
#include <cstdlib>
#include <string>

#include "jonesrt/errors.h"

namespace jonesrt {

double CuspedLowerBound(int n) {
  if (n < 1) throw InputError("n must be >= 1, got " + std::to_string(n));
  return (n + 1) * kTetrahedronVolume;
}

double FillingLowerBound(int n, long q) {
  if (n < 1) throw InputError("n must be >= 1, got " + std::to_string(n));
  if (std::labs(q) <= 12) {
    throw InputError("the filling bound needs |q| > 12, got q = " + std::to_string(q));
  }
  const double qq = static_cast<double>(q) * static_cast<double>(q);
  return std::pow(1.0 - 127.0 / qq, 1.5) * n;
}

long HalfVolumeThreshold() {
  long q = 13;
  while (FillingLowerBound(1, q) <= 0.5) ++q;
  return q;
}

}  // namespace jonesrt
