#ifndef JONESRT_BOUNDS_H_
#define JONESRT_BOUNDS_H_

namespace jonesrt {

// Volume of the regular ideal tetrahedron, to five decimals.
inline constexpr double kTetrahedronVolume = 1.01494;

// (n + 1) * v3. Throws InputError for n < 1.
double CuspedLowerBound(int n);

// (1 - 127 / q^2)^(3/2) * n. Throws InputError for n < 1 or |q| <= 12.
double FillingLowerBound(int n, long q);

// Smallest q > 12 with FillingLowerBound(n, q) > n / 2.
long HalfVolumeThreshold();

}  // namespace jonesrt

#endif  // JONESRT_BOUNDS_H_
