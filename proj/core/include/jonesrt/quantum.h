#ifndef JONESRT_QUANTUM_H_
#define JONESRT_QUANTUM_H_

#include <optional>
#include <utility>
#include <vector>

#include "jonesrt/cyclotomic.h"
#include "jonesrt/laurent.h"

namespace jonesrt {

// Variable conventions. Polynomials in t are Jones-type values; polynomials
// in A are Kauffman-bracket values, related by t = -A^2. At level r, A is
// sent to zeta, the primitive root of order 4r held by CyclotomicField, so
// A^4 = e_r and t = -zeta^2 = zeta^(2r+2).
enum class Variable { kT, kA };

// [N] = t^(N-1) + t^(N-3) + ... + t^(1-N). Throws InputError for N < 1.
LaurentPolynomial QuantumInteger(int n);

// Monomial expansion of S_(N-1): pairs (cable size j, coefficient),
// ordered by decreasing j.
std::vector<std::pair<int, long>> ChebyshevCoefficients(int n);

// Value of p at x = zeta^exponent_scale.
CyclotomicValue EvalAtRoot(const LaurentPolynomial& p, int r, int exponent_scale);
CyclotomicValue EvalAtRoot(const LaurentPolynomial& p, int r, Variable var);

// Exponent of zeta representing the variable at level r.
int RootExponent(int r, Variable var);

// Substitutes t = -A^2.
LaurentPolynomial TToA(const LaurentPolynomial& p);
// Inverse of TToA; nullopt when p has a term of odd degree in A.
std::optional<LaurentPolynomial> AToT(const LaurentPolynomial& p);

}  // namespace jonesrt

#endif  // JONESRT_QUANTUM_H_
