#ifndef JONESRT_LAURENT_H_
#define JONESRT_LAURENT_H_

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jonesrt {

// Integer Laurent polynomial in one formal variable.
//
// Stored densely as a run of coefficients starting at `low_exponent()`. The
// representation is canonical: the first and last stored coefficients are
// nonzero, and the zero polynomial stores nothing. Equality is therefore
// structural.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial Constant(const mpz_class& c);
  static LaurentPolynomial Monomial(const mpz_class& c, int exponent);
  static LaurentPolynomial FromTerms(const std::map<int, mpz_class>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;

  mpz_class coefficient(int exponent) const;
  std::map<int, mpz_class> terms() const;
  // Dense view: coefficient of x^(low_exponent() + i).
  const std::vector<mpz_class>& dense() const { return coeffs_; }

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const mpz_class& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  // this += sign * x^shift * src, without materializing the shifted copy.
  void AddShifted(const LaurentPolynomial& src, int shift, int sign = 1);

  // x -> x^k; k may be negative.
  LaurentPolynomial Substitute(int k) const;
  LaurentPolynomial Shifted(int shift) const;
  LaurentPolynomial Pow(unsigned n) const;

  // Exact division. Returns nullopt when `divisor` does not divide `*this`.
  std::optional<LaurentPolynomial> DivideExact(const LaurentPolynomial& divisor) const;

  // Degree-ordered rendering, e.g. "t^2 + 1 + t^-2".
  std::string ToString(std::string_view var = "t") const;
  std::size_t Hash() const;

 private:
  void Normalize();
  void EnsureRange(int lo, int hi);

  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

}  // namespace jonesrt

#endif  // JONESRT_LAURENT_H_
