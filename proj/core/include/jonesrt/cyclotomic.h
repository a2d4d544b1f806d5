#ifndef JONESRT_CYCLOTOMIC_H_
#define JONESRT_CYCLOTOMIC_H_

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "jonesrt/laurent.h"

namespace jonesrt {

// Z[zeta] for zeta = exp(2*pi*i / (4r)), in the power basis 1, zeta, ...,
// zeta^(d-1) with d = phi(4r). Instances are shared and immutable.
class CyclotomicField {
 public:
  // Cached per level; throws InputError for r < 3.
  static std::shared_ptr<const CyclotomicField> ForLevel(int r);

  int level() const { return level_; }
  int order() const { return order_; }
  int degree() const { return degree_; }
  // Monic minimal polynomial coefficients, low degree first (size degree+1).
  const std::vector<long>& minimal_polynomial() const { return phi_; }
  // Power-basis expansion of zeta^k for 0 <= k < order().
  const std::vector<long>& RootPower(int k) const { return powers_[k]; }
  std::complex<double> Embedding(int k) const;

  explicit CyclotomicField(int r);

 private:
  int level_;
  int order_;
  int degree_;
  std::vector<long> phi_;
  std::vector<std::vector<long>> powers_;
};

class CyclotomicValue {
 public:
  CyclotomicValue() = default;
  explicit CyclotomicValue(std::shared_ptr<const CyclotomicField> field);
  static CyclotomicValue Zero(int r);
  static CyclotomicValue One(int r);
  static CyclotomicValue FromInteger(int r, const mpz_class& c);
  // Power-basis coefficients; must have size phi(4r).
  static CyclotomicValue FromCoefficients(int r, std::vector<mpz_class> coeffs);
  // sign * zeta^k, k taken modulo the field order.
  static CyclotomicValue RootPower(int r, long k, int sign = 1);

  bool valid() const { return field_ != nullptr; }
  int level() const { return field_->level(); }
  const CyclotomicField& field() const { return *field_; }
  const std::shared_ptr<const CyclotomicField>& field_ptr() const { return field_; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  CyclotomicValue operator-() const;
  CyclotomicValue& operator+=(const CyclotomicValue& o);
  CyclotomicValue& operator-=(const CyclotomicValue& o);
  CyclotomicValue& operator*=(const CyclotomicValue& o);
  CyclotomicValue& operator*=(const mpz_class& c);
  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);

  // this += sign * zeta^k * src.
  void AddRootPower(const CyclotomicValue& src, long k, int sign = 1);
  // this *= zeta^k.
  CyclotomicValue TimesRootPower(long k) const;
  CyclotomicValue Pow(unsigned n) const;

  std::complex<double> ToComplex() const;
  // e.g. "1 - 2*z^3" with z the primitive root of order 4r.
  std::string ToString() const;

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<mpz_class> coeffs_;
};

}  // namespace jonesrt

#endif  // JONESRT_CYCLOTOMIC_H_
