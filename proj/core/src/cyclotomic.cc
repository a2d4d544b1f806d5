#include "jonesrt/cyclotomic.h"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "jonesrt/errors.h"

namespace jonesrt {
namespace {

LaurentPolynomial CyclotomicPolynomial(int n) {
  LaurentPolynomial p = LaurentPolynomial::Monomial(1, n) - LaurentPolynomial::Constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = *p.DivideExact(CyclotomicPolynomial(d));
  }
  return p;
}

long Mod(long k, long n) {
  long m = k % n;
  return m < 0 ? m + n : m;
}

}  // namespace

CyclotomicField::CyclotomicField(int r) : level_(r), order_(4 * r) {
  LaurentPolynomial phi = CyclotomicPolynomial(order_);
  degree_ = phi.high_exponent();
  phi_.resize(degree_ + 1);
  for (int i = 0; i <= degree_; ++i) phi_[i] = phi.coefficient(i).get_si();

  powers_.assign(order_, std::vector<long>(degree_, 0));
  powers_[0][0] = 1;
  for (int k = 1; k < order_; ++k) {
    const auto& prev = powers_[k - 1];
    auto& cur = powers_[k];
    long carry = prev[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < degree_; ++i) cur[i] -= carry * phi_[i];
    }
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::ForLevel(int r) {
  if (r < 3) throw InputError("level must be >= 3, got " + std::to_string(r));
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const CyclotomicField>(r);
  cache.emplace(r, field);
  return field;
}

std::complex<double> CyclotomicField::Embedding(int k) const {
  double angle = 2.0 * std::numbers::pi * static_cast<double>(Mod(k, order_)) / order_;
  return {std::cos(angle), std::sin(angle)};
}

CyclotomicValue::CyclotomicValue(std::shared_ptr<const CyclotomicField> field)
    : field_(std::move(field)), coeffs_(field_->degree(), mpz_class(0)) {}

CyclotomicValue CyclotomicValue::Zero(int r) {
  return CyclotomicValue(CyclotomicField::ForLevel(r));
}

CyclotomicValue CyclotomicValue::One(int r) { return FromInteger(r, 1); }

CyclotomicValue CyclotomicValue::FromInteger(int r, const mpz_class& c) {
  CyclotomicValue v = Zero(r);
  v.coeffs_[0] = c;
  return v;
}

CyclotomicValue CyclotomicValue::FromCoefficients(int r, std::vector<mpz_class> coeffs) {
  CyclotomicValue v = Zero(r);
  if (coeffs.size() != v.coeffs_.size()) {
    throw InputError("cyclotomic coefficient vector has wrong length");
  }
  v.coeffs_ = std::move(coeffs);
  return v;
}

CyclotomicValue CyclotomicValue::RootPower(int r, long k, int sign) {
  CyclotomicValue v = Zero(r);
  const auto& row = v.field_->RootPower(static_cast<int>(Mod(k, v.field_->order())));
  for (std::size_t i = 0; i < row.size(); ++i) v.coeffs_[i] = sign * row[i];
  return v;
}

bool CyclotomicValue::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicValue::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue v = *this;
  for (auto& c : v.coeffs_) c = -c;
  return v;
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o) {
  if (!field_) return *this = o;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& o) {
  if (!field_) return *this = -o;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  const int d = a.field_->degree();
  std::vector<mpz_class> wide(2 * d - 1, mpz_class(0));
  for (int i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      mpz_addmul(wide[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  CyclotomicValue out(a.field_);
  for (int i = 0; i < d; ++i) out.coeffs_[i] = std::move(wide[i]);
  for (int k = d; k < 2 * d - 1; ++k) {
    if (wide[k] == 0) continue;
    const auto& row = a.field_->RootPower(k);
    for (int i = 0; i < d; ++i) {
      if (row[i] != 0) out.coeffs_[i] += row[i] * wide[k];
    }
  }
  return out;
}

CyclotomicValue& CyclotomicValue::operator*=(const CyclotomicValue& o) {
  *this = *this * o;
  return *this;
}

CyclotomicValue& CyclotomicValue::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.field_ == nullptr || b.field_ == nullptr) return a.field_ == b.field_;
  return a.field_->level() == b.field_->level() && a.coeffs_ == b.coeffs_;
}

void CyclotomicValue::AddRootPower(const CyclotomicValue& src, long k, int sign) {
  if (!field_) *this = CyclotomicValue(src.field_);
  const int d = field_->degree();
  const int n = field_->order();
  const long base = Mod(k, n);
  std::vector<mpz_class> tmp;
  const std::vector<mpz_class>* s = &src.coeffs_;
  if (&src == this) {
    tmp = src.coeffs_;
    s = &tmp;
  }
  for (int i = 0; i < d; ++i) {
    const mpz_class& c = (*s)[i];
    if (c == 0) continue;
    const auto& row = field_->RootPower(static_cast<int>((base + i) % n));
    for (int j = 0; j < d; ++j) {
      long w = row[j] * sign;
      if (w == 0) continue;
      if (w == 1) {
        coeffs_[j] += c;
      } else if (w == -1) {
        coeffs_[j] -= c;
      } else if (w > 0) {
        mpz_addmul_ui(coeffs_[j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(w));
      } else {
        mpz_submul_ui(coeffs_[j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-w));
      }
    }
  }
}

CyclotomicValue CyclotomicValue::TimesRootPower(long k) const {
  CyclotomicValue out(field_);
  out.AddRootPower(*this, k, 1);
  return out;
}

CyclotomicValue CyclotomicValue::Pow(unsigned n) const {
  CyclotomicValue result = FromInteger(level(), 1);
  CyclotomicValue base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::complex<double> CyclotomicValue::ToComplex() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) sum += coeffs_[i].get_d() * field_->Embedding(static_cast<int>(i));
  }
  return sum;
}

std::string CyclotomicValue::ToString() const {
  std::map<int, mpz_class> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) terms.emplace(static_cast<int>(i), coeffs_[i]);
  }
  return LaurentPolynomial::FromTerms(terms).ToString("z");
}

}  // namespace jonesrt
