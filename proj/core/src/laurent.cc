#include "jonesrt/laurent.h"

#include <algorithm>
#include <functional>
#include <sstream>

namespace jonesrt {

LaurentPolynomial LaurentPolynomial::Constant(const mpz_class& c) { return Monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::Monomial(const mpz_class& c, int exponent) {
  LaurentPolynomial p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::FromTerms(const std::map<int, mpz_class>& terms) {
  LaurentPolynomial p;
  if (terms.empty()) return p;
  p.low_ = terms.begin()->first;
  p.coeffs_.assign(terms.rbegin()->first - p.low_ + 1, mpz_class(0));
  for (const auto& [e, c] : terms) p.coeffs_[e - p.low_] += c;
  p.Normalize();
  return p;
}

bool LaurentPolynomial::is_one() const {
  return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

std::size_t LaurentPolynomial::term_count() const {
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; });
}

mpz_class LaurentPolynomial::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_exponent()) return 0;
  return coeffs_[exponent - low_];
}

std::map<int, mpz_class> LaurentPolynomial::terms() const {
  std::map<int, mpz_class> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

void LaurentPolynomial::Normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + last, coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + first);
  }
  low_ += static_cast<int>(first);
}

void LaurentPolynomial::EnsureRange(int lo, int hi) {
  if (coeffs_.empty()) {
    low_ = lo;
    coeffs_.assign(hi - lo + 1, mpz_class(0));
    return;
  }
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), low_ - lo, mpz_class(0));
    low_ = lo;
  }
  int cur_hi = high_exponent();
  if (hi > cur_hi) coeffs_.resize(coeffs_.size() + (hi - cur_hi), mpz_class(0));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void LaurentPolynomial::AddShifted(const LaurentPolynomial& src, int shift, int sign) {
  if (src.is_zero()) return;
  if (&src == this) {
    LaurentPolynomial copy = src;
    AddShifted(copy, shift, sign);
    return;
  }
  int lo = src.low_ + shift;
  EnsureRange(lo, src.high_exponent() + shift);
  std::size_t offset = lo - low_;
  for (std::size_t i = 0; i < src.coeffs_.size(); ++i) {
    if (sign > 0) {
      coeffs_[offset + i] += src.coeffs_[i];
    } else {
      coeffs_[offset + i] -= src.coeffs_[i];
    }
  }
  Normalize();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  AddShifted(o, 0, 1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  AddShifted(o, 0, -1);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(p.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  p.Normalize();
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::Substitute(int k) const {
  if (k == 0) {
    mpz_class sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return Constant(sum);
  }
  std::map<int, mpz_class> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out[(low_ + static_cast<int>(i)) * k] += coeffs_[i];
  }
  return FromTerms(out);
}

LaurentPolynomial LaurentPolynomial::Shifted(int shift) const {
  LaurentPolynomial p = *this;
  if (!p.is_zero()) p.low_ += shift;
  return p;
}

LaurentPolynomial LaurentPolynomial::Pow(unsigned n) const {
  LaurentPolynomial result = Constant(1);
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<LaurentPolynomial> LaurentPolynomial::DivideExact(
    const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPolynomial();
  const int dn = static_cast<int>(divisor.coeffs_.size());
  const mpz_class& lead = divisor.coeffs_.back();
  std::vector<mpz_class> rem = coeffs_;
  int qlen = static_cast<int>(rem.size()) - dn + 1;
  if (qlen <= 0) return std::nullopt;
  std::vector<mpz_class> quot(qlen);
  mpz_class q, r;
  for (int i = qlen - 1; i >= 0; --i) {
    mpz_class& top = rem[i + dn - 1];
    if (top == 0) continue;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) return std::nullopt;
    quot[i] = q;
    for (int j = 0; j < dn; ++j) rem[i + j] -= q * divisor.coeffs_[j];
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  LaurentPolynomial p;
  p.low_ = low_ - divisor.low_;
  p.coeffs_ = std::move(quot);
  p.Normalize();
  return p;
}

std::string LaurentPolynomial::ToString(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    int e = low_ + i;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::size_t LaurentPolynomial::Hash() const {
  std::size_t h = std::hash<int>()(low_);
  for (const auto& c : coeffs_) {
    std::size_t ch = std::hash<long>()(mpz_get_si(c.get_mpz_t())) ^
                     (mpz_sizeinbase(c.get_mpz_t(), 2) * 0x9e3779b97f4a7c15ULL);
    h = h * 1000003u ^ ch;
  }
  return h;
}

}  // namespace jonesrt
