#ifndef JONESRT_SRC_SKEIN_RINGS_H_
#define JONESRT_SRC_SKEIN_RINGS_H_

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <vector>

#include "jonesrt/cyclotomic.h"
#include "jonesrt/diagram.h"
#include "jonesrt/laurent.h"
#include "jonesrt/quantum.h"
#include "jonesrt/skein.h"

namespace jonesrt::internal {

// Coefficient rings for the contraction engine. AddMonomial computes
// acc += sign * A^a_exp * delta^loops * v.

struct LaurentRing {
  using Value = LaurentPolynomial;
  Value Zero() const { return {}; }
  Value One() const { return LaurentPolynomial::Constant(1); }
  bool IsZero(const Value& v) const { return v.is_zero(); }

  static Value TimesDelta(const Value& v, int loops) {
    Value cur = v;
    for (int i = 0; i < loops; ++i) {
      Value next;
      next.AddShifted(cur, 2, -1);
      next.AddShifted(cur, -2, -1);
      cur = std::move(next);
    }
    return cur;
  }
  void AddMonomial(Value& acc, const Value& v, int a_exp, int sign, int loops) const {
    if (loops == 0) {
      acc.AddShifted(v, a_exp, sign);
    } else {
      acc.AddShifted(TimesDelta(v, loops), a_exp, sign);
    }
  }
  void AddProduct(Value& acc, const Value& v, const Value& coeff, int loops) const {
    acc += TimesDelta(v * coeff, loops);
  }
};

struct CyclotomicRing {
  using Value = CyclotomicValue;
  explicit CyclotomicRing(int r) : r(r), a_power(RootExponent(r, Variable::kA)) {}
  int r;
  long a_power;

  Value Zero() const { return CyclotomicValue::Zero(r); }
  Value One() const { return CyclotomicValue::One(r); }
  bool IsZero(const Value& v) const { return v.is_zero(); }

  Value TimesDelta(const Value& v, int loops) const {
    Value cur = v;
    for (int i = 0; i < loops; ++i) {
      Value next = Zero();
      next.AddRootPower(cur, 2 * a_power, -1);
      next.AddRootPower(cur, -2 * a_power, -1);
      cur = std::move(next);
    }
    return cur;
  }
  void AddMonomial(Value& acc, const Value& v, int a_exp, int sign, int loops) const {
    if (loops == 0) {
      acc.AddRootPower(v, a_exp * a_power, sign);
    } else {
      acc.AddRootPower(TimesDelta(v, loops), a_exp * a_power, sign);
    }
  }
  void AddProduct(Value& acc, const Value& v, const Value& coeff, int loops) const {
    acc += TimesDelta(v * coeff, loops);
  }
};

// Overflow of the fixed-width ring; callers retry with CyclotomicRing.
struct SmallRingOverflow {};

// Z[x]/(x^(2r) + 1) with checked 64-bit coefficients, mapped onto Z[zeta]
// by x -> zeta. Multiplying by zeta^k is a signed rotation.
struct SmallCyclotomicRing {
  static constexpr int kMaxLength = 32;
  struct Value {
    std::array<std::int64_t, kMaxLength> c{};
  };
  explicit SmallCyclotomicRing(int r) : r(r), n(2 * r), a_power(RootExponent(r, Variable::kA)) {}
  static bool Supports(int r) { return r >= 3 && 2 * r <= kMaxLength; }
  int r;
  int n;
  long a_power;

  Value Zero() const { return {}; }
  Value One() const {
    Value v;
    v.c[0] = 1;
    return v;
  }
  bool IsZero(const Value& v) const {
    for (int i = 0; i < n; ++i) {
      if (v.c[i] != 0) return false;
    }
    return true;
  }

  static void CheckedAdd(std::int64_t& acc, std::int64_t x, int sign) {
    const bool bad =
        sign > 0 ? __builtin_add_overflow(acc, x, &acc) : __builtin_sub_overflow(acc, x, &acc);
    if (bad) throw SmallRingOverflow{};
  }
  // acc += sign * x^k * v
  void AddRotated(Value& acc, const Value& v, long k, int sign) const {
    const long period = 2L * n;
    k = ((k % period) + period) % period;
    int shift = static_cast<int>(k % n);
    int s = k >= n ? -sign : sign;
    for (int i = 0; i < n; ++i) {
      int j = i + shift;
      int si = s;
      if (j >= n) {
        j -= n;
        si = -si;
      }
      if (v.c[i] != 0) CheckedAdd(acc.c[j], v.c[i], si);
    }
  }
  Value TimesDelta(const Value& v, int loops) const {
    Value cur = v;
    for (int i = 0; i < loops; ++i) {
      Value next;
      AddRotated(next, cur, 2 * a_power, -1);
      AddRotated(next, cur, -2 * a_power, -1);
      cur = next;
    }
    return cur;
  }
  void AddMonomial(Value& acc, const Value& v, int a_exp, int sign, int loops) const {
    if (loops == 0) {
      AddRotated(acc, v, a_exp * a_power, sign);
    } else {
      AddRotated(acc, TimesDelta(v, loops), a_exp * a_power, sign);
    }
  }
  void AddProduct(Value& acc, const Value& v, const Value& coeff, int loops) const {
    Value prod;
    for (int i = 0; i < n; ++i) {
      if (v.c[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (coeff.c[j] == 0) continue;
        std::int64_t term;
        if (__builtin_mul_overflow(v.c[i], coeff.c[j], &term)) throw SmallRingOverflow{};
        const int k = i + j;
        if (k < n) {
          CheckedAdd(prod.c[k], term, 1);
        } else {
          CheckedAdd(prod.c[k - n], term, -1);
        }
      }
    }
    const Value scaled = TimesDelta(prod, loops);
    for (int i = 0; i < n; ++i) CheckedAdd(acc.c[i], scaled.c[i], 1);
  }
  CyclotomicValue ToCyclotomic(const Value& v) const {
    CyclotomicValue out = CyclotomicValue::Zero(r);
    for (int i = 0; i < n; ++i) {
      if (v.c[i] != 0)
        out.AddRootPower(CyclotomicValue::FromInteger(r, mpz_class(static_cast<long>(v.c[i]))), i);
    }
    return out;
  }
};

struct ComplexRing {
  using Value = std::complex<double>;
  explicit ComplexRing(int r) : r(r) {
    const int order = 4 * r;
    roots.resize(order);
    for (int k = 0; k < order; ++k) roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / order);
    const long a = RootExponent(r, Variable::kA);
    delta = -Root(2 * a) - Root(-2 * a);
  }
  int r;
  std::vector<Value> roots;
  Value delta;

  Value Root(long k) const {
    const long order = 4L * r;
    return roots[((k % order) + order) % order];
  }
  Value Zero() const { return 0.0; }
  Value One() const { return 1.0; }
  bool IsZero(const Value& v) const { return v == 0.0; }
  Value TimesDelta(Value v, int loops) const {
    for (int i = 0; i < loops; ++i) v *= delta;
    return v;
  }
  void AddMonomial(Value& acc, const Value& v, int a_exp, int sign, int loops) const {
    acc += static_cast<double>(sign) *
           Root(static_cast<long>(a_exp) * RootExponent(r, Variable::kA)) * TimesDelta(v, loops);
  }
  void AddProduct(Value& acc, const Value& v, const Value& coeff, int loops) const {
    acc += TimesDelta(v * coeff, loops);
  }
};

template <class Ring>
typename Ring::Value Evaluate(const Ring& ring, const LinkDiagram& d, const EngineOptions& opts);

}  // namespace jonesrt::internal

#endif  // JONESRT_SRC_SKEIN_RINGS_H_
