#include "jonesrt/quantum.h"

#include <map>
#include <string>

#include "jonesrt/errors.h"

namespace jonesrt {

LaurentPolynomial QuantumInteger(int n) {
  if (n < 1) throw InputError("quantum integer needs N >= 1, got " + std::to_string(n));
  std::map<int, mpz_class> terms;
  for (int e = n - 1; e >= 1 - n; e -= 2) terms[e] = 1;
  return LaurentPolynomial::FromTerms(terms);
}

std::vector<std::pair<int, long>> ChebyshevCoefficients(int n) {
  if (n < 1) throw InputError("Chebyshev index needs N >= 1, got " + std::to_string(n));
  // Coefficient vectors indexed by power of x.
  std::vector<long> prev{1};
  std::vector<long> cur{0, 1};
  if (n == 1) return {{0, 1}};
  for (int k = 2; k < n; ++k) {
    std::vector<long> next(k + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::vector<std::pair<int, long>> out;
  for (int j = static_cast<int>(cur.size()) - 1; j >= 0; --j) {
    if (cur[j] != 0) out.emplace_back(j, cur[j]);
  }
  return out;
}

int RootExponent(int r, Variable var) { return var == Variable::kT ? 2 * r + 2 : 1; }

CyclotomicValue EvalAtRoot(const LaurentPolynomial& p, int r, int exponent_scale) {
  auto field = CyclotomicField::ForLevel(r);
  const long n = field->order();
  std::vector<mpz_class> acc(field->degree(), mpz_class(0));
  const auto& dense = p.dense();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] == 0) continue;
    long e = static_cast<long>(p.low_exponent() + static_cast<int>(i)) * exponent_scale;
    const auto& row = field->RootPower(static_cast<int>(((e % n) + n) % n));
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) acc[j] += row[j] * dense[i];
    }
  }
  return CyclotomicValue::FromCoefficients(r, std::move(acc));
}

CyclotomicValue EvalAtRoot(const LaurentPolynomial& p, int r, Variable var) {
  return EvalAtRoot(p, r, RootExponent(r, var));
}

LaurentPolynomial TToA(const LaurentPolynomial& p) {
  std::map<int, mpz_class> terms;
  for (const auto& [e, c] : p.terms()) terms[2 * e] = (e % 2 == 0) ? c : mpz_class(-c);
  return LaurentPolynomial::FromTerms(terms);
}

std::optional<LaurentPolynomial> AToT(const LaurentPolynomial& p) {
  std::map<int, mpz_class> terms;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) return std::nullopt;
    int k = e / 2;
    terms[k] = (k % 2 == 0) ? c : mpz_class(-c);
  }
  return LaurentPolynomial::FromTerms(terms);
}

}  // namespace jonesrt
