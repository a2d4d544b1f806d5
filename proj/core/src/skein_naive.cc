#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jonesrt/errors.h"
#include "jonesrt/skein.h"

namespace jonesrt {
namespace {

int FindRoot(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

LaurentPolynomial LoopValue() { return LaurentPolynomial::FromTerms({{2, -1}, {-2, -1}}); }

LaurentPolynomial BracketNaive(const LinkDiagram& d, BracketNormalization norm) {
  const int c = static_cast<int>(d.crossings.size());
  if (c > kNaiveCrossingLimit) {
    throw BudgetError("naive bracket limited to " + std::to_string(kNaiveCrossingLimit) +
                          " crossings, diagram has " + std::to_string(c),
                      c);
  }
  // Endpoints 4x+s; the two endpoints of each edge are glued.
  std::unordered_map<int, int> first_end;
  std::vector<std::pair<int, int>> glue;
  for (int x = 0; x < c; ++x) {
    for (int s = 0; s < 4; ++s) {
      int e = d.crossings[x].edges[s];
      auto [it, fresh] = first_end.emplace(e, 4 * x + s);
      if (!fresh) glue.emplace_back(it->second, 4 * x + s);
    }
  }
  int free_loops = 0;
  for (const auto& comp : d.components) {
    bool touches = false;
    for (int e : comp) touches = touches || first_end.count(e);
    if (!touches) ++free_loops;
  }

  // counts[(a - b, loops)] = number of states.
  std::map<std::pair<int, int>, long> counts;
  std::vector<int> parent(4 * c);
  for (long mask = 0; mask < (1L << c); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    auto join = [&](int u, int v) { parent[FindRoot(parent, u)] = FindRoot(parent, v); };
    for (const auto& [u, v] : glue) join(u, v);
    int a_minus_b = 0;
    for (int x = 0; x < c; ++x) {
      if (mask & (1L << x)) {
        join(4 * x + 0, 4 * x + 3);
        join(4 * x + 1, 4 * x + 2);
        --a_minus_b;
      } else {
        join(4 * x + 0, 4 * x + 1);
        join(4 * x + 2, 4 * x + 3);
        ++a_minus_b;
      }
    }
    int loops = 0;
    for (int i = 0; i < 4 * c; ++i) loops += FindRoot(parent, i) == i ? 1 : 0;
    ++counts[{a_minus_b, loops + free_loops}];
  }
  if (c == 0) counts[{0, free_loops}] = 1;

  const LaurentPolynomial delta = LoopValue();
  std::map<int, LaurentPolynomial> delta_pow;
  LaurentPolynomial result;
  for (const auto& [key, n] : counts) {
    auto [shift, loops] = key;
    auto it = delta_pow.find(loops);
    if (it == delta_pow.end()) it = delta_pow.emplace(loops, delta.Pow(loops)).first;
    LaurentPolynomial term = it->second.Shifted(shift);
    term *= mpz_class(n);
    result += term;
  }
  if (norm.zero_framed) {
    int w = Writhe(d);
    result = result.Shifted(-3 * w);
    if (w % 2 != 0) result = -result;
  }
  if (norm.reduced) {
    if (d.components.empty()) throw InputError("reduced bracket needs a nonempty link");
    auto q = result.DivideExact(delta);
    if (!q) throw DomainError("bracket not divisible by the loop value");
    result = *q;
  }
  return result;
}

}  // namespace jonesrt
