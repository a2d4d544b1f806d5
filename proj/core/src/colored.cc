#include "jonesrt/colored.h"

#include <string>

#include "jonesrt/diagram_io.h"
#include "jonesrt/diagram_ops.h"
#include "jonesrt/errors.h"
#include "jonesrt/quantum.h"

namespace jonesrt {
namespace {

std::string CacheKey(const LinkDiagram& d, const std::vector<int>& strands) {
  std::string key = SerializeDiagram(d);
  for (int s : strands) key += "," + std::to_string(s);
  return key;
}

LinkDiagram Base(const LinkDiagram& d, bool framed) {
  return framed ? d : WithFramings(d, std::vector<int>(d.num_components(), 0));
}

void CheckColors(const LinkDiagram& d, const std::vector<int>& colors) {
  if (colors.size() != d.num_components()) {
    throw InputError("coloring has " + std::to_string(colors.size()) + " entries for a " +
                     std::to_string(d.num_components()) + "-component link");
  }
  for (int c : colors) {
    if (c < 1) throw InputError("colors must be >= 1, got " + std::to_string(c));
  }
}

void CheckKnot(const LinkDiagram& d) {
  if (d.num_components() != 1) {
    throw InputError("colored Jones of a knot needs one component, got " +
                     std::to_string(d.num_components()) + "; use a multi-colored coloring");
  }
}

std::shared_ptr<const LinkDiagram> GetCable(const LinkDiagram& base,
                                            const std::vector<int>& strands, CableCache* cache) {
  if (cache != nullptr) return cache->Get(base, strands);
  return std::make_shared<const LinkDiagram>(Cable(base, strands));
}

}  // namespace

std::shared_ptr<const LinkDiagram> CableCache::Get(const LinkDiagram& d,
                                                   const std::vector<int>& strands) {
  const std::string key = CacheKey(d, strands);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }
  auto built = std::make_shared<const LinkDiagram>(Cable(d, strands));
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.emplace(key, std::move(built)).first->second;
}

std::size_t CableCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::vector<std::pair<std::vector<int>, long>> CableExpansion(const std::vector<int>& colors) {
  std::vector<std::pair<std::vector<int>, long>> out{{{}, 1}};
  for (int n : colors) {
    std::vector<std::pair<std::vector<int>, long>> next;
    for (const auto& [strands, coeff] : out) {
      for (const auto& [j, c] : ChebyshevCoefficients(n)) {
        std::vector<int> s = strands;
        s.push_back(j);
        next.emplace_back(std::move(s), coeff * c);
      }
    }
    out = std::move(next);
  }
  return out;
}

LaurentPolynomial MultiColoredJones(const LinkDiagram& d, const std::vector<int>& colors,
                                    bool framed, const EngineOptions& opts, CableCache* cache) {
  CheckColors(d, colors);
  const LinkDiagram base = Base(d, framed);
  LaurentPolynomial total;
  for (const auto& [strands, coeff] : CableExpansion(colors)) {
    LaurentPolynomial v = UnreducedJones(*GetCable(base, strands, cache), true, opts);
    v *= mpz_class(coeff);
    total += v;
  }
  return total;
}

LaurentPolynomial ColoredJones(const LinkDiagram& d, int n, bool framed, const EngineOptions& opts,
                               CableCache* cache) {
  CheckKnot(d);
  return MultiColoredJones(d, {n}, framed, opts, cache);
}

CyclotomicValue MultiColoredJonesAtRoot(const LinkDiagram& d, const std::vector<int>& colors, int r,
                                        bool framed, const EngineOptions& opts, CableCache* cache) {
  CheckColors(d, colors);
  const LinkDiagram base = Base(d, framed);
  CyclotomicValue total = CyclotomicValue::Zero(r);
  for (const auto& [strands, coeff] : CableExpansion(colors)) {
    CyclotomicValue v = UnreducedJonesAtRoot(*GetCable(base, strands, cache), true, r, opts);
    v *= mpz_class(coeff);
    total += v;
  }
  return total;
}

CyclotomicValue ColoredJonesAtRoot(const LinkDiagram& d, int n, int r, bool framed,
                                   const EngineOptions& opts, CableCache* cache) {
  CheckKnot(d);
  return MultiColoredJonesAtRoot(d, {n}, r, framed, opts, cache);
}

std::complex<double> MultiColoredJonesAtRootFloat(const LinkDiagram& d,
                                                  const std::vector<int>& colors, int r,
                                                  bool framed, const EngineOptions& opts,
                                                  CableCache* cache) {
  CheckColors(d, colors);
  const LinkDiagram base = Base(d, framed);
  std::complex<double> total = 0.0;
  for (const auto& [strands, coeff] : CableExpansion(colors)) {
    total += static_cast<double>(coeff) *
             UnreducedJonesAtRootFloat(*GetCable(base, strands, cache), true, r, opts);
  }
  return total;
}

LaurentPolynomial FramingFactor(int n, int f) {
  if (n < 1) throw InputError("framing factor needs N >= 1, got " + std::to_string(n));
  const int sign = ((n - 1) % 2 != 0 && f % 2 != 0) ? -1 : 1;
  return LaurentPolynomial::Monomial(sign, f * (n * n - 1));
}

}  // namespace jonesrt
