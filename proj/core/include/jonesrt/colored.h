#ifndef JONESRT_COLORED_H_
#define JONESRT_COLORED_H_

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jonesrt/cyclotomic.h"
#include "jonesrt/diagram.h"
#include "jonesrt/laurent.h"
#include "jonesrt/skein.h"

namespace jonesrt {

// Cable diagrams keyed by (diagram, strand vector). Thread-safe.
class CableCache {
 public:
  std::shared_ptr<const LinkDiagram> Get(const LinkDiagram& d, const std::vector<int>& strands);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<const LinkDiagram>> entries_;
};

// Colored Jones of a one-component diagram in the bracket variable A,
// normalized so the unknot gives [N]. framed = false uses the 0-framing;
// otherwise the stored framing. Throws InputError for multi-component input.
LaurentPolynomial ColoredJones(const LinkDiagram& d, int n, bool framed = false,
                               const EngineOptions& opts = {}, CableCache* cache = nullptr);

// One color per component.
LaurentPolynomial MultiColoredJones(const LinkDiagram& d, const std::vector<int>& colors,
                                    bool framed = false, const EngineOptions& opts = {},
                                    CableCache* cache = nullptr);

// Same values evaluated at level r (t = e_r).
CyclotomicValue ColoredJonesAtRoot(const LinkDiagram& d, int n, int r, bool framed = false,
                                   const EngineOptions& opts = {}, CableCache* cache = nullptr);
CyclotomicValue MultiColoredJonesAtRoot(const LinkDiagram& d, const std::vector<int>& colors, int r,
                                        bool framed = false, const EngineOptions& opts = {},
                                        CableCache* cache = nullptr);
std::complex<double> MultiColoredJonesAtRootFloat(const LinkDiagram& d,
                                                  const std::vector<int>& colors, int r,
                                                  bool framed = false,
                                                  const EngineOptions& opts = {},
                                                  CableCache* cache = nullptr);

// ((-1)^(N-1) A^(N^2-1))^f, the change of the colored Jones when the framing
// grows by f.
LaurentPolynomial FramingFactor(int n, int f);

// Chebyshev expansion of the colors: pairs (strand vector, coefficient).
std::vector<std::pair<std::vector<int>, long>> CableExpansion(const std::vector<int>& colors);

}  // namespace jonesrt

#endif  // JONESRT_COLORED_H_
