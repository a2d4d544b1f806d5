#ifndef JONESRT_RT_H_
#define JONESRT_RT_H_

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "jonesrt/colored.h"
#include "jonesrt/cyclotomic.h"
#include "jonesrt/diagram.h"
#include "jonesrt/skein.h"

namespace jonesrt {

struct SurgeryPresentation {
  LinkDiagram link;
  std::string label;
};

// Accepts {"link": <diagram>, "label": "..."} or a bare diagram document.
SurgeryPresentation ParsePresentation(std::string_view text);
std::string SerializePresentation(const SurgeryPresentation& p);

struct Signature {
  int positive = 0;
  int negative = 0;
  int nullity = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Symmetric elimination over the rationals (Sylvester's law of inertia).
// Throws InputError for a non-symmetric matrix.
Signature ComputeSignature(const LinkingMatrix& m);
// Independent route: sign changes of the characteristic polynomial, exact for
// real-rooted polynomials.
Signature SignatureFromCharacteristicPolynomial(const LinkingMatrix& m);
// Characteristic polynomial det(xI - M), low degree first.
std::vector<mpq_class> CharacteristicPolynomial(const LinkingMatrix& m);

enum class Arithmetic { kExact, kFloat };

struct RtOptions {
  EngineOptions engine;
  Arithmetic arithmetic = Arithmetic::kExact;
  // Maximum number of cable evaluations, (r-1)^m per split piece.
  long max_colorings = DefaultMaxColorings();
  int jobs = 1;
  CableCache* cache = nullptr;

  // JONESRT_MAX_COLORINGS when set, else 124.
  static long DefaultMaxColorings();
};

// Value in Q(zeta), zeta = exp(2 pi i / 4r), with its complex shadow. Float
// results carry only the shadow.
struct RTValue {
  int level = 0;
  bool exact = true;
  std::vector<mpq_class> coefficients;
  std::complex<double> approx;

  bool IsOne(double tolerance = 0.0) const;
  // Exact: equal coefficients. Otherwise |a - b| <= tolerance.
  static bool Equal(const RTValue& a, const RTValue& b, double tolerance);
  std::string ToString() const;
};

// F(L) = sum over colorings n of prod [n_i] * J_n(L) at e_r, framed.
CyclotomicValue SurgerySum(const LinkDiagram& link, int r, const RtOptions& opts = {});
std::complex<double> SurgerySumFloat(const LinkDiagram& link, int r, const RtOptions& opts = {});

// tau_r = F(L) / (F(U+)^s+ F(U-)^s-). Throws InputError for r < 3,
// DomainError when the normalizer vanishes, BudgetError over budget.
RTValue RtInvariant(const SurgeryPresentation& p, int r, const RtOptions& opts = {});

// tau_r of surgery on q 0-framed parallel copies of the knot k, each with
// the given framing, via level-r truncated fusion: the copies colored
// (n_1..n_q) contribute the colored Jones values J_c(k) of k itself for the
// colors c in V_(n_1) x ... x V_(n_q). Needs cables of k with at most r-2
// strands.
RTValue ParallelSurgeryInvariant(const LinkDiagram& k, int q, int framing, int r,
                                 const RtOptions& opts = {});

// tau_r(p) = tau_r(p + U+) = tau_r(p + U-).
bool VerifyKirbyStability(const SurgeryPresentation& p, int r, const RtOptions& opts = {},
                          double tolerance = 1e-9);

}  // namespace jonesrt

#endif  // JONESRT_RT_H_
