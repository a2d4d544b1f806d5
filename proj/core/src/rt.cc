#include "jonesrt/rt.h"

#include <cmath>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>

#include "jonesrt/colored.h"
#include "jonesrt/diagram_ops.h"
#include "jonesrt/errors.h"
#include "jonesrt/quantum.h"
#include "json_internal.h"

namespace jonesrt {
namespace {

void CheckLevel(int r) {
  if (r < 3) throw InputError("level r must be >= 3, got " + std::to_string(r));
}

// Groups of components not joined by any crossing.
std::vector<std::vector<bool>> SplitPieces(const LinkDiagram& d) {
  const int m = static_cast<int>(d.num_components());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& slots : SlotComponents(d)) {
    for (int s = 1; s < 4; ++s) parent[find(slots[s])] = find(slots[0]);
  }
  std::map<int, std::vector<bool>> groups;
  for (int i = 0; i < m; ++i) {
    auto [it, fresh] = groups.try_emplace(find(i), std::vector<bool>(m, false));
    it->second[i] = true;
  }
  std::vector<std::vector<bool>> out;
  for (auto& [root, keep] : groups) out.push_back(std::move(keep));
  return out;
}

// All strand vectors in {0..r-2}^m, lexicographic.
std::vector<std::vector<int>> StrandVectors(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == r - 2) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

void CheckBudget(int m, int r, long limit) {
  double count = std::pow(static_cast<double>(r - 1), m);
  if (count > static_cast<double>(limit)) {
    throw BudgetError("surgery sum needs " + std::to_string(static_cast<long>(count)) +
                          " cable evaluations (" + std::to_string(m) + " linked components at r=" +
                          std::to_string(r) + "), limit is " + std::to_string(limit),
                      static_cast<long>(count));
  }
}

// omega_j = sum_n [n] * (coefficient of x^j in S_(n-1)), n = 1..r-1.
std::vector<CyclotomicValue> Weights(int r) {
  std::vector<CyclotomicValue> w(r - 1, CyclotomicValue::Zero(r));
  for (int n = 1; n <= r - 1; ++n) {
    CyclotomicValue qn = EvalAtRoot(QuantumInteger(n), r, Variable::kT);
    for (const auto& [j, c] : ChebyshevCoefficients(n)) {
      CyclotomicValue term = qn;
      term *= mpz_class(c);
      w[j] += term;
    }
  }
  return w;
}

template <class T, class F>
std::vector<T> RunAll(std::size_t n, int jobs, F fn) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&]() {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= n) return;
        i = next++;
      }
      out[i] = fn(i);
    }
  };
  std::vector<std::future<void>> pool;
  for (int t = 0; t < jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return out;
}

std::shared_ptr<const LinkDiagram> CableOf(const LinkDiagram& d, const std::vector<int>& strands,
                                           CableCache* cache) {
  if (cache != nullptr) return cache->Get(d, strands);
  return std::make_shared<const LinkDiagram>(Cable(d, strands));
}

CyclotomicValue PieceSum(const LinkDiagram& piece, int r, const RtOptions& opts,
                         const std::vector<CyclotomicValue>& w) {
  const int m = static_cast<int>(piece.num_components());
  CheckBudget(m, r, opts.max_colorings);
  const auto vectors = StrandVectors(m, r);
  auto values = RunAll<CyclotomicValue>(vectors.size(), opts.jobs, [&](std::size_t i) {
    CyclotomicValue v =
        UnreducedJonesAtRoot(*CableOf(piece, vectors[i], opts.cache), true, r, opts.engine);
    for (int k = 0; k < m; ++k) v *= w[vectors[i][k]];
    return v;
  });
  CyclotomicValue total = CyclotomicValue::Zero(r);
  for (const auto& v : values) total += v;
  return total;
}

std::complex<double> PieceSumFloat(const LinkDiagram& piece, int r, const RtOptions& opts,
                                   const std::vector<std::complex<double>>& w) {
  const int m = static_cast<int>(piece.num_components());
  CheckBudget(m, r, opts.max_colorings);
  const auto vectors = StrandVectors(m, r);
  auto values = RunAll<std::complex<double>>(vectors.size(), opts.jobs, [&](std::size_t i) {
    std::complex<double> v =
        UnreducedJonesAtRootFloat(*CableOf(piece, vectors[i], opts.cache), true, r, opts.engine);
    for (int k = 0; k < m; ++k) v *= w[vectors[i][k]];
    return v;
  });
  std::complex<double> total = 0.0;
  for (const auto& v : values) total += v;
  return total;
}

std::vector<LinkDiagram> Pieces(const LinkDiagram& link) {
  std::vector<LinkDiagram> out;
  const auto groups = SplitPieces(link);
  if (groups.size() == 1) return {link};
  for (const auto& keep : groups) out.push_back(DeleteComponents(link, keep));
  return out;
}

// Solves den * x = num in Q(zeta) over the power basis.
std::vector<mpq_class> Divide(const CyclotomicValue& num, const CyclotomicValue& den) {
  const int n = num.field().degree();
  // Augmented matrix: column k is den * zeta^k.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (int k = 0; k < n; ++k) {
    const CyclotomicValue shifted = den.TimesRootPower(k);
    const auto& col = shifted.coefficients();
    for (int i = 0; i < n; ++i) a[i][k] = col[i];
  }
  for (int i = 0; i < n; ++i) a[i][n] = num.coefficients()[i];
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw DomainError("division by zero in the cyclotomic field");
    std::swap(a[p], a[c]);
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[c][c];
      for (int k = c; k <= n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  std::vector<mpq_class> x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

std::complex<double> Shadow(const std::vector<mpq_class>& coeffs, int r) {
  std::complex<double> z = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    z += coeffs[k].get_d() * std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / (4.0 * r));
  }
  return z;
}

RTValue NormalizeFloat(const std::complex<double>& num, const Signature& sig, int r,
                       const RtOptions& opts) {
  const std::complex<double> up = SurgerySumFloat(Unknot(1), r, opts);
  const std::complex<double> down = SurgerySumFloat(Unknot(-1), r, opts);
  if (std::abs(up) < 1e-12 || std::abs(down) < 1e-12) {
    throw DomainError("surgery normalizer vanishes at level " + std::to_string(r));
  }
  RTValue out;
  out.level = r;
  out.exact = false;
  out.approx = num / (std::pow(up, sig.positive) * std::pow(down, sig.negative));
  return out;
}

RTValue NormalizeExact(const CyclotomicValue& num, const Signature& sig, int r,
                       const RtOptions& opts) {
  const CyclotomicValue up = SurgerySum(Unknot(1), r, opts);
  const CyclotomicValue down = SurgerySum(Unknot(-1), r, opts);
  if (up.is_zero() || down.is_zero()) {
    throw DomainError("surgery normalizer vanishes at level " + std::to_string(r));
  }
  RTValue out;
  out.level = r;
  out.coefficients = Divide(num, up.Pow(sig.positive) * down.Pow(sig.negative));
  out.approx = Shadow(out.coefficients, r);
  return out;
}

// x * y in the level-r fusion ring; index n - 1 holds the color n.
std::vector<CyclotomicValue> TruncatedFusion(const std::vector<CyclotomicValue>& x,
                                             const std::vector<CyclotomicValue>& y, int r) {
  std::vector<CyclotomicValue> out(r - 1, CyclotomicValue::Zero(r));
  for (int a = 1; a < r; ++a) {
    if (x[a - 1].is_zero()) continue;
    for (int b = 1; b < r; ++b) {
      if (y[b - 1].is_zero()) continue;
      const CyclotomicValue ab = x[a - 1] * y[b - 1];
      for (int c = std::abs(a - b) + 1; c <= std::min(a + b - 1, 2 * r - 1 - a - b); c += 2) {
        out[c - 1] += ab;
      }
    }
  }
  return out;
}

}  // namespace

long RtOptions::DefaultMaxColorings() {
  if (const char* env = std::getenv("JONESRT_MAX_COLORINGS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 124;
}

SurgeryPresentation ParsePresentation(std::string_view text) {
  internal::Json j = internal::ParseJsonText(text);
  SurgeryPresentation p;
  if (j.is_object() && j.contains("link")) {
    p.link = internal::DiagramFromJson(j["link"], "presentation.link");
    if (j.contains("label")) {
      if (!j["label"].is_string()) throw InputError("presentation.label: expected a string");
      p.label = j["label"].get<std::string>();
    }
  } else {
    p.link = internal::DiagramFromJson(j, "presentation");
  }
  return p;
}

std::string SerializePresentation(const SurgeryPresentation& p) {
  internal::Json j = internal::Json::object();
  j["link"] = internal::DiagramToJson(p.link);
  j["label"] = p.label;
  return j.dump() + "\n";
}

Signature ComputeSignature(const LinkingMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m.entries[i].size()) != n)
      throw InputError("linking matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (m.entries[i][j] != m.entries[j][i]) throw InputError("linking matrix is not symmetric");
      a[i][j] = m.entries[i][j];
    }
  }
  Signature s;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n && p < 0; ++i) {
      if (!done[i] && a[i][i] != 0) p = i;
    }
    if (p < 0) {
      // Zero diagonal: add row/column j to i where a[i][j] != 0.
      int pi = -1, pj = -1;
      for (int i = 0; i < n && pi < 0; ++i) {
        for (int j = 0; j < n && !done[i]; ++j) {
          if (!done[j] && i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi < 0) break;
      for (int k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (int k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      p = pi;
    }
    const mpq_class d = a[p][p];
    (d > 0 ? s.positive : s.negative) += 1;
    done[p] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      const mpq_class f = a[i][p] / d;
      for (int k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
      for (int k = 0; k < n; ++k) a[k][i] = a[i][k];
    }
  }
  s.nullity = n - s.positive - s.negative;
  return s;
}

std::vector<mpq_class> CharacteristicPolynomial(const LinkingMatrix& m) {
  // Faddeev-LeVerrier.
  const int n = static_cast<int>(m.size());
  using Matrix = std::vector<std::vector<mpq_class>>;
  Matrix a(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.entries[i][j];
  }
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  Matrix mk(n, std::vector<mpq_class>(n, 0));
  for (int k = 1; k <= n; ++k) {
    Matrix next(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) next[i][j] += a[i][l] * mk[l][j];
      }
      next[i][i] += c[n - k + 1];
    }
    mpq_class trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) trace += a[i][l] * next[l][i];
    }
    c[n - k] = -trace / k;
    mk = std::move(next);
  }
  return c;
}

Signature SignatureFromCharacteristicPolynomial(const LinkingMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.entries[i][j] != m.entries[j][i]) throw InputError("linking matrix is not symmetric");
    }
  }
  const auto c = CharacteristicPolynomial(m);
  Signature s;
  int low = 0;
  while (low < static_cast<int>(c.size()) - 1 && c[low] == 0) ++low;
  s.nullity = low;
  // Sign changes of p(x) count positive roots, of p(-x) negative roots.
  auto changes = [&](bool negate) {
    int count = 0, last = 0;
    for (std::size_t k = low; k < c.size(); ++k) {
      int sg = sgn(c[k]);
      if (negate && k % 2 == 1) sg = -sg;
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  s.positive = changes(false);
  s.negative = changes(true);
  return s;
}

CyclotomicValue SurgerySum(const LinkDiagram& link, int r, const RtOptions& opts) {
  CheckLevel(r);
  const auto w = Weights(r);
  CyclotomicValue total = CyclotomicValue::One(r);
  for (const auto& piece : Pieces(link)) total *= PieceSum(piece, r, opts, w);
  return total;
}

std::complex<double> SurgerySumFloat(const LinkDiagram& link, int r, const RtOptions& opts) {
  CheckLevel(r);
  std::vector<std::complex<double>> w;
  for (const auto& v : Weights(r)) w.push_back(v.ToComplex());
  std::complex<double> total = 1.0;
  for (const auto& piece : Pieces(link)) total *= PieceSumFloat(piece, r, opts, w);
  return total;
}

bool RTValue::IsOne(double tolerance) const {
  if (exact) {
    if (coefficients.empty() || coefficients[0] != 1) return false;
    for (std::size_t k = 1; k < coefficients.size(); ++k) {
      if (coefficients[k] != 0) return false;
    }
    return true;
  }
  return std::abs(approx - 1.0) <= tolerance;
}

bool RTValue::Equal(const RTValue& a, const RTValue& b, double tolerance) {
  if (a.level != b.level) return false;
  if (a.exact && b.exact) return a.coefficients == b.coefficients;
  return std::abs(a.approx - b.approx) <= tolerance;
}

std::string RTValue::ToString() const {
  if (!exact) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", approx.real(), approx.imag());
    return buf;
  }
  std::string out;
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k) {
    const mpq_class& c = coefficients[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += k == 1 ? "z" : "z^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

RTValue RtInvariant(const SurgeryPresentation& p, int r, const RtOptions& opts) {
  CheckLevel(r);
  const Signature sig = ComputeSignature(ComputeLinkingMatrix(p.link));
  if (opts.arithmetic == Arithmetic::kFloat) {
    return NormalizeFloat(SurgerySumFloat(p.link, r, opts), sig, r, opts);
  }
  return NormalizeExact(SurgerySum(p.link, r, opts), sig, r, opts);
}

RTValue ParallelSurgeryInvariant(const LinkDiagram& k, int q, int framing, int r,
                                 const RtOptions& opts) {
  CheckLevel(r);
  if (k.num_components() != 1) throw InputError("parallel surgery needs a knot");
  if (q < 1) throw InputError("parallel surgery needs at least one copy");
  const LinkDiagram k0 = WithFramings(k, {0});
  Signature sig;
  (framing > 0 ? sig.positive : framing < 0 ? sig.negative : sig.nullity) = q;

  // Kirby color with the framing twist, as a vector over colors 1..r-1.
  std::vector<CyclotomicValue> weight;
  for (int n = 1; n < r; ++n) {
    weight.push_back(EvalAtRoot(QuantumInteger(n), r, Variable::kT) *
                     EvalAtRoot(FramingFactor(n, framing), r, Variable::kA));
  }
  std::vector<CyclotomicValue> power = weight;
  for (int copy = 1; copy < q; ++copy) power = TruncatedFusion(power, weight, r);

  const std::vector<int> colors = [&] {
    std::vector<int> out;
    for (int n = 1; n < r; ++n) {
      if (!power[n - 1].is_zero()) out.push_back(n);
    }
    return out;
  }();
  if (opts.arithmetic == Arithmetic::kFloat) {
    const auto values = RunAll<std::complex<double>>(colors.size(), opts.jobs, [&](std::size_t i) {
      return MultiColoredJonesAtRootFloat(k0, {colors[i]}, r, false, opts.engine, opts.cache);
    });
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < colors.size(); ++i)
      sum += power[colors[i] - 1].ToComplex() * values[i];
    return NormalizeFloat(sum, sig, r, opts);
  }
  const auto values = RunAll<CyclotomicValue>(colors.size(), opts.jobs, [&](std::size_t i) {
    return ColoredJonesAtRoot(k0, colors[i], r, false, opts.engine, opts.cache);
  });
  CyclotomicValue sum = CyclotomicValue::Zero(r);
  for (std::size_t i = 0; i < colors.size(); ++i) sum += power[colors[i] - 1] * values[i];
  return NormalizeExact(sum, sig, r, opts);
}

bool VerifyKirbyStability(const SurgeryPresentation& p, int r, const RtOptions& opts,
                          double tolerance) {
  const RTValue base = RtInvariant(p, r, opts);
  for (int f : {1, -1}) {
    SurgeryPresentation q{DisjointUnion(p.link, Unknot(f)), p.label};
    if (!RTValue::Equal(base, RtInvariant(q, r, opts), tolerance)) return false;
  }
  return true;
}

}  // namespace jonesrt
