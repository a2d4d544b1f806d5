#include "jonesrt/diagram.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "diagram_internal.h"
#include "jonesrt/errors.h"

namespace jonesrt {
namespace {

using internal::Occurrence;
using internal::Occurrences;
using internal::UnionFind;

std::string Loc(int crossing) { return "crossing " + std::to_string(crossing); }

// Edges in the direction fixed by the crossing data.
std::vector<int> TraversalOrder(const LinkDiagram& d, std::size_t i) {
  std::vector<int> edges = d.components[i];
  if (d.orientations[i] < 0) std::reverse(edges.begin(), edges.end());
  return edges;
}

void ValidateRegion(const LinkDiagram& d, const TwistRegion& reg, std::size_t index,
                    const std::map<int, std::vector<Occurrence>>& occ,
                    std::vector<bool>& used_crossings) {
  const std::string where = "twist region " + std::to_string(index);
  const std::size_t k = reg.blocks.size();
  const std::size_t w = reg.upward.size();
  if (k == 0 || reg.levels.size() != k + 1) throw InputError(where + ": levels/blocks mismatch");
  for (const auto& level : reg.levels) {
    if (level.size() != w) throw InputError(where + ": level width mismatch");
    for (int e : level) {
      if (!occ.count(e)) throw InputError(where + ": unknown edge " + std::to_string(e));
    }
  }
  std::vector<std::vector<std::array<int, 5>>> canon(k);
  for (std::size_t m = 0; m < k; ++m) {
    std::map<int, int> label;
    for (std::size_t p = 0; p < w; ++p) {
      label[reg.levels[m][p]] = static_cast<int>(p);
      label[reg.levels[m + 1][p]] = static_cast<int>(w + p);
    }
    std::set<int> block_set;
    for (int x : reg.blocks[m]) {
      if (x < 0 || x >= static_cast<int>(d.crossings.size()) || used_crossings[x]) {
        throw InputError(where + ": bad or repeated crossing index " + std::to_string(x));
      }
      used_crossings[x] = true;
      block_set.insert(x);
    }
    int next_internal = static_cast<int>(2 * w);
    for (int x : reg.blocks[m]) {
      std::array<int, 5> row{};
      for (int s = 0; s < 4; ++s) {
        int e = d.crossings[x].edges[s];
        auto it = label.find(e);
        if (it == label.end()) {
          for (const auto& o : occ.at(e)) {
            if (!block_set.count(o.crossing)) {
              throw InputError(where + ": edge " + std::to_string(e) + " leaves its block");
            }
          }
          it = label.emplace(e, next_internal++).first;
        }
        row[s] = it->second;
      }
      row[4] = d.crossings[x].sign;
      canon[m].push_back(row);
    }
    if (m > 0 && canon[m] != canon[0]) throw InputError(where + ": blocks differ");
  }
  for (std::size_t p = 0; p < w; ++p) {
    int e = reg.levels[0][p];
    bool head_in_block0 = false;
    for (const auto& o : occ.at(e)) {
      bool in_block =
          std::find(reg.blocks[0].begin(), reg.blocks[0].end(), o.crossing) != reg.blocks[0].end();
      if (in_block && IsInSlot(d.crossings[o.crossing], o.slot)) head_in_block0 = true;
    }
    if (head_in_block0 != static_cast<bool>(reg.upward[p])) {
      throw InputError(where + ": direction flags disagree with crossings");
    }
  }
}

}  // namespace

void ValidateDiagram(const LinkDiagram& d) {
  const std::size_t nc = d.components.size();
  if (d.orientations.size() != nc || d.framings.size() != nc) {
    throw InputError("components, orientations and framings must have equal length");
  }
  for (std::size_t i = 0; i < nc; ++i) {
    if (d.orientations[i] != 1 && d.orientations[i] != -1) {
      throw InputError("orientation of component " + std::to_string(i) + " must be +1 or -1");
    }
    if (d.components[i].empty()) throw InputError("component " + std::to_string(i) + " is empty");
  }
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    if (d.crossings[x].sign != 1 && d.crossings[x].sign != -1) {
      throw InputError(Loc(static_cast<int>(x)) + ": sign must be + or -");
    }
  }

  auto occ = Occurrences(d);
  std::map<int, int> comp_of;
  for (std::size_t i = 0; i < nc; ++i) {
    for (int e : d.components[i]) {
      if (!comp_of.emplace(e, static_cast<int>(i)).second) {
        throw InputError("edge " + std::to_string(e) + " listed in more than one component slot");
      }
    }
  }
  for (const auto& [e, list] : occ) {
    if (list.size() != 2) {
      throw InputError("edge " + std::to_string(e) + " appears " + std::to_string(list.size()) +
                       " times (at " + Loc(list[0].crossing) + "), expected 2");
    }
    if (!comp_of.count(e)) {
      throw InputError("edge " + std::to_string(e) + " (at " + Loc(list[0].crossing) +
                       ") belongs to no component");
    }
    int ins = 0;
    for (const auto& o : list) ins += IsInSlot(d.crossings[o.crossing], o.slot) ? 1 : 0;
    if (ins != 1) {
      throw InputError("edge " + std::to_string(e) + " at " + Loc(list[0].crossing) +
                       " must enter one crossing and leave one");
    }
  }
  for (std::size_t i = 0; i < nc; ++i) {
    const auto& comp = d.components[i];
    bool crossingless = std::none_of(comp.begin(), comp.end(), [&](int e) { return occ.count(e); });
    if (crossingless) {
      if (comp.size() != 1) {
        throw InputError("crossingless component " + std::to_string(i) + " must be a single edge");
      }
      continue;
    }
    for (int e : comp) {
      if (!occ.count(e)) {
        throw InputError("edge " + std::to_string(e) + " of component " + std::to_string(i) +
                         " appears in no crossing");
      }
    }
    auto order = TraversalOrder(d, i);
    for (std::size_t k = 0; k < order.size(); ++k) {
      int e = order[k];
      int next = order[(k + 1) % order.size()];
      const Occurrence* head = nullptr;
      for (const auto& o : occ[e]) {
        if (IsInSlot(d.crossings[o.crossing], o.slot)) head = &o;
      }
      const Crossing& c = d.crossings[head->crossing];
      int out_slot = head->slot == 0 ? 2 : OverOutSlot(c);
      if (c.edges[out_slot] != next) {
        throw InputError("component " + std::to_string(i) + " is not traversed consistently at " +
                         Loc(head->crossing) + " (edge " + std::to_string(e) + " is followed by " +
                         std::to_string(c.edges[out_slot]) + ", list says " + std::to_string(next) +
                         ")");
      }
    }
  }

  const int n = static_cast<int>(d.crossings.size());
  internal::FaceData faces = internal::TraceFaces(d, occ);
  UnionFind uf(std::max(n, 1));
  for (const auto& [e, list] : occ) uf.Union(list[0].crossing, list[1].crossing);
  int pieces = 0;
  for (int x = 0; x < n; ++x) pieces += uf.Find(x) == x ? 1 : 0;
  if (n - 2 * n + faces.num_faces != 2 * pieces) {
    throw InputError("crossing data is not planar (Euler characteristic " +
                     std::to_string(n - 2 * n + faces.num_faces) + ", expected " +
                     std::to_string(2 * pieces) + ")");
  }

  for (std::size_t si = 0; si < d.twist_sites.size(); ++si) {
    const TwistSite& site = d.twist_sites[si];
    const std::string where = "twist site " + std::to_string(si);
    if (site.sign != 1 && site.sign != -1) throw InputError(where + ": sign must be + or -");
    if (site.edges[0] == site.edges[1]) throw InputError(where + ": edges must be distinct");
    for (int e : site.edges) {
      if (!occ.count(e)) throw InputError(where + ": edge " + std::to_string(e) + " not found");
    }
    // Faces seen from each edge, tagged by whether the boundary walk runs
    // along the edge's direction.
    auto tagged = [&](int e) {
      std::set<std::pair<int, bool>> out;
      for (const auto& o : occ[e]) {
        bool along = !IsInSlot(d.crossings[o.crossing], o.slot);
        out.insert({faces.face_of[4 * o.crossing + o.slot], along});
      }
      return out;
    };
    auto a = tagged(site.edges[0]);
    auto b = tagged(site.edges[1]);
    bool shared = false;
    bool antiparallel = false;
    for (const auto& fa : a) {
      for (const auto& fb : b) {
        if (fa.first != fb.first) continue;
        shared = true;
        if (fa.second == fb.second) antiparallel = true;
      }
    }
    if (!shared) throw InputError(where + ": edges do not bound a common face");
    if (!antiparallel) throw InputError(where + ": edges are parallel, not antiparallel");
  }

  std::vector<bool> used(d.crossings.size(), false);
  for (std::size_t ri = 0; ri < d.twist_regions.size(); ++ri) {
    ValidateRegion(d, d.twist_regions[ri], ri, occ, used);
  }
}

EdgeIndex BuildEdgeIndex(const LinkDiagram& d) {
  EdgeIndex idx;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    for (int e : d.components[i]) idx[e].component = static_cast<int>(i);
  }
  for (int x = 0; x < static_cast<int>(d.crossings.size()); ++x) {
    const Crossing& c = d.crossings[x];
    for (int s = 0; s < 4; ++s) {
      EdgeEnds& ends = idx[c.edges[s]];
      if (IsInSlot(c, s)) {
        ends.head_crossing = x;
        ends.head_slot = s;
      } else {
        ends.tail_crossing = x;
        ends.tail_slot = s;
      }
    }
  }
  return idx;
}

std::vector<std::array<int, 4>> SlotComponents(const LinkDiagram& d) {
  std::unordered_map<int, int> comp;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    for (int e : d.components[i]) comp[e] = static_cast<int>(i);
  }
  std::vector<std::array<int, 4>> out(d.crossings.size());
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    for (int s = 0; s < 4; ++s) out[x][s] = comp.at(d.crossings[x].edges[s]);
  }
  return out;
}

int Writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += c.sign;
  return w;
}

std::vector<int> SelfWrithes(const LinkDiagram& d) {
  std::vector<int> w(d.components.size(), 0);
  auto comps = SlotComponents(d);
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    if (comps[x][0] == comps[x][1]) w[comps[x][0]] += d.crossings[x].sign;
  }
  return w;
}

LinkingMatrix ComputeLinkingMatrix(const LinkDiagram& d) {
  const std::size_t n = d.components.size();
  LinkingMatrix m;
  m.entries.assign(n, std::vector<long>(n, 0));
  auto comps = SlotComponents(d);
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    int a = comps[x][0];
    int b = comps[x][1];
    if (a != b) {
      m.entries[a][b] += d.crossings[x].sign;
      m.entries[b][a] += d.crossings[x].sign;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.entries[i][j] /= 2;
    m.entries[i][i] = d.framings[i];
  }
  return m;
}

LinkDiagram EmptyDiagram() { return LinkDiagram{}; }

LinkDiagram Unlink(const std::vector<int>& framings) {
  LinkDiagram d;
  for (std::size_t i = 0; i < framings.size(); ++i) {
    d.components.push_back({static_cast<int>(i) + 1});
    d.orientations.push_back(1);
    d.framings.push_back(framings[i]);
  }
  return d;
}

LinkDiagram Unknot(int framing) { return Unlink({framing}); }

LinkDiagram DisjointUnion(const LinkDiagram& a, const LinkDiagram& b) {
  LinkDiagram out = a;
  const int shift = internal::MaxEdgeId(a);
  const int xshift = static_cast<int>(a.crossings.size());
  for (Crossing c : b.crossings) {
    for (int& e : c.edges) e += shift;
    out.crossings.push_back(c);
  }
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    std::vector<int> comp = b.components[i];
    for (int& e : comp) e += shift;
    out.components.push_back(std::move(comp));
    out.orientations.push_back(b.orientations[i]);
    out.framings.push_back(b.framings[i]);
  }
  for (TwistSite s : b.twist_sites) {
    for (int& e : s.edges) e += shift;
    out.twist_sites.push_back(s);
  }
  for (TwistRegion r : b.twist_regions) {
    for (auto& level : r.levels) {
      for (int& e : level) e += shift;
    }
    for (auto& block : r.blocks) {
      for (int& x : block) x += xshift;
    }
    out.twist_regions.push_back(std::move(r));
  }
  return out;
}

LinkDiagram Mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (Crossing& c : out.crossings) {
    const auto e = c.edges;
    if (c.sign > 0) {
      c.edges = {e[3], e[0], e[1], e[2]};
    } else {
      c.edges = {e[1], e[2], e[3], e[0]};
    }
    c.sign = -c.sign;
  }
  for (int& f : out.framings) f = -f;
  for (TwistSite& s : out.twist_sites) s.sign = -s.sign;
  return out;
}

LinkDiagram WithFramings(const LinkDiagram& d, const std::vector<int>& framings) {
  if (framings.size() != d.components.size()) {
    throw InputError("framing vector length does not match component count");
  }
  LinkDiagram out = d;
  out.framings = framings;
  return out;
}

LinkDiagram Renumbered(const LinkDiagram& d) {
  std::unordered_map<int, int> map;
  int next = 1;
  for (const auto& comp : d.components) {
    for (int e : comp) map[e] = next++;
  }
  LinkDiagram out = d;
  for (auto& c : out.crossings) {
    for (int& e : c.edges) e = map.at(e);
  }
  for (auto& comp : out.components) {
    for (int& e : comp) e = map.at(e);
  }
  for (auto& s : out.twist_sites) {
    for (int& e : s.edges) e = map.at(e);
  }
  for (auto& r : out.twist_regions) {
    for (auto& level : r.levels) {
      for (int& e : level) e = map.at(e);
    }
  }
  return out;
}

std::string DescribeDiagram(const LinkDiagram& d) {
  std::ostringstream os;
  os << d.crossings.size() << " crossings, " << d.components.size() << " components, writhe "
     << Writhe(d);
  return os.str();
}

namespace internal {

std::map<int, std::vector<Occurrence>> Occurrences(const LinkDiagram& d) {
  std::map<int, std::vector<Occurrence>> occ;
  for (int x = 0; x < static_cast<int>(d.crossings.size()); ++x) {
    for (int s = 0; s < 4; ++s) occ[d.crossings[x].edges[s]].push_back({x, s});
  }
  return occ;
}

FaceData TraceFaces(const LinkDiagram& d, const std::map<int, std::vector<Occurrence>>& occ) {
  const int n = static_cast<int>(d.crossings.size());
  FaceData fd;
  fd.face_of.assign(4 * n, -1);
  for (int start = 0; start < 4 * n; ++start) {
    if (fd.face_of[start] >= 0) continue;
    int dart = start;
    while (fd.face_of[dart] < 0) {
      fd.face_of[dart] = fd.num_faces;
      int x = dart / 4;
      int s = dart % 4;
      const auto& o = occ.at(d.crossings[x].edges[s]);
      const Occurrence& other = (o[0].crossing == x && o[0].slot == s) ? o[1] : o[0];
      dart = 4 * other.crossing + (other.slot + 3) % 4;
    }
    ++fd.num_faces;
  }
  return fd;
}

Crossing MakeCrossing(const std::array<int, 4>& ccw, int under_in, int over_in) {
  Crossing c;
  for (int k = 0; k < 4; ++k) c.edges[k] = ccw[(under_in + k) % 4];
  c.sign = ((over_in - under_in + 4) % 4 == 3) ? 1 : -1;
  return c;
}

int MaxEdgeId(const LinkDiagram& d) {
  int m = 0;
  for (const auto& comp : d.components) {
    for (int e : comp) m = std::max(m, e);
  }
  return m;
}

}  // namespace internal

}  // namespace jonesrt
