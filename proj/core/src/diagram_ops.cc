#include "jonesrt/diagram_ops.h"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "diagram_internal.h"
#include "jonesrt/errors.h"

namespace jonesrt {
namespace {

using internal::MakeCrossing;
using internal::UnionFind;

enum class OverDiagonal { kSwNe, kSeNw };

struct BandStrand {
  int edge;
  bool upward;
};

struct Letter {
  int position;  // crosses the strands at position and position + 1
  OverDiagonal over;
};

struct BraidResult {
  LinkDiagram diagram;
  std::vector<std::vector<int>> levels;
};

// Cuts the given parallel edges (listed left to right in a local frame) and
// splices in a braid read bottom to top. Lower halves keep their ids. The new
// crossings are placed at `insert_at` in the crossing list.
BraidResult InsertBraid(const LinkDiagram& d, const std::vector<BandStrand>& strands,
                        const std::vector<Letter>& word, int insert_at) {
  BraidResult res;
  LinkDiagram& out = res.diagram;
  out = d;
  const EdgeIndex idx = BuildEdgeIndex(d);
  int next_id = internal::MaxEdgeId(d) + 1;
  const int w = static_cast<int>(strands.size());

  std::vector<int> strand_at(w);
  std::vector<int> cur(w);
  std::vector<std::vector<int>> pieces(w);
  for (int p = 0; p < w; ++p) {
    strand_at[p] = p;
    cur[p] = strands[p].edge;
    pieces[p] = {strands[p].edge};
  }
  res.levels.push_back(cur);
  std::vector<Crossing> fresh;
  for (const Letter& letter : word) {
    const int p = letter.position;
    const int left = strand_at[p];
    const int right = strand_at[p + 1];
    const int nw = next_id++;
    const int ne = next_id++;
    const int left_in = strands[left].upward ? 0 : 2;
    const int right_in = strands[right].upward ? 1 : 3;
    const bool left_over = letter.over == OverDiagonal::kSwNe;
    fresh.push_back(MakeCrossing({cur[p], cur[p + 1], ne, nw}, left_over ? right_in : left_in,
                                 left_over ? left_in : right_in));
    strand_at[p] = right;
    strand_at[p + 1] = left;
    cur[p] = nw;
    cur[p + 1] = ne;
    pieces[left].push_back(ne);
    pieces[right].push_back(nw);
    res.levels.push_back(cur);
  }

  auto rename = [&](int from, int to) {
    for (Crossing& c : fresh) {
      for (int& e : c.edges) {
        if (e == from) e = to;
      }
    }
    for (auto& level : res.levels) {
      for (int& e : level) {
        if (e == from) e = to;
      }
    }
  };

  for (int s = 0; s < w; ++s) {
    if (pieces[s].size() < 2) continue;
    const int orig = strands[s].edge;
    const EdgeEnds& ends = idx.at(orig);
    if (ends.head_crossing < 0) {
      rename(pieces[s].back(), orig);
      pieces[s].pop_back();
    } else {
      const int top = pieces[s].back();
      const int x = strands[s].upward ? ends.head_crossing : ends.tail_crossing;
      const int slot = strands[s].upward ? ends.head_slot : ends.tail_slot;
      out.crossings[x].edges[slot] = top;
      for (TwistRegion& reg : out.twist_regions) {
        bool touches = false;
        for (const auto& block : reg.blocks) {
          if (std::find(block.begin(), block.end(), x) != block.end()) touches = true;
        }
        if (!touches) continue;
        for (auto& level : reg.levels) {
          for (int& e : level) {
            if (e == orig) e = top;
          }
        }
      }
    }
    std::vector<int> seq = pieces[s];
    if (!strands[s].upward) std::reverse(seq.begin(), seq.end());
    const int comp = ends.component;
    if (out.orientations[comp] < 0) std::reverse(seq.begin(), seq.end());
    auto& list = out.components[comp];
    auto it = std::find(list.begin(), list.end(), orig);
    const std::size_t pos = it - list.begin();
    list.erase(it);
    list.insert(list.begin() + pos, seq.begin(), seq.end());
  }

  const int shift = static_cast<int>(fresh.size());
  for (TwistRegion& reg : out.twist_regions) {
    for (auto& block : reg.blocks) {
      for (int& x : block) {
        if (x >= insert_at) x += shift;
      }
    }
  }
  out.crossings.insert(out.crossings.begin() + insert_at, fresh.begin(), fresh.end());
  return res;
}

}  // namespace

LinkDiagram InsertFullTwists(const LinkDiagram& d, std::size_t site_index, int r) {
  if (site_index >= d.twist_sites.size()) {
    throw InputError("twist site " + std::to_string(site_index) + " not found");
  }
  if (r == 0) return d;
  const TwistSite& site = d.twist_sites[site_index];
  const int eff = r * site.sign;
  const int e1 = site.edges[0];
  const int e2 = site.edges[1];

  auto occ = internal::Occurrences(d);
  if (!occ.count(e1) || !occ.count(e2)) {
    throw InputError("twist site " + std::to_string(site_index) + " has no crossings to anchor on");
  }
  const internal::FaceData faces = internal::TraceFaces(d, occ);
  int sense = 0;  // +1: the shared face lies to the left of both edges
  int insert_at = 0;
  for (const auto& oa : occ[e1]) {
    for (const auto& ob : occ[e2]) {
      if (faces.face_of[4 * oa.crossing + oa.slot] != faces.face_of[4 * ob.crossing + ob.slot]) {
        continue;
      }
      bool along_a = !IsInSlot(d.crossings[oa.crossing], oa.slot);
      bool along_b = !IsInSlot(d.crossings[ob.crossing], ob.slot);
      if (along_a == along_b && sense == 0) sense = along_a ? 1 : -1;
    }
  }
  if (sense == 0) {
    throw InputError("twist site " + std::to_string(site_index) +
                     " does not bound a face with antiparallel strands");
  }
  for (int e : {e1, e2}) {
    for (const auto& o : occ[e]) insert_at = std::max(insert_at, o.crossing);
  }

  std::vector<BandStrand> strands;
  if (sense > 0) {
    strands = {{e2, false}, {e1, true}};
  } else {
    strands = {{e1, true}, {e2, false}};
  }
  const int n = 2 * std::abs(eff);
  std::vector<Letter> word(n, Letter{0, eff > 0 ? OverDiagonal::kSwNe : OverDiagonal::kSeNw});
  BraidResult res = InsertBraid(d, strands, word, insert_at);

  TwistRegion reg;
  for (int m = 0; m <= n; m += 2) reg.levels.push_back(res.levels[m]);
  for (int m = 0; m < n; m += 2) reg.blocks.push_back({insert_at + m, insert_at + m + 1});
  reg.upward = {strands[0].upward, strands[1].upward};
  res.diagram.twist_regions.push_back(std::move(reg));

  const EdgeIndex idx = BuildEdgeIndex(d);
  const int c1 = idx.at(e1).component;
  const int c2 = idx.at(e2).component;
  if (c1 != c2) {
    res.diagram.framings[c1] += eff;
    res.diagram.framings[c2] += eff;
  }
  return res.diagram;
}

LinkDiagram InsertFullTwists(const LinkDiagram& d, const TwistSite& site, int r) {
  for (std::size_t i = 0; i < d.twist_sites.size(); ++i) {
    if (d.twist_sites[i] == site) return InsertFullTwists(d, i, r);
  }
  throw InputError("twist site (" + std::to_string(site.edges[0]) + ", " +
                   std::to_string(site.edges[1]) + ") not found");
}

LinkDiagram Cable(const LinkDiagram& d, const std::vector<int>& strands) {
  const std::size_t nc = d.components.size();
  if (strands.size() != nc) throw InputError("cable vector length does not match component count");
  for (int j : strands) {
    if (j < 0) throw InputError("cable multiplicities must be nonnegative");
  }
  const EdgeIndex idx = BuildEdgeIndex(d);
  const auto slot_comp = SlotComponents(d);
  const std::vector<int> self_writhe = SelfWrithes(d);

  auto traversal = [&](std::size_t i) {
    std::vector<int> order = d.components[i];
    if (d.orientations[i] < 0) std::reverse(order.begin(), order.end());
    return order;
  };

  // Compensation targets, avoiding edges that belong to a twist region.
  std::set<int> region_edges;
  for (const auto& reg : d.twist_regions) {
    for (const auto& level : reg.levels) region_edges.insert(level.begin(), level.end());
    for (const auto& block : reg.blocks) {
      for (int x : block)
        region_edges.insert(d.crossings[x].edges.begin(), d.crossings[x].edges.end());
    }
  }
  bool keep_regions = true;
  std::vector<int> comp_edge(nc, -1);
  for (std::size_t i = 0; i < nc; ++i) {
    if (strands[i] < 2 || d.framings[i] == self_writhe[i]) continue;
    for (int e : traversal(i)) {
      if (!region_edges.count(e)) {
        comp_edge[i] = e;
        break;
      }
    }
    if (comp_edge[i] < 0) {
      keep_regions = false;
      comp_edge[i] = traversal(i).front();
    }
  }

  UnionFind uf;
  std::unordered_map<int, int> base;
  for (std::size_t i = 0; i < nc; ++i) {
    for (int e : d.components[i]) {
      base[e] = uf.size();
      for (int k = 0; k < strands[i]; ++k) uf.Add();
    }
  }
  auto atom = [&](int e, int k) { return base.at(e) + k; };

  std::vector<std::array<int, 4>> raw;
  std::vector<int> raw_sign;
  std::vector<std::vector<int>> grid_of(d.crossings.size());
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    const Crossing& c = d.crossings[x];
    const int ju = strands[slot_comp[x][0]];
    const int jo = strands[slot_comp[x][1]];
    const int a = c.edges[0], b = c.edges[1], cc = c.edges[2], dd = c.edges[3];
    if (ju == 0 && jo == 0) continue;
    if (ju == 0) {
      for (int m = 0; m < jo; ++m) uf.Union(atom(dd, m), atom(b, m));
      continue;
    }
    if (jo == 0) {
      for (int k = 0; k < ju; ++k) uf.Union(atom(a, k), atom(cc, k));
      continue;
    }
    // Over copy m sits at height -m (sign +) or +m (sign -); rows ascend.
    std::vector<int> row_copy(jo);
    for (int r = 0; r < jo; ++r) row_copy[r] = c.sign > 0 ? jo - 1 - r : r;
    std::vector<std::vector<int>> vert(ju, std::vector<int>(jo + 1));
    for (int k = 0; k < ju; ++k) {
      vert[k][0] = atom(a, k);
      vert[k][jo] = atom(cc, k);
      for (int r = 1; r < jo; ++r) vert[k][r] = uf.Add();
    }
    std::vector<std::vector<int>> horiz(jo, std::vector<int>(ju + 1));
    for (int m = 0; m < jo; ++m) {
      horiz[m][0] = atom(dd, m);
      horiz[m][ju] = atom(b, m);
      for (int q = 1; q < ju; ++q) horiz[m][q] = uf.Add();
    }
    for (int r = 0; r < jo; ++r) {
      const int m = row_copy[r];
      for (int k = 0; k < ju; ++k) {
        grid_of[x].push_back(static_cast<int>(raw.size()));
        raw.push_back({vert[k][r], horiz[m][k + 1], vert[k][r + 1], horiz[m][k]});
        raw_sign.push_back(c.sign);
      }
    }
  }

  auto id_of = [&](int a) { return uf.Find(a) + 1; };
  LinkDiagram out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Crossing c;
    for (int s = 0; s < 4; ++s) c.edges[s] = id_of(raw[i][s]);
    c.sign = raw_sign[i];
    out.crossings.push_back(c);
  }
  const EdgeIndex walk = BuildEdgeIndex(out);
  for (std::size_t i = 0; i < nc; ++i) {
    const int first = traversal(i).front();
    for (int k = 0; k < strands[i]; ++k) {
      const int start = id_of(atom(first, k));
      std::vector<int> list{start};
      int cur = start;
      while (true) {
        auto it = walk.find(cur);
        if (it == walk.end()) break;
        const Crossing& c = out.crossings[it->second.head_crossing];
        const int hs = it->second.head_slot;
        const int next = c.edges[hs == 0 ? 2 : OverOutSlot(c)];
        if (next == start) break;
        list.push_back(next);
        cur = next;
      }
      out.components.push_back(std::move(list));
      out.orientations.push_back(1);
      out.framings.push_back(d.framings[i]);
    }
  }

  if (keep_regions) {
    for (const auto& reg : d.twist_regions) {
      TwistRegion nr;
      bool empty_block = false;
      for (const auto& block : reg.blocks) {
        std::vector<int> nb;
        for (int x : block) nb.insert(nb.end(), grid_of[x].begin(), grid_of[x].end());
        if (nb.empty()) empty_block = true;
        nr.blocks.push_back(std::move(nb));
      }
      if (empty_block) continue;
      for (std::size_t m = 0; m < reg.levels.size(); ++m) {
        std::vector<int> level;
        for (std::size_t p = 0; p < reg.levels[m].size(); ++p) {
          const int e = reg.levels[m][p];
          const int j = strands[idx.at(e).component];
          for (int q = 0; q < j; ++q) {
            const int k = reg.upward[p] ? q : j - 1 - q;
            level.push_back(id_of(atom(e, k)));
            if (m == 0) nr.upward.push_back(reg.upward[p]);
          }
        }
        nr.levels.push_back(std::move(level));
      }
      // Merged edges (e.g. a strand turning back between levels) leave no
      // well-defined block boundary.
      std::set<int> distinct;
      std::size_t total = 0;
      for (const auto& level : nr.levels) {
        distinct.insert(level.begin(), level.end());
        total += level.size();
      }
      if (distinct.size() != total) continue;
      out.twist_regions.push_back(std::move(nr));
    }
  }

  for (const auto& site : d.twist_sites) {
    const int ca = idx.at(site.edges[0]).component;
    const int cb = idx.at(site.edges[1]).component;
    if (strands[ca] != 1 || strands[cb] != 1) continue;
    TwistSite ns = site;
    ns.edges = {id_of(atom(site.edges[0], 0)), id_of(atom(site.edges[1], 0))};
    if (ns.edges[0] != ns.edges[1]) out.twist_sites.push_back(ns);
  }

  for (std::size_t i = 0; i < nc; ++i) {
    if (comp_edge[i] < 0) continue;
    const int j = strands[i];
    const int t = d.framings[i] - self_writhe[i];
    std::vector<BandStrand> band;
    for (int k = 0; k < j; ++k) band.push_back({id_of(atom(comp_edge[i], k)), true});
    std::vector<Letter> word;
    const OverDiagonal over = t > 0 ? OverDiagonal::kSwNe : OverDiagonal::kSeNw;
    for (int rep = 0; rep < j * std::abs(t); ++rep) {
      for (int p = 0; p + 1 < j; ++p) word.push_back({p, over});
    }
    const EdgeIndex cur_idx = BuildEdgeIndex(out);
    const EdgeEnds& ends = cur_idx.at(band[0].edge);
    const int insert_at =
        ends.head_crossing >= 0 ? ends.head_crossing : static_cast<int>(out.crossings.size());
    BraidResult res = InsertBraid(out, band, word, insert_at);
    out = std::move(res.diagram);
    const int per_twist = j * (j - 1);
    TwistRegion reg;
    for (int m = 0; m <= static_cast<int>(word.size()); m += per_twist)
      reg.levels.push_back(res.levels[m]);
    for (int m = 0; m < static_cast<int>(word.size()); m += per_twist) {
      std::vector<int> block;
      for (int x = 0; x < per_twist; ++x) block.push_back(insert_at + m + x);
      reg.blocks.push_back(std::move(block));
    }
    reg.upward.assign(j, true);
    std::set<int> distinct;
    for (const auto& level : reg.levels) distinct.insert(level.begin(), level.end());
    if (distinct.size() == reg.levels.size() * j) out.twist_regions.push_back(std::move(reg));
  }
  return Renumbered(out);
}

LinkDiagram DeleteComponents(const LinkDiagram& d, const std::vector<bool>& keep) {
  std::vector<int> strands;
  for (bool k : keep) strands.push_back(k ? 1 : 0);
  return Cable(d, strands);
}

}  // namespace jonesrt
