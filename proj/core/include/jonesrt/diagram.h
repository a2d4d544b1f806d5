#ifndef JONESRT_DIAGRAM_H_
#define JONESRT_DIAGRAM_H_

#include <array>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace jonesrt {

// One PD entry. `edges` lists the four incident edges counter-clockwise,
// starting from the incoming under-strand; edges[2] is the outgoing
// under-strand. For sign +1 the over-strand runs edges[3] -> edges[1], for
// sign -1 it runs edges[1] -> edges[3].
struct Crossing {
  std::array<int, 4> edges{};
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Two antiparallel edges co-bounding a face, marking a crossing disc.
// Twisting r times at the site inserts sign * r right-handed full twists.
struct TwistSite {
  std::array<int, 2> edges{};
  int sign = 1;

  friend bool operator==(const TwistSite&, const TwistSite&) = default;
};

// A stack of identical full-twist blocks recorded when twists are inserted.
// levels[m] lists the strands crossing the band between block m-1 and block
// m, left to right; blocks[m] holds crossing indices. upward[p] gives the
// band direction of the strand at position p.
struct TwistRegion {
  std::vector<std::vector<int>> levels;
  std::vector<std::vector<int>> blocks;
  std::vector<bool> upward;

  friend bool operator==(const TwistRegion&, const TwistRegion&) = default;
};

// Planar diagram of a framed, oriented link.
//
// components[i] lists the edges of component i; orientations[i] = +1 means
// the list follows the direction fixed by the crossing data, -1 means it is
// reversed. A component with no crossings is a single edge that appears in
// no crossing.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> components;
  std::vector<int> orientations;
  std::vector<int> framings;
  std::vector<TwistSite> twist_sites;
  std::vector<TwistRegion> twist_regions;

  std::size_t num_components() const { return components.size(); }
  std::size_t num_crossings() const { return crossings.size(); }

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

// Where an edge starts and ends. crossing == -1 for crossingless loops.
struct EdgeEnds {
  int component = -1;
  int tail_crossing = -1;
  int tail_slot = -1;
  int head_crossing = -1;
  int head_slot = -1;
};

using EdgeIndex = std::unordered_map<int, EdgeEnds>;

// Slot (0..3) at which the over-strand enters crossing `c`.
inline int OverInSlot(const Crossing& c) { return c.sign > 0 ? 3 : 1; }
inline int OverOutSlot(const Crossing& c) { return c.sign > 0 ? 1 : 3; }
inline bool IsInSlot(const Crossing& c, int slot) { return slot == 0 || slot == OverInSlot(c); }

// Throws InputError describing the first violated invariant.
void ValidateDiagram(const LinkDiagram& d);
// Requires a structurally valid diagram (every edge twice, one head and one
// tail). Does not check planarity.
EdgeIndex BuildEdgeIndex(const LinkDiagram& d);

// Component index of the strand through each slot of each crossing.
std::vector<std::array<int, 4>> SlotComponents(const LinkDiagram& d);

int Writhe(const LinkDiagram& d);
std::vector<int> SelfWrithes(const LinkDiagram& d);

struct LinkingMatrix {
  std::vector<std::vector<long>> entries;
  std::size_t size() const { return entries.size(); }
  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

LinkingMatrix ComputeLinkingMatrix(const LinkDiagram& d);

LinkDiagram EmptyDiagram();
// Round crossingless unlink with the given framings.
LinkDiagram Unlink(const std::vector<int>& framings);
LinkDiagram Unknot(int framing = 0);

// Side-by-side union; edge ids of `b` are shifted past those of `a`.
LinkDiagram DisjointUnion(const LinkDiagram& a, const LinkDiagram& b);
// Mirror image: every crossing flips, framings negate.
LinkDiagram Mirror(const LinkDiagram& d);
// Same diagram with all framings set to `f`.
LinkDiagram WithFramings(const LinkDiagram& d, const std::vector<int>& framings);
// Renumbers edges 1..E in component traversal order. Regions and sites are
// carried along.
LinkDiagram Renumbered(const LinkDiagram& d);

std::string DescribeDiagram(const LinkDiagram& d);

}  // namespace jonesrt

#endif  // JONESRT_DIAGRAM_H_
