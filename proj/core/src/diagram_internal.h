#ifndef JONESRT_SRC_DIAGRAM_INTERNAL_H_
#define JONESRT_SRC_DIAGRAM_INTERNAL_H_

#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "jonesrt/diagram.h"

namespace jonesrt::internal {

struct Occurrence {
  int crossing;
  int slot;
};

class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int Add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int a, int b) { parent_[Find(a)] = Find(b); }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

std::map<int, std::vector<Occurrence>> Occurrences(const LinkDiagram& d);

struct FaceData {
  // face_of[4 * crossing + slot] for the boundary walk leaving that slot.
  std::vector<int> face_of;
  int num_faces = 0;
};

// Walks face boundaries keeping the face on the left.
FaceData TraceFaces(const LinkDiagram& d, const std::map<int, std::vector<Occurrence>>& occ);

// Builds a crossing from its four incident edges listed counter-clockwise,
// given which of those four positions carry the incoming under- and
// over-strands.
Crossing MakeCrossing(const std::array<int, 4>& ccw, int under_in, int over_in);

int MaxEdgeId(const LinkDiagram& d);

}  // namespace jonesrt::internal

#endif  // JONESRT_SRC_DIAGRAM_INTERNAL_H_
