#ifndef JONESRT_SRC_SKEIN_ENGINE_H_
#define JONESRT_SRC_SKEIN_ENGINE_H_

#include <absl/container/flat_hash_map.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jonesrt/errors.h"
#include "jonesrt/skein.h"

namespace jonesrt::internal {

// Partner index per frontier position, 6 bits each.
using StateKey = std::array<std::uint64_t, 4>;

inline StateKey PackKey(const std::uint8_t* partner, int n) {
  StateKey key{};
  for (int i = 0; i < n; ++i) {
    const int bit = 6 * i;
    key[bit >> 6] |= static_cast<std::uint64_t>(partner[i]) << (bit & 63);
    if ((bit & 63) > 58)
      key[(bit >> 6) + 1] |= static_cast<std::uint64_t>(partner[i]) >> (64 - (bit & 63));
  }
  return key;
}

inline void UnpackKey(const StateKey& key, int n, std::uint8_t* partner) {
  for (int i = 0; i < n; ++i) {
    const int bit = 6 * i;
    std::uint64_t v = key[bit >> 6] >> (bit & 63);
    if ((bit & 63) > 58) v |= key[(bit >> 6) + 1] << (64 - (bit & 63));
    partner[i] = static_cast<std::uint8_t>(v & 63);
  }
}

template <class Ring>
struct Term {
  std::vector<std::uint8_t> pairing;
  // Coefficient sign * A^a_exp, or `coeff` when general.
  int a_exp = 0;
  int sign = 1;
  bool general = false;
  typename Ring::Value coeff{};
};

template <class Ring>
struct Node {
  std::vector<int> edges;
  std::vector<Term<Ring>> terms;
};

template <class Ring>
Node<Ring> CrossingNode(const Crossing& c) {
  Node<Ring> node;
  node.edges.assign(c.edges.begin(), c.edges.end());
  Term<Ring> a;
  a.pairing = {1, 0, 3, 2};
  a.a_exp = 1;
  Term<Ring> b;
  b.pairing = {3, 2, 1, 0};
  b.a_exp = -1;
  node.terms = {std::move(a), std::move(b)};
  return node;
}

// Absorbs nodes one at a time, keeping a superposition of matchings of the
// open strand ends.
template <class Ring>
class Contractor {
 public:
  using Value = typename Ring::Value;

  Contractor(const Ring& ring, int max_width) : ring_(ring), max_width_(max_width) {
    keys_.push_back(StateKey{});
    values_.push_back(ring_.One());
  }

  const std::vector<int>& frontier() const { return frontier_; }
  std::size_t num_states() const { return keys_.size(); }
  const std::vector<StateKey>& keys() const { return keys_; }
  const std::vector<Value>& values() const { return values_; }

  void Absorb(const Node<Ring>& node) {
    const int p = static_cast<int>(node.edges.size());
    const int f = static_cast<int>(frontier_.size());
    std::vector<int> slot_pos(p, -1), slot_self(p, -1), slot_new(p, -1);
    std::vector<int> conn_slot(f, -1);
    for (int j = 0; j < p; ++j) {
      const int e = node.edges[j];
      for (int i = 0; i < f; ++i) {
        if (frontier_[i] == e) {
          slot_pos[j] = i;
          conn_slot[i] = j;
        }
      }
      if (slot_pos[j] >= 0) continue;
      for (int k = 0; k < p; ++k) {
        if (k != j && node.edges[k] == e) slot_self[j] = k;
      }
    }
    // New frontier: survivors in order, new edges at the first consumed spot.
    int insert_at = -1;
    std::vector<int> new_pos(f, -1);
    std::vector<int> next;
    for (int i = 0; i < f; ++i) {
      if (conn_slot[i] >= 0) {
        if (insert_at < 0) insert_at = static_cast<int>(next.size());
        continue;
      }
      new_pos[i] = static_cast<int>(next.size());
      next.push_back(frontier_[i]);
    }
    if (insert_at < 0) insert_at = static_cast<int>(next.size());
    std::vector<int> fresh;
    for (int j = 0; j < p; ++j) {
      if (slot_pos[j] < 0 && slot_self[j] < 0) fresh.push_back(j);
    }
    next.insert(next.begin() + insert_at, fresh.size(), 0);
    for (int i = 0; i < f; ++i) {
      if (new_pos[i] >= insert_at) new_pos[i] += static_cast<int>(fresh.size());
    }
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      slot_new[fresh[k]] = insert_at + static_cast<int>(k);
      next[insert_at + k] = node.edges[fresh[k]];
    }
    const int nf = static_cast<int>(next.size());
    if (nf > max_width_ || nf > kMaxSupportedWidth) {
      throw BudgetError("frontier width " + std::to_string(nf) + " exceeds the limit of " +
                            std::to_string(std::min(max_width_, kMaxSupportedWidth)),
                        nf);
    }

    std::vector<StateKey> out_keys;
    std::vector<Value> out_values;
    absl::flat_hash_map<StateKey, std::uint32_t> index;
    index.reserve(keys_.size() * node.terms.size());

    std::uint8_t partner[64];
    std::uint8_t base[64];
    std::uint8_t np[64];
    std::vector<char> visited(p);
    for (std::size_t s = 0; s < keys_.size(); ++s) {
      UnpackKey(keys_[s], f, partner);
      // Pairs untouched by the node carry over unchanged.
      for (int i = 0; i < f; ++i) {
        if (new_pos[i] >= 0 && new_pos[partner[i]] >= 0) base[new_pos[i]] = new_pos[partner[i]];
      }
      for (const Term<Ring>& term : node.terms) {
        std::copy(base, base + nf, np);
        std::fill(visited.begin(), visited.end(), 0);
        // Walks from slot j through the node and onward until reaching an
        // end that survives in the new frontier.
        auto walk = [&](int j) -> int {
          while (true) {
            visited[j] = 1;
            const int j2 = term.pairing[j];
            visited[j2] = 1;
            if (slot_new[j2] >= 0) return slot_new[j2];
            if (slot_self[j2] >= 0) {
              j = slot_self[j2];
              continue;
            }
            const int q = partner[slot_pos[j2]];
            if (new_pos[q] >= 0) return new_pos[q];
            j = conn_slot[q];
          }
        };
        for (int i = 0; i < f; ++i) {
          if (new_pos[i] < 0 || new_pos[partner[i]] >= 0) continue;
          const int end = walk(conn_slot[partner[i]]);
          np[new_pos[i]] = static_cast<std::uint8_t>(end);
          np[end] = static_cast<std::uint8_t>(new_pos[i]);
        }
        for (int j : fresh) {
          if (visited[j]) continue;
          const int end = walk(j);
          np[slot_new[j]] = static_cast<std::uint8_t>(end);
          np[end] = static_cast<std::uint8_t>(slot_new[j]);
        }
        int loops = 0;
        for (int j = 0; j < p; ++j) {
          if (visited[j]) continue;
          ++loops;
          int k = j;
          do {
            visited[k] = 1;
            const int k2 = term.pairing[k];
            visited[k2] = 1;
            if (slot_self[k2] >= 0) {
              k = slot_self[k2];
            } else {
              k = conn_slot[partner[slot_pos[k2]]];
            }
          } while (k != j);
        }
        const StateKey key = PackKey(np, nf);
        auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(out_keys.size()));
        if (inserted) {
          out_keys.push_back(key);
          out_values.push_back(ring_.Zero());
        }
        Value& acc = out_values[it->second];
        if (term.general) {
          ring_.AddProduct(acc, values_[s], term.coeff, loops);
        } else {
          ring_.AddMonomial(acc, values_[s], term.a_exp, term.sign, loops);
        }
      }
    }
    // Drop states that cancelled.
    std::size_t w = 0;
    for (std::size_t i = 0; i < out_keys.size(); ++i) {
      if (ring_.IsZero(out_values[i])) continue;
      if (w != i) {
        out_keys[w] = out_keys[i];
        out_values[w] = std::move(out_values[i]);
      }
      ++w;
    }
    out_keys.resize(w);
    out_values.resize(w);
    keys_ = std::move(out_keys);
    values_ = std::move(out_values);
    frontier_ = std::move(next);
  }

  // Value of the closed network; requires an empty frontier.
  Value Result() const {
    Value total = ring_.Zero();
    for (const auto& v : values_) ring_.AddMonomial(total, v, 0, 1, 0);
    return total;
  }

  // Open network as a node whose slots are `open_edges`.
  Node<Ring> ToNode(const std::vector<int>& open_edges) const {
    const int f = static_cast<int>(frontier_.size());
    if (f != static_cast<int>(open_edges.size())) {
      throw DomainError("open contraction left unexpected strand ends");
    }
    std::vector<int> slot_of(f, -1);
    for (int i = 0; i < f; ++i) {
      for (int j = 0; j < f; ++j) {
        if (open_edges[j] == frontier_[i]) slot_of[i] = j;
      }
      if (slot_of[i] < 0) throw DomainError("open contraction frontier mismatch");
    }
    Node<Ring> node;
    node.edges = open_edges;
    std::uint8_t partner[64];
    for (std::size_t s = 0; s < keys_.size(); ++s) {
      UnpackKey(keys_[s], f, partner);
      Term<Ring> t;
      t.pairing.assign(f, 0);
      for (int i = 0; i < f; ++i)
        t.pairing[slot_of[i]] = static_cast<std::uint8_t>(slot_of[partner[i]]);
      t.general = true;
      t.coeff = values_[s];
      node.terms.push_back(std::move(t));
    }
    return node;
  }

 private:
  const Ring& ring_;
  int max_width_;
  std::vector<int> frontier_;
  std::vector<StateKey> keys_;
  std::vector<Value> values_;
};

}  // namespace jonesrt::internal

#endif  // JONESRT_SRC_SKEIN_ENGINE_H_
