#pragma once

// Edge-branching transversal search shared by the cover solver and the
// extremal search. Templated on the edge-mask type: a plain 64-bit word for
// m <= 64 and EdgeSet otherwise.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "ryser/bits.hpp"

namespace ryser::detail {

inline bool mask_any(std::uint64_t m) { return m != 0; }
inline int mask_count(std::uint64_t m) { return std::popcount(m); }
inline std::uint64_t mask_and(std::uint64_t a, std::uint64_t b) { return a & b; }
inline std::uint64_t mask_minus(std::uint64_t a, std::uint64_t b) { return a & ~b; }
inline bool mask_test(std::uint64_t m, int i) { return (m >> i) & 1U; }

inline bool mask_any(const EdgeSet& m) { return m.any(); }
inline int mask_count(const EdgeSet& m) { return m.count(); }
inline EdgeSet mask_and(const EdgeSet& a, const EdgeSet& b) { return a & b; }
inline EdgeSet mask_minus(EdgeSet a, const EdgeSet& b) { return a.subtract(b); }
inline bool mask_test(const EdgeSet& m, int i) { return m.test(i); }

/// Branch-and-bound over "some vertex of this uncovered edge is in the
/// cover". Branch i of an edge takes its i-th vertex and forbids the earlier
/// ones, so every cover is reached along exactly one path.
template <class Mask>
class CoverKernel {
 public:
  CoverKernel(std::vector<Mask> stars, std::vector<std::vector<int>> edge_vertices, Mask all_edges)
      : stars_(std::move(stars)),
        edge_vertices_(std::move(edge_vertices)),
        all_(std::move(all_edges)),
        forbidden_(stars_.size(), 0) {}

  int num_vertices() const { return static_cast<int>(stars_.size()); }
  int num_edges() const { return static_cast<int>(edge_vertices_.size()); }
  const Mask& all_edges() const { return all_; }
  const Mask& star(int v) const { return stars_[v]; }

  /// Fail-first branching edge: the uncovered edge whose allowed vertices
  /// cover the fewest uncovered edges in total. -1 if some uncovered edge has
  /// no allowed vertex left (dead branch).
  int pick_edge(const Mask& uncovered) const {
    int best = -1;
    long best_score = std::numeric_limits<long>::max();
    for (int e = 0; e < num_edges(); ++e) {
      if (!mask_test(uncovered, e)) continue;
      long score = 0;
      bool any_allowed = false;
      for (int v : edge_vertices_[e]) {
        if (forbidden_[v]) continue;
        any_allowed = true;
        score += mask_count(mask_and(stars_[v], uncovered));
      }
      if (!any_allowed) return -1;
      if (score < best_score) {
        best_score = score;
        best = e;
      }
    }
    return best;
  }

  /// True if some cover of size <= budget exists extending the chosen set;
  /// the witness is left in chosen().
  bool find(const Mask& uncovered, int budget) {
    if (!mask_any(uncovered)) return true;
    if (budget == 0 || !can_cover(uncovered, budget)) return false;
    int e = pick_edge(uncovered);
    if (e < 0) return false;
    std::vector<int> banned;
    bool ok = false;
    for (int v : edge_vertices_[e]) {
      if (forbidden_[v]) continue;
      chosen_.push_back(v);
      if (find(mask_minus(uncovered, stars_[v]), budget - 1)) {
        ok = true;
        break;
      }
      chosen_.pop_back();
      forbidden_[v] = 1;
      banned.push_back(v);
    }
    for (int v : banned) forbidden_[v] = 0;
    return ok;
  }

  /// Calls visit(chosen) for every branch-minimal cover of size <= budget.
  /// The chosen vector is only valid during the call; forbidden() tells
  /// which vertices the path excluded.
  template <class Visit>
  void enumerate(const Mask& uncovered, int budget, Visit&& visit) {
    if (!mask_any(uncovered)) {
      visit(chosen_);
      return;
    }
    if (budget == 0 || !can_cover(uncovered, budget)) return;
    int e = pick_edge(uncovered);
    if (e < 0) return;
    std::vector<int> banned;
    for (int v : edge_vertices_[e]) {
      if (forbidden_[v]) continue;
      chosen_.push_back(v);
      enumerate(mask_minus(uncovered, stars_[v]), budget - 1, visit);
      chosen_.pop_back();
      forbidden_[v] = 1;
      banned.push_back(v);
    }
    for (int v : banned) forbidden_[v] = 0;
  }

  std::vector<int>& chosen() { return chosen_; }
  std::vector<char>& forbidden() { return forbidden_; }
  const std::vector<int>& edge_vertices(int e) const { return edge_vertices_[e]; }

 private:
  // budget vertices can cover at most budget * (best single coverage) edges
  bool can_cover(const Mask& uncovered, int budget) const {
    int best = 0;
    for (int v = 0; v < num_vertices(); ++v) {
      if (forbidden_[v]) continue;
      best = std::max(best, mask_count(mask_and(stars_[v], uncovered)));
    }
    return static_cast<long>(best) * budget >= mask_count(uncovered);
  }

  std::vector<Mask> stars_;
  std::vector<std::vector<int>> edge_vertices_;
  Mask all_;
  std::vector<char> forbidden_;
  std::vector<int> chosen_;
};

}  // namespace ryser::detail
