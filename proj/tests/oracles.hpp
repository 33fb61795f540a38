#pragma once

// Slow, obviously-correct reference implementations used to check the real
// code. None of them share logic with the library.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ryser/core.hpp"

namespace oracle {

using ryser::Edge;
using ryser::PartiteHypergraph;

struct Vertex {
  int part, index;
  bool operator<(const Vertex& o) const { return part != o.part ? part < o.part : index < o.index; }
};

inline std::vector<Vertex> all_vertices(const PartiteHypergraph& h) {
  std::vector<Vertex> out;
  for (int p = 0; p < h.r(); ++p)
    for (int i = 0; i < h.part_sizes()[p]; ++i) out.push_back({p, i});
  return out;
}

inline bool hits(const Edge& e, const std::vector<Vertex>& set) {
  for (auto v : set)
    if (e[v.part] == v.index) return true;
  return false;
}

inline bool covers(const PartiteHypergraph& h, const std::vector<Vertex>& set) {
  for (const auto& e : h.edges())
    if (!hits(e, set)) return false;
  return true;
}

/// Smallest k such that some k-subset of all vertices meets every edge.
inline int tau(const PartiteHypergraph& h) {
  auto vs = all_vertices(h);
  const int n = static_cast<int>(vs.size());
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<Vertex> set;
      for (int i : pick) set.push_back(vs[i]);
      if (covers(h, set)) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;
}

inline bool disjoint(const Edge& a, const Edge& b) {
  for (std::size_t p = 0; p < a.size(); ++p)
    if (a[p] == b[p]) return false;
  return true;
}

/// Largest set of pairwise disjoint edges, by trying every edge subset.
inline int nu(const PartiteHypergraph& h) {
  const int m = h.m();
  int best = 0;
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    int count = __builtin_popcount(mask);
    if (count <= best) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U)) ok = disjoint(h.edges()[i], h.edges()[j]);
    if (ok) best = count;
  }
  return best;
}

/// Number of parts where two edges pick the same vertex.
inline int common(const Edge& a, const Edge& b) {
  int n = 0;
  for (std::size_t p = 0; p < a.size(); ++p) n += a[p] == b[p];
  return n;
}

inline bool intersecting(const PartiteHypergraph& h) {
  for (int i = 0; i < h.m(); ++i)
    for (int j = i + 1; j < h.m(); ++j)
      if (disjoint(h.edges()[i], h.edges()[j])) return false;
  return true;
}

/// Isomorphism invariant by brute force: over every part permutation and
/// every edge order, rename vertices by first appearance and keep the
/// smallest row-major matrix. Only for tiny r and m.
inline std::vector<int> brute_form(const PartiteHypergraph& h) {
  std::vector<int> parts(h.r()), edges(h.m());
  std::iota(parts.begin(), parts.end(), 0);
  std::vector<int> best;
  do {
    std::iota(edges.begin(), edges.end(), 0);
    do {
      std::vector<int> cur;
      std::vector<std::vector<int>> name(h.r());
      for (int p = 0; p < h.r(); ++p) name[p].assign(h.part_sizes()[parts[p]], -1);
      std::vector<int> next(h.r(), 0);
      for (int e : edges)
        for (int p = 0; p < h.r(); ++p) {
          int& n = name[p][h.edges()[e][parts[p]]];
          if (n < 0) n = next[p]++;
          cur.push_back(n);
        }
      if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(edges.begin(), edges.end()));
  } while (std::next_permutation(parts.begin(), parts.end()));
  return best;
}

/// Random part permutation, vertex renaming within each part, and edge order.
template <class Rng>
PartiteHypergraph shuffle(const PartiteHypergraph& h, Rng& rng) {
  std::vector<int> parts(h.r()), edges(h.m());
  std::iota(parts.begin(), parts.end(), 0);
  std::iota(edges.begin(), edges.end(), 0);
  std::shuffle(parts.begin(), parts.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<std::vector<int>> maps(h.r());
  for (int p = 0; p < h.r(); ++p) {
    maps[p].resize(h.part_sizes()[p]);
    std::iota(maps[p].begin(), maps[p].end(), 0);
    std::shuffle(maps[p].begin(), maps[p].end(), rng);
  }
  return ryser::relabeled(h, parts, maps, edges);
}

/// Random intersecting instance: at most `max_edges` edges and
/// `max_vertices` vertices in total, r between 2 and 4.
template <class Rng>
PartiteHypergraph random_intersecting(Rng& rng, int max_edges = 10, int max_vertices = 12) {
  std::uniform_int_distribution<int> r_dist(2, 4);
  const int r = r_dist(rng);
  std::vector<int> sizes(r, 1);
  int total = r;
  std::uniform_int_distribution<int> part_dist(0, r - 1);
  int extra = std::uniform_int_distribution<int>(0, max_vertices - r)(rng);
  while (extra-- > 0 && total < max_vertices) {
    ++sizes[part_dist(rng)];
    ++total;
  }
  const int target = std::uniform_int_distribution<int>(1, max_edges)(rng);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (int attempt = 0; attempt < 200 && static_cast<int>(edges.size()) < target; ++attempt) {
    Edge e(r);
    for (int p = 0; p < r; ++p) e[p] = std::uniform_int_distribution<int>(0, sizes[p] - 1)(rng);
    if (seen.count(e)) continue;
    bool ok = std::none_of(edges.begin(), edges.end(), [&](const Edge& f) { return disjoint(e, f); });
    if (!ok) continue;
    seen.insert(e);
    edges.push_back(e);
  }
  return PartiteHypergraph(sizes, edges);
}

/// Every m-subset of the full edge set of the given parts.
template <class Visit>
void all_edge_sets(const std::vector<int>& sizes, int m, Visit&& visit) {
  std::vector<Edge> pool;
  Edge e(sizes.size(), 0);
  auto build = [&](auto& self, std::size_t p) -> void {
    if (p == sizes.size()) {
      pool.push_back(e);
      return;
    }
    for (int i = 0; i < sizes[p]; ++i) {
      e[p] = i;
      self(self, p + 1);
    }
  };
  build(build, 0);
  const int n = static_cast<int>(pool.size());
  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  if (m > n) return;
  while (true) {
    std::vector<Edge> edges;
    for (int i : pick) edges.push_back(pool[i]);
    visit(PartiteHypergraph(sizes, edges));
    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace oracle
