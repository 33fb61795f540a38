#pragma once

// r-partite hypergraph model. Every edge picks exactly one vertex from each
// part, so an edge is stored as a vector of r vertex indices.
//
// Indexing is 0-based everywhere in this API. The text format and every
// human-facing report use the 1-based (part, index) and E_i notation; the
// conversion lives in io.hpp and the report renderers.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ryser/bits.hpp"

namespace ryser {

/// Thrown for malformed inputs and precondition violations.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VertexRef {
  int part = 0;
  int index = 0;

  /// Builds a reference from the 1-based (i, j) notation.
  static constexpr VertexRef one_based(int part, int index) { return {part - 1, index - 1}; }

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// "(i,j)" with 1-based part and index.
std::string to_string(VertexRef v);

using EdgeId = int;
using Edge = std::vector<int>;

struct EdgePair {
  EdgeId first = 0;
  EdgeId second = 0;
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

/// Immutable after construction; safe to share across threads.
class PartiteHypergraph {
 public:
  /// Validates every edge against `part_sizes`. Duplicate edges are rejected
  /// unless `allow_duplicates` is set (multiset hypergraphs).
  PartiteHypergraph(std::vector<int> part_sizes, std::vector<Edge> edges,
                    bool allow_duplicates = false);

  int r() const { return static_cast<int>(part_sizes_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& part_sizes() const { return part_sizes_; }
  int part_size(int part) const { return part_sizes_.at(part); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;
  bool allows_duplicates() const { return allow_duplicates_; }

  int num_vertices() const { return offsets_.back(); }
  /// Dense id in [0, num_vertices), ordered by (part, index).
  int vertex_id(VertexRef v) const;
  VertexRef vertex_at(int id) const;
  bool in_bounds(VertexRef v) const;
  void check_vertex(VertexRef v) const;
  void check_edge(EdgeId e) const;

  bool contains(EdgeId e, VertexRef v) const { return edges_[e][v.part] == v.index; }

  /// E(v): ids of the edges through v.
  const EdgeSet& star(VertexRef v) const { return incidence_[vertex_id(v)]; }
  const EdgeSet& star_by_id(int id) const { return incidence_[id]; }

  /// Recomputes the incidence bitsets from the edge list.
  std::vector<EdgeSet> rebuild_incidence() const;

  friend bool operator==(const PartiteHypergraph& a, const PartiteHypergraph& b) {
    return a.part_sizes_ == b.part_sizes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<int> part_sizes_;
  std::vector<Edge> edges_;
  bool allow_duplicates_ = false;
  std::vector<int> offsets_;
  std::vector<EdgeSet> incidence_;
};

struct DegreeProfile {
  std::vector<int> degrees;                 // by dense vertex id
  std::vector<std::vector<int>> per_part;   // ascending, includes zeros
  int max_degree = 0;
};

int degree(const PartiteHypergraph& h, VertexRef v);
EdgeSet edges_through(const PartiteHypergraph& h, VertexRef v);
DegreeProfile degree_profile(const PartiteHypergraph& h);

/// |E(v) ∩ E(w)|. Throws when v == w.
int codegree(const PartiteHypergraph& h, VertexRef v, VertexRef w);

/// Number of parts in which edges i and j pick the same vertex.
int edge_intersection_size(const PartiteHypergraph& h, EdgeId i, EdgeId j);

struct IntersectingCheck {
  bool intersecting = true;
  std::optional<EdgePair> witness;  // first disjoint pair in (i, j) order
};
IntersectingCheck is_intersecting(const PartiteHypergraph& h);

/// Exact size of a largest set of pairwise disjoint edges.
int matching_number(const PartiteHypergraph& h);

/// Sub-hypergraph of the edges avoiding v, on the same parts, order kept.
PartiteHypergraph delete_star(const PartiteHypergraph& h, VertexRef v);

/// Sub-hypergraph on the listed edges, in the listed order.
PartiteHypergraph induced(const PartiteHypergraph& h, std::span<const EdgeId> edges);

struct IntersectionBudget {
  long long available = 0;  // Σ_v C(d(v), 2)
  long long required = 0;   // C(m, 2)
  bool sufficient() const { return available >= required; }
};
IntersectionBudget intersection_budget(const PartiteHypergraph& h);

/// Applies a relabeling: part p of the result is part part_order[p] of h,
/// vertex j of source part q is renamed vertex_maps[q][j], and edge i of the
/// result is edge edge_order[i] of h.
PartiteHypergraph relabeled(const PartiteHypergraph& h, std::span<const int> part_order,
                            const std::vector<std::vector<int>>& vertex_maps,
                            std::span<const int> edge_order);

constexpr long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace ryser
