#include "ryser/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ryser {

std::string to_string(VertexRef v) {
  return "(" + std::to_string(v.part + 1) + "," + std::to_string(v.index + 1) + ")";
}

PartiteHypergraph::PartiteHypergraph(std::vector<int> part_sizes, std::vector<Edge> edges,
                                     bool allow_duplicates)
    : part_sizes_(std::move(part_sizes)),
      edges_(std::move(edges)),
      allow_duplicates_(allow_duplicates) {
  if (part_sizes_.empty()) throw InvalidArgument("hypergraph needs at least one part");
  for (std::size_t p = 0; p < part_sizes_.size(); ++p)
    if (part_sizes_[p] <= 0)
      throw InvalidArgument("part " + std::to_string(p + 1) + " has non-positive size");

  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.size() != part_sizes_.size())
      throw InvalidArgument("edge E" + std::to_string(e + 1) + " has " +
                            std::to_string(edge.size()) + " entries, expected " +
                            std::to_string(part_sizes_.size()));
    for (std::size_t p = 0; p < edge.size(); ++p)
      if (edge[p] < 0 || edge[p] >= part_sizes_[p])
        throw InvalidArgument("edge E" + std::to_string(e + 1) + " uses vertex " +
                              std::to_string(edge[p] + 1) + " of part " + std::to_string(p + 1) +
                              " which has " + std::to_string(part_sizes_[p]) + " vertices");
  }

  if (!allow_duplicates_) {
    std::set<Edge> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (!seen.insert(edges_[e]).second)
        throw InvalidArgument("duplicate edge E" + std::to_string(e + 1));
  }

  offsets_.assign(part_sizes_.size() + 1, 0);
  std::partial_sum(part_sizes_.begin(), part_sizes_.end(), offsets_.begin() + 1);
  incidence_ = rebuild_incidence();
}

const Edge& PartiteHypergraph::edge(EdgeId e) const {
  check_edge(e);
  return edges_[e];
}

bool PartiteHypergraph::in_bounds(VertexRef v) const {
  return v.part >= 0 && v.part < r() && v.index >= 0 && v.index < part_sizes_[v.part];
}

void PartiteHypergraph::check_vertex(VertexRef v) const {
  if (!in_bounds(v)) throw InvalidArgument("vertex " + to_string(v) + " is out of range");
}

void PartiteHypergraph::check_edge(EdgeId e) const {
  if (e < 0 || e >= m()) throw InvalidArgument("edge id E" + std::to_string(e + 1) + " is out of range");
}

int PartiteHypergraph::vertex_id(VertexRef v) const {
  check_vertex(v);
  return offsets_[v.part] + v.index;
}

VertexRef PartiteHypergraph::vertex_at(int id) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
  int part = static_cast<int>(it - offsets_.begin()) - 1;
  return {part, id - offsets_[part]};
}

std::vector<EdgeSet> PartiteHypergraph::rebuild_incidence() const {
  std::vector<EdgeSet> inc(offsets_.back(), EdgeSet(m()));
  for (int e = 0; e < m(); ++e)
    for (int p = 0; p < r(); ++p) inc[offsets_[p] + edges_[e][p]].set(e);
  return inc;
}

int degree(const PartiteHypergraph& h, VertexRef v) { return h.star(v).count(); }

EdgeSet edges_through(const PartiteHypergraph& h, VertexRef v) { return h.star(v); }

DegreeProfile degree_profile(const PartiteHypergraph& h) {
  DegreeProfile prof;
  prof.degrees.resize(h.num_vertices());
  prof.per_part.resize(h.r());
  for (int id = 0; id < h.num_vertices(); ++id) {
    int d = h.star_by_id(id).count();
    prof.degrees[id] = d;
    prof.per_part[h.vertex_at(id).part].push_back(d);
    prof.max_degree = std::max(prof.max_degree, d);
  }
  for (auto& part : prof.per_part) std::sort(part.begin(), part.end());
  return prof;
}

int codegree(const PartiteHypergraph& h, VertexRef v, VertexRef w) {
  h.check_vertex(v);
  h.check_vertex(w);
  if (v == w) throw InvalidArgument("co-degree needs two distinct vertices, got " + to_string(v) + " twice");
  return h.star(v).intersection_count(h.star(w));
}

int edge_intersection_size(const PartiteHypergraph& h, EdgeId i, EdgeId j) {
  h.check_edge(i);
  h.check_edge(j);
  if (i == j) throw InvalidArgument("edge intersection needs two distinct edge ids");
  const auto& a = h.edges()[i];
  const auto& b = h.edges()[j];
  int n = 0;
  for (int p = 0; p < h.r(); ++p) n += (a[p] == b[p]);
  return n;
}

IntersectingCheck is_intersecting(const PartiteHypergraph& h) {
  for (int i = 0; i < h.m(); ++i)
    for (int j = i + 1; j < h.m(); ++j)
      if (edge_intersection_size(h, i, j) == 0) return {false, EdgePair{i, j}};
  return {};
}

namespace {

// Branches on the lowest-id undecided edge: take it (if compatible) or skip it.
class MatchingSolver {
 public:
  explicit MatchingSolver(const PartiteHypergraph& h) : m_(h.m()), compatible_(h.m(), EdgeSet(h.m())) {
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        if (i != j && edge_intersection_size(h, i, j) == 0) compatible_[i].set(j);
  }

  int solve() {
    if (m_ == 0) return 0;
    best_ = 0;
    recurse(0, 0, EdgeSet::all(m_));
    return best_;
  }

 private:
  void recurse(int next, int taken, const EdgeSet& allowed) {
    best_ = std::max(best_, taken);
    if (next >= m_) return;
    // remaining-max bound: every allowed undecided edge could join
    int remaining = 0;
    for (int e = next; e < m_; ++e) remaining += allowed.test(e);
    if (taken + remaining <= best_) return;

    if (allowed.test(next)) recurse(next + 1, taken + 1, allowed & compatible_[next]);
    recurse(next + 1, taken, allowed);
  }

  int m_;
  std::vector<EdgeSet> compatible_;
  int best_ = 0;
};

}  // namespace

int matching_number(const PartiteHypergraph& h) { return MatchingSolver(h).solve(); }

PartiteHypergraph delete_star(const PartiteHypergraph& h, VertexRef v) {
  h.check_vertex(v);
  std::vector<Edge> kept;
  for (const auto& e : h.edges())
    if (e[v.part] != v.index) kept.push_back(e);
  return PartiteHypergraph(h.part_sizes(), std::move(kept), h.allows_duplicates());
}

PartiteHypergraph induced(const PartiteHypergraph& h, std::span<const EdgeId> edges) {
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (auto e : edges) kept.push_back(h.edge(e));
  return PartiteHypergraph(h.part_sizes(), std::move(kept), h.allows_duplicates());
}

IntersectionBudget intersection_budget(const PartiteHypergraph& h) {
  IntersectionBudget b;
  for (int id = 0; id < h.num_vertices(); ++id) b.available += choose2(h.star_by_id(id).count());
  b.required = choose2(h.m());
  return b;
}

PartiteHypergraph relabeled(const PartiteHypergraph& h, std::span<const int> part_order,
                            const std::vector<std::vector<int>>& vertex_maps,
                            std::span<const int> edge_order) {
  const int r = h.r();
  if (static_cast<int>(part_order.size()) != r || static_cast<int>(vertex_maps.size()) != r ||
      static_cast<int>(edge_order.size()) != h.m())
    throw InvalidArgument("relabeling has the wrong shape");

  std::vector<int> sizes(r);
  for (int p = 0; p < r; ++p) sizes[p] = h.part_size(part_order[p]);

  std::vector<Edge> edges;
  edges.reserve(h.m());
  for (int src : edge_order) {
    const auto& e = h.edge(src);
    Edge out(r);
    for (int p = 0; p < r; ++p) out[p] = vertex_maps[part_order[p]][e[part_order[p]]];
    edges.push_back(std::move(out));
  }
  return PartiteHypergraph(std::move(sizes), std::move(edges), h.allows_duplicates());
}

}  // namespace ryser
