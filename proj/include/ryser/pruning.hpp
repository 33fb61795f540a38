#pragma once

// Prune tests for the extremal search. Each one is a proven implication:
// it fires only when no completion of the partial instance to m edges can be
// intersecting with cover number >= tau. All of them rest on two facts about
// a completed intersecting H:
//
//   * every part's used vertices form a cover, so each part needs >= tau of them;
//   * deleting a vertex's star leaves an intersecting hypergraph, which the
//     greedy cover handles with ceil(edges/2) vertices.

#include <optional>
#include <span>
#include <vector>

namespace ryser::pruning {

struct Goal {
  int r = 0;
  int m = 0;    // target edge count
  int tau = 0;  // required cover number
  int cap = 0;  // max vertices per part
};

constexpr int ceil_half(int n) { return (n + 1) / 2; }

/// Largest degree a vertex can have in a valid completion: a vertex of
/// degree d gives a cover of size 1 + ceil((m - d) / 2).
int star_degree_limit(const Goal& goal);

/// Some part cannot reach tau distinct vertices with the edges left.
bool part_size(const Goal& goal, int k, std::span<const int> used_per_part);

/// A vertex already exceeds star_degree_limit.
bool star(const Goal& goal, int max_degree);

/// Upper bound on Σ_v C(d(v), 2) over all completions, given the current
/// per-part degree lists (used vertices only). nullopt when no completion
/// can respect the degree limit, the part cap and the part-size requirement.
std::optional<long long> max_pair_incidences(const Goal& goal, int k,
                                             const std::vector<std::vector<int>>& degrees);

/// Intersecting needs Σ_v C(d(v), 2) >= C(m, 2); fires when even the best
/// completion falls short.
bool budget(const Goal& goal, int k, const std::vector<std::vector<int>>& degrees);

/// tau(final) <= tau(partial) + ceil((m - k) / 2): the added edges form an
/// intersecting family of their own.
bool completion(const Goal& goal, int k, int partial_tau);

/// Generalization: any s vertices meeting `covered` partial edges give
/// tau(final) <= s + ceil((m - covered) / 2).
bool vertex_set(const Goal& goal, int s, int covered);

/// Edges that s vertices must meet for vertex_set to fire.
int vertex_set_threshold(const Goal& goal, int s);

}  // namespace ryser::pruning
