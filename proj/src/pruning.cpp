#include "ryser/pruning.hpp"

#include <algorithm>

namespace ryser::pruning {

int star_degree_limit(const Goal& goal) {
  int limit = 0;
  for (int d = 0; d <= goal.m; ++d)
    if (1 + ceil_half(goal.m - d) >= goal.tau) limit = d;
  return limit;
}

bool part_size(const Goal& goal, int k, std::span<const int> used_per_part) {
  const int remaining = goal.m - k;
  return std::any_of(used_per_part.begin(), used_per_part.end(),
                     [&](int used) { return used + remaining < goal.tau; });
}

bool star(const Goal& goal, int max_degree) { return max_degree > star_degree_limit(goal); }

std::optional<long long> max_pair_incidences(const Goal& goal, int k,
                                             const std::vector<std::vector<int>>& degrees) {
  const int limit = star_degree_limit(goal);
  long long total = 0;
  for (const auto& part : degrees) {
    std::vector<int> d = part;
    int remaining = goal.m - k;
    int need = std::max(0, goal.tau - static_cast<int>(d.size()));
    if (need > remaining || static_cast<int>(d.size()) + need > goal.cap) return std::nullopt;
    d.insert(d.end(), need, 1);
    remaining -= need;

    // Σ C(d,2) is convex: pushing increments onto the largest vertex that
    // still has room gives an allocation majorizing every other one.
    std::sort(d.rbegin(), d.rend());
    while (remaining > 0) {
      auto it = std::find_if(d.begin(), d.end(), [&](int x) { return x < limit; });
      if (it == d.end()) {
        if (static_cast<int>(d.size()) >= goal.cap || limit == 0) return std::nullopt;
        d.push_back(0);
        it = d.end() - 1;
      }
      int room = std::min(limit - *it, remaining);
      *it += room;
      remaining -= room;
    }
    for (int x : d) total += static_cast<long long>(x) * (x - 1) / 2;
  }
  return total;
}

bool budget(const Goal& goal, int k, const std::vector<std::vector<int>>& degrees) {
  auto best = max_pair_incidences(goal, k, degrees);
  long long required = static_cast<long long>(goal.m) * (goal.m - 1) / 2;
  return !best || *best < required;
}

bool completion(const Goal& goal, int k, int partial_tau) {
  return partial_tau + ceil_half(goal.m - k) < goal.tau;
}

bool vertex_set(const Goal& goal, int s, int covered) { return s + ceil_half(goal.m - covered) < goal.tau; }

int vertex_set_threshold(const Goal& goal, int s) { return goal.m - 2 * (goal.tau - s - 1); }

}  // namespace ryser::pruning
