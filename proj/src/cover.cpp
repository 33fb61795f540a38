#include "ryser/cover.hpp"

#include <algorithm>
#include <set>

#include "ryser/cover_kernel.hpp"
#include "ryser/parallel.hpp"

namespace ryser {

std::string_view to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::greedy: return "greedy";
    case CoverKind::exact_minimum: return "exact-minimum";
    case CoverKind::exhaustion: return "exhaustion";
  }
  return "?";
}

CoverCheck is_cover(const PartiteHypergraph& h, std::span<const VertexRef> vertices) {
  EdgeSet hit(h.m());
  for (auto v : vertices) hit |= h.star(v);  // star() bounds-checks v
  for (int e = 0; e < h.m(); ++e)
    if (!hit.test(e)) return {false, e};
  return {};
}

namespace {

std::vector<VertexRef> greedy_pick(const PartiteHypergraph& h) {
  std::vector<VertexRef> picked;
  EdgeSet uncovered = EdgeSet::all(h.m());
  while (uncovered.any()) {
    int best = -1;
    int best_gain = 0;
    for (int id = 0; id < h.num_vertices(); ++id) {
      int gain = h.star_by_id(id).intersection_count(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = id;
      }
    }
    picked.push_back(h.vertex_at(best));
    uncovered.subtract(h.star_by_id(best));
  }
  return picked;
}

template <class Mask>
Mask to_mask(const EdgeSet& s) {
  if constexpr (std::is_same_v<Mask, std::uint64_t>) {
    return s.words().empty() ? 0 : s.words()[0];
  } else {
    return s;
  }
}

template <class Mask>
detail::CoverKernel<Mask> make_kernel(const PartiteHypergraph& h) {
  std::vector<Mask> stars;
  stars.reserve(h.num_vertices());
  for (int id = 0; id < h.num_vertices(); ++id) stars.push_back(to_mask<Mask>(h.star_by_id(id)));
  std::vector<std::vector<int>> edge_vertices(h.m());
  for (int e = 0; e < h.m(); ++e)
    for (int p = 0; p < h.r(); ++p) edge_vertices[e].push_back(h.vertex_id({p, h.edges()[e][p]}));
  return {std::move(stars), std::move(edge_vertices), to_mask<Mask>(EdgeSet::all(h.m()))};
}

std::vector<VertexRef> to_refs(const PartiteHypergraph& h, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<VertexRef> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(h.vertex_at(id));
  return out;
}

// Looks for a cover of size <= k. The root edge's branches are independent
// and may run on separate workers; the lowest successful branch wins, which
// is also what a sequential run returns.
template <class Mask>
std::optional<std::vector<int>> find_cover(detail::CoverKernel<Mask>& kernel, int k, int threads) {
  const Mask all = kernel.all_edges();
  if (threads <= 1 || k == 0) {
    kernel.chosen().clear();
    if (kernel.find(all, k)) return kernel.chosen();
    return std::nullopt;
  }
  int root = kernel.pick_edge(all);
  if (root < 0) return std::nullopt;
  const auto& branch_vertices = kernel.edge_vertices(root);
  const int n = static_cast<int>(branch_vertices.size());
  std::vector<std::optional<std::vector<int>>> found(n);
  parallel_for(n, threads, [&](int i) {
    auto local = kernel;
    for (int j = 0; j < i; ++j) local.forbidden()[branch_vertices[j]] = 1;
    int v = branch_vertices[i];
    local.chosen().assign(1, v);
    if (local.find(detail::mask_minus(all, local.star(v)), k - 1)) found[i] = local.chosen();
  });
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

template <class Mask>
CoverNumber solve(const PartiteHypergraph& h, int limit, int threads) {
  auto kernel = make_kernel<Mask>(h);
  for (int k = 0; k <= limit; ++k) {
    if (auto cover = find_cover(kernel, k, threads)) {
      CoverNumber out;
      out.tau = k;
      out.certificate = {to_refs(h, *cover), CoverKind::exact_minimum, k - 1};
      return out;
    }
  }
  CoverNumber out;
  out.certificate = {greedy_pick(h), CoverKind::exhaustion, limit};
  std::sort(out.certificate.vertices.begin(), out.certificate.vertices.end());
  return out;
}

}  // namespace

CoverCertificate greedy_cover(const PartiteHypergraph& h) {
  if (auto check = is_intersecting(h); !check.intersecting)
    throw NotIntersecting("greedy cover needs an intersecting hypergraph; E" +
                          std::to_string(check.witness->first + 1) + " and E" +
                          std::to_string(check.witness->second + 1) + " are disjoint");
  return {greedy_pick(h), CoverKind::greedy, std::nullopt};
}

CoverNumber cover_number(const PartiteHypergraph& h, const CoverOptions& options) {
  int limit = options.limit ? *options.limit : static_cast<int>(greedy_pick(h).size());
  if (limit < 0) throw InvalidArgument("cover limit must be non-negative");
  int threads = std::max(1, options.threads);
  if (h.m() <= 64) return solve<std::uint64_t>(h, limit, threads);
  return solve<EdgeSet>(h, limit, threads);
}

std::vector<std::vector<VertexRef>> enumerate_covers(const PartiteHypergraph& h, int k) {
  if (k < 0) throw InvalidArgument("cover size must be non-negative");
  if (k > h.num_vertices()) return {};

  auto kernel = make_kernel<EdgeSet>(h);
  std::set<std::vector<int>> found;
  kernel.enumerate(kernel.all_edges(), k, [&](const std::vector<int>& chosen) {
    // pad with vertices the path did not exclude; each k-set arises once
    std::vector<int> pool;
    for (int id = 0; id < h.num_vertices(); ++id)
      if (!kernel.forbidden()[id] && std::find(chosen.begin(), chosen.end(), id) == chosen.end())
        pool.push_back(id);
    const int need = k - static_cast<int>(chosen.size());
    if (need > static_cast<int>(pool.size())) return;
    std::vector<int> pick(need);
    std::vector<int> current;
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == need) {
        current = chosen;
        current.insert(current.end(), pick.begin(), pick.end());
        std::sort(current.begin(), current.end());
        found.insert(current);
        return;
      }
      for (int i = start; i <= static_cast<int>(pool.size()) - (need - depth); ++i) {
        pick[depth] = pool[i];
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  });

  std::vector<std::vector<VertexRef>> out;
  out.reserve(found.size());
  for (const auto& ids : found) out.push_back(to_refs(h, ids));
  return out;
}

nlohmann::json certificate_json(const CoverNumber& result) {
  nlohmann::json cover = nlohmann::json::array();
  for (auto v : result.certificate.vertices) cover.push_back({v.part + 1, v.index + 1});
  nlohmann::json j;
  j["tau"] = result.tau ? nlohmann::json(*result.tau) : nlohmann::json(nullptr);
  j["cover"] = std::move(cover);
  j["exhausted"] = result.certificate.exhausted_size ? nlohmann::json(*result.certificate.exhausted_size)
                                                     : nlohmann::json(nullptr);
  return j;
}

}  // namespace ryser
