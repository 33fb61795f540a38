#include "ryser/constructions.hpp"

#include <algorithm>
#include <string>

#include "ryser/field.hpp"

namespace ryser {

PartiteHypergraph truncated_projective_plane(int q) {
  ProjectivePlane plane(q);
  const auto& pts = plane.points();
  const int removed = 0;

  std::vector<int> through;  // lines through the removed point
  std::vector<int> others;
  for (int l = 0; l < static_cast<int>(pts.size()); ++l)
    (plane.incident(pts[removed], pts[l]) ? through : others).push_back(l);

  // vertex (part i, index j) = j-th point of line through[i], skipping v
  std::vector<int> part_of(pts.size(), -1), index_of(pts.size(), -1);
  for (int i = 0; i < static_cast<int>(through.size()); ++i) {
    int j = 0;
    for (int pt : plane.points_on(through[i])) {
      if (pt == removed) continue;
      part_of[pt] = i;
      index_of[pt] = j++;
    }
  }

  const int r = static_cast<int>(through.size());
  std::vector<Edge> edges;
  for (int l : others) {
    Edge e(r, -1);
    for (int pt : plane.points_on(l)) e[part_of[pt]] = index_of[pt];
    edges.push_back(std::move(e));
  }
  return PartiteHypergraph(std::vector<int>(r, q), std::move(edges));
}

PartiteHypergraph pad_to(const PartiteHypergraph& h, int s) {
  if (s < h.r())
    throw InvalidArgument("cannot pad a " + std::to_string(h.r()) + "-partite hypergraph down to " +
                          std::to_string(s) + " parts");
  std::vector<int> sizes = h.part_sizes();
  sizes.resize(s, std::max(h.m(), 1));
  std::vector<Edge> edges = h.edges();
  for (int j = 0; j < h.m(); ++j) edges[j].resize(s, j);
  return PartiteHypergraph(std::move(sizes), std::move(edges), h.allows_duplicates());
}

PaperInstance paper_instance_from_name(std::string_view name) {
  if (name == "f6") return PaperInstance::f6;
  if (name == "f7") return PaperInstance::f7;
  throw InvalidArgument("unknown instance '" + std::string(name) + "' (expected f6 or f7)");
}

namespace {

PartiteHypergraph from_one_based(std::vector<int> sizes, const std::vector<std::vector<int>>& rows) {
  std::vector<Edge> edges;
  for (const auto& row : rows) {
    Edge e(row.size());
    std::transform(row.begin(), row.end(), e.begin(), [](int j) { return j - 1; });
    edges.push_back(std::move(e));
  }
  return PartiteHypergraph(std::move(sizes), std::move(edges));
}

}  // namespace

PartiteHypergraph paper_instance(PaperInstance which) {
  switch (which) {
    case PaperInstance::f6:
      return from_one_based({6, 5, 5, 5, 5, 5},
                            {
                                {1, 4, 4, 5, 3, 5},  // E1
                                {2, 5, 2, 5, 5, 3},
                                {3, 4, 5, 3, 4, 3},
                                {4, 1, 5, 4, 5, 5},
                                {4, 5, 4, 2, 4, 4},  // E5
                                {5, 2, 5, 5, 1, 4},
                                {5, 5, 1, 3, 2, 5},
                                {5, 4, 3, 2, 5, 2},
                                {5, 3, 4, 4, 3, 3},
                                {6, 2, 4, 3, 5, 1},  // E10
                                {6, 4, 2, 4, 2, 4},
                                {6, 5, 5, 1, 3, 2},
                                {6, 3, 3, 5, 4, 5},
                            });
    case PaperInstance::f7:
      return from_one_based({6, 6, 6, 6, 6, 6, 7},
                            {
                                {1, 1, 1, 1, 1, 1, 1},  // E1
                                {1, 2, 2, 2, 2, 3, 3},
                                {1, 3, 3, 3, 3, 4, 4},
                                {1, 4, 4, 4, 4, 5, 5},
                                {2, 1, 2, 3, 4, 6, 6},  // E5
                                {3, 1, 2, 5, 5, 4, 5},
                                {5, 3, 2, 6, 1, 5, 2},
                                {4, 2, 6, 1, 4, 4, 2},
                                {3, 5, 3, 1, 2, 5, 6},
                                {3, 6, 4, 3, 2, 1, 2},  // E10
                                {6, 2, 1, 3, 5, 5, 1},
                                {3, 3, 5, 2, 4, 2, 1},
                                {5, 3, 1, 4, 2, 4, 6},
                                {1, 6, 6, 6, 5, 2, 6},
                                {2, 3, 4, 1, 5, 3, 7},  // E15
                                {4, 1, 4, 2, 3, 5, 6},
                                {2, 5, 4, 6, 2, 4, 1},
                                {3, 6, 4, 3, 1, 4, 3},
                                {3, 1, 1, 6, 4, 3, 4},
                                {4, 3, 1, 3, 2, 2, 5},  // E20
                                {1, 3, 1, 3, 6, 4, 6},
                                {4, 6, 2, 1, 4, 4, 1},
                            });
  }
  throw InvalidArgument("unknown built-in instance");
}

}  // namespace ryser
