#include "ryser/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ryser/cover.hpp"

namespace ryser {

namespace {

std::string edge_list(const std::vector<EdgeId>& edges) {
  std::string s = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ", ";
    s += "E" + std::to_string(edges[i] + 1);
  }
  return s + "}";
}

}  // namespace

DegreeTable degree_table(const PartiteHypergraph& h) {
  DegreeTable t;
  t.rows.resize(h.r());
  std::set<int> seen;
  for (int id = 0; id < h.num_vertices(); ++id) {
    const auto& star = h.star_by_id(id);
    int d = star.count();
    if (d == 0) continue;
    VertexRef v = h.vertex_at(id);
    t.rows[v.part][d].push_back({v, star.ids()});
    seen.insert(d);
  }
  t.degrees.assign(seen.begin(), seen.end());
  return t;
}

std::string DegreeTable::render() const {
  std::vector<std::string> header = {"part"};
  for (int d : degrees) header.push_back("degree " + std::to_string(d));

  // cells[part][column] -> lines
  std::vector<std::vector<std::vector<std::string>>> cells(rows.size());
  for (std::size_t p = 0; p < rows.size(); ++p) {
    cells[p].resize(header.size());
    cells[p][0].push_back(std::to_string(p + 1));
    for (std::size_t c = 0; c < degrees.size(); ++c) {
      auto it = rows[p].find(degrees[c]);
      if (it == rows[p].end()) continue;
      for (const auto& entry : it->second)
        cells[p][c + 1].push_back("E(" + to_string(entry.vertex) + ") = " + edge_list(entry.edges));
    }
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells)
      for (const auto& line : row[c]) width[c] = std::max(width[c], line.size());
  }

  auto emit = [&](std::ostringstream& os, const std::vector<std::string>& line) {
    std::string out;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out += " | ";
      out += line[c];
      if (c + 1 < line.size()) out += std::string(width[c] - line[c].size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << '\n';
  };
  auto rule = [&](std::ostringstream& os) {
    std::string out;
    for (std::size_t c = 0; c < width.size(); ++c) {
      if (c) out += "-+-";
      out += std::string(width[c], '-');
    }
    os << out << '\n';
  };

  std::ostringstream os;
  emit(os, header);
  for (const auto& row : cells) {
    rule(os);
    std::size_t height = 0;
    for (const auto& cell : row) height = std::max(height, cell.size());
    for (std::size_t k = 0; k < height; ++k) {
      std::vector<std::string> line;
      for (const auto& cell : row) line.push_back(k < cell.size() ? cell[k] : "");
      emit(os, line);
    }
  }
  return os.str();
}

bool EightEdgeLemmaReport::all_checks_hold() const {
  return conclusions_hold() &&
         std::all_of(skeleton_checks.begin(), skeleton_checks.end(), [](const LemmaCheck& c) { return c.holds; });
}

namespace {

void require_eight_edge_hypotheses(const PartiteHypergraph& h) {
  if (h.r() != 6) throw HypothesisError("hypothesis failed: expected 6 parts, got " + std::to_string(h.r()));
  if (h.m() != 8) throw HypothesisError("hypothesis failed: expected 8 edges, got " + std::to_string(h.m()));
  if (auto check = is_intersecting(h); !check.intersecting)
    throw HypothesisError("hypothesis failed: not intersecting (E" + std::to_string(check.witness->first + 1) +
                          " and E" + std::to_string(check.witness->second + 1) + " are disjoint)");
  int tau = *cover_number(h).tau;
  if (tau != 4) throw HypothesisError("hypothesis failed: expected tau = 4, got " + std::to_string(tau));
}

}  // namespace

EightEdgeLemmaReport check_8edge_lemma(const PartiteHypergraph& h) {
  require_eight_edge_hypotheses(h);

  EightEdgeLemmaReport rep;
  auto prof = degree_profile(h);
  std::vector<int> deg3;  // dense ids of degree-3 vertices
  for (int id = 0; id < h.num_vertices(); ++id)
    if (prof.degrees[id] == 3) deg3.push_back(id);

  rep.degree3_witness.assign(h.r(), std::nullopt);
  for (int id : deg3) {
    VertexRef v = h.vertex_at(id);
    if (!rep.degree3_witness[v.part]) rep.degree3_witness[v.part] = v;
  }
  rep.degree3_in_every_part =
      std::all_of(rep.degree3_witness.begin(), rep.degree3_witness.end(), [](const auto& w) { return w.has_value(); });

  for (int i = 0; i < h.m() && !rep.heavy_pair; ++i)
    for (int j = i + 1; j < h.m() && !rep.heavy_pair; ++j) {
      std::vector<VertexRef> shared;
      for (int p = 0; p < h.r(); ++p) {
        VertexRef v{p, h.edges()[i][p]};
        if (h.edges()[j][p] == v.index && prof.degrees[h.vertex_id(v)] == 3) shared.push_back(v);
      }
      if (shared.size() >= 2) {
        rep.heavy_pair = EdgePair{i, j};
        rep.heavy_shared = std::move(shared);
      }
    }

  // Degree-3 skeleton: restrict every edge to the degree-3 vertices. Kept as
  // a multiset of vertex subsets; equal restrictions stay separate entries.
  const int k = static_cast<int>(deg3.size());
  std::vector<std::vector<char>> skeleton(h.m(), std::vector<char>(k, 0));
  for (int e = 0; e < h.m(); ++e)
    for (int a = 0; a < k; ++a) skeleton[e][a] = h.star_by_id(deg3[a]).test(e);
  auto order = [&](int e) { return std::count(skeleton[e].begin(), skeleton[e].end(), 1); };

  auto& checks = rep.skeleton_checks;
  checks.push_back({"max degree at most 3", prof.max_degree <= 3});
  bool every_edge = true;
  for (int e = 0; e < h.m(); ++e) every_edge &= order(e) >= 1;
  checks.push_back({"every edge meets a degree-3 vertex", every_edge});

  bool pairwise = true;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) pairwise &= h.star_by_id(deg3[a]).intersects(h.star_by_id(deg3[b]));
  checks.push_back({"degree-3 vertices pairwise share an edge", pairwise});

  bool small = true;
  for (int e = 0; e < h.m(); ++e) small &= order(e) <= k - 2;
  checks.push_back({"each skeleton edge misses at least two degree-3 vertices", small});
  checks.push_back({"exactly six degree-3 vertices", k == 6});

  std::set<int> parts;
  for (int id : deg3) parts.insert(h.vertex_at(id).part);
  checks.push_back({"degree-3 vertices lie in distinct parts", static_cast<int>(parts.size()) == k});

  bool overlap = false;
  for (int e = 0; e < h.m() && !overlap; ++e)
    for (int f = e + 1; f < h.m() && !overlap; ++f) {
      int shared = 0;
      for (int a = 0; a < k; ++a) shared += skeleton[e][a] && skeleton[f][a];
      overlap = shared >= 2;
    }
  checks.push_back({"two skeleton edges share at least two vertices", overlap});
  return rep;
}

std::string_view to_string(SchemeType t) {
  switch (t) {
    case SchemeType::type_a: return "A";
    case SchemeType::type_b: return "B";
    case SchemeType::other: return "other";
  }
  return "?";
}

PartScheme classify_part(std::vector<int> degrees) {
  std::erase(degrees, 0);
  std::sort(degrees.rbegin(), degrees.rend());
  PartScheme s;
  s.degrees = degrees;
  if (degrees == std::vector<int>{3, 2, 2, 1}) s.type = SchemeType::type_a;
  else if (degrees == std::vector<int>{3, 2, 1, 1, 1}) s.type = SchemeType::type_b;
  return s;
}

int DegreeSchemeReport::count(SchemeType t) const {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(), [t](const PartScheme& p) { return p.type == t; }));
}

bool DegreeSchemeReport::matches_lemma() const {
  const int n = static_cast<int>(parts.size());
  return (count(SchemeType::type_a) == n) ||
         (count(SchemeType::type_a) == n - 1 && count(SchemeType::type_b) == 1);
}

DegreeSchemeReport classify_degree_scheme(const PartiteHypergraph& h) {
  require_eight_edge_hypotheses(h);
  DegreeSchemeReport rep;
  for (const auto& part : degree_profile(h).per_part) rep.parts.push_back(classify_part(part));
  return rep;
}

LinearityReport linearity_report(const PartiteHypergraph& h, std::span<const EdgeId> ignore) {
  std::vector<char> skip(h.m(), 0);
  for (auto e : ignore) {
    h.check_edge(e);
    skip[e] = 1;
  }
  LinearityReport rep;
  for (int i = 0; i < h.m(); ++i) {
    if (skip[i]) continue;
    for (int j = i + 1; j < h.m(); ++j) {
      if (skip[j]) continue;
      int s = edge_intersection_size(h, i, j);
      if (s != 1) rep.pairs.push_back({{i, j}, s});
    }
  }
  return rep;
}

std::vector<std::vector<EdgeId>> find_regular_subhypergraphs(const PartiteHypergraph& h, int d, int size) {
  if (d < 1) throw InvalidArgument("regularity degree must be at least 1");
  if (size < 1) throw InvalidArgument("subset size must be at least 1");
  std::vector<std::vector<EdgeId>> out;
  if (size > h.m()) return out;

  std::vector<EdgeId> pick;
  std::vector<int> deg(h.num_vertices(), 0);
  std::vector<std::vector<int>> ids(h.m());
  for (int e = 0; e < h.m(); ++e)
    for (int p = 0; p < h.r(); ++p) ids[e].push_back(h.vertex_id({p, h.edges()[e][p]}));

  // linearity is checked as edges are added; degrees are checked at the end.
  // Private vertices (degree 1) are exempt.
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == size) {
      for (auto e : pick)
        for (int v : ids[e])
          if (deg[v] >= 2 && deg[v] != d) return;
      out.push_back(pick);
      return;
    }
    for (int e = start; e <= h.m() - (size - static_cast<int>(pick.size())); ++e) {
      bool ok = true;
      for (auto f : pick)
        if (edge_intersection_size(h, e, f) != 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int v : ids[e])
        if (++deg[v] > std::max(d, 1)) ok = false;
      if (ok) {
        pick.push_back(e);
        self(self, e + 1);
        pick.pop_back();
      }
      for (int v : ids[e]) --deg[v];
    }
  };
  rec(rec, 0);
  return out;
}

CoverageAudit codegree_coverage_audit(const PartiteHypergraph& h, std::span<const VertexRef> pivots) {
  if (pivots.empty()) throw InvalidArgument("coverage audit needs at least one pivot");
  for (auto v : pivots) h.check_vertex(v);

  CoverageAudit audit;
  for (auto v : pivots) {
    CoverageAudit::Single s{v, {}};
    for (int id = 0; id < h.num_vertices(); ++id) {
      VertexRef w = h.vertex_at(id);
      const auto& star = h.star_by_id(id);
      if (w == v || star.none()) continue;
      if (!star.intersects(h.star(v))) s.disjoint.push_back(w);
    }
    audit.singles.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < pivots.size(); ++a)
    for (std::size_t b = a + 1; b < pivots.size(); ++b) {
      VertexRef v = pivots[a], u = pivots[b];
      EdgeSet both = h.star(v) | h.star(u);
      CoverageAudit::Pair pr{v, u, h.star(v).intersection_count(h.star(u)), both.count(), {}};
      for (int id = 0; id < h.num_vertices(); ++id) {
        VertexRef w = h.vertex_at(id);
        const auto& star = h.star_by_id(id);
        if (w == v || w == u || star.none()) continue;
        if (!star.intersects(both)) pr.disjoint.push_back(w);
      }
      audit.pairs.push_back(std::move(pr));
    }
  return audit;
}

Ratio ryser_ratio(const PartiteHypergraph& h) {
  if (h.m() < 1) throw InvalidArgument("Ryser ratio needs at least one edge");
  if (h.r() < 2) throw InvalidArgument("Ryser ratio needs at least two parts");
  long long tau = *cover_number(h).tau;
  long long den = static_cast<long long>(h.r() - 1) * matching_number(h);
  long long g = std::gcd(tau, den);
  return {tau / g, den / g};
}

}  // namespace ryser
