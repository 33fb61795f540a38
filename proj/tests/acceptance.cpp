// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
// `--f5` runs only the long f(5) reproduction instead.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>
#include <string>

#include "oracles.hpp"
#include "ryser/analysis.hpp"
#include "ryser/canonical.hpp"
#include "ryser/constructions.hpp"
#include "ryser/cover.hpp"
#include "ryser/search.hpp"

using namespace ryser;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (problem.empty() && limit_s > 0 && s >= limit_s) problem = "over time limit " + std::to_string(limit_s) + " s";
  if (!problem.empty()) ++failures;
  std::printf("%s %d %s (%.2f s)%s%s\n", problem.empty() ? "PASS" : "FAIL", id, name.c_str(), s,
              problem.empty() ? "" : ": ", problem.c_str());
  std::fflush(stdout);
}

SearchOutcome run(int r, int m, int tau, std::optional<int> cap = {}, SearchMode mode = SearchMode::first,
                  std::optional<int> max_instances = {}) {
  SearchParams p;
  p.r = r;
  p.m = m;
  p.tau = tau;
  p.cap = cap;
  p.mode = mode;
  p.max_instances = max_instances;
  p.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  return search_extremal(p);
}

std::string expect_status(const SearchOutcome& o, SearchStatus want) {
  if (o.status == want) return {};
  return "(" + std::to_string(o.r) + "," + std::to_string(o.m) + "," + std::to_string(o.tau) + ") gave " +
         std::string(to_string(o.status));
}

std::string tau_and_no_smaller(PaperInstance which, int tau) {
  auto h = paper_instance(which);
  auto t = cover_number(h);
  if (t.tau != tau) return "tau " + (t.tau ? std::to_string(*t.tau) : std::string("above limit"));
  if (!enumerate_covers(h, tau - 1).empty()) return "found a cover of size " + std::to_string(tau - 1);
  return {};
}

int f5() {
  criterion(11, "f(5): (5,8,4) exhausted, (5,9,4) found", 0, [] {
    auto e = run(5, 8, 4);
    if (auto s = expect_status(e, SearchStatus::exhausted); !s.empty()) return s;
    return expect_status(run(5, 9, 4), SearchStatus::found);
  });
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--f5") return f5();

  criterion(1, "f6 has tau 5 and no 4-cover", 5, [] { return tau_and_no_smaller(PaperInstance::f6, 5); });
  criterion(2, "f7 has tau 6 and no 5-cover", 60, [] { return tau_and_no_smaller(PaperInstance::f7, 6); });

  criterion(3, "instances intersecting, f6 degree table golden", 0, [] {
    for (auto which : {PaperInstance::f6, PaperInstance::f7})
      if (!is_intersecting(paper_instance(which)).intersecting) return std::string("not intersecting");
    // part -> degree -> list of (index, 1-based edges)
    const std::vector<std::vector<std::pair<int, std::vector<int>>>> golden = {
        {{1, {1}}, {2, {2}}, {3, {3}}, {4, {4, 5}}, {5, {6, 7, 8, 9}}, {6, {10, 11, 12, 13}}},
        {{1, {4}}, {2, {6, 10}}, {3, {9, 13}}, {4, {1, 3, 8, 11}}, {5, {2, 5, 7, 12}}},
        {{1, {7}}, {2, {2, 11}}, {3, {8, 13}}, {4, {1, 5, 9, 10}}, {5, {3, 4, 6, 12}}},
        {{1, {12}}, {2, {5, 8}}, {3, {3, 7, 10}}, {4, {4, 9, 11}}, {5, {1, 2, 6, 13}}},
        {{1, {6}}, {2, {7, 11}}, {3, {1, 9, 12}}, {4, {3, 5, 13}}, {5, {2, 4, 8, 10}}},
        {{1, {10}}, {2, {8, 12}}, {3, {2, 3, 9}}, {4, {5, 6, 11}}, {5, {1, 4, 7, 13}}},
    };
    auto table = degree_table(paper_instance(PaperInstance::f6));
    if (table.degrees != std::vector<int>{1, 2, 3, 4}) return std::string("degree columns differ");
    if (table.rows.size() != golden.size()) return std::string("part count differs");
    for (std::size_t p = 0; p < golden.size(); ++p) {
      std::size_t seen = 0;
      for (const auto& [d, entries] : table.rows[p])
        for (const auto& e : entries) {
          ++seen;
          auto it = std::find_if(golden[p].begin(), golden[p].end(),
                                 [&](const auto& g) { return g.first == e.vertex.index + 1; });
          if (it == golden[p].end()) return "unexpected vertex " + to_string(e.vertex);
          std::vector<int> got;
          for (auto id : e.edges) got.push_back(id + 1);
          if (got != it->second || static_cast<int>(got.size()) != d) return "cell differs at " + to_string(e.vertex);
        }
      if (seen != golden[p].size()) return "part " + std::to_string(p + 1) + " has a missing vertex";
    }
    return std::string();
  });

  criterion(4, "f6 linearity", 0, [] {
    auto f6 = paper_instance(PaperInstance::f6);
    std::vector<EdgeId> ignore{0};
    if (!linearity_report(f6, ignore).linear()) return std::string("not linear without E1");
    auto rep = linearity_report(f6);
    if (rep.pairs.size() != 2) return "found " + std::to_string(rep.pairs.size()) + " pairs";
    if (!(rep.pairs[0].edges == EdgePair{0, 8}) || !(rep.pairs[1].edges == EdgePair{0, 12}))
      return std::string("wrong pairs");
    if (rep.pairs[0].size != 2 || rep.pairs[1].size != 2) return std::string("wrong sizes");
    return std::string();
  });

  criterion(5, "regular 5-edge subfamilies of f6", 10, [] {
    auto f6 = paper_instance(PaperInstance::f6);
    auto found = find_regular_subhypergraphs(f6, 2, 5);
    const std::vector<std::vector<EdgeId>> want = {{0, 1, 2, 3, 4}, {3, 5, 8, 9, 12}, {1, 6, 7, 10, 12}};
    for (const auto& s : want) {
      if (std::find(found.begin(), found.end(), s) == found.end()) return std::string("missing a subfamily");
      if (cover_number(induced(f6, s)).tau != 3) return std::string("subfamily tau is not 3");
    }
    return std::string();
  });

  criterion(6, "truncated planes q = 2..5", 60, [] {
    for (int q = 2; q <= 5; ++q) {
      auto h = truncated_projective_plane(q);
      std::string tag = "q=" + std::to_string(q) + ": ";
      if (h.m() != q * q || h.r() != q + 1) return tag + "wrong shape";
      for (int p = 0; p < h.r(); ++p) {
        if (h.part_size(p) != q) return tag + "wrong part size";
        for (int i = 0; i < q; ++i)
          if (degree(h, {p, i}) != q) return tag + "wrong degree";
      }
      for (int i = 0; i < h.m(); ++i)
        for (int j = i + 1; j < h.m(); ++j)
          if (edge_intersection_size(h, i, j) != 1) return tag + "non-singleton intersection";
      if (cover_number(h).tau != q) return tag + "wrong tau";
    }
    return std::string();
  });

  criterion(7, "f(3) = 3", 10, [] {
    if (auto s = expect_status(run(3, 2, 2), SearchStatus::exhausted); !s.empty()) return s;
    return expect_status(run(3, 3, 2), SearchStatus::found);
  });
  criterion(7, "f(4) = 6", 600, [] {
    if (auto s = expect_status(run(4, 5, 3), SearchStatus::exhausted); !s.empty()) return s;
    return expect_status(run(4, 6, 3), SearchStatus::found);
  });

  criterion(8, "random property suite, 1000 instances", 0, [] {
    std::mt19937 rng(20261017);
    for (int n = 0; n < 1000; ++n) {
      auto h = oracle::random_intersecting(rng);
      std::string tag = "instance " + std::to_string(n) + ": ";
      if (static_cast<int>(greedy_cover(h).vertices.size()) > (h.m() + 1) / 2) return tag + "greedy too large";
      if (cover_number(h).tau != oracle::tau(h)) return tag + "tau differs from oracle";
      if ((matching_number(h) == 1) != oracle::intersecting(h)) return tag + "nu = 1 disagrees";
      long long pairs = 0, stars = 0;
      for (int i = 0; i < h.m(); ++i)
        for (int j = i + 1; j < h.m(); ++j) pairs += oracle::common(h.edges()[i], h.edges()[j]);
      for (const auto& v : oracle::all_vertices(h)) {
        long long d = degree(h, {v.part, v.index});
        stars += d * (d - 1) / 2;
      }
      if (pairs != stars) return tag + "double count fails";
      auto form = canonical_form(h);
      for (int k = 0; k < 100; ++k)
        if (canonical_form(oracle::shuffle(h, rng)) != form) return tag + "canonical form not invariant";
    }
    return std::string();
  });

  criterion(9, "lemma verifiers on (6,8,4) witnesses", 0, [] {
    auto o = run(6, 8, 4, 4, SearchMode::all, 50);
    if (o.instances.empty()) return std::string("no witnesses");
    for (const auto& h : o.hypergraphs()) {
      if (!check_8edge_lemma(h).conclusions_hold()) return std::string("eight-edge conclusions fail");
      if (!classify_degree_scheme(h).matches_lemma()) return std::string("degree scheme fails");
    }
    std::printf("  %zu witnesses checked\n", o.instances.size());
    return std::string();
  });

  criterion(10, "padding preserves tau, nu, intersecting", 0, [] {
    std::mt19937 rng(7);
    auto same = [](const PartiteHypergraph& a, const PartiteHypergraph& b) {
      return cover_number(a).tau == cover_number(b).tau && matching_number(a) == matching_number(b) &&
             is_intersecting(a).intersecting == is_intersecting(b).intersecting;
    };
    for (int n = 0; n < 100; ++n) {
      auto h = oracle::random_intersecting(rng, 8, 10);
      int s = h.r() + 1 + n % 3;
      if (!same(h, pad_to(h, s))) return "instance " + std::to_string(n);
    }
    auto f6 = paper_instance(PaperInstance::f6);
    auto f7 = pad_to(f6, 7);
    if (f7.r() != 7 || !same(f6, f7)) return std::string("f6 padded to 7");
    return std::string();
  });

  return failures == 0 ? 0 : 1;
}
