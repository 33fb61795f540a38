#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ryser/constructions.hpp"
#include "ryser/core.hpp"

using namespace ryser;

TEST_SUITE("core") {
  TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(PartiteHypergraph({}, {}), InvalidArgument);
    CHECK_THROWS_AS(PartiteHypergraph({2, 0}, {}), InvalidArgument);
    CHECK_THROWS_AS(PartiteHypergraph({2, 2}, {{0, 2}}), InvalidArgument);
    CHECK_THROWS_AS(PartiteHypergraph({2, 2}, {{0}}), InvalidArgument);
    CHECK_THROWS_AS(PartiteHypergraph({2, 2}, {{0, 1}, {0, 1}}), InvalidArgument);
    CHECK_NOTHROW(PartiteHypergraph({2, 2}, {{0, 1}, {0, 1}}, true));
  }

  TEST_CASE("vertex references print 1-based") {
    CHECK(to_string(VertexRef{0, 0}) == "(1,1)");
    CHECK(VertexRef::one_based(3, 4) == VertexRef{2, 3});
  }

  TEST_CASE("degrees and codegrees on f6") {
    auto h = paper_instance(PaperInstance::f6);
    CHECK(degree(h, VertexRef::one_based(1, 5)) == 4);
    CHECK(degree(h, VertexRef::one_based(4, 3)) == 3);
    CHECK(edges_through(h, VertexRef::one_based(2, 2)).ids() == std::vector<int>{5, 9});
    CHECK(codegree(h, VertexRef::one_based(3, 4), VertexRef::one_based(5, 3)) == 2);
    CHECK_THROWS_AS(codegree(h, VertexRef{0, 0}, VertexRef{0, 0}), InvalidArgument);
    CHECK(degree_profile(h).max_degree == 4);
    CHECK_THROWS_AS(degree(h, VertexRef{0, 6}), InvalidArgument);
  }

  TEST_CASE("intersection sizes") {
    auto h = paper_instance(PaperInstance::f6);
    CHECK(edge_intersection_size(h, 0, 8) == 2);
    CHECK(edge_intersection_size(h, 0, 12) == 2);
    CHECK(edge_intersection_size(h, 1, 2) == 1);
    CHECK_THROWS_AS(edge_intersection_size(h, 3, 3), InvalidArgument);
  }

  TEST_CASE("intersecting check reports the first disjoint pair") {
    PartiteHypergraph h({3, 3}, {{0, 0}, {0, 1}, {1, 2}, {2, 2}});
    auto check = is_intersecting(h);
    CHECK_FALSE(check.intersecting);
    REQUIRE(check.witness);
    CHECK(*check.witness == EdgePair{0, 2});
    CHECK(is_intersecting(paper_instance(PaperInstance::f7)).intersecting);
    CHECK(is_intersecting(PartiteHypergraph({1}, {})).intersecting);
  }

  TEST_CASE("matching number agrees with the subset oracle") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
      std::vector<int> sizes{3, 3, 2};
      std::vector<Edge> edges;
      std::set<Edge> seen;
      int m = std::uniform_int_distribution<int>(0, 8)(rng);
      while (static_cast<int>(edges.size()) < m) {
        Edge e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
        if (seen.insert(e).second) edges.push_back(e);
      }
      PartiteHypergraph h(sizes, edges);
      CHECK(matching_number(h) == oracle::nu(h));
    }
  }

  TEST_CASE("delete_star and induced keep parts and order") {
    auto h = paper_instance(PaperInstance::f6);
    auto d = delete_star(h, VertexRef::one_based(1, 6));
    CHECK(d.m() == 9);
    CHECK(d.part_sizes() == h.part_sizes());
    CHECK(d.edges()[0] == h.edges()[0]);
    std::vector<EdgeId> ids{4, 1};
    auto sub = induced(h, ids);
    CHECK(sub.edges()[0] == h.edges()[4]);
    CHECK(sub.edges()[1] == h.edges()[1]);
  }

  TEST_CASE("intersection budget equals the pairwise count") {
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
      auto h = oracle::random_intersecting(rng);
      long long pairs = 0;
      for (int i = 0; i < h.m(); ++i)
        for (int j = i + 1; j < h.m(); ++j) pairs += edge_intersection_size(h, i, j);
      auto b = intersection_budget(h);
      CHECK(b.available == pairs);
      CHECK(b.required == choose2(h.m()));
      CHECK(b.sufficient());
    }
  }

  TEST_CASE("relabeled moves parts, vertices and edges") {
    PartiteHypergraph h({2, 3}, {{0, 1}, {1, 2}});
    std::vector<int> parts{1, 0}, edges{1, 0};
    auto g = relabeled(h, parts, {{1, 0}, {2, 0, 1}}, edges);
    CHECK(g.part_sizes() == std::vector<int>{3, 2});
    CHECK(g.edges()[0] == Edge{1, 0});
    CHECK(g.edges()[1] == Edge{0, 1});
  }
}
