#include "doctest.h"
#include "ryser/analysis.hpp"
#include "ryser/constructions.hpp"
#include "ryser/cover.hpp"
#include "ryser/search.hpp"

using namespace ryser;

namespace {

struct Cell {
  int part, index, degree;
  std::vector<int> edges;  // 1-based
};

// The degree structure of f6 as published.
const std::vector<Cell> kTable = {
    {1, 1, 1, {1}},          {1, 2, 1, {2}},          {1, 3, 1, {3}},
    {1, 4, 2, {4, 5}},       {1, 5, 4, {6, 7, 8, 9}}, {1, 6, 4, {10, 11, 12, 13}},
    {2, 1, 1, {4}},          {2, 2, 2, {6, 10}},      {2, 3, 2, {9, 13}},
    {2, 4, 4, {1, 3, 8, 11}}, {2, 5, 4, {2, 5, 7, 12}},
    {3, 1, 1, {7}},          {3, 2, 2, {2, 11}},      {3, 3, 2, {8, 13}},
    {3, 4, 4, {1, 5, 9, 10}}, {3, 5, 4, {3, 4, 6, 12}},
    {4, 1, 1, {12}},         {4, 2, 2, {5, 8}},       {4, 3, 3, {3, 7, 10}},
    {4, 4, 3, {4, 9, 11}},   {4, 5, 4, {1, 2, 6, 13}},
    {5, 1, 1, {6}},          {5, 2, 2, {7, 11}},      {5, 3, 3, {1, 9, 12}},
    {5, 4, 3, {3, 5, 13}},   {5, 5, 4, {2, 4, 8, 10}},
    {6, 1, 1, {10}},         {6, 2, 2, {8, 12}},      {6, 3, 3, {2, 3, 9}},
    {6, 4, 3, {5, 6, 11}},   {6, 5, 4, {1, 4, 7, 13}},
};

PartiteHypergraph eight_edge_witness() {
  SearchParams p;
  p.r = 6;
  p.m = 8;
  p.tau = 4;
  p.cap = 4;
  static auto outcome = search_extremal(p);
  REQUIRE(outcome.status == SearchStatus::found);
  return outcome.hypergraphs().front();
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("f6 degree table matches the golden table") {
    auto table = degree_table(paper_instance(PaperInstance::f6));
    CHECK(table.degrees == std::vector<int>{1, 2, 3, 4});
    std::size_t seen = 0;
    for (std::size_t p = 0; p < table.rows.size(); ++p)
      for (const auto& [d, entries] : table.rows[p])
        for (const auto& e : entries) {
          ++seen;
          auto it = std::find_if(kTable.begin(), kTable.end(), [&](const Cell& c) {
            return c.part == e.vertex.part + 1 && c.index == e.vertex.index + 1;
          });
          REQUIRE(it != kTable.end());
          CHECK(it->degree == d);
          CHECK(static_cast<int>(p) == e.vertex.part);
          std::vector<int> got;
          for (int id : e.edges) got.push_back(id + 1);
          CHECK(got == it->edges);
        }
    CHECK(seen == kTable.size());
    auto text = table.render();
    CHECK(text.find("E((4,3)) = {E3, E7, E10}") != std::string::npos);
  }

  TEST_CASE("degree table skips isolated vertices") {
    PartiteHypergraph h({2, 1}, {{0, 0}});
    auto table = degree_table(h);
    CHECK(table.degrees == std::vector<int>{1});
    CHECK(table.rows[0].at(1).size() == 1);
  }

  TEST_CASE("linearity of f6") {
    auto f6 = paper_instance(PaperInstance::f6);
    std::vector<EdgeId> ignore{0};
    CHECK(linearity_report(f6, ignore).linear());
    auto rep = linearity_report(f6);
    REQUIRE(rep.pairs.size() == 2);
    CHECK(rep.pairs[0] == LinearityReport::Pair{{0, 8}, 2});
    CHECK(rep.pairs[1] == LinearityReport::Pair{{0, 12}, 2});
    CHECK(linearity_report(truncated_projective_plane(3)).linear());
  }

  TEST_CASE("2-regular linear 5-edge subsets of f6") {
    auto f6 = paper_instance(PaperInstance::f6);
    auto found = find_regular_subhypergraphs(f6, 2, 5);
    std::vector<std::vector<EdgeId>> expected = {{0, 1, 2, 3, 4}, {3, 5, 8, 9, 12}, {1, 6, 7, 10, 12}};
    for (const auto& s : expected) {
      CHECK(std::find(found.begin(), found.end(), s) != found.end());
      CHECK(cover_number(induced(f6, s)).tau == 3);
    }
    CHECK(std::is_sorted(found.begin(), found.end()));
  }

  TEST_CASE("8-edge lemma hypotheses are checked") {
    CHECK_THROWS_AS(check_8edge_lemma(paper_instance(PaperInstance::f6)), HypothesisError);
    CHECK_THROWS_AS(classify_degree_scheme(truncated_projective_plane(2)), HypothesisError);
  }

  TEST_CASE("8-edge lemma on a searched witness") {
    auto h = eight_edge_witness();
    auto rep = check_8edge_lemma(h);
    CHECK(rep.conclusions_hold());
    CHECK(rep.all_checks_hold());
    CHECK(classify_degree_scheme(h).matches_lemma());
  }

  TEST_CASE("part classification") {
    CHECK(classify_part({1, 2, 3, 2}).type == SchemeType::type_a);
    CHECK(classify_part({0, 1, 2, 3, 1, 1}).type == SchemeType::type_b);
    CHECK(classify_part({4, 4}).type == SchemeType::other);
    CHECK(classify_part({3, 2, 1, 1, 1, 1}).type == SchemeType::other);
  }

  TEST_CASE("codegree coverage audit") {
    auto f6 = paper_instance(PaperInstance::f6);
    std::vector<VertexRef> pivots{VertexRef::one_based(1, 6), VertexRef::one_based(1, 5)};
    auto audit = codegree_coverage_audit(f6, pivots);
    REQUIRE(audit.singles.size() == 2);
    for (auto w : audit.singles[0].disjoint) CHECK(codegree(f6, w, pivots[0]) == 0);
    REQUIRE(audit.pairs.size() == 1);
    CHECK(audit.pairs[0].intersection == 0);
    CHECK(audit.pairs[0].union_size == 8);
  }

  TEST_CASE("ryser ratio") {
    CHECK(ryser_ratio(paper_instance(PaperInstance::f6)) == Ratio{1, 1});
    CHECK(ryser_ratio(truncated_projective_plane(3)) == Ratio{1, 1});
    PartiteHypergraph two({2, 2, 2}, {{0, 0, 0}, {1, 1, 1}});
    CHECK(ryser_ratio(two) == Ratio{1, 2});
    CHECK_THROWS_AS(ryser_ratio(PartiteHypergraph({2, 2}, {})), InvalidArgument);
  }
}
