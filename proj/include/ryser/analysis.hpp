#pragma once

// Structural reports and mechanical lemma verifiers. Verifiers never assume
// what they check: they test the hypotheses first (throwing HypothesisError
// when one fails) and then report whether each conclusion holds.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ryser/core.hpp"

namespace ryser {

class HypothesisError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct DegreeTableEntry {
  VertexRef vertex;
  std::vector<EdgeId> edges;
  friend bool operator==(const DegreeTableEntry&, const DegreeTableEntry&) = default;
};

/// Vertices of nonzero degree grouped by part and degree.
struct DegreeTable {
  std::vector<int> degrees;                                      // column headers, ascending
  std::vector<std::map<int, std::vector<DegreeTableEntry>>> rows;  // rows[part][degree]

  /// ASCII rendering: one block per part, one column per degree, each
  /// cell listing "E((i,j)) = {E_a, ...}" lines.
  std::string render() const;
};

DegreeTable degree_table(const PartiteHypergraph& h);

struct LemmaCheck {
  std::string name;
  bool holds = false;
};

/// Outcome for the 6-partite, 8-edge, intersecting, tau = 4 case.
struct EightEdgeLemmaReport {
  bool degree3_in_every_part = false;
  std::vector<std::optional<VertexRef>> degree3_witness;  // per part
  std::optional<EdgePair> heavy_pair;                     // shares >= 2 degree-3 vertices
  std::vector<VertexRef> heavy_shared;
  /// Intermediate facts about the degree-3 skeleton, each checked directly.
  std::vector<LemmaCheck> skeleton_checks;

  bool conclusions_hold() const { return degree3_in_every_part && heavy_pair.has_value(); }
  bool all_checks_hold() const;
};

EightEdgeLemmaReport check_8edge_lemma(const PartiteHypergraph& h);

enum class SchemeType { type_a, type_b, other };
std::string_view to_string(SchemeType t);

struct PartScheme {
  SchemeType type = SchemeType::other;
  std::vector<int> degrees;  // nonzero degrees, descending
};

/// TypeA: degrees {3,2,2,1}. TypeB: {3,2,1,1,1}. Anything else: other.
PartScheme classify_part(std::vector<int> degrees);

struct DegreeSchemeReport {
  std::vector<PartScheme> parts;
  int count(SchemeType t) const;
  /// Six TypeA parts, or five TypeA and one TypeB.
  bool matches_lemma() const;
};

/// Same hypotheses as check_8edge_lemma.
DegreeSchemeReport classify_degree_scheme(const PartiteHypergraph& h);

struct LinearityReport {
  struct Pair {
    EdgePair edges;
    int size = 0;
    friend bool operator==(const Pair&, const Pair&) = default;
  };
  std::vector<Pair> pairs;  // (i < j) pairs whose intersection is not a singleton
  bool linear() const { return pairs.empty(); }
};

LinearityReport linearity_report(const PartiteHypergraph& h, std::span<const EdgeId> ignore = {});

/// Every `size`-subset of edges whose sub-hypergraph is linear and in which
/// every vertex shared by two or more edges has degree exactly d. Sorted lexicographically.
std::vector<std::vector<EdgeId>> find_regular_subhypergraphs(const PartiteHypergraph& h, int d, int size);

struct CoverageAudit {
  struct Single {
    VertexRef pivot;
    std::vector<VertexRef> disjoint;  // w != pivot, d(w) >= 1, E(w) ∩ E(pivot) empty
  };
  struct Pair {
    VertexRef first, second;
    int intersection = 0;              // |E(v) ∩ E(u)|
    int union_size = 0;                // |E(v) ∪ E(u)|
    std::vector<VertexRef> disjoint;   // w outside {v,u}, d(w) >= 1, E(w) misses E(v) ∪ E(u)
  };
  std::vector<Single> singles;
  std::vector<Pair> pairs;
};

CoverageAudit codegree_coverage_audit(const PartiteHypergraph& h, std::span<const VertexRef> pivots);

struct Ratio {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// tau / ((r-1) nu), reduced. Needs m >= 1 and r >= 2.
Ratio ryser_ratio(const PartiteHypergraph& h);

}  // namespace ryser
