#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ryser/core.hpp"

namespace ryser {

enum class CoverKind { greedy, exact_minimum, exhaustion };
std::string_view to_string(CoverKind kind);

/// A vertex set that covers every edge, plus what is known about optimality.
/// exact_minimum: exhausted_size == |vertices| - 1, i.e. no smaller cover.
/// exhaustion: no cover of size <= exhausted_size exists; vertices is the
/// best cover at hand (not necessarily minimum).
struct CoverCertificate {
  std::vector<VertexRef> vertices;
  CoverKind kind = CoverKind::greedy;
  std::optional<int> exhausted_size;
};

class NotIntersecting : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct CoverCheck {
  bool covers = true;
  std::optional<EdgeId> uncovered;  // lowest uncovered edge id
};
CoverCheck is_cover(const PartiteHypergraph& h, std::span<const VertexRef> vertices);

/// Max-coverage greedy; ties go to the lowest (part, index). On an
/// intersecting hypergraph every pick but the last covers at least two edges,
/// so the result has at most ceil(m/2) vertices. Throws NotIntersecting.
CoverCertificate greedy_cover(const PartiteHypergraph& h);

struct CoverOptions {
  std::optional<int> limit;  // default: size of the greedy cover
  int threads = 1;
};

struct CoverNumber {
  std::optional<int> tau;  // empty when tau > limit
  CoverCertificate certificate;
  bool exceeds_limit() const { return !tau.has_value(); }
};

/// Exact transversal number by iterative deepening on the cover size.
CoverNumber cover_number(const PartiteHypergraph& h, const CoverOptions& options = {});

/// Every k-element vertex set that covers h, each sorted by (part, index),
/// in lexicographic order. Empty iff tau(h) > k (or k exceeds the vertex count).
std::vector<std::vector<VertexRef>> enumerate_covers(const PartiteHypergraph& h, int k);

/// {"tau": n|null, "cover": [[part,index],...], "exhausted": k}, 1-based.
nlohmann::json certificate_json(const CoverNumber& result);

}  // namespace ryser
