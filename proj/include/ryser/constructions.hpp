#pragma once

#include <string_view>

#include "ryser/core.hpp"

namespace ryser {

/// PG(2, q) with its first point v and the q+1 lines through v removed.
/// Part i holds the q points of the i-th line through v (v excluded), in
/// point order; the edges are the remaining q^2 lines in line order.
/// Every vertex has degree q and tau = q.
///
/// Note: this degree q is what the plane axioms give; some write-ups of the
/// construction state (r-1)^2 for it, which does not hold.
PartiteHypergraph truncated_projective_plane(int q);

/// Lifts h to s parts: part r+t (t = 0..s-r-1) gets m fresh vertices and
/// edge j takes vertex j there. Preserves tau, nu and intersecting.
PartiteHypergraph pad_to(const PartiteHypergraph& h, int s);

enum class PaperInstance { f6, f7 };

/// Parses "f6" / "f7"; throws InvalidArgument otherwise.
PaperInstance paper_instance_from_name(std::string_view name);

/// f6: 6 parts [6,5,5,5,5,5], 13 edges, tau 5.
/// f7: 7 parts [6,6,6,6,6,6,7], 22 edges, tau 6.
PartiteHypergraph paper_instance(PaperInstance which);

}  // namespace ryser
