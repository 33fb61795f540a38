#pragma once

// Canonical form of an r-partite hypergraph under part permutations,
// within-part vertex relabelings and edge reorderings.
//
// For a fixed edge order, relabel each part's vertices in order of first
// appearance and sort the columns lexicographically by their column vectors;
// the canonical form is the smallest row-major reading of that matrix over
// all edge orders. This is the lexicographic minimum over the whole group,
// and the first k rows of a canonical matrix are themselves canonical, which
// is what orderly generation relies on.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ryser/core.hpp"

namespace ryser {

struct CanonicalForm {
  int r = 0;
  int m = 0;
  std::vector<std::uint8_t> cells;  // m * r row-major, 0-based labels

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  /// Byte encoding: r, m (two bytes each, big endian), then the cells.
  std::string bytes() const;

  /// The canonical representative. Part sizes are the number of labels
  /// used in each part (at least 1).
  PartiteHypergraph to_hypergraph() const;
};

/// Degree-0 vertices are ignored: only the edge matrix matters.
CanonicalForm canonical_form(const PartiteHypergraph& h);

namespace detail {

/// Branch-and-bound over edge orders. Reusable across calls to avoid
/// reallocating per query.
class CanonicalEngine {
 public:
  /// `matrix` is m rows of r labels, each label < 255.
  void load(const std::vector<std::uint8_t>& matrix, int m, int r);

  /// Minimal reading (m * r cells).
  std::vector<std::uint8_t> minimum();

  /// True iff no edge order gives a reading smaller than `target`, which
  /// must be the reading of some order (typically the identity).
  bool is_minimal(const std::vector<std::uint8_t>& target);

  long long leaves() const { return leaves_; }

 private:
  enum class Mode { minimum, test };

  void descend(int level, bool less);
  void apply(int level, int e);
  void undo(int level, int e);
  void read_row(int level, int e, std::uint8_t* out) const;

  Mode mode_ = Mode::minimum;
  int m_ = 0, r_ = 0, bound_ = 0;
  std::vector<std::uint8_t> vals_;
  std::vector<std::uint8_t> label_;      // r * bound, 255 = unassigned
  std::vector<std::uint8_t> next_;       // per column
  std::vector<char> used_;
  std::vector<std::uint8_t> order_;      // (m + 1) * r column order per level
  std::vector<std::uint8_t> cell_start_; // (m + 1) * r, 1 where a cell begins
  std::vector<std::uint8_t> assigned_;   // (m + 1) * r, columns newly labeled at a level
  std::vector<std::uint8_t> best_;
  const std::vector<std::uint8_t>* target_ = nullptr;
  std::vector<std::uint8_t> scratch_;    // candidate readings, per level
  std::vector<int> ties_;                // per level, m entries
  bool found_smaller_ = false;
  long long leaves_ = 0;
};

}  // namespace detail

}  // namespace ryser
