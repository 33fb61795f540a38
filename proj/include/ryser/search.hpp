#pragma once

// Orderly generation of r-partite intersecting hypergraphs with m edges and
// cover number >= tau. Partial edge matrices are extended one row at a time
// and kept only when canonically minimal, so every isomorphism class is
// visited once.

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "ryser/canonical.hpp"
#include "ryser/core.hpp"

namespace ryser {

enum class SearchMode { first, all };
enum class SearchStatus { found, exhausted, interrupted };

std::string_view to_string(SearchMode mode);
std::string_view to_string(SearchStatus status);
SearchMode search_mode_from_name(std::string_view name);

struct PruningRules {
  bool part_size = true;
  bool star = true;
  bool budget = true;
  bool completion = true;

  static PruningRules none() { return {false, false, false, false}; }
  friend bool operator==(const PruningRules&, const PruningRules&) = default;
};

struct SearchParams {
  int r = 0;
  int m = 0;
  int tau = 0;
  std::optional<int> cap;  // defaults to m
  SearchMode mode = SearchMode::first;
  std::optional<int> max_instances;  // mode=all only
  PruningRules rules;
  int threads = 1;
  int split_depth = 3;  // frontier depth handed out to workers

  /// Progress file. An existing file is resumed, otherwise a new one is
  /// written after every finished subtree.
  std::optional<std::filesystem::path> checkpoint;
  /// Stop after this many subtrees finish in this run (status interrupted).
  std::optional<int> stop_after;

  int effective_cap() const { return cap.value_or(m); }
};

class CheckpointMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct SearchOutcome {
  int r = 0;
  int m = 0;
  int tau = 0;
  int cap = 0;
  SearchMode mode = SearchMode::first;
  SearchStatus status = SearchStatus::exhausted;
  std::vector<CanonicalForm> instances;  // sorted
  long long nodes = 0;
  double seconds = 0;

  std::vector<PartiteHypergraph> hypergraphs() const;
};

inline constexpr std::string_view kSearchVersion = "ryser-search-1";

SearchOutcome search_extremal(const SearchParams& params);

/// Like search_extremal, but the checkpoint file must already exist.
SearchOutcome resume_search(const std::filesystem::path& state, SearchParams params);

}  // namespace ryser
