#include "ryser/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <mutex>

#include "json.hpp"
#include "ryser/cover_kernel.hpp"
#include "ryser/io.hpp"
#include "ryser/parallel.hpp"
#include "ryser/pruning.hpp"

namespace ryser {

using json = nlohmann::json;

std::string_view to_string(SearchMode mode) { return mode == SearchMode::first ? "first" : "all"; }

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::interrupted: return "interrupted";
  }
  return "?";
}

SearchMode search_mode_from_name(std::string_view name) {
  if (name == "first") return SearchMode::first;
  if (name == "all") return SearchMode::all;
  throw InvalidArgument("unknown search mode: " + std::string(name));
}

std::vector<PartiteHypergraph> SearchOutcome::hypergraphs() const {
  std::vector<PartiteHypergraph> out;
  out.reserve(instances.size());
  for (const auto& f : instances) out.push_back(f.to_hypergraph());
  return out;
}

namespace {

using Matrix = std::vector<std::uint8_t>;

struct SubtreeResult {
  long long nodes = 0;
  std::vector<Matrix> instances;
};

// DFS state for one worker. Level k holds the partial instance with k rows.
class Generator {
 public:
  Generator(const SearchParams& p, int cap)
      : r_(p.r), m_(p.m), cap_(cap), rules_(p.rules), goal_{p.r, p.m, p.tau, cap},
        rows_(static_cast<std::size_t>(m_) * r_, 0),
        used_(static_cast<std::size_t>(m_ + 1) * r_, 0),
        cell_start_(static_cast<std::size_t>(m_ + 1) * r_, 0),
        with_(static_cast<std::size_t>(m_ + 1) * r_ * cap_, 0),
        degree_limit_(pruning::star_degree_limit(goal_)) {
    for (int c = 0; c < r_; ++c) cell_start_[c] = c == 0;
  }

  /// Rebuilds the level arrays for the first k rows of `rows`.
  void seed(const Matrix& rows, int k) {
    std::copy(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(k) * r_, rows_.begin());
    for (int level = 0; level < k; ++level) push(level);
  }

  /// Visits canonical children of level k that survive the rules. visit(k+1)
  /// returns false to stop the enumeration.
  template <class Visit>
  bool children(int k, Visit&& visit) {
    std::uint64_t all = k == 64 ? ~0ULL : ((1ULL << k) - 1);
    return extend(k, 0, 0, all, all, visit);
  }

  bool leaf_accepted() { return !has_cover(m_, goal_.tau - 1); }

  Matrix matrix(int k) const {
    return Matrix(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(k) * r_);
  }

 private:
  std::uint64_t& with(int level, int c, int v) {
    return with_[(static_cast<std::size_t>(level) * r_ + c) * cap_ + v];
  }
  int used(int level, int c) const { return used_[static_cast<std::size_t>(level) * r_ + c]; }

  template <class Visit>
  bool extend(int k, int c, std::uint64_t meets, std::uint64_t same, std::uint64_t all, Visit& visit) {
    if (c == r_) {
      if (meets != all || (k > 0 && same != 0)) return true;
      if (!after_earlier_rows(k) || !canonical(k + 1)) return true;
      push(k);
      if (k + 1 < m_ && prune(k + 1)) return true;
      return visit(k + 1);
    }
    const std::uint8_t* starts = cell_start_.data() + static_cast<std::size_t>(k) * r_;
    std::uint8_t* row = rows_.data() + static_cast<std::size_t>(k) * r_;
    int lo = (c > 0 && !starts[c]) ? row[c - 1] : 0;
    int hi = std::min(used(k, c), cap_ - 1);
    // the same rules applied column by column, before the canonical test
    if (rules_.part_size && used(k, c) + (m_ - k - 1) < goal_.tau) lo = std::max(lo, used(k, c));
    for (int v = lo; v <= hi; ++v) {
      std::uint64_t rows_with = v < used(k, c) ? with(k, c, v) : 0;
      if (rules_.star && std::popcount(rows_with) >= degree_limit_) continue;
      row[c] = static_cast<std::uint8_t>(v);
      if (!extend(k, c + 1, meets | rows_with, same & rows_with, all, visit)) return false;
    }
    return true;
  }

  // Necessary for canonicity: placed at any earlier position j, row k must
  // not read smaller than row j did.
  bool after_earlier_rows(int k) {
    const std::uint8_t* row = rows_.data() + static_cast<std::size_t>(k) * r_;
    std::uint8_t reading[64];
    for (int j = 0; j < k; ++j) {
      const std::uint8_t* starts = cell_start_.data() + static_cast<std::size_t>(j) * r_;
      for (int c = 0; c < r_; ++c) reading[c] = static_cast<std::uint8_t>(std::min<int>(row[c], used(j, c)));
      for (int begin = 0; begin < r_;) {
        int end = begin + 1;
        while (end < r_ && !starts[end]) ++end;
        std::sort(reading + begin, reading + end);
        begin = end;
      }
      if (std::lexicographical_compare(reading, reading + r_, rows_.data() + static_cast<std::size_t>(j) * r_,
                                       rows_.data() + static_cast<std::size_t>(j + 1) * r_))
        return false;
    }
    return true;
  }

  bool canonical(int k) {
    Matrix m = matrix(k);
    engine_.load(m, k, r_);
    return engine_.is_minimal(m);
  }

  // level k -> k + 1 using row k
  void push(int k) {
    const std::uint8_t* row = rows_.data() + static_cast<std::size_t>(k) * r_;
    std::copy_n(used_.begin() + static_cast<std::ptrdiff_t>(k) * r_, r_,
                used_.begin() + static_cast<std::ptrdiff_t>(k + 1) * r_);
    std::copy_n(with_.begin() + static_cast<std::ptrdiff_t>(k) * r_ * cap_, r_ * cap_,
                with_.begin() + static_cast<std::ptrdiff_t>(k + 1) * r_ * cap_);
    for (int c = 0; c < r_; ++c) {
      int v = row[c];
      if (v == used(k, c)) ++used_[static_cast<std::size_t>(k + 1) * r_ + c];
      with(k + 1, c, v) |= 1ULL << k;
      bool start = cell_start_[static_cast<std::size_t>(k) * r_ + c] || (c > 0 && row[c] != row[c - 1]);
      cell_start_[static_cast<std::size_t>(k + 1) * r_ + c] = start;
    }
  }

  bool prune(int k) {
    if (rules_.part_size) {
      std::span<const int> used(used_.data() + static_cast<std::size_t>(k) * r_, r_);
      if (pruning::part_size(goal_, k, used)) return true;
    }
    if (rules_.star || rules_.budget) {
      std::vector<std::vector<int>> degrees(r_);
      int max_degree = 0;
      for (int c = 0; c < r_; ++c)
        for (int v = 0; v < used(k, c); ++v) {
          int d = std::popcount(with(k, c, v));
          degrees[c].push_back(d);
          max_degree = std::max(max_degree, d);
        }
      if (rules_.star && pruning::star(goal_, max_degree)) return true;
      if (rules_.budget && pruning::budget(goal_, k, degrees)) return true;
    }
    if (rules_.completion) {
      for (int size = 1; size < goal_.tau; ++size) {
        int need = pruning::vertex_set_threshold(goal_, size);
        if (need <= k && covers_at_least(k, size, need)) return true;
      }
    }
    return false;
  }

  // Do some `size` vertices meet at least `need` of the first k rows?
  bool covers_at_least(int k, int size, int need) {
    std::vector<std::uint64_t> stars;
    for (int c = 0; c < r_; ++c)
      for (int v = 0; v < used(k, c); ++v) stars.push_back(with(k, c, v));
    std::sort(stars.begin(), stars.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
    auto dfs = [&](auto& self, std::size_t from, int left, std::uint64_t met) -> bool {
      if (std::popcount(met) >= need) return true;
      if (left == 0 || from == stars.size()) return false;
      if (std::popcount(met) + left * std::popcount(stars[from]) < need) return false;
      for (std::size_t i = from; i < stars.size(); ++i)
        if (self(self, i + 1, left - 1, met | stars[i])) return true;
      return false;
    };
    return dfs(dfs, 0, size, 0);
  }

  // Is there a cover of the first k rows with at most `budget` vertices?
  bool has_cover(int k, int budget) {
    if (budget < 0) return false;
    std::vector<std::uint64_t> stars;
    std::vector<int> offset(r_ + 1, 0);
    for (int c = 0; c < r_; ++c) {
      offset[c + 1] = offset[c] + used(k, c);
      for (int v = 0; v < used(k, c); ++v) stars.push_back(with(k, c, v));
    }
    std::vector<std::vector<int>> edge_vertices(k, std::vector<int>(r_));
    for (int e = 0; e < k; ++e)
      for (int c = 0; c < r_; ++c) edge_vertices[e][c] = offset[c] + rows_[static_cast<std::size_t>(e) * r_ + c];
    std::uint64_t all = k == 64 ? ~0ULL : ((1ULL << k) - 1);
    detail::CoverKernel<std::uint64_t> kernel(std::move(stars), std::move(edge_vertices), all);
    return kernel.find(all, budget);
  }

  int r_, m_, cap_;
  PruningRules rules_;
  pruning::Goal goal_;
  Matrix rows_;
  std::vector<int> used_;
  std::vector<std::uint8_t> cell_start_;
  std::vector<std::uint64_t> with_;
  int degree_limit_;
  detail::CanonicalEngine engine_;
};

struct Frontier {
  std::vector<Matrix> nodes;
  int depth = 0;
  long long visited = 0;  // nodes at depth 1..depth
};

Frontier build_frontier(const SearchParams& p, int cap) {
  Frontier f;
  f.depth = std::clamp(p.split_depth, 0, p.m - 1);
  Generator gen(p, cap);
  auto walk = [&](auto& self, int k) -> void {
    if (k == f.depth) {
      f.nodes.push_back(gen.matrix(k));
      return;
    }
    gen.children(k, [&](int child) {
      ++f.visited;
      self(self, child);
      return true;
    });
  };
  walk(walk, 0);
  return f;
}

class Search {
 public:
  explicit Search(SearchParams p) : p_(std::move(p)) {
    if (p_.r < 2) throw InvalidArgument("search needs r >= 2");
    if (p_.r > 64) throw InvalidArgument("search supports r <= 64");
    if (p_.m < 1) throw InvalidArgument("search needs m >= 1");
    if (p_.m > 64) throw InvalidArgument("search supports m <= 64");
    if (p_.tau < 1) throw InvalidArgument("search needs tau >= 1");
    if (p_.effective_cap() < 1) throw InvalidArgument("search needs cap >= 1");
    if (p_.max_instances && *p_.max_instances < 1) throw InvalidArgument("max instances must be positive");
    if (p_.split_depth < 0) throw InvalidArgument("split depth must be non-negative");
    cap_ = std::min(p_.effective_cap(), p_.m);
  }

  SearchOutcome run(bool must_resume) {
    auto start = std::chrono::steady_clock::now();
    frontier_ = build_frontier(p_, cap_);
    const int count = static_cast<int>(frontier_.nodes.size());
    results_.assign(count, std::nullopt);

    bool have_state = p_.checkpoint && std::filesystem::exists(*p_.checkpoint);
    if (must_resume && !have_state) throw InvalidArgument("checkpoint file not found");
    if (have_state) load_state(*p_.checkpoint);
    cutoff_ = cutoff();

    std::atomic<int> finished_now{0};
    parallel_for(count, std::max(1, p_.threads), [&](int i) {
      if (results_[i] || i > cutoff_.load()) return;
      if (p_.stop_after && finished_now.load() >= *p_.stop_after) return;
      auto result = explore(i);
      if (!result) return;  // cancelled
      std::lock_guard lock(mutex_);
      results_[i] = std::move(*result);
      ++finished_now;
      cutoff_ = std::min(cutoff_.load(), cutoff());
      elapsed_ = previous_seconds_ + seconds_since(start);
      if (p_.checkpoint) save_state(*p_.checkpoint);
    });

    SearchOutcome out = summarize();
    out.seconds = previous_seconds_ + seconds_since(start);
    if (p_.checkpoint) {
      elapsed_ = out.seconds;
      save_state(*p_.checkpoint);
    }
    return out;
  }

 private:
  static double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
  }

  // Largest subtree index that can still matter, given finished results.
  int cutoff() const {
    const int count = static_cast<int>(results_.size());
    if (p_.mode == SearchMode::first) {
      for (int i = 0; i < count; ++i)
        if (results_[i] && !results_[i]->instances.empty()) return i;
      return count;
    }
    if (!p_.max_instances) return count;
    std::size_t total = 0;
    for (int i = 0; i < count; ++i) {
      if (!results_[i]) return count;
      total += results_[i]->instances.size();
      if (total >= static_cast<std::size_t>(*p_.max_instances)) return i;
    }
    return count;
  }

  std::optional<SubtreeResult> explore(int index) {
    SubtreeResult result;
    Generator gen(p_, cap_);
    gen.seed(frontier_.nodes[index], frontier_.depth);
    std::size_t limit = p_.mode == SearchMode::first ? 1 : p_.max_instances.value_or(0);
    bool cancelled = false;
    auto walk = [&](auto& self, int k) -> bool {
      return gen.children(k, [&](int child) {
        if (cutoff_.load(std::memory_order_relaxed) < index) {
          cancelled = true;
          return false;
        }
        ++result.nodes;
        if (child == p_.m) {
          if (gen.leaf_accepted()) {
            result.instances.push_back(gen.matrix(child));
            if (limit != 0 && result.instances.size() >= limit) return false;
          }
          return true;
        }
        return self(self, child);
      });
    };
    walk(walk, frontier_.depth);
    if (cancelled) return std::nullopt;
    return result;
  }

  SearchOutcome summarize() const {
    SearchOutcome out;
    out.r = p_.r;
    out.m = p_.m;
    out.tau = p_.tau;
    out.cap = p_.effective_cap();
    out.mode = p_.mode;
    out.nodes = frontier_.visited;
    const int count = static_cast<int>(results_.size());
    const int last = std::min(cutoff(), count - 1);
    bool complete = true;
    for (int i = 0; i <= last; ++i) {
      if (!results_[i]) {
        complete = false;
        continue;
      }
      out.nodes += results_[i]->nodes;
      for (const auto& m : results_[i]->instances) out.instances.push_back({p_.r, p_.m, m});
    }
    if (p_.max_instances && out.instances.size() > static_cast<std::size_t>(*p_.max_instances))
      out.instances.resize(*p_.max_instances);
    if (p_.mode == SearchMode::first && out.instances.size() > 1) out.instances.resize(1);
    std::sort(out.instances.begin(), out.instances.end());
    if (!complete)
      out.status = SearchStatus::interrupted;
    else if (!out.instances.empty())
      out.status = SearchStatus::found;
    else
      out.status = SearchStatus::exhausted;
    return out;
  }

  json params_json() const {
    json rules = {{"part_size", p_.rules.part_size},
                  {"star", p_.rules.star},
                  {"budget", p_.rules.budget},
                  {"completion", p_.rules.completion}};
    return {{"r", p_.r},
            {"m", p_.m},
            {"tau", p_.tau},
            {"cap", p_.effective_cap()},
            {"mode", std::string(to_string(p_.mode))},
            {"max_instances", p_.max_instances ? json(*p_.max_instances) : json(nullptr)},
            {"rules", rules},
            {"split_depth", p_.split_depth}};
  }

  void save_state(const std::filesystem::path& path) const {
    json completed = json::array();
    for (std::size_t i = 0; i < results_.size(); ++i) {
      if (!results_[i]) continue;
      json instances = json::array();
      for (const auto& m : results_[i]->instances)
        instances.push_back(format_instance(CanonicalForm{p_.r, p_.m, m}.to_hypergraph()));
      completed.push_back({{"index", i}, {"nodes", results_[i]->nodes}, {"instances", instances}});
    }
    json state = {{"version", std::string(kSearchVersion)},
                  {"params", params_json()},
                  {"frontier_size", results_.size()},
                  {"seconds", elapsed_},
                  {"completed", completed}};
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
      out << state.dump(1) << '\n';
      if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }

  void load_state(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
    json state;
    try {
      state = json::parse(in);
    } catch (const json::exception& e) {
      throw CheckpointMismatch(std::string("malformed checkpoint: ") + e.what());
    }
    if (!state.is_object() || state.value("version", std::string()) != kSearchVersion)
      throw CheckpointMismatch("checkpoint was written by a different search version");
    if (state["params"] != params_json())
      throw CheckpointMismatch("checkpoint parameters differ: " + state["params"].dump());
    if (state.value("frontier_size", -1) != static_cast<int>(results_.size()))
      throw CheckpointMismatch("checkpoint frontier does not match");
    try {
      previous_seconds_ = state.value("seconds", 0.0);
      for (const auto& entry : state.at("completed")) {
        int index = entry.at("index").get<int>();
        if (index < 0 || index >= static_cast<int>(results_.size()))
          throw CheckpointMismatch("checkpoint subtree index out of range");
        SubtreeResult result;
        result.nodes = entry.at("nodes").get<long long>();
        for (const auto& text : entry.at("instances")) {
          auto h = parse_instance(text.get<std::string>());
          if (h.r() != p_.r || h.m() != p_.m) throw CheckpointMismatch("checkpoint instance has wrong shape");
          Matrix m;
          for (const auto& e : h.edges())
            for (int v : e) m.push_back(static_cast<std::uint8_t>(v));
          result.instances.push_back(std::move(m));
        }
        results_[index] = std::move(result);
      }
    } catch (const json::exception& e) {
      throw CheckpointMismatch(std::string("malformed checkpoint: ") + e.what());
    } catch (const ParseError& e) {
      throw CheckpointMismatch(std::string("malformed checkpoint instance: ") + e.what());
    }
    elapsed_ = previous_seconds_;
  }

  SearchParams p_;
  int cap_ = 0;
  Frontier frontier_;
  std::vector<std::optional<SubtreeResult>> results_;
  std::atomic<int> cutoff_{0};
  std::mutex mutex_;
  double previous_seconds_ = 0;
  double elapsed_ = 0;
};

}  // namespace

SearchOutcome search_extremal(const SearchParams& params) { return Search(params).run(false); }

SearchOutcome resume_search(const std::filesystem::path& state, SearchParams params) {
  params.checkpoint = state;
  return Search(std::move(params)).run(true);
}

}  // namespace ryser
