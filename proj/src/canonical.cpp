#include "ryser/canonical.hpp"

#include <algorithm>
#include <cstring>

namespace ryser {

std::string CanonicalForm::bytes() const {
  std::string out;
  out.reserve(4 + cells.size());
  out.push_back(static_cast<char>((r >> 8) & 0xff));
  out.push_back(static_cast<char>(r & 0xff));
  out.push_back(static_cast<char>((m >> 8) & 0xff));
  out.push_back(static_cast<char>(m & 0xff));
  for (auto c : cells) out.push_back(static_cast<char>(c));
  return out;
}

PartiteHypergraph CanonicalForm::to_hypergraph() const {
  std::vector<int> sizes(r, 1);
  std::vector<Edge> edges(m, Edge(r));
  for (int e = 0; e < m; ++e)
    for (int c = 0; c < r; ++c) {
      int v = cells[e * r + c];
      edges[e][c] = v;
      sizes[c] = std::max(sizes[c], v + 1);
    }
  return PartiteHypergraph(std::move(sizes), std::move(edges), true);
}

CanonicalForm canonical_form(const PartiteHypergraph& h) {
  for (int k : h.part_sizes())
    if (k > 255) throw InvalidArgument("canonical form supports at most 255 vertices per part");
  std::vector<std::uint8_t> matrix;
  matrix.reserve(static_cast<std::size_t>(h.m()) * h.r());
  for (const auto& e : h.edges())
    for (int v : e) matrix.push_back(static_cast<std::uint8_t>(v));
  detail::CanonicalEngine engine;
  engine.load(matrix, h.m(), h.r());
  return {h.r(), h.m(), engine.minimum()};
}

namespace detail {

namespace {
constexpr std::uint8_t kUnassigned = 255;
}

void CanonicalEngine::load(const std::vector<std::uint8_t>& matrix, int m, int r) {
  m_ = m;
  r_ = r;
  vals_ = matrix;
  bound_ = 1;
  for (auto v : vals_) bound_ = std::max(bound_, v + 1);
  label_.assign(static_cast<std::size_t>(r_) * bound_, kUnassigned);
  next_.assign(r_, 0);
  used_.assign(m_, 0);
  order_.assign(static_cast<std::size_t>(m_ + 1) * r_, 0);
  cell_start_.assign(static_cast<std::size_t>(m_ + 1) * r_, 0);
  assigned_.assign(static_cast<std::size_t>(m_ + 1) * r_, 0);
  scratch_.assign(static_cast<std::size_t>(m_ + 1) * 2 * r_, 0);
  ties_.assign(static_cast<std::size_t>(m_ + 1) * std::max(m_, 1), 0);
  for (int c = 0; c < r_; ++c) order_[c] = static_cast<std::uint8_t>(c);
  if (r_ > 0) cell_start_[0] = 1;
  leaves_ = 0;
}

std::vector<std::uint8_t> CanonicalEngine::minimum() {
  mode_ = Mode::minimum;
  best_.assign(static_cast<std::size_t>(m_) * r_, 0);
  found_smaller_ = false;
  descend(0, true);
  return best_;
}

bool CanonicalEngine::is_minimal(const std::vector<std::uint8_t>& target) {
  mode_ = Mode::test;
  target_ = &target;
  found_smaller_ = false;
  descend(0, false);
  target_ = nullptr;
  return !found_smaller_;
}

void CanonicalEngine::read_row(int level, int e, std::uint8_t* out) const {
  const std::uint8_t* order = order_.data() + static_cast<std::size_t>(level) * r_;
  const std::uint8_t* starts = cell_start_.data() + static_cast<std::size_t>(level) * r_;
  const std::uint8_t* row = vals_.data() + static_cast<std::size_t>(e) * r_;
  for (int pos = 0; pos < r_; ++pos) {
    int col = order[pos];
    std::uint8_t v = label_[col * bound_ + row[col]];
    out[pos] = v == kUnassigned ? next_[col] : v;
  }
  // sort within each cell (insertion sort; cells are tiny)
  int begin = 0;
  while (begin < r_) {
    int end = begin + 1;
    while (end < r_ && !starts[end]) ++end;
    for (int i = begin + 1; i < end; ++i) {
      std::uint8_t x = out[i];
      int j = i;
      while (j > begin && out[j - 1] > x) {
        out[j] = out[j - 1];
        --j;
      }
      out[j] = x;
    }
    begin = end;
  }
}

void CanonicalEngine::apply(int level, int e) {
  used_[e] = 1;
  const std::uint8_t* row = vals_.data() + static_cast<std::size_t>(e) * r_;
  std::uint8_t* assigned = assigned_.data() + static_cast<std::size_t>(level) * r_;
  for (int col = 0; col < r_; ++col) {
    std::uint8_t& slot = label_[col * bound_ + row[col]];
    assigned[col] = slot == kUnassigned;
    if (assigned[col]) slot = next_[col]++;
  }

  // refine: split each cell by this row's labels, ascending, stable
  const std::uint8_t* order = order_.data() + static_cast<std::size_t>(level) * r_;
  const std::uint8_t* starts = cell_start_.data() + static_cast<std::size_t>(level) * r_;
  std::uint8_t* new_order = order_.data() + static_cast<std::size_t>(level + 1) * r_;
  std::uint8_t* new_starts = cell_start_.data() + static_cast<std::size_t>(level + 1) * r_;
  auto value = [&](int col) { return label_[col * bound_ + row[col]]; };
  int begin = 0;
  while (begin < r_) {
    int end = begin + 1;
    while (end < r_ && !starts[end]) ++end;
    // stable insertion sort; cells are tiny
    for (int i = begin; i < end; ++i) {
      std::uint8_t col = order[i];
      int j = i;
      while (j > begin && value(new_order[j - 1]) > value(col)) {
        new_order[j] = new_order[j - 1];
        --j;
      }
      new_order[j] = col;
    }
    for (int i = begin; i < end; ++i)
      new_starts[i] = (i == begin) || value(new_order[i]) != value(new_order[i - 1]);
    begin = end;
  }
}

void CanonicalEngine::undo(int level, int e) {
  used_[e] = 0;
  const std::uint8_t* row = vals_.data() + static_cast<std::size_t>(e) * r_;
  const std::uint8_t* assigned = assigned_.data() + static_cast<std::size_t>(level) * r_;
  for (int col = 0; col < r_; ++col)
    if (assigned[col]) {
      label_[col * bound_ + row[col]] = kUnassigned;
      --next_[col];
    }
}

void CanonicalEngine::descend(int level, bool less) {
  if (level == m_) {
    ++leaves_;
    return;
  }
  std::uint8_t* min_row = scratch_.data() + static_cast<std::size_t>(level) * 2 * r_;
  std::uint8_t* cand = min_row + r_;
  int* ties = ties_.data() + static_cast<std::size_t>(level) * m_;
  int n_ties = 0;
  for (int e = 0; e < m_; ++e) {
    if (used_[e]) continue;
    read_row(level, e, cand);
    int c = n_ties == 0 ? -1 : std::memcmp(cand, min_row, r_);
    if (c < 0) {
      std::memcpy(min_row, cand, r_);
      n_ties = 0;
    }
    if (c <= 0) ties[n_ties++] = e;
  }

  if (mode_ == Mode::test) {
    int c = std::memcmp(min_row, target_->data() + static_cast<std::size_t>(level) * r_, r_);
    if (c < 0) {
      found_smaller_ = true;
      return;
    }
    if (c > 0) return;
  } else {
    std::uint8_t* best_row = best_.data() + static_cast<std::size_t>(level) * r_;
    if (!less) {
      int c = std::memcmp(min_row, best_row, r_);
      if (c > 0) return;
      less = c < 0;
    }
    if (less) std::memcpy(best_row, min_row, r_);
  }

  for (int i = 0; i < n_ties; ++i) {
    int e = ties[i];
    apply(level, e);
    // after the first child the stored best is complete again
    descend(level + 1, less && i == 0);
    undo(level, e);
    if (found_smaller_) return;
  }
}

}  // namespace detail

}  // namespace ryser
