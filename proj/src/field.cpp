#include "ryser/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ryser/core.hpp"

namespace ryser {

namespace {

struct FieldSpec {
  int q, p, k;
  std::vector<int> modulus;  // low coefficient first, monic
};

const FieldSpec* find_spec(int q) {
  static const std::vector<FieldSpec> specs = {
      {2, 2, 1, {0, 1}},
      {3, 3, 1, {0, 1}},
      {4, 2, 2, {1, 1, 1}},     // x^2 + x + 1
      {5, 5, 1, {0, 1}},
      {7, 7, 1, {0, 1}},
      {8, 2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
      {9, 3, 2, {1, 0, 1}},     // x^2 + 1
  };
  for (const auto& s : specs)
    if (s.q == q) return &s;
  return nullptr;
}

std::vector<int> digits(int value, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

int pack(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

}  // namespace

bool has_no_roots(const std::vector<int>& poly, int p) {
  for (int x = 0; x < p; ++x) {
    int acc = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) acc = (acc * x + poly[i]) % p;
    if (acc == 0) return false;
  }
  return true;
}

GaloisField::GaloisField(int q) {
  const FieldSpec* spec = find_spec(q);
  if (spec == nullptr) {
    std::string msg = "no built-in field of order " + std::to_string(q);
    if (q == 6) msg += ": 6 is not a prime power (and no projective plane of order 6 exists)";
    else msg += "; supported orders are 2, 3, 4, 5, 7, 8, 9";
    throw InvalidArgument(msg);
  }
  q_ = spec->q;
  p_ = spec->p;
  k_ = spec->k;
  modulus_ = spec->modulus;
  if (k_ > 1 && !has_no_roots(modulus_, p_))
    throw std::logic_error("reduction polynomial for GF(" + std::to_string(q_) + ") is reducible");

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p_, k_);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = pack(dn, p_);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p_, k_);
      std::vector<int> sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = pack(sum, p_);

      // schoolbook product, then reduce by the monic modulus from the top
      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int deg = 2 * k_ - 2; deg >= k_; --deg) {
        int c = prod[deg];
        if (c == 0) continue;
        for (int i = 0; i <= k_; ++i)
          prod[deg - k_ + i] = ((prod[deg - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
      }
      prod.resize(k_);
      mul_[a * q_ + b] = pack(prod, p_);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
}

GaloisField::Element GaloisField::inv(Element a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative inverse");
  return inv_[a];
}

ProjectivePlane::ProjectivePlane(int q) : field_(q) {
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        ProjectivePoint p = normalize({x, y, z});
        if (p.coords == std::array<int, 3>{x, y, z}) points_.push_back(p);
      }
  std::sort(points_.begin(), points_.end());
}

ProjectivePoint ProjectivePlane::normalize(std::array<GaloisField::Element, 3> c) const {
  for (int i = 0; i < 3; ++i) {
    if (c[i] == 0) continue;
    auto s = field_.inv(c[i]);
    for (auto& x : c) x = field_.mul(x, s);
    return {c};
  }
  throw InvalidArgument("the zero vector is not a projective point");
}

bool ProjectivePlane::incident(const ProjectivePoint& point, const ProjectivePoint& line) const {
  GaloisField::Element acc = 0;
  for (int i = 0; i < 3; ++i) acc = field_.add(acc, field_.mul(point.coords[i], line.coords[i]));
  return acc == 0;
}

std::vector<int> ProjectivePlane::points_on(int line) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(points_.size()); ++i)
    if (incident(points_[i], points_[line])) out.push_back(i);
  return out;
}

}  // namespace ryser
