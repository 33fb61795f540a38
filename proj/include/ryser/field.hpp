#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace ryser {

/// GF(p^k) for the small prime powers the plane generator supports
/// (2, 3, 4, 5, 7, 8, 9). An element is a polynomial of degree < k over
/// GF(p), packed as the integer sum c_i p^i.
class GaloisField {
 public:
  using Element = int;

  /// Throws InvalidArgument for q outside the supported set (in particular
  /// q = 6, which is not a prime power).
  explicit GaloisField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  /// Monic reduction polynomial, low coefficient first, length k+1.
  const std::vector<int>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const { return neg_[a]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  /// Multiplicative inverse; a must be nonzero.
  Element inv(Element a) const;

 private:
  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_;
};

/// True if `poly` (low coefficient first, monic, degree 2 or 3) has no root
/// in GF(p), which for these degrees is equivalent to irreducibility.
bool has_no_roots(const std::vector<int>& poly, int p);

/// Canonically normalized homogeneous coordinates: first nonzero entry is 1.
struct ProjectivePoint {
  std::array<GaloisField::Element, 3> coords{};
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// PG(2, q): points and lines both as normalized triples, point P lies on
/// line L iff the dot product vanishes. Both lists are sorted.
class ProjectivePlane {
 public:
  explicit ProjectivePlane(int q);

  const GaloisField& field() const { return field_; }
  int order() const { return field_.order(); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const std::vector<ProjectivePoint>& lines() const { return points_; }
  bool incident(const ProjectivePoint& point, const ProjectivePoint& line) const;
  /// Indices of the points on a line, ascending.
  std::vector<int> points_on(int line) const;

  ProjectivePoint normalize(std::array<GaloisField::Element, 3> coords) const;

 private:
  GaloisField field_;
  std::vector<ProjectivePoint> points_;
};

}  // namespace ryser
