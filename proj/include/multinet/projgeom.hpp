#pragma once

#include <array>
#include <string>

#include "multinet/exactnum.hpp"

namespace multinet {

using Vec3 = std::array<Cyclo, 3>;
using Vec4 = std::array<Cyclo, 4>;
using Matrix3 = std::array<Vec3, 3>;  // row-major

Cyclo dot(const Vec3& a, const Vec3& b);
Cyclo dot(const Vec4& a, const Vec4& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Cyclo det3(const Vec3& a, const Vec3& b, const Vec3& c);

/// lcm of the conductors of all entries.
int common_conductor(const Vec3& v);

/// A point of P^2 (or a line of the dual plane) in canonical form: all
/// coordinates at one conductor, first nonzero coordinate equal to 1.
/// Equality and ordering go through the canonical coordinate string.
template <class Tag>
class Homogeneous {
 public:
  /// Throws ZeroVector if all coordinates vanish.
  explicit Homogeneous(Vec3 coords);

  const Vec3& coords() const { return coords_; }
  const Cyclo& operator[](std::size_t i) const { return coords_[i]; }
  int conductor() const { return conductor_; }
  /// "[c0:c1:c2]" with each entry in coordinate-expression syntax.
  const std::string& key() const { return key_; }

  Homogeneous lifted(int m) const;

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) {
    if (a.conductor_ == b.conductor_) return a.key_ == b.key_;
    return a.coords_[0] == b.coords_[0] && a.coords_[1] == b.coords_[1] &&
           a.coords_[2] == b.coords_[2];
  }
  friend bool operator<(const Homogeneous& a, const Homogeneous& b) { return a.key_ < b.key_; }

 private:
  Vec3 coords_;
  int conductor_ = 1;
  std::string key_;
};

struct PointTag {};
struct LineTag {};
using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

extern template class Homogeneous<PointTag>;
extern template class Homogeneous<LineTag>;

/// Intersection point. Throws IdenticalLines.
ProjPoint meet(const ProjLine& a, const ProjLine& b);
/// Line through two points. Throws IdenticalPoints.
ProjLine join(const ProjPoint& a, const ProjPoint& b);
bool incident(const ProjPoint& p, const ProjLine& l);

/// True iff the three lines are concurrent (the three points collinear), i.e.
/// the coordinate determinant vanishes. Throws DuplicateElement.
bool rank_test(const ProjLine& a, const ProjLine& b, const ProjLine& c);
bool rank_test(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

Matrix3 identity_matrix();
Matrix3 transpose(const Matrix3& m);
Matrix3 operator*(const Matrix3& a, const Matrix3& b);
Vec3 operator*(const Matrix3& m, const Vec3& v);
Cyclo determinant(const Matrix3& m);
/// Throws SingularMatrix.
Matrix3 inverse(const Matrix3& m);

/// Invertible 3x3 map of P^2. Points transform by the matrix, lines by its
/// inverse transpose, so incidence is preserved.
class Projectivity {
 public:
  /// Throws SingularMatrix when det(m) = 0.
  explicit Projectivity(Matrix3 m);
  static Projectivity identity() { return Projectivity(identity_matrix()); }

  const Matrix3& matrix() const { return m_; }
  /// Matrix acting on line coordinates.
  const Matrix3& dual_matrix() const { return dual_; }

  ProjPoint operator()(const ProjPoint& p) const;
  ProjLine operator()(const ProjLine& l) const;

  /// True iff the matrix is a nonzero scalar multiple of the identity.
  bool is_identity_class() const;

 private:
  Matrix3 m_;
  Matrix3 dual_;
};

inline ProjPoint apply_projectivity(const Projectivity& t, const ProjPoint& p) { return t(p); }
inline ProjLine apply_projectivity(const Projectivity& t, const ProjLine& l) { return t(l); }

/// The unique projectivity with src[i] -> dst[i]. Throws DegenerateTuple if
/// either tuple has three collinear points.
Projectivity find_projectivity(const std::array<ProjPoint, 4>& src,
                               const std::array<ProjPoint, 4>& dst);

/// A plane of P^3 with a basis identifying it with P^2.
struct Plane3 {
  Vec4 coords;                 // dual coordinates
  std::array<Vec4, 3> basis;   // points of P^3 spanning the plane

  /// Checks the invariants; throws ZeroPlane or DegenerateTuple.
  void validate() const;
};

/// Pulls the linear form w back along the plane's basis: the coordinates of
/// the restricted line in the plane's frame.
Vec3 restrict_form(const Vec4& w, const Plane3& plane);

}  // namespace multinet
