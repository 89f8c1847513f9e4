#include "multinet/projgeom.hpp"

#include <numeric>

#include "multinet/error.hpp"

namespace multinet {

Cyclo dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Cyclo dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Cyclo det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

int common_conductor(const Vec3& v) {
  return std::lcm(std::lcm(v[0].conductor(), v[1].conductor()), v[2].conductor());
}

template <class Tag>
Homogeneous<Tag>::Homogeneous(Vec3 coords) : coords_(std::move(coords)) {
  conductor_ = common_conductor(coords_);
  std::size_t pivot = 3;
  for (std::size_t i = 0; i < 3; ++i) {
    coords_[i] = coords_[i].lift(conductor_);
    if (pivot == 3 && !coords_[i].is_zero()) pivot = i;
  }
  if (pivot == 3) throw Error(ErrorKind::ZeroVector, "all homogeneous coordinates are zero");
  if (coords_[pivot] != Cyclo(1L, conductor_)) {
    const Cyclo scale = coords_[pivot].inverse();
    for (std::size_t i = pivot; i < 3; ++i) coords_[i] *= scale;
  }
  key_ = "[" + coords_[0].str() + ":" + coords_[1].str() + ":" + coords_[2].str() + "]";
}

template <class Tag>
Homogeneous<Tag> Homogeneous<Tag>::lifted(int m) const {
  return Homogeneous({coords_[0].lift(m), coords_[1].lift(m), coords_[2].lift(m)});
}

template class Homogeneous<PointTag>;
template class Homogeneous<LineTag>;

ProjPoint meet(const ProjLine& a, const ProjLine& b) {
  if (a == b) throw Error(ErrorKind::IdenticalLines, a.key());
  return ProjPoint(cross(a.coords(), b.coords()));
}

ProjLine join(const ProjPoint& a, const ProjPoint& b) {
  if (a == b) throw Error(ErrorKind::IdenticalPoints, a.key());
  return ProjLine(cross(a.coords(), b.coords()));
}

bool incident(const ProjPoint& p, const ProjLine& l) { return dot(p.coords(), l.coords()).is_zero(); }

namespace {

template <class H>
bool rank_test_impl(const H& a, const H& b, const H& c) {
  if (a == b || a == c || b == c) throw Error(ErrorKind::DuplicateElement, "rank test needs three distinct elements");
  return det3(a.coords(), b.coords(), c.coords()).is_zero();
}

}  // namespace

bool rank_test(const ProjLine& a, const ProjLine& b, const ProjLine& c) { return rank_test_impl(a, b, c); }
bool rank_test(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) { return rank_test_impl(a, b, c); }

Matrix3 identity_matrix() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = Cyclo(1L);
  return m;
}

Matrix3 transpose(const Matrix3& m) {
  Matrix3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return out;
}

Vec3 operator*(const Matrix3& m, const Vec3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

Cyclo determinant(const Matrix3& m) { return det3(m[0], m[1], m[2]); }

Matrix3 inverse(const Matrix3& m) {
  const Cyclo det = determinant(m);
  if (det.is_zero()) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  const Cyclo inv_det = det.inverse();
  // Columns of the inverse are cross products of rows, scaled.
  const Vec3 c0 = cross(m[1], m[2]);
  const Vec3 c1 = cross(m[2], m[0]);
  const Vec3 c2 = cross(m[0], m[1]);
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i][0] = c0[i] * inv_det;
    out[i][1] = c1[i] * inv_det;
    out[i][2] = c2[i] * inv_det;
  }
  return out;
}

Projectivity::Projectivity(Matrix3 m) : m_(std::move(m)), dual_(transpose(inverse(m_))) {}

ProjPoint Projectivity::operator()(const ProjPoint& p) const { return ProjPoint(m_ * p.coords()); }

ProjLine Projectivity::operator()(const ProjLine& l) const { return ProjLine(dual_ * l.coords()); }

bool Projectivity::is_identity_class() const {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && !m_[i][j].is_zero()) return false;
  return m_[0][0] == m_[1][1] && m_[1][1] == m_[2][2];
}

namespace {

// Columns p0, p1, p2 scaled so that their sum is p3; maps the standard frame
// e0, e1, e2, (1,1,1) onto the given points.
Matrix3 frame_matrix(const std::array<ProjPoint, 4>& pts) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        if (det3(pts[i].coords(), pts[j].coords(), pts[k].coords()).is_zero())
          throw Error(ErrorKind::DegenerateTuple, "three of the four points are collinear");
  Matrix3 cols;
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 3; ++r) cols[r][c] = pts[c][r];
  const Vec3 lambda = inverse(cols) * pts[3].coords();
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 3; ++r) cols[r][c] *= lambda[c];
  return cols;
}

}  // namespace

Projectivity find_projectivity(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst) {
  const Matrix3 a = frame_matrix(src);
  const Matrix3 b = frame_matrix(dst);
  return Projectivity(b * inverse(a));
}

void Plane3::validate() const {
  bool nonzero = false;
  for (const auto& c : coords) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw Error(ErrorKind::ZeroPlane, "plane coordinates are all zero");
  for (const auto& b : basis)
    if (!dot(coords, b).is_zero()) throw Error(ErrorKind::DegenerateTuple, "basis point off the plane");
  // Independent iff some 3x3 minor of the 3x4 basis matrix is nonzero.
  for (std::size_t skip = 0; skip < 4; ++skip) {
    Matrix3 minor;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0, cc = 0; c < 4; ++c)
        if (c != skip) minor[r][cc++] = basis[r][c];
    if (!determinant(minor).is_zero()) return;
  }
  throw Error(ErrorKind::DegenerateTuple, "plane basis is linearly dependent");
}

Vec3 restrict_form(const Vec4& w, const Plane3& plane) {
  return {dot(w, plane.basis[0]), dot(w, plane.basis[1]), dot(w, plane.basis[2])};
}

}  // namespace multinet
