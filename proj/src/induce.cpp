#include "multinet/induce.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "multinet/error.hpp"

namespace multinet {

namespace {

int vec_conductor(const Vec4& v) {
  int c = 1;
  for (const auto& x : v) c = std::lcm(c, x.conductor());
  return c;
}

int count_if_mult(const MultinetCandidate& a, int m) {
  return static_cast<int>(
      std::count_if(a.lines().begin(), a.lines().end(), [m](const auto& e) { return e.mult == m; }));
}

int count_if_np(const BaseAnalysis& an, int v) {
  return static_cast<int>(std::count_if(an.base.begin(), an.base.end(), [v](const auto& bp) { return bp.n_p == v; }));
}

}  // namespace

Plane3 plane_basis(const Vec4& h) {
  std::size_t pivot = 4;
  for (std::size_t i = 0; i < 4 && pivot == 4; ++i)
    if (!h[i].is_zero()) pivot = i;
  if (pivot == 4) throw Error(ErrorKind::ZeroPlane, "plane coordinates are all zero");

  Plane3 plane;
  plane.coords = h;
  const Cyclo inv = h[pivot].inverse();
  std::size_t row = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    if (j == pivot) continue;
    Vec4& b = plane.basis[row++];
    b[j] = Cyclo(1L);
    b[pivot] = -(h[j] * inv);
  }
  plane.validate();
  return plane;
}

int RestrictedFiber::total() const {
  int t = 0;
  for (const auto& ml : lines) t += ml.mult;
  return t;
}

std::array<RestrictedFiber, 3> restrict_arrangement(const Hyper3Arrangement& q, const Plane3& plane) {
  const int conductor = std::lcm(q.conductor, vec_conductor(plane.coords));
  std::array<RestrictedFiber, 3> fibers;
  for (std::size_t b = 0; b < 3; ++b) {
    std::map<std::string, std::size_t> where;
    for (const auto& hp : q.blocks[b]) {
      const Vec3 form = restrict_form(hp.coords, plane);
      if (form[0].is_zero() && form[1].is_zero() && form[2].is_zero())
        throw Error(ErrorKind::PlaneInArrangement, "the plane is a hyperplane of the arrangement");
      ProjLine l = ProjLine(form).lifted(conductor);
      auto [it, fresh] = where.emplace(l.key(), fibers[b].lines.size());
      if (fresh)
        fibers[b].lines.push_back({std::move(l), 1});
      else
        ++fibers[b].lines[it->second].mult;
    }
  }
  return fibers;
}

CanceledFibers cancel_fixed(std::array<RestrictedFiber, 3> fibers) {
  CanceledFibers out;
  std::array<std::map<std::string, int>, 3> mult;
  for (std::size_t b = 0; b < 3; ++b)
    for (const auto& ml : fibers[b].lines) mult[b][ml.line.key()] += ml.mult;

  std::map<std::string, int> common;
  for (const auto& ml : fibers[0].lines) {
    const std::string& key = ml.line.key();
    if (mult[1].count(key) && mult[2].count(key))
      common[key] = std::min({mult[0][key], mult[1][key], mult[2][key]});
  }
  for (const auto& ml : fibers[0].lines)
    if (auto it = common.find(ml.line.key()); it != common.end()) out.canceled.push_back({ml.line, it->second});

  for (std::size_t b = 0; b < 3; ++b) {
    for (const auto& ml : fibers[b].lines) {
      auto it = common.find(ml.line.key());
      const int left = ml.mult - (it == common.end() ? 0 : it->second);
      if (left > 0) out.fibers[b].lines.push_back({ml.line, left});
    }
  }
  if (out.fibers[0].lines.empty() && out.fibers[1].lines.empty() && out.fibers[2].lines.empty())
    throw Error(ErrorKind::EverythingCanceled, "all three fibers coincide on this plane");
  return out;
}

InducedResult induce(int n, const Vec4& h) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "n must be at least 1");
  InducedResult r;
  r.n = n;
  r.plane = plane_basis(h);
  auto canceled = cancel_fixed(restrict_arrangement(qn_in_p3(n), r.plane));
  r.fibers = std::move(canceled.fibers);
  r.canceled = std::move(canceled.canceled);
  r.degree = r.fibers[0].total();

  const int conductor = std::lcm(n, vec_conductor(h));
  std::vector<std::vector<MultiLine>> blocks;
  for (const auto& f : r.fibers) blocks.push_back(f.lines);
  try {
    r.arrangement.emplace(conductor, std::move(blocks));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidCandidate) throw;
    r.arrangement.reset();
  }
  return r;
}

std::string to_string(InducedTag tag) {
  switch (tag) {
    case InducedTag::T1: return "T1";
    case InducedTag::T2: return "T2";
    case InducedTag::T3: return "T3";
    case InducedTag::T4: return "T4";
    case InducedTag::T5: return "T5";
    case InducedTag::T6: return "T6";
    case InducedTag::T7: return "T7";
    case InducedTag::T8: return "T8";
    case InducedTag::T9: return "T9";
    case InducedTag::T10: return "T10";
    case InducedTag::Trivial: return "Trivial";
    case InducedTag::Unknown: return "Unknown";
  }
  return "?";
}

InducedType classify_induced(const InducedResult& r) {
  if (!r.arrangement) return {InducedTag::Unknown, "a line survives in two different fibers"};
  const MultinetCandidate& a = *r.arrangement;
  const int n = r.n;
  const int d = r.degree;

  bool concurrent = true;
  {
    const auto& lines = a.lines();
    const ProjPoint p = meet(lines[0].line, lines[1].line);
    for (const auto& e : lines) concurrent = concurrent && incident(p, e.line);
  }
  if (d == 1 || concurrent) return {InducedTag::Trivial, "all lines concurrent"};

  const BaseAnalysis an = analyze(a);
  if (!verify_multinet(a, an).is_multinet) return {InducedTag::Unknown, "not a multinet"};
  const WeightClass weight = weight_classify(a, an);
  const int lines = static_cast<int>(a.line_count());
  const int points = static_cast<int>(an.base.size());
  const int max_np = std::max_element(an.base.begin(), an.base.end(),
                                      [](const auto& x, const auto& y) { return x.n_p < y.n_p; })->n_p;

  // exactly `count` lines of multiplicity `m`, the rest simple
  auto lines_pattern = [&](int m, int count) {
    return count_if_mult(a, m) == count && count_if_mult(a, 1) == lines - count;
  };
  // exactly `count` base points of multiplicity `m`, the rest simple
  auto points_pattern = [&](int m, int count) {
    return count_if_np(an, m) == count && count_if_np(an, 1) == points - count;
  };
  // a unique point of multiplicity m, which degenerates to a net when m = 1
  auto unique_point = [&](int m) { return m >= 2 ? points_pattern(m, 1) : weight == WeightClass::Net; };

  if (weight == WeightClass::ProperHeavy) {
    if (n > 1 && d == 2 * n && lines_pattern(n, 3))
      return {InducedTag::T1, "three lines of multiplicity n"};
    if (n > 1 && d == 2 * n && lines_pattern(n, 1) && points_pattern(n, 2))
      return {InducedTag::T2, "one line of multiplicity n, two base points of multiplicity n"};
    if (n > 1 && n % 2 == 0 && d == 2 * n && lines_pattern(2, 3) && points_pattern(2, 3 * n - 3))
      return {InducedTag::T3, "three lines of multiplicity 2, 3n-3 double base points"};
    if (n > 1 && n % 2 == 1 && d == 2 * n && lines_pattern(2, 2) && points_pattern(2, 2 * n - 1))
      return {InducedTag::T4, "two lines of multiplicity 2, 2n-1 double base points"};
    if (n > 1 && d == 2 * n && lines_pattern(2, 1) && points_pattern(2, n))
      return {InducedTag::T5, "one line of multiplicity 2, n double base points"};
    return {InducedTag::Unknown, "heavy, no matching fingerprint"};
  }

  if (n > 2 && d == 2 * n - 2 && unique_point(n - 2))
    return {InducedTag::T8, "light, d = 2n-2, unique base point of multiplicity n-2"};
  if (n > 1 && d == 2 * n - 1 && unique_point(n - 1))
    return {InducedTag::T7, "light, d = 2n-1, unique base point of multiplicity n-1"};
  if (n > 1 && d == 2 * n && points_pattern(n, 1))
    return {InducedTag::T6, "light, d = 2n, unique base point of multiplicity n"};
  if (n > 1 && d == 2 * n && max_np == 2 && count_if_np(an, 2) >= 1)
    return {InducedTag::T9, "light, d = 2n, double base points only"};
  if (d == 2 * n && weight == WeightClass::Net) return {InducedTag::T10, "net with d = 2n"};
  return {InducedTag::Unknown, "light, no matching fingerprint"};
}

}  // namespace multinet
