// Projective equivalence search between two arrangements.
//
// Lines are treated as points of the dual plane. A frame of four lines of
// `a` with no three concurrent is mapped onto every compatible ordered
// 4-tuple of lines of `b`; each assignment fixes a unique candidate map, which
// is then checked against the whole arrangement. Assignments are pruned by
// per-line signatures (multiplicity, the n_p / m_p values met along the line)
// and by the kind of point each pair of lines meets in.

#include <algorithm>
#include <map>
#include <numeric>

#include "multinet/arrangement.hpp"
#include "multinet/error.hpp"

namespace multinet {

namespace {

constexpr std::size_t kMaxLines = 30;

struct Profile {
  explicit Profile(const MultinetCandidate& cand) : a(cand), analysis(analyze(cand)) {
    const auto& lines = a.lines();
    n = lines.size();
    std::map<std::string, long> point_code;
    for (const auto& bp : analysis.base) point_code[bp.point.key()] = 1000 + bp.n_p;
    for (const auto& op : analysis.offbase) point_code[op.point.key()] = op.m_p;

    pair_key.assign(n * n, "");
    pair_code.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::string key = meet(lines[i].line, lines[j].line).key();
        pair_key[i * n + j] = pair_key[j * n + i] = key;
        pair_code[i * n + j] = pair_code[j * n + i] = point_code.at(key);
      }

    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> nps, mps;
      for (int bi : analysis.per_line[i]) nps.push_back(analysis.base[bi].n_p);
      for (int oi : analysis.per_line_offbase[i]) mps.push_back(analysis.offbase[oi].m_p);
      std::sort(nps.begin(), nps.end());
      std::sort(mps.begin(), mps.end());
      std::string sig = std::to_string(lines[i].mult) + "/" +
                        std::to_string(a.block_indices(lines[i].block).size()) + "|";
      for (int v : nps) sig += std::to_string(v) + ",";
      sig += "|";
      for (int v : mps) sig += std::to_string(v) + ",";
      signature.push_back(sig);
      index[lines[i].line.key()] = static_cast<int>(i);
    }
  }

  bool concurrent(std::size_t i, std::size_t j, std::size_t k) const { return pair_key[i * n + j] == pair_key[i * n + k]; }
  long code(std::size_t i, std::size_t j) const { return pair_code[i * n + j]; }
  const ProjLine& line(std::size_t i) const { return a.lines()[i].line; }
  int block(std::size_t i) const { return a.lines()[i].block; }

  const MultinetCandidate& a;
  BaseAnalysis analysis;
  std::size_t n = 0;
  std::vector<std::string> pair_key;
  std::vector<long> pair_code;
  std::vector<std::string> signature;
  std::map<std::string, int> index;
};

// Lines of p with no three concurrent, lexicographically first.
std::optional<std::array<std::size_t, 4>> find_frame(const Profile& p) {
  const std::size_t n = p.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (p.concurrent(i, j, k)) continue;
        for (std::size_t l = k + 1; l < n; ++l)
          if (!p.concurrent(i, j, l) && !p.concurrent(i, k, l) && !p.concurrent(j, k, l))
            return std::array<std::size_t, 4>{i, j, k, l};
      }
  return std::nullopt;
}

bool all_concurrent(const Profile& p) {
  for (std::size_t k = 2; k < p.n; ++k)
    if (!p.concurrent(0, 1, k)) return false;
  return true;
}

// Partial bijection between block labels of a and b.
struct BlockMap {
  explicit BlockMap(int k) : fwd(k, -1), bwd(k, -1) {}
  bool bind(int x, int y) {
    if (fwd[x] == y) return true;
    if (fwd[x] != -1 || bwd[y] != -1) return false;
    fwd[x] = y;
    bwd[y] = x;
    return true;
  }
  std::vector<int> fwd, bwd;
};

// Checks that the line map s (acting on line coordinates) carries a onto b.
bool carries(const Profile& pa, const Profile& pb, const Matrix3& s, BlockMap blocks) {
  for (std::size_t i = 0; i < pa.n; ++i) {
    const ProjLine image(s * pa.line(i).coords());
    auto it = pb.index.find(image.key());
    if (it == pb.index.end()) return false;
    const auto j = static_cast<std::size_t>(it->second);
    if (pa.a.lines()[i].mult != pb.a.lines()[j].mult) return false;
    if (!blocks.bind(pa.block(i), pb.block(j))) return false;
  }
  return true;
}

Projectivity point_map_from_line_map(const Matrix3& s) { return Projectivity(transpose(inverse(s))); }

ProjPoint as_point(const ProjLine& l) { return ProjPoint(l.coords()); }

std::optional<Projectivity> search_frames(const Profile& pa, const Profile& pb,
                                          const std::array<std::size_t, 4>& frame) {
  std::array<std::size_t, 4> chosen{};
  BlockMap blocks(pa.a.k());
  std::optional<Projectivity> found;

  auto candidates = [&](std::size_t pos) {
    std::vector<std::size_t> order(pb.n);
    std::iota(order.begin(), order.end(), 0);
    // try the same index first so self-comparisons find the identity
    if (frame[pos] < pb.n) std::rotate(order.begin(), order.begin() + frame[pos], order.begin() + frame[pos] + 1);
    return order;
  };

  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == 4) {
      std::array<ProjPoint, 4> src{as_point(pa.line(frame[0])), as_point(pa.line(frame[1])),
                                   as_point(pa.line(frame[2])), as_point(pa.line(frame[3]))};
      std::array<ProjPoint, 4> dst{as_point(pb.line(chosen[0])), as_point(pb.line(chosen[1])),
                                   as_point(pb.line(chosen[2])), as_point(pb.line(chosen[3]))};
      const Matrix3 s = find_projectivity(src, dst).matrix();
      if (!carries(pa, pb, s, blocks)) return false;
      found = point_map_from_line_map(s);
      return true;
    }
    const std::size_t fa = frame[pos];
    for (std::size_t c : candidates(pos)) {
      if (pa.signature[fa] != pb.signature[c]) continue;
      bool ok = true;
      for (std::size_t s = 0; s < pos && ok; ++s) ok = chosen[s] != c && pa.code(frame[s], fa) == pb.code(chosen[s], c);
      for (std::size_t s = 0; s < pos && ok; ++s)
        for (std::size_t u = s + 1; u < pos && ok; ++u) ok = !pb.concurrent(chosen[s], chosen[u], c);
      if (!ok) continue;
      BlockMap saved = blocks;
      if (!blocks.bind(pa.block(fa), pb.block(c))) continue;
      chosen[pos] = c;
      if (self(self, pos + 1)) return true;
      blocks = saved;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

// Coefficients (x, y) with v = x*p + y*q, for v in the span of p and q.
std::pair<Cyclo, Cyclo> span_coords(const Vec3& p, const Vec3& q, const Vec3& v) {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t t = r + 1; t < 3; ++t) {
      const Cyclo det = p[r] * q[t] - p[t] * q[r];
      if (det.is_zero()) continue;
      return {(v[r] * q[t] - v[t] * q[r]) / det, (p[r] * v[t] - p[t] * v[r]) / det};
    }
  throw Error(ErrorKind::DegenerateTuple, "lines are not independent");
}

// A line not through the point.
Vec3 transversal(const Vec3& point) {
  for (std::size_t i = 0; i < 3; ++i)
    if (!point[i].is_zero()) {
      Vec3 e;
      e[i] = Cyclo(1L);
      return e;
    }
  throw Error(ErrorKind::ZeroVector, "zero point");
}

Matrix3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Matrix3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    m[r][0] = c0[r];
    m[r][1] = c1[r];
    m[r][2] = c2[r];
  }
  return m;
}

// Both arrangements are pencils of lines through one point; matching reduces
// to the projective line of lines through the apex.
std::optional<Projectivity> search_pencils(const Profile& pa, const Profile& pb) {
  const Vec3 apex_a = meet(pa.line(0), pa.line(1)).coords();
  const Vec3 apex_b = meet(pb.line(0), pb.line(1)).coords();
  const Vec3& l0 = pa.line(0).coords();
  const Vec3& l1 = pa.line(1).coords();
  const auto [x, y] = span_coords(l0, l1, pa.line(2).coords());
  const Matrix3 source_inv = inverse(from_columns(l0, l1, transversal(apex_a)));
  const Vec3 u_b = transversal(apex_b);

  for (std::size_t c0 = 0; c0 < pb.n; ++c0)
    for (std::size_t c1 = 0; c1 < pb.n; ++c1)
      for (std::size_t c2 = 0; c2 < pb.n; ++c2) {
        if (c0 == c1 || c0 == c2 || c1 == c2) continue;
        if (pa.signature[0] != pb.signature[c0] || pa.signature[1] != pb.signature[c1] ||
            pa.signature[2] != pb.signature[c2])
          continue;
        BlockMap blocks(pa.a.k());
        if (!blocks.bind(pa.block(0), pb.block(c0)) || !blocks.bind(pa.block(1), pb.block(c1)) ||
            !blocks.bind(pa.block(2), pb.block(c2)))
          continue;
        const Vec3& m0 = pb.line(c0).coords();
        const Vec3& m1 = pb.line(c1).coords();
        const auto [xb, yb] = span_coords(m0, m1, pb.line(c2).coords());
        const Cyclo s0 = xb / x, s1 = yb / y;
        const Vec3 t0{m0[0] * s0, m0[1] * s0, m0[2] * s0};
        const Vec3 t1{m1[0] * s1, m1[1] * s1, m1[2] * s1};
        const Matrix3 s = from_columns(t0, t1, u_b) * source_inv;
        if (carries(pa, pb, s, blocks)) return point_map_from_line_map(s);
      }
  return std::nullopt;
}

std::vector<std::vector<MultiLine>> lifted_blocks(const MultinetCandidate& a, int m) {
  std::vector<std::vector<MultiLine>> out;
  for (const auto& block : a.blocks()) {
    auto& ob = out.emplace_back();
    for (const auto& ml : block) ob.push_back({ml.line.lifted(m), ml.mult});
  }
  return out;
}

}  // namespace

std::optional<Projectivity> is_projectively_equivalent(const MultinetCandidate& a, const MultinetCandidate& b) {
  if (a.line_count() > kMaxLines || b.line_count() > kMaxLines)
    throw Error(ErrorKind::TooLarge, "equivalence search is limited to 30 lines");
  if (a.k() != b.k() || a.line_count() != b.line_count() || a.block_weight(0) != b.block_weight(0))
    return std::nullopt;

  const int m = std::lcm(a.conductor(), b.conductor());
  const MultinetCandidate la(m, lifted_blocks(a, m));
  const MultinetCandidate lb(m, lifted_blocks(b, m));
  const Profile pa(la), pb(lb);

  {
    auto sa = pa.signature, sb = pb.signature;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  const auto frame_a = find_frame(pa);
  if (frame_a) return search_frames(pa, pb, *frame_a);
  if (find_frame(pb)) return std::nullopt;
  const bool pencil_a = all_concurrent(pa), pencil_b = all_concurrent(pb);
  if (pencil_a != pencil_b) return std::nullopt;
  if (pencil_a) return search_pencils(pa, pb);
  throw Error(ErrorKind::DegenerateTuple, "no four lines in general position and not a pencil");
}

}  // namespace multinet
