#include "multinet/catalog.hpp"

#include <numeric>

#include "multinet/error.hpp"

namespace multinet {

namespace {

Cyclo zeta(int n, long k) { return Cyclo::zeta(n, k); }
Cyclo num(long v) { return Cyclo(v); }

ProjLine line(Cyclo a, Cyclo b, Cyclo c) { return ProjLine({std::move(a), std::move(b), std::move(c)}); }

void require_positive(int n, const char* what) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, std::string(what) + " must be at least 1");
}

void require_not(bool bad, const char* what) {
  if (bad) throw Error(ErrorKind::InvalidParams, what);
}

void check_common(const FamilyParams& p) {
  const Cyclo one(1L);
  require_not(p.lambda.is_zero() || p.lambda == one, "lambda must not be 0 or 1");
  require_not(p.mu.is_zero() || p.mu == one, "mu must not be 0 or 1");
  require_not(p.lambda == p.mu, "lambda must differ from mu");
}

int param_conductor(const FamilyParams& p) { return std::lcm(p.lambda.conductor(), p.mu.conductor()); }

MultinetCandidate build_family(int conductor, std::vector<std::vector<MultiLine>> blocks) {
  try {
    return MultinetCandidate(conductor, std::move(blocks));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidParams, e.what());
  }
}

}  // namespace

MultinetCandidate fermat(int n) {
  require_positive(n, "n");
  std::vector<std::vector<MultiLine>> blocks(3);
  for (int j = 0; j < n; ++j) {
    const Cyclo z = -zeta(n, j);
    blocks[0].push_back({line(num(1), z, num(0)), 1});
    blocks[1].push_back({line(num(1), num(0), z), 1});
    blocks[2].push_back({line(num(0), num(1), z), 1});
  }
  return MultinetCandidate(n, std::move(blocks));
}

MultinetCandidate monomial_g_n13(int n) {
  require_positive(n, "n");
  std::vector<std::vector<MultiLine>> blocks(3);
  blocks[0].push_back({line(num(1), num(0), num(0)), n});
  blocks[1].push_back({line(num(0), num(1), num(0)), n});
  blocks[2].push_back({line(num(0), num(0), num(1)), n});
  for (int j = 0; j < n; ++j) {
    const Cyclo z = -zeta(n, j);
    blocks[0].push_back({line(num(0), num(1), z), 1});
    blocks[1].push_back({line(num(1), num(0), z), 1});
    blocks[2].push_back({line(num(1), z, num(0)), 1});
  }
  return MultinetCandidate(n, std::move(blocks));
}

MultinetCandidate hesse() {
  std::vector<std::vector<MultiLine>> blocks(4);
  blocks[0] = {{line(num(1), num(0), num(0)), 1}, {line(num(0), num(1), num(0)), 1}, {line(num(0), num(0), num(1)), 1}};
  // x^3 + y^3 + z^3 - 3 w^k xyz = prod_j (x + w^j y + w^(2j+k) z)
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) blocks[k + 1].push_back({line(num(1), zeta(3, j), zeta(3, 2 * j + k)), 1});
  return MultinetCandidate(3, std::move(blocks));
}

MultinetCandidate stipins33(const FamilyParams& p) {
  check_common(p);
  const Cyclo& l = p.lambda;
  const Cyclo& m = p.mu;
  std::vector<std::vector<MultiLine>> blocks{
      {{line(num(1), num(0), num(0)), 1}, {line(num(0), num(1), num(0)), 1}, {line(num(0), num(0), num(1)), 1}},
      {{line(num(1), num(1), num(1)), 1}, {line(m, l * m, l), 1}, {line(num(1), m, l), 1}},
      {{line(num(1), l, l), 1}, {line(num(1), m, num(1)), 1}, {line(m, m, l), 1}},
  };
  return build_family(param_conductor(p), std::move(blocks));
}

MultinetCandidate light34(const FamilyParams& p) {
  check_common(p);
  const Cyclo& l = p.lambda;
  const Cyclo& m = p.mu;
  require_not(l * m == Cyclo(1L), "lambda * mu must not be 1");
  const Cyclo one = num(1);
  std::vector<std::vector<MultiLine>> blocks{
      {{line(one, one, one), 1}, {line(num(0), one, l), 1}, {line(num(0), one, m), 1}, {line(l, one, l * m), 1}},
      {{line(one, num(0), num(0)), 1},
       {line(num(0), one, num(0)), 1},
       {line(num(0), num(0), one), 1},
       {line(l, one + l, l * (one + m)), 1}},
      // l_33 passes through the double point [1:0:0]
      {{line(l, one, l), 1}, {line(num(0), one, one), 1}, {line(num(0), one, l * m), 1}, {line(one, one, m), 1}},
  };
  return build_family(param_conductor(p), std::move(blocks));
}

MultinetCandidate z2z2_net() {
  const Cyclo x = zeta(3, 1);
  const Cyclo x2 = zeta(3, 2);
  const Cyclo one = num(1), zero = num(0);
  std::vector<std::vector<MultiLine>> blocks{
      {{line(zero, one, -one), 1}, {line(num(2) * x, one, zero), 1}, {line(zero, one, -x), 1}, {line(zero, one, -x2), 1}},
      {{line(one, zero, -one), 1}, {line(one, zero, -x), 1}, {line(one, zero, -x2), 1}, {line(x, num(2), zero), 1}},
      {{line(one, x2, x), 1}, {line(one, x2, one), 1}, {line(one, -x2, zero), 1}, {line(x, one, one), 1}},
  };
  return MultinetCandidate(3, std::move(blocks));
}

MultinetCandidate trivial_pencil(int k) {
  if (k < 3) throw Error(ErrorKind::InvalidParams, "trivial pencil needs k >= 3");
  std::vector<std::vector<MultiLine>> blocks;
  for (int i = 0; i < k; ++i) blocks.push_back({{line(num(1), num(i), num(0)), 1}});
  return MultinetCandidate(1, std::move(blocks));
}

Hyper3Arrangement qn_in_p3(int n) {
  require_positive(n, "n");
  // (i, j) pairs of each half-block x_i^n - x_j^n
  constexpr std::array<std::array<std::array<int, 2>, 2>, 3> pairs{{
      {{{0, 1}, {2, 3}}},
      {{{0, 2}, {1, 3}}},
      {{{0, 3}, {1, 2}}},
  }};
  Hyper3Arrangement q;
  q.conductor = n;
  for (std::size_t b = 0; b < 3; ++b)
    for (int half = 0; half < 2; ++half) {
      const auto [i, j] = pairs[b][half];
      for (int t = 0; t < n; ++t) {
        Hyperplane h;
        h.coords[i] = num(1);
        h.coords[j] = -zeta(n, t);
        h.half = half;
        h.base = {i, j};
        q.blocks[b].push_back(std::move(h));
      }
    }
  return q;
}

}  // namespace multinet
