#include <map>
#include <set>

#include "multinet/catalog.hpp"
#include "multinet/completeness.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Both balances recounted from scratch: every pairwise meet, every incidence
// by direct dot products.
struct Oracle {
  long e1_lhs = 0, e1_rhs = 0, e2_lhs = 0, e2_rhs = 0;
};

Oracle oracle(const MultinetCandidate& a) {
  const auto& lines = a.lines();
  std::map<std::string, std::vector<int>> through;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Vec3& u = lines[i].line.coords();
      const Vec3& v = lines[j].line.coords();
      const ProjPoint p({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]});
      if (through.count(p.key())) continue;
      auto& on = through[p.key()];
      for (std::size_t t = 0; t < lines.size(); ++t)
        if (dot_oracle(p.coords(), lines[t].line.coords()).is_zero()) on.push_back(static_cast<int>(t));
    }

  long d = 0;
  for (const auto& ml : a.blocks()[0]) d += ml.mult;
  long base = 0, sum_np = 0, sum_np2 = 0, sum_mp = 0;
  for (const auto& [key, on] : through) {
    std::set<int> blocks;
    long np = 0;
    for (int t : on) {
      blocks.insert(lines[t].block);
      if (lines[t].block == 0) np += lines[t].mult;
    }
    if (static_cast<int>(blocks.size()) == a.k()) {
      ++base;
      sum_np += np;
      sum_np2 += np * np - np;
    } else if (blocks.size() == 1) {
      sum_mp += static_cast<long>(on.size()) - 1;
    }
  }
  const long n_lines = static_cast<long>(lines.size());
  Oracle o;
  o.e1_lhs = 3 + base;
  o.e1_rhs = (2 - a.k()) * (3 * d - d * d + sum_np2) + 2 * n_lines - sum_mp;
  o.e2_lhs = sum_mp;
  o.e2_rhs = 2 * n_lines - base - 3 * (d + 1) + sum_np;
  return o;
}

std::vector<MultinetCandidate> corpus() {
  std::vector<MultinetCandidate> out;
  for (int n = 2; n <= 5; ++n) out.push_back(fermat(n));
  for (int n = 1; n <= 4; ++n) out.push_back(monomial_g_n13(n));
  out.push_back(hesse());
  out.push_back(z2z2_net());
  out.push_back(stipins33({Q(2), Q(5)}));
  out.push_back(stipins33({Q(4), Q(-2)}));
  out.push_back(stipins33({Cyclo::zeta(3), Q(2)}));
  out.push_back(light34({Q(-1), Q(2)}));
  out.push_back(light34({Q(2), Q(5)}));
  out.push_back(light34({Q(-1), Q(3)}));
  return out;
}

}  // namespace

TEST_CASE("balance on the Fermat arrangements") {
  for (long n = 2; n <= 6; ++n) {
    const auto f = fermat(static_cast<int>(n));
    const RHBalance e1 = rh_balance(f);
    CHECK(e1.lhs == 3 + n * n);
    CHECK(e1.rhs == 3 + n * n);
    CHECK(e1.base_count == n * n);
    CHECK(e1.sum_mp_minus_one == 3 * (n - 1));
    const Eq2Balance e2 = eq2_balance(f);
    CHECK(e2.lhs == 3 * (n - 1));
    CHECK(e2.rhs == 3 * (n - 1));
    CHECK(is_complete(f));
  }
}

TEST_CASE("balance on G(n,1,3)") {
  for (long n = 1; n <= 5; ++n) {
    const auto g = monomial_g_n13(static_cast<int>(n));
    const RHBalance e1 = rh_balance(g);
    CHECK(e1.base_count == n * n + 3);
    CHECK(e1.lhs == n * n + 6);
    CHECK(e1.rhs == n * n + 6);
    CHECK(e1.sum_np_sq_minus_np == 3 * (n * n - n));
    const Eq2Balance e2 = eq2_balance(g);
    CHECK(e2.lhs == 3 * n);
    CHECK(e2.rhs == 3 * n);
    CHECK(is_complete(g));
  }
}

TEST_CASE("balance on the Hesse configuration") {
  const RHBalance e1 = rh_balance(hesse());
  CHECK(e1.k == 4);
  CHECK(e1.lhs == 12);
  CHECK(e1.rhs == 12);
  CHECK(is_complete(hesse()));
  CHECK_ERROR_KIND(eq2_balance(hesse()), ErrorKind::WrongK);
}

TEST_CASE("incomplete nets and light multinets") {
  const auto z = z2z2_net();
  const RHBalance e1 = rh_balance(z);
  CHECK(e1.lhs == 19);
  CHECK(e1.rhs == 13);
  const Eq2Balance e2 = eq2_balance(z);
  CHECK(e2.lhs == 15);
  CHECK(e2.rhs == 9);
  CHECK_FALSE(is_complete(z));

  for (const auto& [l, m] : std::vector<std::pair<long, long>>{{-1, 2}, {2, 5}, {-1, 3}}) {
    const auto a = light34({Q(l), Q(m)});
    const RHBalance b = rh_balance(a);
    CHECK(b.lhs > b.rhs);
    CHECK(b.lhs == 16);
    CHECK(b.sum_np_sq_minus_np == 2);
    CHECK_FALSE(is_complete(a));
  }
  CHECK_FALSE(is_complete(stipins33({Q(2), Q(5)})));
}

TEST_CASE("completeness domain errors") {
  CHECK_ERROR_KIND(is_complete(trivial_pencil(3)), ErrorKind::DegreeTooSmall);
  CHECK_ERROR_KIND(is_complete(fermat(1)), ErrorKind::DegreeTooSmall);
  CHECK(rh_balance(fermat(1)).lhs == 4);

  const auto broken = fermat(3).with_multiplicity(0, 0, 2);
  CHECK_ERROR_KIND(rh_balance(broken), ErrorKind::NotAMultinet);
  CHECK_ERROR_KIND(is_complete(broken), ErrorKind::NotAMultinet);
  CHECK_ERROR_KIND(eq2_balance(broken), ErrorKind::NotAMultinet);
  CHECK_ERROR_KIND(local_test(broken), ErrorKind::NotAMultinet);

  // lowering a heavy line of G(n,1,3) leaves no multinet at all
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m < n; ++m) {
      const auto lowered = monomial_g_n13(n).with_multiplicity(0, 0, m);
      CHECK_FALSE(verify_multinet(lowered).is_multinet);
      CHECK_ERROR_KIND(is_complete(lowered), ErrorKind::NotAMultinet);
    }
}

TEST_CASE("local test") {
  const LocalReport f = local_test(fermat(4));
  CHECK(f.global_pass);
  CHECK(f.points.size() == 16);
  CHECK(f.failures().empty());

  for (int n = 2; n <= 4; ++n) {
    const LocalReport g = local_test(monomial_g_n13(n));
    CHECK(g.global_pass);
    int heavy = 0;
    for (const auto& p : g.points)
      if (p.n_p == n) {
        ++heavy;
        CHECK(p.lines_through == n + 2);
        CHECK(p.lhs == 2 * n - 2);
        CHECK(p.rhs == 2 * n - 2);
      }
    CHECK(heavy == 3);
  }

  const LocalReport l = local_test(light34({Q(-1), Q(2)}));
  CHECK_FALSE(l.global_pass);
  const auto fails = l.failures();
  REQUIRE(fails.size() == 1);
  CHECK(fails[0].point == P(1, 0, 0));
  CHECK(fails[0].n_p == 2);
  CHECK(fails[0].lines_through == 6);
  CHECK(fails[0].lhs == 2);
  CHECK(fails[0].rhs == 0);

  CHECK(local_test(hesse()).global_pass);
}

TEST_CASE("structure of complete 3-nets") {
  for (int n = 2; n <= 6; ++n) {
    const auto f = fermat(n);
    const StructureCertificate c = complete_3net_structure(f);
    CHECK(c.blocks == std::vector<BlockStructure>(3, BlockStructure::Pencil));
    check_carries(f, f, c.to_fermat);
  }
  CHECK(complete_3net_structure(fermat(3)).to_fermat.is_identity_class());

  std::mt19937 rng(31);
  for (int iter = 0; iter < 5; ++iter) {
    const auto moved = transform(fermat(3 + iter % 2), random_projectivity(rng, 1 + 2 * (iter % 2)));
    const StructureCertificate c = complete_3net_structure(moved);
    check_carries(moved, fermat(3 + iter % 2), c.to_fermat);
  }

  CHECK_ERROR_KIND(complete_3net_structure(stipins33({Q(2), Q(5)})), ErrorKind::NotComplete);
  CHECK_ERROR_KIND(complete_3net_structure(z2z2_net()), ErrorKind::NotComplete);
  CHECK_ERROR_KIND(complete_3net_structure(monomial_g_n13(2)), ErrorKind::NotComplete);
  CHECK_ERROR_KIND(complete_3net_structure(hesse()), ErrorKind::NotComplete);
  CHECK_ERROR_KIND(complete_3net_structure(light34({Q(2), Q(5)})), ErrorKind::NotComplete);
}

TEST_CASE("property: balances agree with a brute-force recount") {
  std::mt19937 rng(2718);
  for (const auto& base : corpus())
    for (int copy = 0; copy < 3; ++copy) {
      const auto a = copy == 0 ? base : transform(base, random_projectivity(rng, base.conductor()));
      const Oracle o = oracle(a);
      const RHBalance e1 = rh_balance(a);
      CHECK(e1.lhs == o.e1_lhs);
      CHECK(e1.rhs == o.e1_rhs);
      if (a.k() == 3) {
        const Eq2Balance e2 = eq2_balance(a);
        CHECK(e2.lhs == o.e2_lhs);
        CHECK(e2.rhs == o.e2_rhs);
      }
    }
}

TEST_CASE("property: completeness invariants") {
  std::mt19937 rng(161);
  for (const auto& base : corpus())
    for (int copy = 0; copy < 2; ++copy) {
      const auto a = copy == 0 ? base : transform(base, random_projectivity(rng, base.conductor()));
      const RHBalance e1 = rh_balance(a);
      CHECK(e1.lhs >= e1.rhs);
      const bool complete = is_complete(a);
      CHECK(complete == e1.equality());
      if (a.k() == 3) {
        const Eq2Balance e2 = eq2_balance(a);
        CHECK(e2.lhs >= e2.rhs);
        CHECK((e2.lhs == e2.rhs) == complete);
        // the two balances differ by the same constant
        CHECK(e1.lhs - e1.rhs == e2.lhs - e2.rhs);
      }
      const LocalReport local = local_test(a);
      if (complete) CHECK(local.global_pass);
      if (weight_classify(a) == WeightClass::Net) CHECK(local.global_pass);
      if (weight_classify(a) == WeightClass::ProperLight) {
        CHECK_FALSE(complete);
        CHECK_FALSE(local.global_pass);
      }
      // invariance under the projectivity
      CHECK(rh_balance(base).lhs == e1.lhs);
      CHECK(rh_balance(base).rhs == e1.rhs);
    }
}
