#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "support.hpp"

using namespace testing;

namespace {

Cyclo z(int n, long k = 1) { return Cyclo::zeta(n, k); }

bool near(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("rational canonical form") {
  Rational r(6, -4);
  r.canonicalize();
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  Rational zero = Rational(0, 7);
  zero.canonicalize();
  CHECK(zero.get_den() == 1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<long long>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  for (int n = 1; n <= 30; ++n) {
    CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
    CHECK(cyclotomic_polynomial(n).back() == 1);
  }
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
}

TEST_CASE("cyclotomic cache is safe under concurrent first use") {
  std::vector<std::thread> pool;
  std::vector<int> sizes(8);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([t, &sizes] {
      int total = 0;
      for (int n = 31; n <= 60; ++n) total += static_cast<int>(cyclotomic_polynomial(n + t % 2).size());
      sizes[t] = total;
    });
  for (auto& th : pool) th.join();
  for (int t = 2; t < 8; ++t) CHECK(sizes[t] == sizes[t % 2]);
}

TEST_CASE("field operation examples") {
  CHECK(z(4) * z(4) == Cyclo(-1L));
  CHECK(z(3) * z(3) == -z(3) - Cyclo(1L));
  CHECK((z(3) + z(3, 2)) + Cyclo(1L) == Cyclo());
  CHECK((z(3) + z(3, 2) + Cyclo(1L)).is_zero());
  // mixed conductors land at the lcm
  const Cyclo m = z(4) + z(6);
  CHECK(m.conductor() == 12);
  CHECK(near(evaluate(m), evaluate(z(4)) + evaluate(z(6)), 1e-12));
}

TEST_CASE("inverse examples") {
  CHECK(Cyclo(2L).inverse() == Cyclo(Rational(1, 2)));
  CHECK(z(4).inverse() == -z(4));
  const Cyclo a = Cyclo(1L) + z(5);
  CHECK(a.inverse() * a == Cyclo(1L));
  CHECK_ERROR_KIND(Cyclo().inverse(), ErrorKind::DivisionByZero);
  CHECK_ERROR_KIND(Cyclo(1L) / Cyclo(0L, 5), ErrorKind::DivisionByZero);
}

TEST_CASE("lift examples") {
  CHECK(Cyclo(1L, 2).lift(6) == Cyclo(1L, 6));
  CHECK(Cyclo(1L, 2).lift(6).coeffs() == Cyclo(1L, 6).coeffs());
  const Cyclo lifted = z(3).lift(6);
  const Cyclo expected = z(6) - Cyclo(1L, 6);
  CHECK(lifted.conductor() == 6);
  CHECK(lifted.coeffs() == expected.coeffs());
  // oracle: both sides embed to the same complex number
  CHECK(near(evaluate(lifted), evaluate(z(3)), 1e-12));
  CHECK(near(evaluate(expected), std::polar(1.0, 2.0 * M_PI / 3.0), 1e-12));
  CHECK_ERROR_KIND(z(4).lift(6), ErrorKind::NotADivisor);
}

TEST_CASE("zero test examples") {
  CHECK(Cyclo().is_zero());
  CHECK((z(3, 2) + z(3) + Cyclo(1L)).is_zero());
  const Cyclo w = z(6) - Cyclo(1L);
  CHECK_FALSE(w.is_zero());
  CHECK(near(evaluate(w), {-0.5, std::sqrt(3.0) / 2.0}, 1e-12));
}

TEST_CASE("parse examples") {
  const Cyclo v = parse_cyclo("1/2*z6^2 - 3", 6);
  CHECK(v.conductor() == 6);
  CHECK(v == Cyclo(Rational(-7, 2), 6) + Cyclo(Rational(1, 2)) * z(6));
  CHECK(near(evaluate(v), -3.0 + 0.5 * std::polar(1.0, 2.0 * 2.0 * M_PI / 6.0), 1e-12));
  CHECK(parse_cyclo("0", 1).is_zero());
  CHECK_ERROR_KIND(parse_cyclo("z4", 6), ErrorKind::ConductorMismatch);

  CHECK(parse_cyclo("  -  z3 ^ 2 + 1 ", 3) == Cyclo(1L) - z(3, 2));
  CHECK(parse_cyclo("z3", 6) == z(3).lift(6));
  CHECK(parse_cyclo("-z3-1", 3) == -z(3) - Cyclo(1L));
  CHECK(parse_cyclo("3/4", 1) == Cyclo(Rational(3, 4)));
  CHECK(parse_cyclo("2*z12^13", 12) == Cyclo(2L) * z(12));

  for (const char* bad : {"", "+", "1 +", "z", "z6^", "1**z3", "abc", "1/", "1/0", "1/-2", "2 z3", "z0"})
    CHECK_ERROR_KIND(parse_cyclo(bad, 6), ErrorKind::SyntaxError);
}

TEST_CASE("infer conductor") {
  CHECK(infer_conductor("1, -z3-1, z3, 0") == 3);
  CHECK(infer_conductor("z4 + z6^5") == 12);
  CHECK(infer_conductor("-1/2") == 1);
}

TEST_CASE("format examples") {
  CHECK(Cyclo(-1L).str() == "-1");
  CHECK((z(6) - Cyclo(1L)).str() == "-1 + z6");
  CHECK(Cyclo().str() == "0");
  CHECK(Cyclo(0L, 5).str() == "0");
  CHECK((Cyclo(Rational(1, 2)) - Cyclo(2L) * z(5, 3)).str() == "1/2 - 2*z5^3");
  CHECK((-z(3)).str() == "-z3");
  CHECK(z(4, 3).str() == "-z4");
}

TEST_CASE("complex embedding examples") {
  CHECK(near(Cyclo(1L).embed(), {1.0, 0.0}, 1e-12));
  CHECK(near(z(4).embed(), {0.0, 1.0}, 1e-12));
  CHECK(near(z(3).embed(), {-0.5, std::sqrt(3.0) / 2.0}, 1e-12));
}

TEST_CASE("conjugation and reality") {
  CHECK(z(5).conj() == z(5, 4));
  CHECK((z(5) + z(5, 4)).is_real());
  CHECK_FALSE(z(3).is_real());
  CHECK(Cyclo(Rational(-7, 3), 12).is_real());
  CHECK((z(8) - z(8, 3)).is_real());  // sqrt 2
}

TEST_CASE("property: field axioms at conductors up to 12") {
  std::mt19937 rng(20240901);
  std::uniform_int_distribution<int> cond(1, 12);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = cond(rng);
    const Cyclo a = random_cyclo(rng, n), b = random_cyclo(rng, n), c = random_cyclo(rng, n);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclo(0L, n));
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1L, n));
    CHECK(static_cast<int>(a.coeffs().size()) == euler_phi(n));
  }
}

TEST_CASE("property: roots of unity") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(z(n, n) == Cyclo(1L, n));
    Cyclo p = Cyclo(1L, n);
    for (int i = 0; i < n; ++i) p = p * z(n);
    CHECK(p == Cyclo(1L, n));
    // Phi_n(zeta_n) = 0 by Horner
    const auto& phi = cyclotomic_polynomial(n);
    Cyclo acc(0L, n);
    for (auto it = phi.rbegin(); it != phi.rend(); ++it) acc = acc * z(n) + Cyclo(static_cast<long>(*it), n);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("property: lift is a field embedding") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> cond(1, 12), mult(1, 4);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = cond(rng);
    const int m = n * mult(rng);
    const Cyclo a = random_cyclo(rng, n), b = random_cyclo(rng, n);
    CHECK((a * b).lift(m) == a.lift(m) * b.lift(m));
    CHECK((a + b).lift(m) == a.lift(m) + b.lift(m));
    CHECK(a.lift(m) == a);
    CHECK(near(evaluate(a.lift(m)), evaluate(a), 1e-6 * (1.0 + std::abs(evaluate(a)))));
  }
}

TEST_CASE("property: format and parse round trip") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> cond(1, 12);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = cond(rng);
    const Cyclo a = random_cyclo(rng, n);
    const std::string s = a.str();
    const Cyclo back = parse_cyclo(s, n);
    CHECK(back == a);
    CHECK(back.coeffs() == a.coeffs());
    CHECK(back.str() == s);
  }
}

TEST_CASE("property: complex embedding is a ring homomorphism") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> cond(1, 12);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = cond(rng);
    const Cyclo a = random_cyclo(rng, n), b = random_cyclo(rng, n);
    const auto ea = a.embed(), eb = b.embed();
    const double scale = 1.0 + std::abs(ea) * std::abs(eb) + std::abs(ea) + std::abs(eb);
    CHECK(near((a + b).embed(), ea + eb, 1e-9 * scale));
    CHECK(near((a * b).embed(), ea * eb, 1e-9 * scale));
    CHECK(near(ea, evaluate(a), 1e-9 * scale));
  }
}
