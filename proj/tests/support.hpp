#pragma once

// Shared generators and independent oracles for the test suites.

#include <complex>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "multinet/arrangement.hpp"
#include "multinet/error.hpp"
#include "multinet/exactnum.hpp"
#include "multinet/projgeom.hpp"

namespace testing {

using namespace multinet;

inline Rational random_rational(std::mt19937& rng, long height = 1000, long max_den = 5) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Cyclo random_cyclo(std::mt19937& rng, int conductor, long height = 1000) {
  std::vector<Rational> c(euler_phi(conductor));
  for (auto& x : c) x = random_rational(rng, height);
  return Cyclo::from_coeffs(conductor, std::move(c));
}

inline Cyclo random_small(std::mt19937& rng, int conductor) { return random_cyclo(rng, conductor, 3); }

inline Vec3 random_vec(std::mt19937& rng, int conductor) {
  Vec3 v;
  do {
    for (auto& x : v) x = random_small(rng, conductor);
  } while (v[0].is_zero() && v[1].is_zero() && v[2].is_zero());
  return v;
}

/// Complex value by direct evaluation of the power-basis polynomial at
/// exp(2 pi i / N), independent of Cyclo::embed.
inline std::complex<double> evaluate(const Cyclo& a) {
  const double pi = 3.14159265358979323846;
  const std::complex<double> z = std::polar(1.0, 2.0 * pi / a.conductor());
  std::complex<double> acc = 0.0, power = 1.0;
  for (const auto& c : a.coeffs()) {
    acc += c.get_d() * power;
    power *= z;
  }
  return acc;
}

/// Exact 3x3 determinant by cofactor expansion, written out independently of
/// projgeom's determinant.
inline Cyclo det_oracle(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline Cyclo dot_oracle(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Projectivity random_projectivity(std::mt19937& rng, int conductor) {
  for (;;) {
    Matrix3 m{random_vec(rng, conductor), random_vec(rng, conductor), random_vec(rng, conductor)};
    if (!det_oracle(m[0], m[1], m[2]).is_zero()) return Projectivity(m);
  }
}

inline Cyclo Q(long num, long den = 1) { return Cyclo(Rational(num, den)); }

inline ProjLine L(Cyclo a, Cyclo b, Cyclo c) { return ProjLine({std::move(a), std::move(b), std::move(c)}); }
inline ProjPoint P(Cyclo a, Cyclo b, Cyclo c) { return ProjPoint({std::move(a), std::move(b), std::move(c)}); }
inline ProjLine L(long a, long b, long c) { return L(Q(a), Q(b), Q(c)); }
inline ProjPoint P(long a, long b, long c) { return P(Q(a), Q(b), Q(c)); }

// blocks as sets of "line#mult" at conductor n, for comparing up to block order
inline std::multiset<std::set<std::string>> block_sets(const MultinetCandidate& a, int n) {
  std::multiset<std::set<std::string>> out;
  for (const auto& block : a.blocks()) {
    std::set<std::string> s;
    for (const auto& ml : block) s.insert(ml.line.lifted(n).key() + "#" + std::to_string(ml.mult));
    out.insert(s);
  }
  return out;
}

inline std::multiset<std::set<std::string>> block_sets(const MultinetCandidate& a) {
  return block_sets(a, a.conductor());
}

inline void check_carries(const MultinetCandidate& a, const MultinetCandidate& b, const Projectivity& t) {
  const MultinetCandidate image = transform(a, t);
  const int n = std::lcm(image.conductor(), b.conductor());
  CHECK(block_sets(image, n) == block_sets(b, n));
}

#define CHECK_ERROR_KIND(expr, k)                       \
  do {                                                  \
    bool thrown_ = false;                               \
    try {                                               \
      (void)(expr);                                     \
    } catch (const multinet::Error& e_) {               \
      thrown_ = true;                                   \
      CHECK_MESSAGE(e_.kind() == (k), e_.what());       \
    }                                                   \
    CHECK_MESSAGE(thrown_, "expected " #k " from " #expr); \
  } while (0)

}  // namespace testing
