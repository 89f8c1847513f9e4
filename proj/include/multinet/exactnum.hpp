#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace multinet {

/// Arbitrary-precision rational. gmpxx keeps results of arithmetic in lowest
/// terms with a positive denominator, which is the invariant we rely on.
using Rational = mpq_class;

int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed once per n and cached; safe to call from several threads.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// An element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1),
/// reduced modulo Phi_N.
///
/// Binary operations on values of different conductors lift both operands to
/// the lcm first. Values are never moved to a smaller conductor.
class Cyclo {
 public:
  /// Zero at conductor 1.
  Cyclo();
  explicit Cyclo(const Rational& value, int conductor = 1);
  explicit Cyclo(long value, int conductor = 1) : Cyclo(Rational(value), conductor) {}

  /// zeta_N^k, reduced.
  static Cyclo zeta(int conductor, long power = 1);
  /// Builds from raw power-basis coordinates; `coeffs` may be shorter than
  /// phi(N), missing entries are zero.
  static Cyclo from_coeffs(int conductor, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Exact test: equal to its complex conjugate.
  bool is_real() const;

  /// Same value expressed at conductor m. Throws NotADivisor unless N | m.
  Cyclo lift(int m) const;
  /// Image under zeta -> zeta^-1.
  Cyclo conj() const;
  /// Multiplicative inverse via extended Euclid against Phi_N over Q.
  /// Throws DivisionByZero on zero.
  Cyclo inverse() const;

  /// Floating approximation under zeta_N -> exp(2 pi i / N). Display only.
  std::complex<double> embed() const;

  /// Canonical text, ascending powers, e.g. "-1 + z6" or "1/2 - 2*z5^3".
  std::string str() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  Cyclo& operator/=(const Cyclo& rhs);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b);

 private:
  Cyclo(int conductor, std::vector<Rational> coeffs, bool reduced);

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// Parses the coordinate-expression grammar
///   expr     := ["+"|"-"] term { ("+"|"-") term }
///   term     := rational | rational "*" atom | atom
///   atom     := "z" N | "z" N "^" k
///   rational := int | int "/" posint
/// Whitespace is ignored. Each atom's N must divide `conductor`.
Cyclo parse_cyclo(std::string_view text, int conductor);

inline std::string format_cyclo(const Cyclo& a) { return a.str(); }
inline Cyclo lift_conductor(const Cyclo& a, int m) { return a.lift(m); }
inline Cyclo cyc_inv(const Cyclo& a) { return a.inverse(); }
inline bool cyc_is_zero(const Cyclo& a) { return a.is_zero(); }
inline std::complex<double> complex_embed(const Cyclo& a) { return a.embed(); }

/// lcm of the N in every "zN" atom appearing in `text` (1 if none).
/// Does not validate the rest of the grammar.
int infer_conductor(std::string_view text);

}  // namespace multinet
