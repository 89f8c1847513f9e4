#include "multinet/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "multinet/error.hpp"

namespace multinet {

namespace {

// Everything needed to do arithmetic at one conductor.
struct Ring {
  int n = 1;
  int phi = 1;
  std::vector<long long> poly;                 // Phi_n, monic, constant first
  std::vector<std::vector<long long>> powers;  // powers[j] = x^j mod Phi_n, 0 <= j < n
};

const Ring& ring(int n);

// Exact division by a monic integer polynomial; the remainder must vanish.
std::vector<long long> divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<long long> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long long c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

std::unique_ptr<Ring> build_ring(int n) {
  auto r = std::make_unique<Ring>();
  r->n = n;
  r->phi = euler_phi(n);

  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(std::move(p), ring(d).poly);
  r->poly = std::move(p);

  const int phi = r->phi;
  r->powers.assign(static_cast<std::size_t>(n), std::vector<long long>(phi, 0));
  r->powers[0][0] = 1;
  for (int j = 1; j < n; ++j) {
    const auto& prev = r->powers[j - 1];
    auto& cur = r->powers[j];
    const long long top = prev[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= top * r->poly[i];
  }
  return r;
}

std::recursive_mutex ring_mutex;

const Ring& ring(int n) {
  if (n < 1) throw Error(ErrorKind::ConductorMismatch, "conductor must be positive, got " + std::to_string(n));
  static std::map<int, std::unique_ptr<Ring>> cache;
  std::lock_guard lock(ring_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto built = build_ring(n);
  return *cache.emplace(n, std::move(built)).first->second;
}

// Reduces raw coefficients of x^0, x^1, ... modulo Phi_n using x^n = 1.
std::vector<Rational> reduce(const Ring& r, const std::vector<Rational>& raw) {
  std::vector<Rational> out(r.phi, 0);
  for (std::size_t t = 0; t < raw.size(); ++t) {
    if (sgn(raw[t]) == 0) continue;
    const auto& row = r.powers[t % r.n];
    for (int i = 0; i < r.phi; ++i)
      if (row[i] != 0) out[i] += raw[t] * static_cast<long>(row[i]);
  }
  return out;
}

// --- dense polynomials over Q, used by the inverse ---

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Returns quotient; `num` becomes the remainder.
QPoly poly_divmod(QPoly& num, const QPoly& den) {
  if (num.size() < den.size()) return {};
  QPoly quot(num.size() - den.size() + 1, 0);
  const Rational& lead = den.back();
  for (std::size_t i = num.size(); i-- >= den.size();) {
    if (sgn(num[i]) == 0) continue;
    const Rational c = num[i] / lead;
    const std::size_t shift = i - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  trim(num);
  trim(quot);
  return quot;
}

mpz_class parse_digits(std::string_view s, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw Error(ErrorKind::SyntaxError, "expected digits at offset " + std::to_string(start));
  return mpz_class(std::string(s.substr(start, pos - start)));
}

int to_small_int(const mpz_class& z, const char* what) {
  if (!z.fits_sint_p()) throw Error(ErrorKind::SyntaxError, std::string(what) + " out of range");
  return static_cast<int>(z.get_si());
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) { return ring(n).poly; }

Cyclo::Cyclo() : conductor_(1), coeffs_(1, 0) {}

Cyclo::Cyclo(const Rational& value, int conductor) : conductor_(conductor) {
  coeffs_.assign(ring(conductor).phi, 0);
  coeffs_[0] = value;
  coeffs_[0].canonicalize();  // mpq_class(num, den) does not reduce on its own
}

Cyclo::Cyclo(int conductor, std::vector<Rational> coeffs, bool reduced) : conductor_(conductor) {
  const Ring& r = ring(conductor);
  if (reduced && static_cast<int>(coeffs.size()) == r.phi)
    coeffs_ = std::move(coeffs);
  else
    coeffs_ = reduce(r, coeffs);
}

Cyclo Cyclo::zeta(int conductor, long power) {
  const long n = conductor;
  const long k = ((power % n) + n) % n;
  std::vector<Rational> raw(static_cast<std::size_t>(k) + 1, 0);
  raw[k] = 1;
  return Cyclo(conductor, std::move(raw), false);
}

Cyclo Cyclo::from_coeffs(int conductor, std::vector<Rational> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  return Cyclo(conductor, std::move(coeffs), false);
}

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool Cyclo::is_real() const { return *this == conj(); }

Cyclo Cyclo::lift(int m) const {
  if (m < 1 || m % conductor_ != 0)
    throw Error(ErrorKind::NotADivisor,
                std::to_string(conductor_) + " does not divide " + std::to_string(m));
  if (m == conductor_) return *this;
  const std::size_t step = static_cast<std::size_t>(m / conductor_);
  std::vector<Rational> raw(coeffs_.size() * step, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return Cyclo(m, std::move(raw), false);
}

Cyclo Cyclo::conj() const {
  std::vector<Rational> raw(static_cast<std::size_t>(conductor_), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    raw[(conductor_ - i) % conductor_] += coeffs_[i];
  }
  return Cyclo(conductor_, std::move(raw), false);
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const Ring& r = ring(conductor_);
  if (is_rational()) return Cyclo(1 / coeffs_[0], conductor_);

  QPoly r0;
  for (long long c : r.poly) r0.emplace_back(static_cast<long>(c));
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly rem = r0;
    QPoly q = poly_divmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly next = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  const Rational scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  return Cyclo(conductor_, std::move(s0), false);
}

std::complex<double> Cyclo::embed() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / conductor_;
    sum += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclo::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    std::string body;
    if (i == 0) {
      body = mag.get_str();
    } else {
      std::string atom = "z" + std::to_string(conductor_);
      if (i > 1) atom += "^" + std::to_string(i);
      body = (mag == 1) ? atom : mag.get_str() + "*" + atom;
    }
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + body;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  if (rhs.conductor_ != conductor_) {
    const int m = std::lcm(conductor_, rhs.conductor_);
    *this = lift(m);
    return *this += rhs.lift(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) { return *this += -rhs; }

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
  if (rhs.conductor_ != conductor_) {
    const int m = std::lcm(conductor_, rhs.conductor_);
    *this = lift(m);
    return *this *= rhs.lift(m);
  }
  if (rhs.is_rational()) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    const Rational s = coeffs_[0];
    coeffs_ = rhs.coeffs_;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const std::size_t phi = coeffs_.size();
  std::vector<Rational> raw(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (sgn(rhs.coeffs_[j]) != 0) raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = reduce(ring(conductor_), raw);
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const int m = std::lcm(a.conductor_, b.conductor_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

Cyclo parse_cyclo(std::string_view text, int conductor) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorKind::SyntaxError, "empty expression");

  const Ring& r = ring(conductor);
  std::vector<Rational> raw(static_cast<std::size_t>(conductor), 0);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw Error(ErrorKind::SyntaxError, "expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    if (pos >= s.size()) throw Error(ErrorKind::SyntaxError, "dangling sign");

    Rational coeff = 1;
    bool has_atom = true;
    if (s[pos] != 'z') {
      mpz_class num = parse_digits(s, pos);
      mpz_class den = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = parse_digits(s, pos);
        if (den == 0) throw Error(ErrorKind::SyntaxError, "zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      has_atom = pos < s.size() && s[pos] == '*';
      if (has_atom) ++pos;
    }

    long power = 0;
    if (has_atom) {
      if (pos >= s.size() || s[pos] != 'z')
        throw Error(ErrorKind::SyntaxError, "expected 'z' at offset " + std::to_string(pos));
      ++pos;
      const int n = to_small_int(parse_digits(s, pos), "root order");
      if (n < 1) throw Error(ErrorKind::SyntaxError, "root order must be positive");
      if (conductor % n != 0)
        throw Error(ErrorKind::ConductorMismatch,
                    "z" + std::to_string(n) + " does not live at conductor " + std::to_string(conductor));
      long k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        k = to_small_int(parse_digits(s, pos), "exponent");
      }
      power = (k % n) * (conductor / n);
    }
    raw[power % conductor] += sign * coeff;
  }
  return Cyclo::from_coeffs(r.n, std::move(raw));
}

int infer_conductor(std::string_view text) {
  int result = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'z') continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    long n = 0;
    std::size_t start = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && n < 1'000'000)
      n = n * 10 + (text[j++] - '0');
    if (j > start && n > 0) result = std::lcm(result, static_cast<int>(n));
  }
  return result;
}

}  // namespace multinet
