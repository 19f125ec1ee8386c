#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly x() { return Poly({Rational(0), Rational(1)}); }
  /// (x - r)
  static Poly linear_root(const Rational& r) { return Poly({-r, Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  Rational operator()(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= t;
      acc += *it;
    }
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Rational& s, Poly p) {
    if (s.is_zero()) return {};
    for (auto& c : p.c_) c *= s;
    return p;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws ZeroPolynomial when dividing by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
    std::vector<Rational> rem = c_;
    if (rem.size() < d.c_.size()) return {Poly(), *this};
    std::vector<Rational> quo(rem.size() - d.c_.size() + 1);
    const Rational lead = d.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const Rational q = rem[k + d.c_.size() - 1] / lead;
      quo[k] = q;
      if (q.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q * d.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  Poly monic() const {
    if (is_zero()) return {};
    return (Rational(1) / leading()) * *this;
  }

  /// Human-readable rendering in the variable `x`, e.g. "4x^2 - 4x + 1".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& c = c_[k];
      if (c.is_zero()) continue;
      const bool neg = c.sign() < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const Rational a = c.abs();
      std::string mag = a.den() == 1 ? a.num().get_str() : a.str();
      if (k == 0) {
        out += mag;
      } else {
        if (a != Rational(1)) out += mag;
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return p;
  const Poly g = gcd(p, p.derivative());
  return p.divmod(g).first;
}

}  // namespace hmf
