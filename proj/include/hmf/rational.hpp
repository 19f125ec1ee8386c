#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "hmf/error.hpp"

namespace hmf {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  /// Parses "p/q" or an integer "p". Throws ParseError on anything else.
  static Rational parse(std::string_view text) {
    auto bad = [&] { return Error(ErrorCode::ParseError, "invalid rational '" + std::string(text) + "'"); };
    auto valid_int = [](std::string_view s, bool allow_sign) {
      if (s.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    const auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw bad();
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }

  /// 2^exponent for any signed exponent.
  static Rational pow2(long exponent) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(mpq_class(mpz_class(1), p)) : Rational(p);
  }

  /// Canonical "p/q" form; zero is "0/1".
  std::string str() const { return num().get_str() + "/" + den().get_str(); }

  double to_double() const { return v_.get_d(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// Exact square root when both numerator and denominator are perfect squares.
  bool exact_sqrt(Rational& out) const {
    if (sign() < 0) return false;
    mpz_class n = num(), d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rational(mpq_class(rn, rd));
    return true;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidElement, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace hmf
