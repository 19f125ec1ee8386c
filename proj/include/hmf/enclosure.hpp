#pragma once

#include <string>

#include "hmf/rational.hpp"

namespace hmf {

/// Default enclosure width, 2^-40.
inline Rational default_width() { return Rational::pow2(-40); }

/// Rational enclosure [lo, hi] of a real quantity.
struct Enclosure {
  Rational lo;
  Rational hi;

  static Enclosure exact(const Rational& v) { return {v, v}; }

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool overlaps(const Enclosure& o) const { return lo <= o.hi && o.lo <= hi; }
  double approx() const { return midpoint(lo, hi).to_double(); }

  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

/// Enclosure of sqrt(x) for x in a nonnegative enclosure, to the requested width.
inline Enclosure sqrt_enclosure(const Enclosure& sq, const Rational& width) {
  if (width.sign() <= 0) throw Error(ErrorCode::NonpositiveWidth, "width must be positive");
  if (sq.lo.sign() < 0) throw Error(ErrorCode::BadParams, "square root of a negative enclosure");
  if (sq.is_exact()) {
    Rational root;
    if (sq.lo.exact_sqrt(root)) return Enclosure::exact(root);
  }
  // Largest l with l^2 <= sq.lo, smallest u with u^2 >= sq.hi, both by bisection.
  const Rational top = max(Rational(1), sq.hi);
  auto lower_root = [&](const Rational& target) {
    Rational a(0), b = top;
    while (b - a > width / Rational(2)) {
      const Rational m = midpoint(a, b);
      if (m * m <= target)
        a = m;
      else
        b = m;
    }
    return a;
  };
  auto upper_root = [&](const Rational& target) {
    Rational a(0), b = top;
    while (b - a > width / Rational(2)) {
      const Rational m = midpoint(a, b);
      if (m * m >= target)
        b = m;
      else
        a = m;
    }
    return b;
  };
  Rational lo_root, hi_root;
  if (!sq.lo.exact_sqrt(lo_root)) lo_root = lower_root(sq.lo);
  if (!sq.hi.exact_sqrt(hi_root)) hi_root = upper_root(sq.hi);
  return {lo_root, hi_root};
}

}  // namespace hmf
