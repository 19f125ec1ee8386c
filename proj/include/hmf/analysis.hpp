#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hmf/algebra.hpp"
#include "hmf/enclosure.hpp"

namespace hmf {

/// A point where `f` is negative, if any. Operator order in a commutative
/// function algebra is pointwise, so this decides f >= 0.
inline std::optional<Rational> negative_witness(const PPoly& f) {
  for (std::size_t k = 0; k < f.piece_count(); ++k) {
    const Interval iv = f.piece_interval(k);
    auto report = sign_report(f.pieces()[k], iv.lo, iv.hi);
    if (report.negative_at) return report.negative_at;
  }
  return std::nullopt;
}

inline bool is_nonneg(const PPoly& f) { return !negative_witness(f).has_value(); }

/// f <= g pointwise (a.e. for measurable algebras).
inline bool leq(const PPoly& f, const PPoly& g) { return is_nonneg(g - f); }

enum class Ordering { lt, eq, gt };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::lt: return "lt";
    case Ordering::eq: return "eq";
    case Ordering::gt: return "gt";
  }
  return "?";
}

/// Exact comparison of the sup norm of `f` with `q`.
inline Ordering norm_cmp(const PPoly& f, const Rational& q) {
  if (q.sign() < 0) return Ordering::gt;
  bool attained = false;
  for (std::size_t k = 0; k < f.piece_count(); ++k) {
    const Interval iv = f.piece_interval(k);
    const Poly& p = f.pieces()[k];
    const Poly above = Poly::constant(q) - p;
    const Poly below = Poly::constant(q) + p;
    if (sign_report(above, iv.lo, iv.hi).negative_at || sign_report(below, iv.lo, iv.hi).negative_at) return Ordering::gt;
    if (!attained) {
      attained = above.is_zero() || below.is_zero() || !isolate_roots(above, iv.lo, iv.hi).empty() ||
                 !isolate_roots(below, iv.lo, iv.hi).empty();
    }
  }
  return attained ? Ordering::eq : Ordering::lt;
}

namespace detail {

/// Exactly known rational roots of low-degree factors, used as norm candidates.
inline std::vector<Rational> easy_rational_roots(const Poly& p) {
  std::vector<Rational> out;
  if (p.degree() == 1) {
    out.push_back(-p.coeff(0) / p.coeff(1));
  } else if (p.degree() == 2) {
    const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const Rational disc = b * b - Rational(4) * a * c;
    Rational root;
    if (disc.sign() >= 0 && disc.exact_sqrt(root)) {
      out.push_back((-b + root) / (Rational(2) * a));
      out.push_back((-b - root) / (Rational(2) * a));
    }
  }
  return out;
}

/// Crude upper bound on |p| over [lo, hi] from the coefficient magnitudes.
inline Rational coefficient_bound(const Poly& p, const Interval& iv) {
  const Rational r = max(iv.lo.abs(), iv.hi.abs());
  Rational bound, power(1);
  for (const auto& c : p.coeffs()) {
    bound += c.abs() * power;
    power *= r;
  }
  return bound;
}

}  // namespace detail

/// Enclosure [lb, ub] of the sup norm with ub - lb <= width. Exact when the
/// maximum sits at a breakpoint or an easy rational critical point.
inline Enclosure sup_norm(const PPoly& f, const Rational& width = default_width()) {
  if (width.sign() <= 0) throw Error(ErrorCode::NonpositiveWidth, "sup_norm width must be positive");
  Rational lb, ub;
  for (std::size_t k = 0; k < f.piece_count(); ++k) {
    const Interval iv = f.piece_interval(k);
    const Poly& p = f.pieces()[k];
    std::vector<Rational> candidates{iv.lo, iv.hi};
    for (const auto& r : detail::easy_rational_roots(p.derivative()))
      if (iv.contains(r)) candidates.push_back(r);
    for (const auto& t : candidates) lb = max(lb, p(t).abs());
    ub = max(ub, detail::coefficient_bound(p, iv));
  }
  switch (norm_cmp(f, lb)) {
    case Ordering::eq: return Enclosure::exact(lb);
    case Ordering::lt: throw Error(ErrorCode::InvalidElement, "sup_norm: sampled value exceeds the norm");
    case Ordering::gt: break;
  }
  ub = max(ub, lb);
  while (ub - lb > width) {
    const Rational mid = midpoint(lb, ub);
    switch (norm_cmp(f, mid)) {
      case Ordering::eq: return Enclosure::exact(mid);
      case Ordering::lt: ub = mid; break;
      case Ordering::gt: lb = mid; break;
    }
  }
  return {lb, ub};
}

struct Invertibility {
  bool invertible = false;
  /// Positive rational bound with |f| >= bound everywhere, when invertible.
  std::optional<Rational> lower_bound;
  /// Piece index whose closure contains a zero, when not invertible.
  std::optional<std::size_t> vanishing_piece;
};

inline Invertibility is_invertible(const PPoly& f) {
  if (!f.descriptor().unital())
    throw Error(ErrorCode::NonUnitalAlgebra, "invertibility needs a unital algebra, got " + f.descriptor().str());
  Invertibility out;
  Rational bound;
  for (std::size_t k = 0; k < f.piece_count(); ++k) {
    const Interval iv = f.piece_interval(k);
    const Poly& p = f.pieces()[k];
    if (p.is_zero() || !isolate_roots(p, iv.lo, iv.hi).empty()) {
      out.vanishing_piece = k;
      return out;
    }
    const Poly oriented = p(iv.lo).sign() > 0 ? p : -p;
    Rational piece_bound = min(oriented(iv.lo), oriented(iv.hi));
    while (sign_report(oriented - Poly::constant(piece_bound), iv.lo, iv.hi).negative_at) piece_bound /= Rational(2);
    bound = k == 0 ? piece_bound : min(bound, piece_bound);
  }
  out.invertible = true;
  out.lower_bound = bound;
  return out;
}

enum class DivisionFailure { none, zero_divisor_nonzero_target, nonzero_remainder, quotient_not_member };

inline const char* to_string(DivisionFailure f) {
  switch (f) {
    case DivisionFailure::none: return "none";
    case DivisionFailure::zero_divisor_nonzero_target: return "zero_divisor_nonzero_target";
    case DivisionFailure::nonzero_remainder: return "nonzero_remainder";
    case DivisionFailure::quotient_not_member: return "quotient_not_member";
  }
  return "?";
}

struct Division {
  std::optional<PPoly> quotient;
  DivisionFailure failure = DivisionFailure::none;
  std::string reason;

  explicit operator bool() const { return quotient.has_value(); }
};

/// Finds g in the algebra with f * g = h, within the piecewise-polynomial model.
/// Where f vanishes identically the quotient is free: zero in measurable
/// algebras, the linear bridge between neighbouring values in continuous ones.
inline Division divide_exact(const PPoly& f, const PPoly& h) {
  if (!(f.descriptor() == h.descriptor()))
    throw Error(ErrorCode::DescriptorMismatch, f.descriptor().str() + " vs " + h.descriptor().str());
  const AlgebraDescriptor& d = f.descriptor();
  std::vector<Rational> knots{d.lo};
  for (const auto& v : d.vanishing)
    if (d.lo < v && v < d.hi) knots.push_back(v);
  knots.push_back(d.hi);
  const auto bps = detail::merge_breakpoints(detail::merge_breakpoints(f.breakpoints(), h.breakpoints()), knots);
  const auto fp = pieces_on(f, bps);
  const auto hp = pieces_on(h, bps);
  const std::size_t n = fp.size();

  Division out;
  std::vector<Poly> q(n);
  std::vector<bool> free(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const Interval iv{bps[k], bps[k + 1]};
    if (fp[k].is_zero()) {
      if (!hp[k].is_zero()) {
        out.failure = DivisionFailure::zero_divisor_nonzero_target;
        out.reason = "f vanishes identically on [" + iv.lo.str() + ", " + iv.hi.str() + "] while h does not";
        return out;
      }
      free[k] = true;
      continue;
    }
    auto [quo, rem] = hp[k].divmod(fp[k]);
    if (!rem.is_zero()) {
      out.failure = DivisionFailure::nonzero_remainder;
      out.reason = "f does not divide h on [" + iv.lo.str() + ", " + iv.hi.str() + "]";
      for (const auto& r : isolate_roots(fp[k], iv.lo, iv.hi).exact_roots()) {
        if (!hp[k](r).is_zero()) {
          out.reason = "f vanishes at " + r.str() + " while h does not";
          break;
        }
      }
      return out;
    }
    q[k] = std::move(quo);
  }

  if (d.regularity == Regularity::continuous) {
    auto vanishes = [&](const Rational& t) { return std::find(d.vanishing.begin(), d.vanishing.end(), t) != d.vanishing.end(); };
    for (std::size_t a = 0; a < n;) {
      if (!free[a]) {
        ++a;
        continue;
      }
      std::size_t b = a;
      while (b < n && free[b]) ++b;
      // Knots of the bridge: the run ends plus any prescribed zero in between.
      std::optional<Rational> left, right;
      if (a > 0) left = q[a - 1](bps[a]);
      if (b < n) right = q[b](bps[b]);
      const Rational fallback = left ? *left : right ? *right : Rational(0);
      std::vector<std::pair<std::size_t, Rational>> knots;
      knots.emplace_back(a, left ? *left : vanishes(bps[a]) ? Rational(0) : fallback);
      for (std::size_t k = a + 1; k < b; ++k)
        if (vanishes(bps[k])) knots.emplace_back(k, Rational(0));
      knots.emplace_back(b, right ? *right : vanishes(bps[b]) ? Rational(0) : fallback);
      for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
        const Rational t0 = bps[knots[j].first], t1 = bps[knots[j + 1].first];
        const Rational slope = (knots[j + 1].second - knots[j].second) / (t1 - t0);
        const Poly bridge({knots[j].second - slope * t0, slope});
        for (std::size_t k = knots[j].first; k < knots[j + 1].first; ++k) q[k] = bridge;
      }
      a = b;
    }
  }

  PiecewiseData data{bps, q};
  const Membership m = is_member(data, d);
  if (!m) {
    out.failure = DivisionFailure::quotient_not_member;
    out.reason = "quotient is not in " + d.str() + ":";
    for (const auto& r : m.reasons) out.reason += " " + r + ";";
    out.reason.pop_back();
    return out;
  }
  out.quotient = PPoly(d, std::move(data.breakpoints), std::move(data.pieces));
  return out;
}

/// Zero set split into plateaus (closures of pieces that vanish identically)
/// and isolated zeros.
struct ZeroSet {
  std::vector<Interval> plateaus;
  std::vector<RootInterval> points;

  bool empty() const { return plateaus.empty() && points.empty(); }
  bool has_interior() const { return !plateaus.empty(); }
};

inline ZeroSet zero_set(const PPoly& f) {
  ZeroSet z;
  const std::size_t n = f.piece_count();
  for (std::size_t k = 0; k < n; ++k) {
    const Interval iv = f.piece_interval(k);
    if (f.pieces()[k].is_zero()) {
      if (!z.plateaus.empty() && z.plateaus.back().hi == iv.lo)
        z.plateaus.back().hi = iv.hi;
      else
        z.plateaus.push_back(iv);
    }
  }
  auto on_plateau = [&](const Rational& t) {
    for (const auto& p : z.plateaus)
      if (p.contains(t)) return true;
    return false;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Poly& p = f.pieces()[k];
    if (p.is_zero()) continue;
    const Interval iv = f.piece_interval(k);
    const bool last = k + 1 == n;
    const RootIsolation iso = isolate_roots(p, iv.lo, iv.hi);
    for (auto r : iso.intervals()) {
      if (r.exact) {
        if (r.lo == iv.hi && !last) continue;  // belongs to the next piece
        if (on_plateau(r.lo)) continue;
      } else {
        // Shrink away from the piece ends so points never touch a plateau.
        const Poly& q = iso.square_free();
        while (!r.exact && (r.lo == iv.lo || r.hi == iv.hi)) {
          const Rational m = midpoint(r.lo, r.hi);
          const int s = q(m).sign();
          if (s == 0)
            r = {m, m, true};
          else if (s == q(r.lo).sign())
            r.lo = m;
          else
            r.hi = m;
        }
      }
      z.points.push_back(r);
    }
  }
  return z;
}

namespace detail {

/// 1 on the pieces of `a` that vanish identically, 0 elsewhere.
inline PiecewiseData plateau_indicator(const PPoly& a) {
  PiecewiseData data{a.breakpoints(), {}};
  for (const auto& p : a.pieces()) data.pieces.push_back(p.is_zero() ? Poly::constant(Rational(1)) : Poly());
  return data;
}

}  // namespace detail

/// For positive `a` with 0 isolated in its spectrum (range closure), the
/// projection b = chi_{0}(a): the indicator of the zero plateaus.
inline std::optional<PPoly> spectral_zero_projection(const PPoly& a) {
  if (auto w = negative_witness(a))
    throw Error(ErrorCode::NotPositive, "element is negative at " + w->str());
  bool has_plateau = false;
  for (std::size_t k = 0; k < a.piece_count(); ++k) {
    const Poly& p = a.pieces()[k];
    if (p.is_zero()) {
      has_plateau = true;
      continue;
    }
    // A zero in the closure of a nonzero piece makes 0 an accumulation point of the range.
    const Interval iv = a.piece_interval(k);
    if (!isolate_roots(p, iv.lo, iv.hi).empty()) return std::nullopt;
  }
  if (!has_plateau) return std::nullopt;
  PiecewiseData b = detail::plateau_indicator(a);
  if (!is_member(b, a.descriptor())) return std::nullopt;
  return PPoly(a.descriptor(), std::move(b.breakpoints), std::move(b.pieces));
}

/// A nonzero b with a * b = 0, when the zero set of `a` has interior.
inline std::optional<PPoly> annihilator(const PPoly& a) {
  const AlgebraDescriptor& d = a.descriptor();
  const ZeroSet z = zero_set(a);
  if (!z.has_interior()) return std::nullopt;
  if (d.regularity == Regularity::measurable) {
    PiecewiseData b = detail::plateau_indicator(a);
    return PPoly(d, std::move(b.breakpoints), std::move(b.pieces));
  }
  if (a.is_zero() && d.unital()) return PPoly::one(d);
  // Polynomial bump on the first plateau, vanishing at its ends and at any
  // prescribed zero inside it.
  const Interval plateau = z.plateaus.front();
  Poly bump = Poly::linear_root(plateau.lo) * (Poly::constant(plateau.hi) - Poly::x());
  for (const auto& v : d.vanishing)
    if (plateau.lo < v && v < plateau.hi) bump = bump * Poly::linear_root(v);
  std::vector<Rational> bps{d.lo};
  std::vector<Poly> pieces;
  if (d.lo < plateau.lo) {
    bps.push_back(plateau.lo);
    pieces.push_back(Poly());
  }
  pieces.push_back(bump);
  if (plateau.hi < d.hi) {
    bps.push_back(plateau.hi);
    pieces.push_back(Poly());
  }
  bps.push_back(d.hi);
  return PPoly(d, std::move(bps), std::move(pieces));
}

/// Enclosure of the Lebesgue measure of {t : f(t) > eps}, of width at most `width`.
inline Enclosure superlevel_measure(const PPoly& f, const Rational& eps, const Rational& width = default_width()) {
  if (eps.sign() <= 0) throw Error(ErrorCode::NonpositiveEpsilon, "epsilon must be positive, got " + eps.str());
  if (width.sign() <= 0) throw Error(ErrorCode::NonpositiveWidth, "width must be positive");

  struct PieceRoots {
    Poly g;
    Interval iv;
    std::vector<RootInterval> roots;
  };
  std::vector<PieceRoots> work;
  std::size_t inexact = 0;
  for (std::size_t k = 0; k < f.piece_count(); ++k) {
    Poly g = f.pieces()[k] - Poly::constant(eps);
    const Interval iv = f.piece_interval(k);
    if (g.is_zero()) continue;
    auto iso = isolate_roots(g, iv.lo, iv.hi);
    for (const auto& r : iso.intervals()) inexact += r.exact ? 0 : 1;
    work.push_back({std::move(g), iv, iso.intervals()});
  }
  const Rational per_root = inexact == 0 ? width : width / Rational(static_cast<long>(inexact));

  Enclosure total{Rational(0), Rational(0)};
  for (auto& w : work) {
    const RootIsolation refined = RootIsolation(square_free_part(w.g).monic(), w.roots).refined(per_root);
    std::vector<RootInterval> fences{{w.iv.lo, w.iv.lo, false}};
    fences.insert(fences.end(), refined.intervals().begin(), refined.intervals().end());
    fences.push_back({w.iv.hi, w.iv.hi, false});
    for (std::size_t k = 0; k + 1 < fences.size(); ++k) {
      const auto& left = fences[k];
      const auto& right = fences[k + 1];
      const Rational sample = left.hi < right.lo ? midpoint(left.hi, right.lo) : left.hi;
      if (w.g(sample).sign() <= 0) continue;
      const Rational shortest = right.lo - left.hi;
      const Rational longest = right.hi - left.lo;
      total.lo += max(shortest, Rational(0));
      total.hi += longest;
    }
  }
  return total;
}

/// Exact Lebesgue measure of {t : f(t) != 0}: the total length of pieces that
/// are not identically zero (isolated zeros are null sets).
inline Rational support_measure(const PPoly& f) {
  Rational m;
  for (std::size_t k = 0; k < f.piece_count(); ++k)
    if (!f.pieces()[k].is_zero()) m += f.piece_interval(k).width();
  return m;
}

}  // namespace hmf
