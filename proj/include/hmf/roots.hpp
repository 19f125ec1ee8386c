#pragma once

#include <optional>
#include <vector>

#include "hmf/poly.hpp"

namespace hmf {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One isolating interval. `exact` means lo == hi is itself the (rational) root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Sturm chain of a square-free polynomial: p, p', then negated remainders.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& square_free) {
    chain_.push_back(square_free);
    if (square_free.degree() <= 0) return;
    chain_.push_back(square_free.derivative());
    while (true) {
      Poly r = -(chain_[chain_.size() - 2].divmod(chain_.back()).second);
      if (r.is_zero()) break;
      chain_.push_back(std::move(r));
    }
  }

  /// Sign variations at t, zeros dropped.
  int variations(const Rational& t) const {
    int count = 0, last = 0;
    for (const auto& p : chain_) {
      const int s = p(t).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Number of distinct roots in the half-open interval (a, b].
  int count_half_open(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<Poly> chain_;
};

/// Disjoint, sorted isolating intervals for the distinct real roots of a
/// polynomial on a closed query interval. Non-exact intervals have endpoints
/// where the square-free part is nonzero with opposite signs.
class RootIsolation {
 public:
  RootIsolation(Poly square_free, std::vector<RootInterval> roots)
      : sf_(std::move(square_free)), roots_(std::move(roots)) {}

  const std::vector<RootInterval>& intervals() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  bool empty() const { return roots_.empty(); }
  const Poly& square_free() const { return sf_; }

  std::vector<Rational> exact_roots() const {
    std::vector<Rational> out;
    for (const auto& r : roots_)
      if (r.exact) out.push_back(r.lo);
    return out;
  }

  /// Bisects every non-exact interval until its width is at most `width`.
  RootIsolation refined(const Rational& width) const {
    if (width.sign() <= 0) throw Error(ErrorCode::NonpositiveWidth, "refinement width must be positive");
    std::vector<RootInterval> out = roots_;
    for (auto& r : out) {
      while (!r.exact && r.width() >= width) {
        const Rational m = midpoint(r.lo, r.hi);
        const int sm = sf_(m).sign();
        if (sm == 0) {
          r = {m, m, true};
        } else if (sm == sf_(r.lo).sign()) {
          r.lo = m;
        } else {
          r.hi = m;
        }
      }
    }
    return RootIsolation(sf_, std::move(out));
  }

 private:
  Poly sf_;
  std::vector<RootInterval> roots_;
};

namespace detail {

inline void bisect_roots(const Poly& q, const SturmSequence& sturm, const Rational& a, const Rational& b, int va,
                         int vb, std::vector<RootInterval>& out) {
  const int n = va - vb;
  if (n <= 0) return;
  if (n == 1) {
    if (q.degree() == 1) {
      const Rational r = -q.coeff(0) / q.coeff(1);
      out.push_back({r, r, true});
    } else if (q(b).is_zero())
      out.push_back({b, b, true});
    else
      out.push_back({a, b, false});
    return;
  }
  const Rational m = midpoint(a, b);
  const int vm = sturm.variations(m);
  bisect_roots(q, sturm, a, m, va, vm, out);
  bisect_roots(q, sturm, m, b, vm, vb, out);
}

}  // namespace detail

/// Isolates every distinct real root of `p` in [lo, hi] by Sturm-sequence bisection.
inline RootIsolation isolate_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  if (hi < lo) throw Error(ErrorCode::BadParams, "empty interval [" + lo.str() + ", " + hi.str() + "]");
  const Poly q = square_free_part(p).monic();
  std::vector<RootInterval> roots;
  if (q.degree() <= 0) return RootIsolation(q, {});
  if (q(lo).is_zero()) roots.push_back({lo, lo, true});
  if (lo == hi) return RootIsolation(q, std::move(roots));

  const SturmSequence sturm(q);
  detail::bisect_roots(q, sturm, lo, hi, sturm.variations(lo), sturm.variations(hi), roots);

  // A non-exact interval may start on a neighbouring exact root or share an
  // endpoint with the previous interval; pull its lower end inwards.
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto& r = roots[k];
    if (r.exact) continue;
    auto clashes = [&] { return q(r.lo).is_zero() || (k > 0 && r.lo <= roots[k - 1].hi); };
    while (!r.exact && clashes()) {
      const Rational m = midpoint(r.lo, r.hi);
      if (q(m).is_zero()) {
        r = {m, m, true};
      } else if (sturm.count_half_open(m, r.hi) == 1) {
        r.lo = m;
      } else {
        r.hi = m;
      }
    }
  }
  return RootIsolation(q, std::move(roots));
}

/// Number of distinct real roots of `p` in [lo, hi].
inline std::size_t count_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  return isolate_roots(p, lo, hi).size();
}

enum class Sign { zero, nonnegative, nonpositive, mixed };

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::zero: return "zero";
    case Sign::nonnegative: return "nonnegative";
    case Sign::nonpositive: return "nonpositive";
    case Sign::mixed: return "mixed";
  }
  return "?";
}

/// Sign classification with sample points that witness it.
struct SignReport {
  Sign sign = Sign::zero;
  std::optional<Rational> negative_at;
  std::optional<Rational> positive_at;
};

/// Exact sign behaviour of `p` on [lo, hi]: the sign is constant between
/// consecutive roots, so one rational sample per gap decides it.
inline SignReport sign_report(const Poly& p, const Rational& lo, const Rational& hi) {
  if (hi < lo) throw Error(ErrorCode::BadParams, "empty interval [" + lo.str() + ", " + hi.str() + "]");
  SignReport report;
  if (p.is_zero()) return report;
  const RootIsolation iso = isolate_roots(p, lo, hi);

  std::vector<RootInterval> fences;
  fences.push_back({lo, lo, false});
  fences.insert(fences.end(), iso.intervals().begin(), iso.intervals().end());
  fences.push_back({hi, hi, false});

  for (std::size_t k = 0; k + 1 < fences.size(); ++k) {
    const auto& left = fences[k];
    const auto& right = fences[k + 1];
    Rational sample;
    if (left.hi < right.lo) {
      sample = midpoint(left.hi, right.lo);
    } else {
      sample = left.hi;
    }
    const int s = p(sample).sign();
    if (s > 0 && !report.positive_at) report.positive_at = sample;
    if (s < 0 && !report.negative_at) report.negative_at = sample;
  }
  if (report.positive_at && report.negative_at)
    report.sign = Sign::mixed;
  else if (report.positive_at)
    report.sign = Sign::nonnegative;
  else if (report.negative_at)
    report.sign = Sign::nonpositive;
  else
    report.sign = Sign::zero;
  return report;
}

inline Sign sign_on_interval(const Poly& p, const Rational& lo, const Rational& hi) {
  return sign_report(p, lo, hi).sign;
}

}  // namespace hmf
