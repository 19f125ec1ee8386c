#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hmf/poly.hpp"
#include "hmf/roots.hpp"

namespace hmf {

enum class Regularity { continuous, measurable };

inline const char* to_string(Regularity r) { return r == Regularity::continuous ? "continuous" : "measurable"; }

/// Which commutative function algebra an element lives in: C[lo,hi] with
/// optional prescribed zeros (C0(0,1], suspensions), or L^inf[lo,hi].
struct AlgebraDescriptor {
  Rational lo{0};
  Rational hi{1};
  Regularity regularity = Regularity::continuous;
  std::vector<Rational> vanishing;  // sorted, unique

  static AlgebraDescriptor continuous(Rational lo, Rational hi, std::vector<Rational> vanishing = {}) {
    std::sort(vanishing.begin(), vanishing.end());
    vanishing.erase(std::unique(vanishing.begin(), vanishing.end()), vanishing.end());
    return {std::move(lo), std::move(hi), Regularity::continuous, std::move(vanishing)};
  }
  static AlgebraDescriptor measurable(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi), Regularity::measurable, {}};
  }

  bool unital() const { return vanishing.empty(); }
  Interval domain() const { return {lo, hi}; }

  /// Invariant violations, empty when the descriptor is well formed.
  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    if (!(lo < hi)) out.push_back("domain [" + lo.str() + ", " + hi.str() + "] is degenerate");
    for (const auto& v : vanishing)
      if (v < lo || v > hi) out.push_back("vanishing point " + v.str() + " outside the domain");
    if (regularity == Regularity::measurable && !vanishing.empty())
      out.push_back("measurable algebras cannot prescribe vanishing points");
    if (!std::is_sorted(vanishing.begin(), vanishing.end()) ||
        std::adjacent_find(vanishing.begin(), vanishing.end()) != vanishing.end())
      out.push_back("vanishing points must be sorted and distinct");
    return out;
  }

  std::string str() const {
    std::string s = regularity == Regularity::continuous ? "C" : "Linf";
    s += "[" + lo.str() + ", " + hi.str() + "]";
    if (!vanishing.empty()) {
      s += " vanishing at {";
      for (std::size_t k = 0; k < vanishing.size(); ++k) s += (k ? ", " : "") + vanishing[k].str();
      s += "}";
    }
    return s;
  }

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

/// The unitization of a descriptor: same space, vanishing constraints dropped.
inline AlgebraDescriptor unitization(const AlgebraDescriptor& d) {
  AlgebraDescriptor u = d;
  u.vanishing.clear();
  return u;
}

/// Unvalidated piecewise data; piece k lives on [t_k, t_{k+1}), the last piece also at t_m.
struct PiecewiseData {
  std::vector<Rational> breakpoints;
  std::vector<Poly> pieces;
};

namespace detail {

inline std::size_t piece_index(const std::vector<Rational>& bps, const Rational& t) {
  // Last k with bps[k] <= t, clamped to the final piece.
  auto it = std::upper_bound(bps.begin(), bps.end(), t);
  std::size_t k = it == bps.begin() ? 0 : static_cast<std::size_t>(it - bps.begin()) - 1;
  return std::min(k, bps.size() - 2);
}

}  // namespace detail

struct Membership {
  bool member = true;
  std::vector<std::string> reasons;
  explicit operator bool() const { return member; }
};

/// Whether raw piecewise data is a valid element of the algebra `d`.
inline Membership is_member(const PiecewiseData& f, const AlgebraDescriptor& d) {
  Membership m;
  auto fail = [&](std::string why) {
    m.member = false;
    m.reasons.push_back(std::move(why));
  };
  for (auto& p : d.problems()) fail("descriptor: " + p);
  const auto& bps = f.breakpoints;
  if (bps.size() < 2) {
    fail("need at least two breakpoints");
    return m;
  }
  if (f.pieces.size() != bps.size() - 1) {
    fail("expected " + std::to_string(bps.size() - 1) + " pieces, got " + std::to_string(f.pieces.size()));
    return m;
  }
  if (bps.front() != d.lo || bps.back() != d.hi) fail("breakpoints must start at " + d.lo.str() + " and end at " + d.hi.str());
  for (std::size_t k = 0; k + 1 < bps.size(); ++k)
    if (!(bps[k] < bps[k + 1])) fail("breakpoints not strictly increasing at index " + std::to_string(k + 1));
  if (!m.member) return m;

  if (d.regularity == Regularity::continuous) {
    for (std::size_t k = 1; k + 1 < bps.size(); ++k) {
      const Rational left = f.pieces[k - 1](bps[k]);
      const Rational right = f.pieces[k](bps[k]);
      if (left != right)
        fail("discontinuous at " + bps[k].str() + ": left limit " + left.str() + ", right limit " + right.str());
    }
  }
  for (const auto& v : d.vanishing) {
    const Rational value = f.pieces[detail::piece_index(bps, v)](v);
    if (!value.is_zero()) fail("does not vanish at " + v.str() + " (value " + value.str() + ")");
  }
  return m;
}

/// Element of a commutative function algebra: a piecewise polynomial with
/// exact rational breakpoints and coefficients. Always stored in canonical
/// form (adjacent equal pieces merged), so structural equality is equality of
/// functions (almost everywhere for measurable algebras).
class PPoly {
 public:
  PPoly(AlgebraDescriptor d, std::vector<Rational> breakpoints, std::vector<Poly> pieces)
      : d_(std::move(d)), data_{std::move(breakpoints), std::move(pieces)} {
    const Membership m = is_member(data_, d_);
    if (!m) {
      std::string why;
      for (const auto& r : m.reasons) why += (why.empty() ? "" : "; ") + r;
      throw Error(ErrorCode::InvalidElement, why);
    }
    canonicalize();
  }

  static PPoly polynomial(const AlgebraDescriptor& d, Poly p) { return PPoly(d, {d.lo, d.hi}, {std::move(p)}); }
  static PPoly constant(const AlgebraDescriptor& d, const Rational& c) { return polynomial(d, Poly::constant(c)); }
  static PPoly zero(const AlgebraDescriptor& d) { return polynomial(d, Poly()); }
  static PPoly one(const AlgebraDescriptor& d) { return constant(d, Rational(1)); }
  static PPoly identity(const AlgebraDescriptor& d) { return polynomial(d, Poly::x()); }

  /// Characteristic function of [a, b] in a measurable algebra (values at the
  /// endpoints follow the half-open piece convention, irrelevant a.e.).
  static PPoly indicator(const AlgebraDescriptor& d, const Rational& a, const Rational& b) {
    if (d.regularity != Regularity::measurable)
      throw Error(ErrorCode::InvalidElement, "indicators of intervals need a measurable algebra");
    const Rational lo = max(a, d.lo), hi = min(b, d.hi);
    if (!(lo < hi)) return zero(d);
    std::vector<Rational> bps{d.lo};
    std::vector<Poly> pieces;
    if (d.lo < lo) {
      bps.push_back(lo);
      pieces.push_back(Poly());
    }
    pieces.push_back(Poly::constant(Rational(1)));
    if (hi < d.hi) {
      bps.push_back(hi);
      pieces.push_back(Poly());
    }
    bps.push_back(d.hi);
    return PPoly(d, std::move(bps), std::move(pieces));
  }

  const AlgebraDescriptor& descriptor() const { return d_; }
  const std::vector<Rational>& breakpoints() const { return data_.breakpoints; }
  const std::vector<Poly>& pieces() const { return data_.pieces; }
  const PiecewiseData& data() const { return data_; }
  std::size_t piece_count() const { return data_.pieces.size(); }
  Interval piece_interval(std::size_t k) const { return {data_.breakpoints[k], data_.breakpoints[k + 1]}; }

  bool is_zero() const { return data_.pieces.size() == 1 && data_.pieces[0].is_zero(); }

  Rational operator()(const Rational& t) const {
    if (t < d_.lo || t > d_.hi) throw Error(ErrorCode::BadParams, "evaluation point " + t.str() + " outside the domain");
    return data_.pieces[detail::piece_index(data_.breakpoints, t)](t);
  }

  /// The same function regarded as an element of another algebra over the same domain.
  PPoly embedded(const AlgebraDescriptor& d) const { return PPoly(d, data_.breakpoints, data_.pieces); }

  /// Restriction to [a, b] inside the domain, as an element of `d` (whose domain must be [a, b]).
  PPoly restricted(const AlgebraDescriptor& d) const {
    const Rational& a = d.lo;
    const Rational& b = d.hi;
    if (a < d_.lo || b > d_.hi) throw Error(ErrorCode::DescriptorMismatch, "restriction leaves the domain");
    std::vector<Rational> bps{a};
    std::vector<Poly> pieces{data_.pieces[detail::piece_index(data_.breakpoints, a)]};
    for (std::size_t k = 1; k + 1 < data_.breakpoints.size(); ++k) {
      const Rational& t = data_.breakpoints[k];
      if (a < t && t < b) {
        bps.push_back(t);
        pieces.push_back(data_.pieces[k]);
      }
    }
    bps.push_back(b);
    return PPoly(d, std::move(bps), std::move(pieces));
  }

  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < piece_count(); ++k) {
      if (k) s += "; ";
      const bool last = k + 1 == piece_count();
      s += "[" + data_.breakpoints[k].str() + ", " + data_.breakpoints[k + 1].str() + (last ? "]" : ")") + ": " +
           data_.pieces[k].str();
    }
    return s;
  }

  friend bool operator==(const PPoly& a, const PPoly& b) { return a.d_ == b.d_ && a.data_.breakpoints == b.data_.breakpoints && a.data_.pieces == b.data_.pieces; }

 private:
  void canonicalize() {
    std::vector<Rational> bps{data_.breakpoints.front()};
    std::vector<Poly> pieces;
    for (std::size_t k = 0; k < data_.pieces.size(); ++k) {
      if (!pieces.empty() && pieces.back() == data_.pieces[k]) {
        bps.back() = data_.breakpoints[k + 1];
        continue;
      }
      pieces.push_back(std::move(data_.pieces[k]));
      bps.push_back(data_.breakpoints[k + 1]);
    }
    data_.breakpoints = std::move(bps);
    data_.pieces = std::move(pieces);
  }

  AlgebraDescriptor d_;
  PiecewiseData data_;
};

/// Concatenates elements living on [lo, m] and [m, hi] into one element of `d`.
inline PPoly join(const AlgebraDescriptor& d, const PPoly& left, const PPoly& right) {
  std::vector<Rational> bps = left.breakpoints();
  std::vector<Poly> pieces = left.pieces();
  bps.insert(bps.end(), right.breakpoints().begin() + 1, right.breakpoints().end());
  pieces.insert(pieces.end(), right.pieces().begin(), right.pieces().end());
  return PPoly(d, std::move(bps), std::move(pieces));
}

enum class ArithOp { add, sub, mul };

namespace detail {

inline std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Pieces of `f` re-expressed on a finer breakpoint list.
inline std::vector<Poly> pieces_on(const PPoly& f, const std::vector<Rational>& refined) {
  std::vector<Poly> out;
  out.reserve(refined.size() - 1);
  std::size_t k = 0;
  const auto& bps = f.breakpoints();
  for (std::size_t j = 0; j + 1 < refined.size(); ++j) {
    while (k + 2 < bps.size() && bps[k + 1] <= refined[j]) ++k;
    out.push_back(f.pieces()[k]);
  }
  return out;
}

/// Exact algebra operation on the common refinement of breakpoints.
inline PPoly alg_arith(const PPoly& f, const PPoly& g, ArithOp op) {
  if (!(f.descriptor() == g.descriptor()))
    throw Error(ErrorCode::DescriptorMismatch, f.descriptor().str() + " vs " + g.descriptor().str());
  auto bps = detail::merge_breakpoints(f.breakpoints(), g.breakpoints());
  const auto fp = pieces_on(f, bps);
  const auto gp = pieces_on(g, bps);
  std::vector<Poly> out;
  out.reserve(fp.size());
  for (std::size_t k = 0; k < fp.size(); ++k) {
    switch (op) {
      case ArithOp::add: out.push_back(fp[k] + gp[k]); break;
      case ArithOp::sub: out.push_back(fp[k] - gp[k]); break;
      case ArithOp::mul: out.push_back(fp[k] * gp[k]); break;
    }
  }
  return PPoly(f.descriptor(), std::move(bps), std::move(out));
}

inline PPoly operator+(const PPoly& f, const PPoly& g) { return alg_arith(f, g, ArithOp::add); }
inline PPoly operator-(const PPoly& f, const PPoly& g) { return alg_arith(f, g, ArithOp::sub); }
inline PPoly operator*(const PPoly& f, const PPoly& g) { return alg_arith(f, g, ArithOp::mul); }

inline PPoly operator*(const Rational& s, const PPoly& f) {
  std::vector<Poly> pieces;
  for (const auto& p : f.pieces()) pieces.push_back(s * p);
  return PPoly(f.descriptor(), f.breakpoints(), std::move(pieces));
}

inline PPoly operator-(const PPoly& f) { return Rational(-1) * f; }

/// Involution. Scalars are real, so it is the identity.
inline const PPoly& adjoint(const PPoly& f) { return f; }

}  // namespace hmf
