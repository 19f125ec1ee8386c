#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hmf/algebra.hpp"
#include "hmf/analysis.hpp"

namespace hmf {

using Index = std::uint64_t;

/// One sheet of a branched cover, lying over [lo, beta] or [beta, hi].
struct Branch {
  Index label = 0;
  Interval base;
  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Branched cover Y -> X = [lo, hi]: sheets glued at a single branch point.
/// fiber_count(x) is the number of sheets over x, and 1 at the branch point.
class CoverSpace {
 public:
  CoverSpace(Rational lo, Rational hi, Rational branch_point, std::vector<Branch> branches)
      : lo_(std::move(lo)), hi_(std::move(hi)), beta_(std::move(branch_point)), branches_(std::move(branches)) {
    if (!(lo_ < beta_ && beta_ < hi_)) throw Error(ErrorCode::InvalidElement, "branch point must be interior to the base");
    bool below = false, above = false;
    for (std::size_t k = 0; k < branches_.size(); ++k) {
      const auto& b = branches_[k];
      const bool is_lower = b.base == Interval{lo_, beta_};
      const bool is_upper = b.base == Interval{beta_, hi_};
      if (!is_lower && !is_upper)
        throw Error(ErrorCode::InvalidElement, "branch " + std::to_string(b.label) + " must lie over [lo, beta] or [beta, hi]");
      below |= is_lower;
      above |= is_upper;
      for (std::size_t j = 0; j < k; ++j)
        if (branches_[j].label == b.label)
          throw Error(ErrorCode::InvalidElement, "duplicate branch label " + std::to_string(b.label));
    }
    if (!below || !above) throw Error(ErrorCode::InvalidElement, "cover needs sheets on both sides of the branch point");
  }

  /// X = [-1, 1], branch point 0, sheet 1 over [-1, 0] and sheets 2, 3 over [0, 1].
  static CoverSpace three_sheet() {
    return CoverSpace(Rational(-1), Rational(1), Rational(0),
                      {{1, {Rational(-1), Rational(0)}}, {2, {Rational(0), Rational(1)}}, {3, {Rational(0), Rational(1)}}});
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const Rational& branch_point() const { return beta_; }
  const std::vector<Branch>& branches() const { return branches_; }

  const Branch* find(Index label) const {
    for (const auto& b : branches_)
      if (b.label == label) return &b;
    return nullptr;
  }

  std::size_t fiber_count(const Rational& x) const {
    if (x == beta_) return 1;
    std::size_t n = 0;
    for (const auto& b : branches_) n += b.base.contains(x) ? 1 : 0;
    return n;
  }

  AlgebraDescriptor base_algebra() const { return AlgebraDescriptor::continuous(lo_, hi_); }
  AlgebraDescriptor sheet_algebra(const Branch& b) const { return AlgebraDescriptor::continuous(b.base.lo, b.base.hi); }

  friend bool operator==(const CoverSpace&, const CoverSpace&) = default;

 private:
  Rational lo_, hi_, beta_;
  std::vector<Branch> branches_;
};

/// Where module vectors live: the standard module H_{A,I} over a function
/// algebra A, or C(Y) over C(X) for a branched cover.
class ModuleContext {
 public:
  static ModuleContext free(AlgebraDescriptor d) { return ModuleContext(std::move(d)); }
  static ModuleContext cover(CoverSpace c) { return ModuleContext(std::move(c)); }

  bool is_cover() const { return std::holds_alternative<CoverSpace>(v_); }
  const CoverSpace& cover_space() const { return std::get<CoverSpace>(v_); }

  /// The algebra inner products take values in.
  AlgebraDescriptor coefficient_algebra() const {
    return is_cover() ? cover_space().base_algebra() : std::get<AlgebraDescriptor>(v_);
  }

  /// Algebra of the entry stored under `index`.
  AlgebraDescriptor entry_algebra(Index index) const {
    if (!is_cover()) return std::get<AlgebraDescriptor>(v_);
    const Branch* b = cover_space().find(index);
    if (b == nullptr) throw Error(ErrorCode::ContextMismatch, "no sheet labelled " + std::to_string(index));
    return cover_space().sheet_algebra(*b);
  }

  std::string str() const {
    if (!is_cover()) return "H_{A,I} over " + std::get<AlgebraDescriptor>(v_).str();
    const auto& c = cover_space();
    return "C(Y) over C[" + c.lo().str() + ", " + c.hi().str() + "], branch point " + c.branch_point().str() + ", " +
           std::to_string(c.branches().size()) + " sheets";
  }

  friend bool operator==(const ModuleContext&, const ModuleContext&) = default;

 private:
  explicit ModuleContext(AlgebraDescriptor d) : v_(std::move(d)) {}
  explicit ModuleContext(CoverSpace c) : v_(std::move(c)) {}

  std::variant<AlgebraDescriptor, CoverSpace> v_;
};

/// Finitely supported family index -> algebra element. In a cover context the
/// index is the sheet label and the entry is the function on that sheet.
class ModuleVector {
 public:
  ModuleVector() = default;

  /// Sets an entry; zero entries are dropped so the support stays exact.
  ModuleVector& set(Index i, const PPoly& value) {
    entries_.erase(i);
    if (!value.is_zero()) entries_.emplace(i, value);
    return *this;
  }

  const PPoly* entry(Index i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? nullptr : &it->second;
  }
  const std::map<Index, PPoly>& entries() const { return entries_; }

  std::vector<Index> support() const {
    std::vector<Index> out;
    for (const auto& [i, v] : entries_) out.push_back(i);
    return out;
  }

  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  std::map<Index, PPoly> entries_;
};

/// Entry i, or the zero of the entry algebra.
inline PPoly entry_or_zero(const ModuleContext& ctx, const ModuleVector& x, Index i) {
  const PPoly* e = x.entry(i);
  return e != nullptr ? *e : PPoly::zero(ctx.entry_algebra(i));
}

/// Checks every entry lives in the right algebra and, for covers, that the
/// sheets agree at the branch point. Throws ContextMismatch otherwise.
inline void validate(const ModuleContext& ctx, const ModuleVector& x) {
  for (const auto& [i, v] : x.entries()) {
    const AlgebraDescriptor d = ctx.entry_algebra(i);
    if (!(v.descriptor() == d))
      throw Error(ErrorCode::ContextMismatch,
                  "entry " + std::to_string(i) + " lives in " + v.descriptor().str() + ", expected " + d.str());
  }
  if (ctx.is_cover()) {
    const auto& c = ctx.cover_space();
    std::optional<Rational> glued;
    for (const auto& b : c.branches()) {
      const PPoly* e = x.entry(b.label);
      const Rational value = e ? (*e)(c.branch_point()) : Rational(0);
      if (glued && *glued != value)
        throw Error(ErrorCode::ContextMismatch, "sheets disagree at the branch point: " + glued->str() + " vs " +
                                                    value.str() + " on sheet " + std::to_string(b.label));
      glued = value;
    }
  }
}

inline ModuleVector add(const ModuleVector& x, const ModuleVector& y) {
  ModuleVector out = x;
  for (const auto& [i, v] : y.entries()) {
    const PPoly* e = x.entry(i);
    out.set(i, e ? *e + v : v);
  }
  return out;
}

inline ModuleVector sub(const ModuleVector& x, const ModuleVector& y) {
  ModuleVector out = x;
  for (const auto& [i, v] : y.entries()) {
    const PPoly* e = x.entry(i);
    out.set(i, e ? *e - v : -v);
  }
  return out;
}

/// Right module action x * a. On a cover, (f a)(y) = f(y) a(p(y)).
inline ModuleVector act(const ModuleContext& ctx, const ModuleVector& x, const PPoly& a) {
  ModuleVector out;
  for (const auto& [i, v] : x.entries()) {
    if (ctx.is_cover())
      out.set(i, v * a.restricted(ctx.entry_algebra(i)));
    else
      out.set(i, v * a);
  }
  return out;
}

/// Standard basis vector e_i of H_{A,I}: identity in slot i. Needs a unital algebra.
inline ModuleVector basis_vector(const ModuleContext& ctx, Index i) {
  const AlgebraDescriptor d = ctx.entry_algebra(i);
  if (!d.unital()) throw Error(ErrorCode::NonUnitalAlgebra, "standard basis needs a unital algebra");
  return ModuleVector().set(i, PPoly::one(d));
}

/// A-valued inner product <x, y> = sum_i x_i^* y_i, fiber-averaged on covers.
inline PPoly inner_product(const ModuleContext& ctx, const ModuleVector& x, const ModuleVector& y) {
  validate(ctx, x);
  validate(ctx, y);
  if (!ctx.is_cover()) {
    PPoly sum = PPoly::zero(ctx.coefficient_algebra());
    for (const auto& [i, v] : x.entries())
      if (const PPoly* w = y.entry(i)) sum = sum + adjoint(v) * *w;
    return sum;
  }
  const auto& c = ctx.cover_space();
  const AlgebraDescriptor lower = AlgebraDescriptor::continuous(c.lo(), c.branch_point());
  const AlgebraDescriptor upper = AlgebraDescriptor::continuous(c.branch_point(), c.hi());
  PPoly left = PPoly::zero(lower), right = PPoly::zero(upper);
  long n_left = 0, n_right = 0;
  for (const auto& b : c.branches()) {
    const bool is_lower = b.base.lo == c.lo();
    (is_lower ? n_left : n_right) += 1;
    const PPoly* v = x.entry(b.label);
    const PPoly* w = y.entry(b.label);
    if (v == nullptr || w == nullptr) continue;
    if (is_lower)
      left = left + adjoint(*v) * *w;
    else
      right = right + adjoint(*v) * *w;
  }
  left = Rational(1, n_left) * left;
  right = Rational(1, n_right) * right;
  return join(ctx.coefficient_algebra(), left, right);
}

/// Module norm ||x|| = ||<x, x>||^{1/2} as an enclosure.
inline Enclosure vector_norm(const ModuleContext& ctx, const ModuleVector& x, const Rational& width = default_width()) {
  return sqrt_enclosure(sup_norm(inner_product(ctx, x, x), width), width);
}

}  // namespace hmf
