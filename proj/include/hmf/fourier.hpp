#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hmf/system.hpp"

namespace hmf {

using IndexSet = std::vector<Index>;
using Coefficients = std::map<Index, PPoly>;

namespace detail {

inline void require_orthogonal(const OrthoSystem& s, const IndexSet& F) {
  const auto v = gram_classify(s, F);
  if (v.nonorthogonal_pair)
    throw Error(ErrorCode::NotOrthogonal, "<e_" + std::to_string(v.nonorthogonal_pair->first) + ", e_" +
                                              std::to_string(v.nonorthogonal_pair->second) + "> != 0");
}

inline void require_orthonormal(const OrthoSystem& s, const IndexSet& F) {
  const auto v = gram_classify(s, F);
  if (v.cls != GramClass::orthonormal)
    throw Error(ErrorCode::NotOrthonormal, std::string("subsystem is ") + to_string(v.cls));
}

inline void require_norm_one(const OrthoSystem& s, const IndexSet& F) {
  require_orthogonal(s, F);
  for (Index i : F) {
    const ModuleVector e = s.at(i);
    if (norm_cmp(inner_product(s.context(), e, e), Rational(1)) != Ordering::eq)
      throw Error(ErrorCode::SystemNotNormOne, "e_" + std::to_string(i) + " does not have norm one");
  }
}

/// <e_i, e_i> <= 1 pointwise, i.e. ||<e_i, e_i>|| <= 1 since inner squares are positive.
inline void require_subunit(const OrthoSystem& s, const IndexSet& F) {
  for (Index i : F) {
    const ModuleVector e = s.at(i);
    if (norm_cmp(inner_product(s.context(), e, e), Rational(1)) == Ordering::gt)
      throw Error(ErrorCode::HypothesisViolated, "<e_" + std::to_string(i) + ", e_" + std::to_string(i) + "> exceeds 1");
  }
}

}  // namespace detail

/// <e_i, x>.
inline PPoly fourier_coefficient(const OrthoSystem& s, const ModuleVector& x, Index i) {
  return inner_product(s.context(), s.at(i), x);
}

/// S_F = sum_{i in F} e_i <e_i, x>.
inline ModuleVector partial_sum(const OrthoSystem& s, const ModuleVector& x, const IndexSet& F) {
  ModuleVector sum;
  for (Index i : F) {
    const ModuleVector e = s.at(i);
    sum = add(sum, act(s.context(), e, inner_product(s.context(), e, x)));
  }
  return sum;
}

struct ResidualIdentity {
  PPoly lhs;
  PPoly rhs;
  bool equal = false;
};

/// <x - S_F, x - S_F> computed directly and through the expansion
/// <x,x> - 2 sum <x,e_i><e_i,x> + sum <x,e_i><e_i,e_i><e_i,x>.
inline ResidualIdentity residual_identity_check(const OrthoSystem& s, const ModuleVector& x, const IndexSet& F) {
  detail::require_orthogonal(s, F);
  const ModuleContext& ctx = s.context();
  const ModuleVector r = sub(x, partial_sum(s, x, F));
  PPoly lhs = inner_product(ctx, r, r);
  PPoly twice = PPoly::zero(ctx.coefficient_algebra());
  PPoly weighted = twice;
  for (Index i : F) {
    const ModuleVector e = s.at(i);
    const PPoly c = inner_product(ctx, e, x);
    twice = twice + adjoint(c) * c;
    weighted = weighted + adjoint(c) * inner_product(ctx, e, e) * c;
  }
  PPoly rhs = inner_product(ctx, x, x) - Rational(2) * twice + weighted;
  const bool eq = lhs == rhs;
  return {std::move(lhs), std::move(rhs), eq};
}

struct NetTerms {
  PPoly a;  // 2 B - C
  PPoly b;  // sum <x,e_i><e_i,x>
  PPoly c;  // sum <x,e_i><e_i,e_i><e_i,x>
};

inline NetTerms net_terms(const OrthoSystem& s, const ModuleVector& x, const IndexSet& F) {
  const ModuleContext& ctx = s.context();
  PPoly b = PPoly::zero(ctx.coefficient_algebra());
  PPoly c = b;
  for (Index i : F) {
    const ModuleVector e = s.at(i);
    const PPoly coef = inner_product(ctx, e, x);
    b = b + adjoint(coef) * coef;
    c = c + adjoint(coef) * inner_product(ctx, e, e) * coef;
  }
  PPoly a = Rational(2) * b - c;
  return {std::move(a), std::move(b), std::move(c)};
}

struct BesselResult {
  bool holds = false;
  PPoly slack;  // <x,x> - B_F
  std::optional<Rational> witness;
};

/// Finite Bessel inequality sum_{i in F} <x,e_i><e_i,x> <= <x,x> for norm-one orthogonal systems.
inline BesselResult bessel_check(const OrthoSystem& s, const ModuleVector& x, const IndexSet& F) {
  detail::require_norm_one(s, F);
  PPoly slack = inner_product(s.context(), x, x) - net_terms(s, x, F).b;
  auto w = negative_witness(slack);
  return {!w.has_value(), std::move(slack), w};
}

struct NetCheck {
  bool monotone = false;   // A_G - A_F >= 0
  bool dominated = false;  // A_F - (B_F - C_F) >= 0
  NetTerms at_f;
  NetTerms at_g;
};

inline NetCheck net_monotonicity_check(const OrthoSystem& s, const ModuleVector& x, const IndexSet& F, const IndexSet& G) {
  const std::set<Index> g_set(G.begin(), G.end());
  for (Index i : F)
    if (!g_set.count(i)) throw Error(ErrorCode::BadParams, "F is not a subset of G");
  detail::require_subunit(s, G);
  NetTerms tf = net_terms(s, x, F);
  NetTerms tg = net_terms(s, x, G);
  const bool monotone = is_nonneg(tg.a - tf.a);
  const bool dominated = is_nonneg(tf.a - (tf.b - tf.c));
  return {monotone, dominated, std::move(tf), std::move(tg)};
}

struct OptimalityGap {
  PPoly gap;             // <x - sum e_i a_i, .> - <x - S_F, .>
  PPoly expected;        // sum (a_i - <e_i,x>)^* (a_i - <e_i,x>)
  bool identity_holds = false;
  bool equality = false;  // a_i = <e_i, x> for every i in F
};

/// Compares the Gram residual of arbitrary coefficients with the Fourier one.
/// Coefficients missing from `coeffs` are zero.
inline OptimalityGap optimality_gap(const OrthoSystem& s, const ModuleVector& x, const IndexSet& F, const Coefficients& coeffs) {
  detail::require_orthonormal(s, F);
  const ModuleContext& ctx = s.context();
  const AlgebraDescriptor d = ctx.coefficient_algebra();
  ModuleVector combo;
  PPoly expected = PPoly::zero(d);
  bool equality = true;
  for (Index i : F) {
    const ModuleVector e = s.at(i);
    auto it = coeffs.find(i);
    const PPoly a = it == coeffs.end() ? PPoly::zero(d) : it->second;
    combo = add(combo, act(ctx, e, a));
    const PPoly diff = a - inner_product(ctx, e, x);
    equality = equality && diff.is_zero();
    expected = expected + adjoint(diff) * diff;
  }
  const ModuleVector alt = sub(x, combo);
  const ModuleVector fourier = sub(x, partial_sum(s, x, F));
  PPoly gap = inner_product(ctx, alt, alt) - inner_product(ctx, fourier, fourier);
  const bool identity = gap == expected;
  return {std::move(gap), std::move(expected), identity, equality};
}

struct FrameRow {
  PPoly frame_sum;     // S(x) = sum_i <x,x_i><x_i,x>
  PPoly inner_square;  // <x,x>
  bool lower_ok = false;
  bool upper_ok = false;
  bool tight = false;
  bool standard = false;
  std::optional<Rational> lower_witness;
  std::optional<Rational> upper_witness;
};

struct FrameReport {
  Rational lower;
  Rational upper;
  std::vector<FrameRow> rows;

  bool all_lower() const { return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.lower_ok; }); }
  bool all_upper() const { return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.upper_ok; }); }
  bool all_standard() const { return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.standard; }); }
  bool tight() const { return lower == upper && all_lower() && all_upper(); }
  bool normalized() const { return tight() && lower == Rational(1); }
};

/// Pointwise check of C<x,x> <= sum_i <x,x_i><x_i,x> <= D<x,x> for each test vector.
inline FrameReport frame_check(const ModuleContext& ctx, const std::vector<ModuleVector>& vectors,
                               const std::vector<ModuleVector>& tests, const Rational& C, const Rational& D) {
  FrameReport report{C, D, {}};
  for (const auto& x : tests) {
    PPoly sum = PPoly::zero(ctx.coefficient_algebra());
    for (const auto& v : vectors) {
      const PPoly c = inner_product(ctx, x, v);
      sum = sum + c * adjoint(c);
    }
    PPoly sq = inner_product(ctx, x, x);
    FrameRow row{sum, sq, false, false, false, false, std::nullopt, std::nullopt};
    row.lower_witness = negative_witness(sum - C * sq);
    row.upper_witness = negative_witness(D * sq - sum);
    row.lower_ok = !row.lower_witness;
    row.upper_ok = !row.upper_witness;
    row.tight = C == D && row.lower_ok && row.upper_ok;
    row.standard = sum == sq;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace detail {

inline void require_increasing(const std::vector<Index>& schedule) {
  for (std::size_t k = 1; k < schedule.size(); ++k)
    if (!(schedule[k - 1] < schedule[k])) throw Error(ErrorCode::BadParams, "schedule must be strictly increasing");
}

}  // namespace detail

struct ReconstructionRow {
  Index n = 0;          // F = {1, ..., n}
  PPoly residual_gram;  // <x - S_F, x - S_F>
  Enclosure residual_norm;
  bool exact_zero = false;
};

/// Residual of the partial sums over the prefixes F_n = {1..n} in `schedule`.
inline std::vector<ReconstructionRow> reconstruction_check(const OrthoSystem& s, const ModuleVector& x,
                                                           const std::vector<Index>& schedule,
                                                           const Rational& width = default_width()) {
  detail::require_increasing(schedule);
  std::vector<ReconstructionRow> rows;
  for (Index n : schedule) {
    const ModuleVector r = sub(x, partial_sum(s, x, s.prefix(n)));
    PPoly gram = inner_product(s.context(), r, r);
    Enclosure norm = sqrt_enclosure(sup_norm(gram, width), width);
    const bool zero = gram.is_zero();
    rows.push_back({n, std::move(gram), norm, zero});
  }
  return rows;
}

struct RieszResult {
  bool holds = false;
  bool combination_zero = false;
  std::optional<Index> offending;
};

/// Standard-Riesz independence on S: sum_{j in S} e_j a_j = 0 forces every e_j a_j = 0.
inline RieszResult riesz_independence_check(const ModuleContext& ctx, const std::vector<ModuleVector>& vectors,
                                            const Coefficients& coeffs, const IndexSet& S) {
  ModuleVector sum;
  std::vector<std::pair<Index, ModuleVector>> terms;
  for (Index j : S) {
    if (j == 0 || j > vectors.size()) throw Error(ErrorCode::IndexOutOfSystem, "index " + std::to_string(j));
    auto it = coeffs.find(j);
    if (it == coeffs.end()) continue;
    ModuleVector t = act(ctx, vectors[j - 1], it->second);
    sum = add(sum, t);
    terms.emplace_back(j, std::move(t));
  }
  RieszResult r;
  r.combination_zero = sum.is_zero();
  r.holds = true;
  if (!r.combination_zero) return r;
  for (const auto& [j, t] : terms) {
    if (!t.is_zero()) {
      r.holds = false;
      r.offending = j;
      break;
    }
  }
  return r;
}

struct CompletenessWitness {
  /// x is orthogonal to every e_i: the system is not complete.
  bool refutes_completeness = false;
  /// False when infinitely many e_i may pair with x and none of the probed ones did.
  bool decided = true;
  std::optional<Index> nonorthogonal_index;
};

/// Tests whether a nonzero x is orthogonal to the whole system. Infinite
/// interaction sets are probed on the first `probe` indices only.
inline CompletenessWitness completeness_witness_check(const OrthoSystem& s, const ModuleVector& x, Index probe = 64) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroWitness, "the witness vector must be nonzero");
  validate(s.context(), x);
  CompletenessWitness w;
  const auto idx = s.interacting(x);
  const IndexSet candidates = idx ? *idx : s.prefix(s.size() ? std::min(*s.size(), probe) : probe);
  for (Index i : candidates) {
    if (!fourier_coefficient(s, x, i).is_zero()) {
      w.nonorthogonal_index = i;
      return w;
    }
  }
  if (!idx) {
    w.decided = false;
    return w;
  }
  w.refutes_completeness = true;
  return w;
}

struct ConvergenceRow {
  Index n = 0;
  Enclosure residual_norm;
  /// Measure of {<x,x> - A_{F_n} > eps}, one per eps.
  std::vector<Enclosure> superlevel;
};

/// Per step: norm of x - S_{F_n}, plus superlevel measures of <x,x> - A_{F_n}.
/// Rows are computed concurrently and returned in schedule order.
inline std::vector<ConvergenceRow> convergence_table(const OrthoSystem& s, const ModuleVector& x,
                                                     const std::vector<Index>& schedule,
                                                     const std::vector<Rational>& eps,
                                                     const Rational& width = default_width()) {
  detail::require_increasing(schedule);
  for (const auto& e : eps)
    if (e.sign() <= 0) throw Error(ErrorCode::NonpositiveEpsilon, "epsilon must be positive, got " + e.str());
  const PPoly sq = inner_product(s.context(), x, x);
  auto row_for = [&](Index n) {
    const IndexSet F = s.prefix(n);
    const ModuleVector r = sub(x, partial_sum(s, x, F));
    ConvergenceRow row;
    row.n = n;
    row.residual_norm = sqrt_enclosure(sup_norm(inner_product(s.context(), r, r), width), width);
    const PPoly gap = sq - net_terms(s, x, F).a;
    for (const auto& e : eps) row.superlevel.push_back(superlevel_measure(gap, e, width));
    return row;
  };
  std::vector<std::future<ConvergenceRow>> futures;
  for (Index n : schedule) futures.push_back(std::async(std::launch::async, row_for, n));
  std::vector<ConvergenceRow> rows;
  for (auto& f : futures) rows.push_back(f.get());
  return rows;
}

}  // namespace hmf
