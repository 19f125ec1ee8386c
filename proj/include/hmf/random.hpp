#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hmf/algebra.hpp"

namespace hmf {

/// Platform-independent sampler over mt19937_64 (the std distributions are
/// implementation-defined, and reports must be byte-identical everywhere).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }

  bool coin() { return (rng_() & 1U) != 0; }

  /// p/q with |p| <= bound * q and 1 <= q <= max_den.
  Rational rational(long bound, long max_den) {
    const long q = integer(1, max_den);
    return Rational(integer(-bound * q, bound * q), q);
  }

  /// Rational in [0, 1] with denominator at most max_den.
  Rational unit(long max_den) {
    const long q = integer(1, max_den);
    return Rational(integer(0, q), q);
  }

  Poly poly(int max_degree, long bound, long max_den) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
    for (auto& x : c) x = rational(bound, max_den);
    return Poly(std::move(c));
  }

  /// Strictly increasing interior breakpoints in (lo, hi), at most `count` of them.
  std::vector<Rational> cuts(const Rational& lo, const Rational& hi, int count, long max_den) {
    std::vector<Rational> out;
    for (int k = 0; k < count; ++k) {
      const Rational t = lo + (hi - lo) * Rational(integer(1, max_den - 1), max_den);
      out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Random step function with polynomial pieces in a measurable algebra.
  PPoly measurable(const AlgebraDescriptor& d, int max_cuts, int max_degree) {
    std::vector<Rational> bps{d.lo};
    for (auto& t : cuts(d.lo, d.hi, static_cast<int>(integer(0, max_cuts)), 16)) bps.push_back(t);
    bps.push_back(d.hi);
    std::vector<Poly> pieces;
    for (std::size_t k = 0; k + 1 < bps.size(); ++k) pieces.push_back(coin() && coin() ? Poly() : poly(max_degree, 3, 4));
    return PPoly(d, std::move(bps), std::move(pieces));
  }

  /// Random continuous piecewise polynomial honouring the descriptor's
  /// vanishing points: pieces are glued left to right by fixing constants,
  /// then a polynomial factor kills the prescribed zeros.
  PPoly continuous(const AlgebraDescriptor& d, int max_cuts, int max_degree) {
    std::vector<Rational> bps{d.lo};
    for (auto& t : cuts(d.lo, d.hi, static_cast<int>(integer(0, max_cuts)), 16)) bps.push_back(t);
    bps.push_back(d.hi);
    std::vector<Poly> pieces;
    for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
      Poly p = poly(max_degree, 3, 4);
      if (k > 0) p = p + Poly::constant(pieces.back()(bps[k]) - p(bps[k]));
      pieces.push_back(std::move(p));
    }
    Poly vanish = Poly::constant(Rational(1));
    for (const auto& v : d.vanishing) vanish = vanish * Poly::linear_root(v);
    for (auto& p : pieces) p = p * vanish;
    return PPoly(d, std::move(bps), std::move(pieces));
  }

  PPoly element(const AlgebraDescriptor& d, int max_cuts, int max_degree) {
    return d.regularity == Regularity::measurable ? measurable(d, max_cuts, max_degree) : continuous(d, max_cuts, max_degree);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hmf
