#include <gmpxx.h>
#include <gtest/gtest.h>

#include "hmf/poly.hpp"
#include "hmf/random.hpp"

using hmf::Poly;
using hmf::Rational;

namespace {

Poly lin(long c0, long c1) { return Poly({Rational(c0), Rational(c1)}); }

// Direct evaluation with GMP, bypassing Poly entirely.
mpq_class eval_oracle(const std::vector<mpq_class>& c, const mpq_class& t) {
  mpq_class acc = 0, power = 1;
  for (const auto& k : c) {
    acc += k * power;
    power *= t;
  }
  return acc;
}

}  // namespace

TEST(Poly, TrivialArithmetic) {
  EXPECT_EQ(Poly::x() * Poly::x(), Poly({Rational(0), Rational(0), Rational(1)}));
  EXPECT_EQ(Poly::x() + lin(1, -1), Poly::constant(Rational(1)));
  EXPECT_TRUE((Poly::x() - Poly::x()).is_zero());
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_EQ((Poly::x() - Poly::x()).degree(), -1);
}

TEST(Poly, SquareAgreesWithGridOracle) {
  const Poly sq = lin(-1, 2) * lin(-1, 2);
  EXPECT_EQ(sq, Poly({Rational(1), Rational(-4), Rational(4)}));
  EXPECT_EQ(sq.str(), "4x^2 - 4x + 1");
  for (long k = 0; k <= 1000; ++k) {
    mpq_class t(k, 1000);
    t.canonicalize();
    const mpq_class expected = (2 * t - 1) * (2 * t - 1);
    EXPECT_EQ(sq(Rational(t)).raw(), expected);
  }
}

TEST(Poly, DegreeProperties) {
  hmf::Sampler rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = rng.poly(4, 5, 6), q = rng.poly(4, 5, 6);
    EXPECT_LE((p + q).degree(), std::max(p.degree(), q.degree()));
    EXPECT_LE((p - q).degree(), std::max(p.degree(), q.degree()));
    if (!p.is_zero() && !q.is_zero()) {
      EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
    }
    std::vector<mpq_class> pc, qc;
    for (const auto& c : p.coeffs()) pc.push_back(c.raw());
    for (const auto& c : q.coeffs()) qc.push_back(c.raw());
    for (long k = -3; k <= 3; ++k) {
      mpq_class t(k, 2);
      t.canonicalize();
      EXPECT_EQ((p * q)(Rational(t)).raw(), eval_oracle(pc, t) * eval_oracle(qc, t));
      EXPECT_EQ((p - q)(Rational(t)).raw(), eval_oracle(pc, t) - eval_oracle(qc, t));
    }
  }
}

TEST(Poly, DivmodReconstructs) {
  hmf::Sampler rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = rng.poly(5, 5, 4), d = rng.poly(3, 5, 4);
    if (d.is_zero()) continue;
    const auto [q, r] = p.divmod(d);
    EXPECT_EQ(q * d + r, p);
    EXPECT_LT(r.degree(), d.degree());
  }
  EXPECT_THROW(Poly::x().divmod(Poly()), hmf::Error);
}

TEST(Poly, DerivativeAndGcd) {
  const Poly p = lin(-1, 1) * lin(-1, 1) * lin(2, 1);  // (x-1)^2 (x+2)
  EXPECT_EQ(p.derivative(), Rational(3) * lin(-1, 1) * lin(1, 1));
  EXPECT_EQ(hmf::gcd(p, p.derivative()), lin(-1, 1));
  EXPECT_EQ(hmf::square_free_part(p), (lin(-1, 1) * lin(2, 1)).monic());
  EXPECT_TRUE(hmf::gcd(Poly(), Poly()).is_zero());
}

TEST(Poly, Printing) {
  EXPECT_EQ(Poly().str(), "0");
  EXPECT_EQ(Poly::x().str(), "x");
  EXPECT_EQ(Poly({Rational(0), Rational(-1, 2)}).str("y"), "-1/2y");
}
