#include <gtest/gtest.h>

#include "hmf/module.hpp"
#include "hmf/random.hpp"

using hmf::AlgebraDescriptor;
using hmf::Index;
using hmf::ModuleContext;
using hmf::ModuleVector;
using hmf::Poly;
using hmf::PPoly;
using hmf::Rational;

namespace {

const AlgebraDescriptor kLinf = AlgebraDescriptor::measurable(Rational(0), Rational(1));
const AlgebraDescriptor kC0 = AlgebraDescriptor::continuous(Rational(0), Rational(1), {Rational(0)});

ModuleVector random_vector(hmf::Sampler& rng, const AlgebraDescriptor& d, Index dim) {
  ModuleVector x;
  for (Index j = 1; j <= dim; ++j)
    if (rng.coin()) x.set(j, rng.element(d, 2, 2));
  return x;
}

// Glued cover element: sheet polynomials agreeing at the branch point.
ModuleVector random_cover_element(hmf::Sampler& rng, const ModuleContext& ctx) {
  const auto& c = ctx.cover_space();
  const Rational glued = rng.coin() ? Rational(0) : rng.rational(2, 3);
  ModuleVector g;
  for (const auto& b : c.branches()) {
    Poly p = rng.poly(2, 2, 3);
    p = p + Poly::constant(glued - p(c.branch_point()));
    g.set(b.label, PPoly::polynomial(c.sheet_algebra(b), p));
  }
  return g;
}

}  // namespace

TEST(Module, SesquilinearityAndPositivityFree) {
  hmf::Sampler rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraDescriptor& d = trial % 2 ? kLinf : kC0;
    const auto ctx = ModuleContext::free(d);
    const ModuleVector x = random_vector(rng, d, 4), y = random_vector(rng, d, 4), z = random_vector(rng, d, 4);
    const PPoly a = rng.element(d, 2, 1);
    EXPECT_EQ(inner_product(ctx, x, act(ctx, y, a)), inner_product(ctx, x, y) * a);
    EXPECT_EQ(inner_product(ctx, add(x, y), z), inner_product(ctx, x, z) + inner_product(ctx, y, z));
    EXPECT_EQ(inner_product(ctx, x, y), hmf::adjoint(inner_product(ctx, y, x)));
    const PPoly sq = inner_product(ctx, x, x);
    EXPECT_TRUE(hmf::is_nonneg(sq));
    EXPECT_EQ(sq.is_zero(), x.is_zero());
  }
}

TEST(Module, CoverInnerProductIsContinuousOnBase) {
  const auto ctx = ModuleContext::cover(hmf::CoverSpace::three_sheet());
  hmf::Sampler rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const ModuleVector f = random_cover_element(rng, ctx), g = random_cover_element(rng, ctx);
    const PPoly ip = inner_product(ctx, f, g);
    EXPECT_TRUE(hmf::is_member(ip.data(), ctx.cover_space().base_algebra()));
    // fiber average at a point above the branch point
    const Rational t(1, 3);
    auto at = [&](const ModuleVector& v, Index sheet, const Rational& s) { return hmf::entry_or_zero(ctx, v, sheet)(s); };
    const Rational expected = (at(f, 2, t) * at(g, 2, t) + at(f, 3, t) * at(g, 3, t)) / Rational(2);
    EXPECT_EQ(ip(t), expected);
    EXPECT_EQ(ip(Rational(-1, 2)), at(f, 1, Rational(-1, 2)) * at(g, 1, Rational(-1, 2)));
    const PPoly a = PPoly::polynomial(ctx.coefficient_algebra(), rng.poly(2, 2, 3));
    EXPECT_EQ(inner_product(ctx, f, act(ctx, g, a)), ip * a);
    EXPECT_TRUE(hmf::is_nonneg(inner_product(ctx, f, f)));
  }
}

TEST(Module, CoverDisjointSheetsAreOrthogonal) {
  const auto ctx = ModuleContext::cover(hmf::CoverSpace::three_sheet());
  const auto& c = ctx.cover_space();
  const ModuleVector f2 = ModuleVector().set(2, PPoly::identity(c.sheet_algebra(*c.find(2))));
  const ModuleVector f3 = ModuleVector().set(3, PPoly::identity(c.sheet_algebra(*c.find(3))));
  EXPECT_TRUE(inner_product(ctx, f2, f3).is_zero());
  EXPECT_EQ(c.fiber_count(Rational(0)), 1U);
  EXPECT_EQ(c.fiber_count(Rational(-1)), 1U);
  EXPECT_EQ(c.fiber_count(Rational(1, 2)), 2U);
}

TEST(Module, ValidationErrors) {
  const auto ctx = ModuleContext::free(kLinf);
  const ModuleVector wrong = ModuleVector().set(1, PPoly::identity(kC0));
  try {
    hmf::validate(ctx, wrong);
    FAIL();
  } catch (const hmf::Error& e) {
    EXPECT_EQ(e.code(), hmf::ErrorCode::ContextMismatch);
  }
  const auto cover = ModuleContext::cover(hmf::CoverSpace::three_sheet());
  const auto& c = cover.cover_space();
  const ModuleVector torn = ModuleVector().set(2, PPoly::one(c.sheet_algebra(*c.find(2))));
  EXPECT_THROW(hmf::validate(cover, torn), hmf::Error);
  EXPECT_THROW(cover.entry_algebra(7), hmf::Error);
  EXPECT_THROW(hmf::basis_vector(ModuleContext::free(kC0), 1), hmf::Error);
}

TEST(Module, CoverSpaceValidation) {
  using hmf::Branch;
  EXPECT_THROW(hmf::CoverSpace(Rational(0), Rational(1), Rational(1), {}), hmf::Error);
  EXPECT_THROW(hmf::CoverSpace(Rational(-1), Rational(1), Rational(0), {{1, {Rational(-1), Rational(0)}}}), hmf::Error);
  EXPECT_THROW(hmf::CoverSpace(Rational(-1), Rational(1), Rational(0),
                               {{1, {Rational(-1), Rational(0)}}, {1, {Rational(0), Rational(1)}}}),
               hmf::Error);
}

TEST(Module, NormOfBasisVector) {
  const auto ctx = ModuleContext::free(kLinf);
  const auto e = hmf::vector_norm(ctx, hmf::basis_vector(ctx, 3));
  EXPECT_TRUE(e.is_exact());
  EXPECT_EQ(e.lo, Rational(1));
}
