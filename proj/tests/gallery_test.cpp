#include <gtest/gtest.h>

#include "hmf/gallery.hpp"

using hmf::PPoly;
using hmf::Rational;
namespace gallery = hmf::gallery;

TEST(Gallery, EveryExamplePasses) {
  for (const auto& id : gallery::ids()) {
    const auto r = gallery::verify(id);
    EXPECT_TRUE(r.passed()) << hmf::to_text(r);
    EXPECT_FALSE(r.checks.empty());
    EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                               [](const hmf::Check& a, const hmf::Check& b) { return a.name < b.name; }));
  }
}

TEST(Gallery, ParametersAcrossRanges) {
  for (long n = 1; n <= 8; ++n) EXPECT_TRUE(gallery::verify("circulant", {{"n", n}}).passed()) << n;
  for (long n : {1L, 2L, 5L, 20L}) EXPECT_TRUE(gallery::verify("ons-not-closed", {{"n", n}}).passed()) << n;
  for (long n : {1L, 3L, 64L}) EXPECT_TRUE(gallery::verify("c0-c1-without-c2", {{"n", n}}).passed()) << n;
  EXPECT_TRUE(gallery::verify("nonextendable-ons", {{"n", 2}}).passed());
}

TEST(Gallery, Errors) {
  try {
    gallery::build("no-such-id");
    FAIL();
  } catch (const hmf::Error& e) {
    EXPECT_EQ(e.code(), hmf::ErrorCode::UnknownId);
  }
  try {
    gallery::build("circulant", {{"n", 0}});
    FAIL();
  } catch (const hmf::Error& e) {
    EXPECT_EQ(e.code(), hmf::ErrorCode::BadParams);
  }
  EXPECT_THROW(gallery::build("circulant", {{"size", 2}}), hmf::Error);
  EXPECT_EQ(gallery::canonical_id("orthogonal-basis-Linf"), "orthogonal-basis-L∞");
}

TEST(Gallery, BuildObjects) {
  const auto ob = gallery::build("orthogonal-basis-L∞");
  const auto d = hmf::AlgebraDescriptor::measurable(Rational(0), Rational(1));
  EXPECT_EQ(ob.elements.at("f1"), PPoly::indicator(d, Rational(0), Rational(1, 2)));
  EXPECT_EQ(ob.elements.at("f2"), PPoly::indicator(d, Rational(1, 2), Rational(1)));

  const auto c1 = gallery::build("circulant", {{"n", 1}});
  for (hmf::Index i = 1; i <= 4; ++i) EXPECT_EQ(c1.main().at(i), hmf::basis_vector(c1.context, i));

  const auto bc = gallery::build("branched-cover");
  const auto& cover = bc.context.cover_space();
  for (hmf::Index s = 1; s <= 3; ++s) {
    const auto v = bc.main().at(s);
    ASSERT_EQ(v.support(), std::vector<hmf::Index>{s});
    // nonzero on the sheet except at the branch point
    const auto z = hmf::zero_set(*v.entry(s));
    ASSERT_EQ(z.points.size(), 1U);
    EXPECT_EQ(z.points[0].lo, cover.branch_point());
  }

  const auto ons = gallery::build("ons-not-closed");
  const auto e3 = ons.main().at(3);
  EXPECT_EQ(*e3.entry(1), PPoly::indicator(d, Rational(3, 4), Rational(7, 8)));
  EXPECT_EQ(*e3.entry(4), PPoly::indicator(d, Rational(7, 8), Rational(1)));
  EXPECT_EQ(*e3.entry(3), PPoly::indicator(d, Rational(0), Rational(3, 4)));
}

TEST(Gallery, DeterministicReports) {
  for (const auto& id : gallery::ids())
    EXPECT_EQ(hmf::to_json(gallery::verify(id)).dump(), hmf::to_json(gallery::verify(id)).dump());
}

TEST(Gallery, DivergenceValues) {
  const auto r = gallery::verify("ons-not-closed", {{"n", 6}});
  const auto* m = r.find("strong-convergence-proxy");
  ASSERT_NE(m, nullptr);
  ASSERT_EQ(m->witness.size(), 6U);
  EXPECT_EQ(m->witness[5].second, "1/64");
  const auto* c = r.find("approximation-rate");
  EXPECT_EQ(c, nullptr);
}
