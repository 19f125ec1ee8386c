// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "hmf/cli.hpp"
#include "hmf/hmf.hpp"

using corpus::Kind;
using hmf::Index;
using hmf::ModuleVector;
using hmf::PPoly;
using hmf::Rational;

namespace {

const std::vector<corpus::Instance>& instances() {
  static const auto all = corpus::build();
  return all;
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// 1. Residual identity, exact, on the randomized corpus.
Outcome residual_identity() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& inst : instances())
    for (const auto& F : corpus::subsets(inst.vectors.size())) {
      o.require(hmf::residual_identity_check(inst.system, inst.x, F).equal, "identity fails on a corpus instance");
      ++checked;
    }
  o.require(instances().size() >= 100, "corpus has fewer than 100 instances");
  if (o.ok) o.detail = std::to_string(instances().size()) + " systems, " + std::to_string(checked) + " subsets";
  return o;
}

bool subunit(const corpus::Instance& inst) {
  for (const auto& e : inst.vectors)
    if (!hmf::leq(hmf::inner_product(inst.context, e, e), PPoly::one(corpus::linf()))) return false;
  return true;
}

// 2. Finite Bessel on every corpus system with <e_i,e_i> <= 1.
Outcome bessel() {
  Outcome o;
  std::size_t checked = 0, systems = 0;
  for (const auto& inst : instances()) {
    if (!subunit(inst)) continue;
    ++systems;
    for (const auto& F : corpus::subsets(inst.vectors.size())) {
      PPoly B = PPoly::zero(corpus::linf());
      for (Index i : F) {
        const PPoly c = hmf::fourier_coefficient(inst.system, inst.x, i);
        B = B + hmf::adjoint(c) * c;
      }
      o.require(hmf::is_nonneg(hmf::inner_product(inst.context, inst.x, inst.x) - B), "<x,x> - B_F has a negative value");
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(systems) + " systems, " + std::to_string(checked) + " subsets";
  return o;
}

// 3. The orthonormal system that is not closed: exact divergence certificate.
Outcome divergence() {
  Outcome o;
  const auto b = hmf::gallery::build("ons-not-closed", {{"n", 20}});
  const auto& sys = b.main();
  const auto& ctx = b.context;
  const ModuleVector& x = b.vectors.at("x");
  const PPoly one = PPoly::one(ctx.coefficient_algebra());
  PPoly B = PPoly::zero(ctx.coefficient_algebra());
  for (Index n = 1; n <= 20; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    o.require(hmf::gram_classify(sys, n).cls == hmf::GramClass::orthonormal, "not orthonormal" + at);
    const ModuleVector e = sys.at(n);
    o.require(hmf::support_measure(hmf::inner_product(ctx, e, e)) == Rational(1), "support union not of measure 1" + at);
    const ModuleVector r = sub(x, hmf::partial_sum(sys, x, sys.prefix(n)));
    const hmf::Enclosure norm = hmf::vector_norm(ctx, r);
    o.require(norm.is_exact() && norm.lo == Rational(1), "residual norm is not exactly 1" + at);
    const PPoly c = hmf::fourier_coefficient(sys, x, n);
    B = B + hmf::adjoint(c) * c;
    const hmf::Enclosure m = hmf::superlevel_measure(one - B, Rational(1, 2));
    o.require(m.is_exact() && m.lo == Rational::pow2(-static_cast<long>(n)), "superlevel measure is not 2^-n" + at);
  }
  if (o.ok) o.detail = "n = 1..20";
  return o;
}

// 4. Non-uniqueness of decompositions in L-infinity.
Outcome non_uniqueness() {
  Outcome o;
  const auto b = hmf::gallery::build("orthogonal-basis-L∞");
  const PPoly& f1 = b.elements.at("f1");
  const PPoly& f2 = b.elements.at("f2");
  const PPoly one = PPoly::one(f1.descriptor());
  o.require(f1 * one + f2 * one == one, "f1*1 + f2*1 != 1");
  o.require(f1 * f1 + f2 * f2 == one, "f1*f1 + f2*f2 != 1");
  o.require(f1 * one + f2 * one == f1 * f1 + f2 * f2, "the two decompositions differ");
  o.require(!(one == f1), "coefficient families coincide");
  if (o.ok) o.detail = "1 = f1*1 + f2*1 = f1*f1 + f2*f2";
  return o;
}

// 5. Circulant bases: Gram and exact reconstruction.
Outcome circulant() {
  Outcome o;
  hmf::Sampler rng(31);
  for (long n = 1; n <= 8; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const auto b = hmf::gallery::build("circulant", {{"n", n}});
    const auto& sys = b.main();
    const auto& ctx = b.context;
    const auto d = ctx.coefficient_algebra();
    const Index rows = 3 * static_cast<Index>(n);
    for (Index i = 1; i <= rows; ++i)
      for (Index j = i; j <= rows; ++j) {
        const PPoly g = hmf::inner_product(ctx, sys.at(i), sys.at(j));
        o.require(i == j ? g == PPoly::one(d) : g.is_zero(), "Gram entry wrong" + at);
      }
    for (int s = 0; s < 5; ++s) {
      ModuleVector x;
      const Index top = static_cast<Index>(rng.integer(1, static_cast<long>(rows)));
      x.set(top, rng.measurable(d, 2, 2) + PPoly::one(d));
      for (Index j = 1; j < top; ++j)
        if (rng.coin()) x.set(j, rng.measurable(d, 2, 2));
      const Index covered = ((top - 1) / static_cast<Index>(n) + 1) * static_cast<Index>(n);
      const ModuleVector r = sub(x, hmf::partial_sum(sys, x, sys.prefix(covered)));
      o.require(hmf::inner_product(ctx, r, r).is_zero(), "nonzero residual Gram" + at);
    }
  }
  if (o.ok) o.detail = "n = 1..8, 5 vectors each";
  return o;
}

// 6. Optimality: gap formula and delta-perturbation.
Outcome optimality() {
  Outcome o;
  hmf::Sampler rng(37);
  std::size_t checked = 0;
  for (const auto& inst : instances()) {
    if (inst.kind != Kind::orthonormal) continue;
    const auto F = inst.system.prefix(inst.vectors.size());
    hmf::Coefficients fourier, random;
    PPoly expected = PPoly::zero(corpus::linf());
    for (Index i : F) {
      const PPoly c = hmf::fourier_coefficient(inst.system, inst.x, i);
      const PPoly a = rng.measurable(corpus::linf(), 2, 1);
      fourier.emplace(i, c);
      random.emplace(i, a);
      expected = expected + hmf::adjoint(a - c) * (a - c);
    }
    const ModuleVector best = sub(inst.x, hmf::partial_sum(inst.system, inst.x, F));
    const PPoly best_gram = hmf::inner_product(inst.context, best, best);
    ModuleVector combo;
    for (Index i : F) combo = add(combo, act(inst.context, inst.system.at(i), random.at(i)));
    const ModuleVector alt = sub(inst.x, combo);
    o.require(hmf::inner_product(inst.context, alt, alt) - best_gram == expected, "gap differs from sum (a_i - <e_i,x>)^2");
    o.require(hmf::optimality_gap(inst.system, inst.x, F, random).gap == expected, "library gap disagrees");
    for (const Rational& delta : {Rational(1, 2), Rational(1, 3)}) {
      const ModuleVector bumped = sub(best, act(inst.context, inst.system.at(F.front()), delta * PPoly::one(corpus::linf())));
      o.require(hmf::inner_product(inst.context, bumped, bumped) - best_gram == (delta * delta) * PPoly::one(corpus::linf()),
                "perturbation by " + delta.str() + " does not raise the residual by delta^2");
    }
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " orthonormal systems";
  return o;
}

// 7. Net monotonicity and domination for systems with <e_i,e_i> <= 1.
Outcome nets() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& inst : instances()) {
    if (!subunit(inst)) continue;
    const auto sets = corpus::subsets(inst.vectors.size());
    for (const auto& F : sets) {
      const hmf::NetTerms t = hmf::net_terms(inst.system, inst.x, F);
      o.require(hmf::is_nonneg(t.a - (t.b - t.c)), "A_F < B_F - C_F");
      for (const auto& G : sets) {
        if (!std::includes(G.begin(), G.end(), F.begin(), F.end())) continue;
        o.require(hmf::is_nonneg(hmf::net_terms(inst.system, inst.x, G).a - t.a), "A_G < A_F for F in G");
        ++pairs;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " nested pairs";
  return o;
}

// 8. Spectral zero projection and annihilators.
Outcome spectral() {
  Outcome o;
  const auto b = hmf::gallery::build("orthogonal-basis-L∞");
  const PPoly& f2 = b.elements.at("f2");
  const auto p = hmf::spectral_zero_projection(f2);
  o.require(p.has_value(), "no projection for f2");
  if (p) {
    o.require(!p->is_zero(), "projection is zero");
    o.require((f2 * *p).is_zero(), "f2 * b != 0");
    o.require(*p * *p == *p, "b^2 != b");
  }
  const auto linf = hmf::AlgebraDescriptor::measurable(Rational(0), Rational(1));
  o.require(!hmf::spectral_zero_projection(PPoly::identity(linf)).has_value(), "projection exists for a(x) = x");
  const auto c01 = hmf::AlgebraDescriptor::continuous(Rational(0), Rational(1));
  hmf::Sampler rng(41);
  o.require(!hmf::annihilator(PPoly::identity(c01)).has_value(), "annihilator exists for a(x) = x");
  for (int s = 0; s < 50; ++s) {
    const PPoly a = rng.continuous(c01, 3, 2);
    if (!hmf::zero_set(a).plateaus.empty()) continue;
    o.require(!hmf::annihilator(a).has_value(), "annihilator exists for a plateau-free element");
  }
  if (o.ok) o.detail = "b = " + p->str();
  return o;
}

// 9. C0(0,1]: f(x) = x is not f g, but f g_k approximates f at rate 1/(4k).
Outcome c0_example() {
  Outcome o;
  const auto b = hmf::gallery::build("c0-c1-without-c2");
  const PPoly& f = b.elements.at("f");
  const hmf::Division div = hmf::divide_exact(f, f);
  o.require(!div, "f divides itself in C0(0,1]");
  o.require(div.failure == hmf::DivisionFailure::quotient_not_member && div.reason.find("vanish") != std::string::npos,
            "failure is not the vanishing constraint: " + div.reason);
  for (long k = 1; k <= 64; k *= 2) {
    const PPoly& g = b.elements.at("g_" + std::to_string(k));
    o.require(static_cast<bool>(hmf::is_member(g.data(), f.descriptor())), "g_k not in C0(0,1]");
    const hmf::Enclosure e = hmf::sup_norm(f - f * g);
    o.require(e.is_exact() && e.lo == Rational(1, 4 * k), "||f - f g_k|| != 1/(4k) at k=" + std::to_string(k));
  }
  if (o.ok) o.detail = "reason: " + div.reason;
  return o;
}

// 10. Branched cover: orthogonality, continuity, completeness spot-check.
Outcome branched_cover() {
  Outcome o;
  const auto b = hmf::gallery::build("branched-cover");
  const auto& ctx = b.context;
  const auto& cover = ctx.cover_space();
  const auto& sys = b.main();
  for (Index i = 1; i <= 3; ++i)
    for (Index j = 1; j <= 3; ++j) {
      const PPoly g = hmf::inner_product(ctx, sys.at(i), sys.at(j));
      if (i != j) o.require(g.is_zero(), "<f_i, f_j> != 0");
      if (i == j) o.require(static_cast<bool>(hmf::is_member(g.data(), cover.base_algebra())), "<f_i, f_i> not in C(X)");
    }
  hmf::Sampler rng(43);
  int orthogonal_seen = 0;
  for (int s = 0; s < 60; ++s) {
    // random glued sheets; every third sample is zero on one side
    ModuleVector g;
    const Rational glued = s % 2 ? Rational(0) : rng.rational(2, 4);
    for (const auto& br : cover.branches()) {
      const auto d = cover.sheet_algebra(br);
      PPoly h = s % 3 == 0 && br.label != 1 ? PPoly::zero(d) : rng.continuous(d, 2, 1);
      h = h + PPoly::constant(d, glued - h(cover.branch_point()));
      g.set(br.label, h);
    }
    if (s % 5 == 0) g = ModuleVector();
    bool orthogonal = true;
    for (Index i = 1; i <= 3; ++i) orthogonal = orthogonal && hmf::inner_product(ctx, sys.at(i), g).is_zero();
    if (orthogonal) {
      ++orthogonal_seen;
      o.require(g.is_zero(), "nonzero cover element orthogonal to all f_i");
    }
  }
  const auto report = hmf::gallery::verify("branched-cover");
  o.require(report.passed(), "gallery suite fails");
  if (o.ok) o.detail = "60 witnesses, " + std::to_string(orthogonal_seen) + " orthogonal (all zero)";
  return o;
}

// 11. The non-extendable orthonormal system.
Outcome nonextendable() {
  Outcome o;
  const auto r = hmf::gallery::verify("nonextendable-ons");
  for (const char* name : {"gram-orthonormal", "witness-refutes-completeness", "extension-obstruction"}) {
    const hmf::Check* c = r.find(name);
    o.require(c != nullptr && c->passed, std::string(name) + " fails");
  }
  o.require(r.passed(), "suite fails");
  if (o.ok) o.detail = std::to_string(r.checks.size()) + " checks";
  return o;
}

// 12. Two runs of `verify all` give byte-identical JSON.
Outcome determinism() {
  Outcome o;
  auto once = [&] {
    const char* argv[] = {"hmf", "verify", "all", "--format", "json"};
    std::ostringstream out, err;
    const int code = hmf::cli::run(5, argv, out, err);
    o.require(code == 0, "verify all exit code " + std::to_string(code) + ": " + err.str());
    return out.str();
  };
  const std::string a = once(), b = once();
  o.require(!a.empty() && a == b, "outputs differ");
  if (o.ok) o.detail = std::to_string(a.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"residual identity", residual_identity},
      {"finite Bessel inequality", bessel},
      {"divergence certificate", divergence},
      {"non-uniqueness", non_uniqueness},
      {"circulant bases", circulant},
      {"optimality", optimality},
      {"net monotonicity", nets},
      {"spectral zero projection", spectral},
      {"C0(0,1] without (c2)", c0_example},
      {"branched cover", branched_cover},
      {"non-extendable system", nonextendable},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " (" << o.detail << ", "
              << ms << " ms)\n";
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << "\n";
  return failed ? 1 : 0;
}
