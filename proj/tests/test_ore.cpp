#include <gtest/gtest.h>

#include <set>

#include "drinfeld/additive_kernel.hpp"
#include "drinfeld/module.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/series.hpp"
#include "drinfeld/tower.hpp"
#include "oracles.hpp"

using namespace drinfeld;
using oracle::Rng;

namespace {

OrePoly<Fe> random_ore(const FieldPtr& k, int deg, Rng& rng) {
  std::vector<Fe> c;
  for (int i = 0; i <= deg; ++i) c.push_back(oracle::random_fe(k, rng));
  return OrePoly<Fe>(c, Fe::zero(k));
}

// sum b_i y^(q^i) with explicit powers, no frob()
Fe eval_by_powers(const OrePoly<Fe>& f, const Fe& y) {
  const std::uint64_t q = y.field()->q();
  Fe acc = Fe::zero(y.field());
  std::uint64_t e = 1;
  for (const Fe& b : f.coeffs()) {
    acc += b.lift_to(y.field()) * y.pow(e);
    e *= q;
  }
  return acc;
}

}  // namespace

TEST(Ore, SquareOfCarlitzGenerator) {
  for (std::uint32_t p : {2u, 3u}) {
    auto fq = make_fq(p, 1);
    PolyFe th = PolyFe::variable(Fe::zero(fq));
    OrePoly<PolyFe> f({th, one_like(th)}, th);
    OrePoly<PolyFe> sq = f * f;
    // theta^2 + (theta + theta^q) tau + tau^2
    OrePoly<PolyFe> want({th * th, th + pow(th, p), one_like(th)}, th);
    EXPECT_EQ(sq, want);
  }
}

TEST(Ore, CommutationRuleAndIdentity) {
  Rng rng(1);
  auto k = extend(make_fq(2, 2), 3);
  for (int it = 0; it < 20; ++it) {
    Fe b = oracle::random_fe(k, rng);
    auto tau = OrePoly<Fe>::tau(b);
    EXPECT_EQ(tau * OrePoly<Fe>::constant(b), OrePoly<Fe>::constant(b.pow(4)) * tau);
    auto f = random_ore(k, 3, rng);
    EXPECT_EQ(f * OrePoly<Fe>::constant(Fe::one(k)), f);
  }
}

TEST(Ore, RingAxiomsAndEvaluationIsComposition) {
  Rng rng(2);
  for (auto [p, e, m] : {std::tuple{2u, 1u, 4u}, std::tuple{3u, 1u, 3u}, std::tuple{2u, 2u, 2u}}) {
    auto k = extend(make_fq(p, e), m);
    for (int it = 0; it < 25; ++it) {
      auto f = random_ore(k, 2, rng), g = random_ore(k, 3, rng), h = random_ore(k, 1, rng);
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      if (!f.is_zero() && !g.is_zero()) EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
      Fe y = oracle::random_fe(k, rng);
      EXPECT_EQ(ore_eval(f * g, y), eval_by_powers(f, eval_by_powers(g, y)));
      EXPECT_TRUE(ore_eval(f, Fe::zero(k)).is_zero());
      Fe z = oracle::random_fe(k, rng);
      EXPECT_EQ(ore_eval(f, y + z), ore_eval(f, y) + ore_eval(f, z));
    }
  }
}

TEST(Ore, EvaluationAtInverseUniformizer) {
  for (std::uint32_t p : {2u, 3u}) {
    auto fq = make_fq(p, 1);
    PolyFe th = PolyFe::variable(Fe::zero(fq)), one = one_like(th);
    OrePoly<PolyFe> f({th, one}, th);
    SeriesA inv_x = SeriesA::monomial(one, -1);
    SeriesA got = ore_eval(f, inv_x);
    SeriesA want = SeriesA::monomial(th, -1) + SeriesA::monomial(one, -static_cast<long>(p));
    EXPECT_TRUE(got.identical(want));
  }
}

TEST(AdditiveKernel, CarlitzAndRankTwo) {
  Rng rng(4);
  for (auto [p, e] : {std::pair{2u, 2u}, std::pair{3u, 1u}, std::pair{2u, 1u}}) {
    auto fq = make_fq(p, e);
    auto k = extend(fq, 2);
    const std::uint64_t q = fq->order();
    Fe theta = oracle::random_nonzero(k, rng);
    auto C = DrinfeldModule<Fe>::carlitz(theta);
    KernelResult r = additive_kernel(C.phi_t());
    EXPECT_EQ(r.points.size(), q);
    EXPECT_EQ(r.basis.size(), 1u);

    auto E = DrinfeldModule<Fe>::make(theta, {oracle::random_fe(k, rng), oracle::random_nonzero(k, rng)});
    KernelResult r2 = additive_kernel(E.phi_t());
    EXPECT_EQ(r2.points.size(), q * q);
    std::set<std::uint64_t> got;
    for (const Fe& y : r2.points) got.insert(y.index());
    // exhaustive root search over the extension that was found, when small
    auto phiK = E.phi_t().map([&](const Fe& c) { return c.lift_to(r2.field); });
    if (r2.field->order() <= (1u << 18)) {
      std::set<std::uint64_t> roots;
      for (const Fe& y : all_elements(r2.field))
        if (ore_eval(phiK, y).is_zero()) roots.insert(y.index());
      EXPECT_EQ(roots, got);
    }
    // stable under Phi_t (which commutes with itself)
    for (const Fe& y : r2.points) EXPECT_TRUE(got.count(ore_eval(phiK, y).index()));
  }
}

TEST(AdditiveKernel, InseparableAndCap) {
  auto k = extend(make_fq(2, 1), 3);
  auto tau = OrePoly<Fe>::tau(Fe::zero(k));
  EXPECT_THROW(additive_kernel(tau), InseparableError);
  KernelResult r = additive_kernel(tau, 12, true);
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_TRUE(r.points[0].is_zero());
  // y + y^32 splits only over F_32, so a cap of 1 must fail
  auto f2 = make_fq(2, 1);
  Fe one = Fe::one(f2);
  OrePoly<Fe> f({one, Fe::zero(f2), Fe::zero(f2), Fe::zero(f2), Fe::zero(f2), one}, one);
  EXPECT_THROW(additive_kernel(f, 1), ResourceCapError);
  EXPECT_EQ(additive_kernel(f, 12).points.size(), 32u);
}
