#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "alextor/braid.hpp"
#include "alextor/max_product.hpp"
#include "alextor/torsion.hpp"

using namespace alextor;

namespace {

ZPoly zp(std::initializer_list<std::pair<long, long>> terms) {
  ZPoly p;
  for (auto [e, c] : terms) p.set(e, BigInt(c));
  return p;
}

constexpr double kGolden2 = 2.618033988749895;   // (3 + sqrt 5)/2
constexpr double kGoldenInv = 0.3819660112501051;

MaxProduct unknot_form() { return MaxProduct(1.0, 0, {{1.0, -1}}); }

}  // namespace

TEST_CASE("l2 form of the unknot is max{1,t}^-1") {
  MaxProduct f = l2_from_alexander(zp({{0, 1}}));
  CHECK(f.equivalent(unknot_form()));
  CHECK(f.str() == "max{1,t}^-1");
  CHECK(f.degree() == -1);
}

TEST_CASE("l2 form of the trefoil is max{1,t}") {
  MaxProduct f = l2_from_alexander(zp({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(f.str() == "max{1,t}");
  CHECK(f.degree() == 1);
  CHECK(f.equivalent(torus_closed_form(2, 3)));
}

TEST_CASE("l2 form of the figure-8 has the golden-ratio bases") {
  MaxProduct f = l2_from_alexander(zp({{0, 1}, {1, -3}, {2, 1}}));
  REQUIRE(f.factors().size() == 3);  // 0.382..., 1 (from the -1 factor), 2.618...
  CHECK(f.factors()[0].base == doctest::Approx(kGoldenInv).epsilon(1e-9));
  CHECK(f.factors()[0].exponent == 1);
  CHECK(f.factors()[1].base == 1.0);
  CHECK(f.factors()[1].exponent == -1);
  CHECK(f.factors()[2].base == doctest::Approx(kGolden2).epsilon(1e-9));
  CHECK(f.degree() == 1);
}

TEST_CASE("torus closed forms") {
  CHECK(torus_closed_form(2, 3).str() == "max{1,t}");
  CHECK(torus_closed_form(3, 7).equivalent(torus_closed_form(4, 5)));
  CHECK(torus_closed_form(3, 7).str() == torus_closed_form(4, 5).str());
  CHECK(torus_closed_form(3, 7).degree() == 11);
  CHECK_THROWS_AS(torus_closed_form(2, 2), std::invalid_argument);
}

TEST_CASE("product structure") {
  MaxProduct tre = torus_closed_form(2, 3);
  CHECK((tre * MaxProduct::one()).equivalent(tre));
  CHECK((tre * tre).degree() == 2);
  CHECK((torus_closed_form(2, 3) * torus_closed_form(2, 5)).degree() == 4);
  MaxProduct sq = torus_closed_form(2, 3) * torus_closed_form(2, 5);
  CHECK(sq.factors().size() == 1);
  CHECK(sq.factors()[0].exponent == 4);
}

TEST_CASE("connected-sum consistency: granny knot") {
  // l2(Delta_{3_1 # 3_1}) = l2(3_1) * l2(3_1) * max{1,t}
  ZPoly t2 = zp({{0, 1}, {1, -1}, {2, 1}});
  MaxProduct lhs = l2_from_alexander(t2 * t2);
  MaxProduct rhs = torus_closed_form(2, 3) * torus_closed_form(2, 3) *
                   MaxProduct(1.0, 0, {{1.0, 1}});
  CHECK(lhs.equivalent(rhs));
}

TEST_CASE("evaluation") {
  CHECK(torus_closed_form(2, 3).eval(1.0) == doctest::Approx(1.0));
  MaxProduct f8 = l2_from_alexander(zp({{0, 1}, {1, -3}, {2, 1}}));
  CHECK(f8.eval(1.0) == doctest::Approx(kGolden2).epsilon(1e-9));
  CHECK_THROWS_AS(f8.eval(0.0), std::domain_error);
  CHECK_THROWS_AS(f8.eval(-2.0), std::domain_error);
  // continuity across breakpoints
  for (const auto& fac : f8.factors()) {
    double e = 1e-10 * std::max(1.0, fac.base);
    CHECK(f8.eval(fac.base - e) == doctest::Approx(f8.eval(fac.base + e)).epsilon(1e-6));
  }
}

TEST_CASE("eval and degree are multiplicative") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> base(0.2, 5.0);
  std::uniform_int_distribution<int> expo(-3, 3);
  std::uniform_real_distribution<double> ts(0.1, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<MaxProduct::Factor> fa{{base(rng), expo(rng) * 2 + 1}},
        fb{{base(rng), expo(rng) * 2 + 1}, {base(rng), 1}};
    MaxProduct f(1.5, 1, fa), g(0.25, -2, fb);
    MaxProduct fg = f * g;
    CHECK(fg.degree() == f.degree() + g.degree());
    double t = ts(rng);
    CHECK(fg.eval(t) == doctest::Approx(f.eval(t) * g.eval(t)).epsilon(1e-12));
  }
}

TEST_CASE("degree ignores the monomial shift") {
  MaxProduct f(2.0, 0, {{0.5, 1}, {3.0, 2}});
  MaxProduct shifted(2.0, 7, {{0.5, 1}, {3.0, 2}});
  CHECK(f.degree() == shifted.degree());
  CHECK(f.equivalent(shifted));
}

TEST_CASE("top and bottom coefficients") {
  CHECK(torus_closed_form(2, 3).coefficients().monic);
  MaxProduct f8 = l2_from_alexander(zp({{0, 1}, {1, -3}, {2, 1}}));
  auto c8 = f8.coefficients();
  CHECK(c8.top == doctest::Approx(1.0));
  CHECK(c8.bottom == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(c8.monic);  // figure-8 is fibered

  MaxProduct f52 = l2_from_alexander(zp({{0, 2}, {1, -3}, {2, 2}}));
  auto c52 = f52.coefficients();
  CHECK(c52.top == doctest::Approx(2.0));
  CHECK_FALSE(c52.monic);
}

TEST_CASE("symmetry under t -> 1/t") {
  auto s_unknot = unknot_form().symmetry_check();
  CHECK(s_unknot.holds);
  CHECK(s_unknot.n == 1);
  CHECK(s_unknot.n_odd);

  auto s_tre = torus_closed_form(2, 3).symmetry_check();
  CHECK(s_tre.holds);
  CHECK(s_tre.n == -1);
  CHECK(s_tre.n_odd);

  MaxProduct f8 = l2_from_alexander(zp({{0, 1}, {1, -3}, {2, 1}}));
  auto s8 = f8.symmetry_check();
  CHECK(s8.holds);
  CHECK(s8.n_odd);

  // numeric cross-check of the identity f(1/t) = t^n f(t)
  for (double t : {0.3, 0.9, 1.7, 4.2}) {
    double lhs = f8.eval(1.0 / t);
    double rhs = std::pow(t, double(s8.n)) * f8.eval(t);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("fibered step consistency") {
  StepReport torus = step_consistency(torus_closed_form(2, 3), {1, 1.0});
  CHECK(torus.consistent);
  CHECK(torus.constancy_radius == doctest::Approx(1.0));

  MaxProduct f8 = l2_from_alexander(zp({{0, 1}, {1, -3}, {2, 1}}));
  StepReport fig8 = step_consistency(f8, {1, kGolden2});
  CHECK(fig8.consistent);
  CHECK(fig8.constancy_radius == doctest::Approx(std::exp(-std::log(kGolden2))).epsilon(1e-8));

  CHECK_THROWS_AS(step_consistency(f8, {0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(step_consistency(f8, {1, 0.5}), std::invalid_argument);
}

TEST_CASE("unknot detection honesty") {
  UnknotReport full = unknot_detect(unknot_form(), true);
  CHECK(full.matches_unknot_form);
  CHECK(full.conclusive);

  UnknotReport tre = unknot_detect(torus_closed_form(2, 3), true);
  CHECK_FALSE(tre.matches_unknot_form);

  // a trivial-Alexander-polynomial knot: same form, but not conclusive
  UnknotReport ab = unknot_detect(l2_from_alexander(zp({{0, 1}})), false);
  CHECK(ab.matches_unknot_form);
  CHECK_FALSE(ab.conclusive);
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(MaxProduct(0.0, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(MaxProduct(1.0, 0, {{-2.0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(l2_from_alexander(zp({{0, 2}})), std::domain_error);  // Delta(1) = 2
  CHECK_THROWS_AS(l2_from_alexander(ZPoly()), std::domain_error);
}

TEST_CASE("base snapping merges cyclotomic clusters exactly") {
  // all torus polynomials give exactly max{1, t^{(p-1)(q-1)-1}} after snapping
  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
    ZPoly delta = alexander_polynomial(torus_presentation(p, q));
    MaxProduct f = l2_from_alexander(delta);
    CHECK(f.equivalent(torus_closed_form(p, q)));
    REQUIRE(f.factors().size() == 1);
    CHECK(f.factors()[0].base == 1.0);  // exact after snapping
    CHECK(f.scale() == 1.0);
  }
}
