#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alextor/mahler.hpp"

using namespace alextor;

namespace {

ZPoly zp(std::initializer_list<std::pair<long, long>> terms) {
  ZPoly p;
  for (auto [e, c] : terms) p.set(e, BigInt(c));
  return p;
}

constexpr double kGolden2 = 2.618033988749895;  // (3 + sqrt 5) / 2

ZPoly random_nonzero_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(1, max_deg);
  int d = deg(rng);
  ZPoly p;
  for (int e = 0; e <= d; ++e) p.set(e, BigInt(coeff(rng)));
  while (!p.has_term(0)) p.set(0, BigInt(coeff(rng)));
  while (!p.has_term(d)) p.set(d, BigInt(coeff(rng)));
  return p;
}

}  // namespace

TEST_CASE("roots of t^2 - 3t + 1 are (3 +- sqrt 5)/2") {
  auto roots = poly_roots(zp({{0, 1}, {1, -3}, {2, 1}}));
  REQUIRE(roots.size() == 2);
  double lo = std::abs(roots[0]), hi = std::abs(roots[1]);
  if (lo > hi) std::swap(lo, hi);
  CHECK(lo == doctest::Approx(0.3819660113).epsilon(1e-9));
  CHECK(hi == doctest::Approx(2.6180339887).epsilon(1e-9));
}

TEST_CASE("roots of t^2 - t + 1 are primitive 6th roots of unity") {
  auto roots = poly_roots(zp({{0, 1}, {1, -1}, {2, 1}}));
  REQUIRE(roots.size() == 2);
  for (const Cplx& r : roots) {
    CHECK(std::abs(r) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(std::pow(r, 6) - Cplx(1, 0)) < 1e-8);
  }
}

TEST_CASE("t - 1 has the single root 1; count always equals the span") {
  auto roots = poly_roots(zp({{0, -1}, {1, 1}}));
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0] - Cplx(1, 0)) < 1e-12);

  // repeated roots appear with multiplicity
  ZPoly sq = zp({{0, 1}, {1, -1}, {2, 1}}) * zp({{0, 1}, {1, -1}, {2, 1}});
  CHECK(poly_roots(sq).size() == 4);
}

TEST_CASE("root count, product and leading coefficient relations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ZPoly p = random_nonzero_poly(rng, 6);
    auto roots = poly_roots(p);
    CHECK(long(roots.size()) == p.degree().value);
    Cplx prod(1, 0);
    for (const Cplx& r : roots) prod *= r;
    double lead = std::abs(ring<BigInt>::to_double(p.leading_coeff()));
    double trail = std::abs(ring<BigInt>::to_double(p.trailing_coeff()));
    CHECK(std::abs(prod) * lead == doctest::Approx(trail).epsilon(1e-8));
  }
}

TEST_CASE("mahler measure of the named examples") {
  CHECK(mahler(zp({{0, 1}, {1, -1}, {2, 1}})) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(mahler(zp({{0, 1}, {1, -3}, {2, 1}})) == doctest::Approx(kGolden2).epsilon(1e-9));
  CHECK(mahler(zp({{0, -1}, {1, 2}})) == doctest::Approx(2.0).epsilon(1e-12));  // 2t - 1
  CHECK(mahler(zp({{0, 7}})) == doctest::Approx(7.0));  // constants: |c|
}

TEST_CASE("mahler is multiplicative") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    ZPoly p = random_nonzero_poly(rng, 6);
    ZPoly q = random_nonzero_poly(rng, 6);
    double mp = mahler(p), mq = mahler(q), mpq = mahler(p * q);
    CHECK(std::abs(mpq - mp * mq) <= 1e-8 * mp * mq);
  }
}

TEST_CASE("mahler is a unit and inversion invariant") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    ZPoly p = random_nonzero_poly(rng, 6);
    double m = mahler(p);
    CHECK(std::abs(mahler(p.shifted(3)) - m) <= 1e-8 * m);        // *t^3
    CHECK(std::abs(mahler(-p) - m) <= 1e-8 * m);                  // *-1
    CHECK(std::abs(mahler(p.reciprocal()) - m) <= 1e-8 * m);      // t -> 1/t
  }
}

TEST_CASE("unit-circle snapping collapses near-cyclotomic moduli") {
  CHECK(snap_modulus(1.0 + 5e-9) == 1.0);
  CHECK(snap_modulus(1.0 - 5e-9) == 1.0);
  CHECK(snap_modulus(1.1) == 1.1);
}
