#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alextor/braid.hpp"
#include "alextor/pd.hpp"
#include "alextor/torsion.hpp"

using namespace alextor;

namespace {

const char* kTrefoilPD = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";

ZPoly zp(std::initializer_list<std::pair<long, long>> terms) {
  ZPoly p;
  for (auto [e, c] : terms) p.set(e, BigInt(c));
  return p;
}

}  // namespace

TEST_CASE("braid grammar accepts both token styles but not mixed") {
  BraidWord b = parse_braid("s1 s1 s1");
  CHECK(b.strands == 2);
  CHECK(b.letters == std::vector<int>{1, 1, 1});
  BraidWord c = parse_braid("1 -2 1 -2");
  CHECK(c.strands == 3);
  CHECK(c.letters == std::vector<int>{1, -2, 1, -2});
  CHECK(parse_braid("S2 s1").letters == std::vector<int>{-2, 1});
  CHECK_THROWS_AS(parse_braid("s1 -2 s1 -2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("s0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid(""), std::invalid_argument);
}

TEST_CASE("closure must be a knot, not a link") {
  CHECK_THROWS_AS(parse_braid("1 1"), std::invalid_argument);   // 2-component closure
  CHECK_NOTHROW(parse_braid("s1 s2"));                          // 3-cycle: unknot
  CHECK(parse_braid("s1 s2").closure_is_knot());
}

TEST_CASE("braid presentations satisfy the presentation invariants") {
  for (const char* word : {"1 1 1", "1 -2 1 -2", "1 1 1 1 1", "1 1 2 -1 -3 2 -3"}) {
    GroupPresentation p = braid_presentation(parse_braid(word));
    CHECK_NOTHROW(p.validate());
    CHECK(p.relators.size() + 1 == p.generators.size());
    for (long w : p.weights) CHECK(w == 1);
  }
}

TEST_CASE("Artin action composed with its inverse is the identity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord b;
    b.strands = 2 + long(rng() % 3);
    int len = 1 + int(rng() % 8);
    for (int i = 0; i < len; ++i) {
      int g = 1 + int(rng() % (b.strands - 1));
      b.letters.push_back(rng() % 2 ? g : -g);
    }
    auto fwd = artin_images(b);
    auto bwd = artin_images_inverse(b);
    for (long k = 0; k < b.strands; ++k) {
      CHECK(substitute(bwd[size_t(k)], fwd) == Word{int(k) + 1});
      CHECK(substitute(fwd[size_t(k)], bwd) == Word{int(k) + 1});
    }
  }
}

TEST_CASE("pd parsing validates arc labels") {
  PDCode code = parse_pd(kTrefoilPD);
  CHECK(code.crossings.size() == 3);
  // an arc label occurring three times
  CHECK_THROWS_AS(parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pd(""), std::invalid_argument);
}

TEST_CASE("trefoil pd gives a deficiency-one Wirtinger presentation") {
  GroupPresentation p = pd_to_wirtinger(parse_pd(kTrefoilPD));
  CHECK(p.generators.size() == 3);
  CHECK(p.relators.size() == 2);
  for (const Word& r : p.relators) {
    CHECK(r.size() == 4);  // w x w^-1 y^-1
    CHECK(weight_sum(r, p.weights) == 0);
  }
}

TEST_CASE("single-crossing reducible code is the unknot") {
  GroupPresentation p = pd_to_wirtinger(parse_pd("X(1,2,2,1)"));
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.empty());
  CHECK(alexander_polynomial(p) == zp({{0, 1}}));
}

TEST_CASE("braid and pd front ends agree on the trefoil Alexander polynomial") {
  ZPoly from_braid = alexander_polynomial(braid_presentation(parse_braid("1 1 1")));
  ZPoly from_pd = alexander_polynomial(pd_to_wirtinger(parse_pd(kTrefoilPD)));
  CHECK(from_braid == from_pd);
  CHECK(from_braid == zp({{0, 1}, {1, -1}, {2, 1}}));
}

TEST_CASE("torus presentations") {
  GroupPresentation p = torus_presentation(2, 3);
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  CHECK(p.weights == std::vector<long>{3, 2});
  CHECK(p.relators.size() == 1);
  CHECK(p.relators[0] == Word{1, 1, -2, -2, -2});
  CHECK_THROWS_AS(torus_presentation(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(torus_presentation(1, 5), std::invalid_argument);
  // degree (p-1)(q-1) downstream
  CHECK(alexander_polynomial(torus_presentation(3, 7)).degree() == Degree::of(12));
}

TEST_CASE("connected sums") {
  GroupPresentation unknot;
  unknot.generators = {"u"};
  unknot.weights = {1};
  GroupPresentation uu = connected_sum(unknot, unknot);
  CHECK(alexander_polynomial(uu) == zp({{0, 1}}));

  GroupPresentation tre = braid_presentation(parse_braid("1 1 1"));
  GroupPresentation granny = connected_sum(tre, tre);
  ZPoly t2 = zp({{0, 1}, {1, -1}, {2, 1}});
  CHECK(alexander_polynomial(granny) == t2 * t2);

  GroupPresentation fig8 = braid_presentation(parse_braid("1 -2 1 -2"));
  ZPoly d8 = alexander_polynomial(fig8);
  CHECK(d8 == zp({{0, -1}, {1, 3}, {2, -1}}));  // Delta(1) = +1 representative
  CHECK(alexander_polynomial(connected_sum(tre, fig8)) == t2 * d8);

  // no weight-1 meridian available on either side
  GroupPresentation torus = torus_presentation(2, 3);
  CHECK_THROWS_AS(connected_sum(torus, torus), std::invalid_argument);
}

TEST_CASE("presentation JSON round-trip is bit-exact") {
  GroupPresentation p = braid_presentation(parse_braid("1 -2 1 -2"));
  std::string j1 = presentation_to_json(p);
  GroupPresentation q = presentation_from_json(j1);
  std::string j2 = presentation_to_json(q);
  CHECK(j1 == j2);
  CHECK(p.generators == q.generators);
  CHECK(p.relators == q.relators);
  CHECK(p.weights == q.weights);
  // compact single-letter style parses too
  GroupPresentation c = presentation_from_json(
      R"({"generators":["a","b"],"relators":["abAB"],"weights":[1,-1]})");
  CHECK(c.relators[0] == Word{1, 2, -1, -2});
}

TEST_CASE("presentation invariants are enforced") {
  GroupPresentation bad;
  bad.generators = {"a", "b"};
  bad.weights = {2, 2};  // gcd != 1
  bad.relators = {Word{1, -2}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  GroupPresentation bad2;
  bad2.generators = {"a", "b"};
  bad2.weights = {1, 1};
  bad2.relators = {Word{1, 1, -2}};  // abelianizes to 1, not 0
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);

  GroupPresentation bad3;
  bad3.generators = {"a", "b", "c"};
  bad3.weights = {1, 1, 1};
  bad3.relators = {Word{1, -2}};  // deficiency two
  CHECK_THROWS_AS(bad3.validate(), std::invalid_argument);
}
