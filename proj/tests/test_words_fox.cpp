#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alextor/fox.hpp"

using namespace alextor;

namespace {

Word random_reduced_word(std::mt19937_64& rng, int max_len, int alphabet) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> gen(1, alphabet);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w;
  int target = len(rng);
  while (int(w.size()) < target) {
    int letter = gen(rng) * (sign(rng) ? 1 : -1);
    if (!w.empty() && w.back() == -letter) continue;
    w.push_back(letter);
  }
  return w;
}

}  // namespace

TEST_CASE("free reduction and inverses") {
  CHECK(reduce({1, -1}) == Word{});
  CHECK(reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(concat({1, 2}, {-2, 3}) == Word{1, 3});
  CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(is_reduced({1, 2, -1}));
  CHECK_FALSE(is_reduced({1, -1}));
}

TEST_CASE("fox derivative base cases") {
  CHECK(fox_derivative({1}, 1) == GroupRingElement::one());
  // d(x^-1)/dx = -x^-1
  GroupRingElement e = fox_derivative({-1}, 1);
  GroupRingElement want;
  want.add_term({-1}, -1);
  CHECK(e == want);
  // d(xyx^-1)/dx = 1 - xyx^-1
  GroupRingElement d = fox_derivative({1, 2, -1}, 1);
  GroupRingElement expect = GroupRingElement::one();
  expect.add_term({1, 2, -1}, -1);
  CHECK(d == expect);
  // d(x^3)/dx = 1 + x + x^2
  GroupRingElement c = fox_derivative({1, 1, 1}, 1);
  GroupRingElement cubic = GroupRingElement::one();
  cubic.add_term({1}, 1);
  cubic.add_term({1, 1}, 1);
  CHECK(c == cubic);
}

TEST_CASE("fundamental identity: sum (dw/dx_i)(x_i - 1) = w - 1 on 500 random words") {
  std::mt19937_64 rng(1234);
  const int alphabet = 4;
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_reduced_word(rng, 20, alphabet);
    GroupRingElement sum;
    for (int g = 1; g <= alphabet; ++g) {
      GroupRingElement d = fox_derivative(w, g);
      GroupRingElement xm1 = GroupRingElement::word({g}) - GroupRingElement::one();
      sum = sum + d * xm1;
    }
    GroupRingElement expect = GroupRingElement::word(w) - GroupRingElement::one();
    CHECK(sum == expect);
  }
}

TEST_CASE("product rule matches direct computation") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_reduced_word(rng, 10, 3);
    Word v = random_reduced_word(rng, 10, 3);
    for (int g = 1; g <= 3; ++g) {
      GroupRingElement lhs = fox_derivative(concat(u, v), g);
      GroupRingElement rhs =
          fox_derivative(u, g) + GroupRingElement::word(u) * fox_derivative(v, g);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("specialize is the ring map g -> t^phi(g) alpha(g)") {
  // 1 - x with the trivial 1-dim representation: 1 - t
  GroupRingElement e = GroupRingElement::one() - GroupRingElement::word({1});
  std::vector<Mat<BigInt>> img{Mat<BigInt>(1, 1, BigInt(1))};
  auto m = specialize(e, img, img, {1}, 1);
  ZPoly want = ZPoly::constant(1) + ZPoly::monomial(-1, 1);
  CHECK(m.at(0, 0) == want);
}

TEST_CASE("specialize is multiplicative over F5") {
  std::mt19937_64 rng(5);
  // fixed invertible images over F5
  auto mk = [&](long a, long b, long c, long d) {
    Mat<Fp> m(2, 2, Fp(0, 5));
    m.at(0, 0) = Fp(a, 5);
    m.at(0, 1) = Fp(b, 5);
    m.at(1, 0) = Fp(c, 5);
    m.at(1, 1) = Fp(d, 5);
    return m;
  };
  std::vector<Mat<Fp>> imgs{mk(1, 1, 0, 1), mk(1, 0, 1, 1), mk(2, 0, 0, 3)};
  std::vector<Mat<Fp>> invs{mk(1, 4, 0, 1), mk(1, 0, 4, 1), mk(3, 0, 0, 2)};
  std::vector<long> weights{1, 1, 1};
  for (int trial = 0; trial < 50; ++trial) {
    GroupRingElement e1 = GroupRingElement::word(random_reduced_word(rng, 6, 3)) -
                          GroupRingElement::word(random_reduced_word(rng, 6, 3));
    GroupRingElement e2 = GroupRingElement::word(random_reduced_word(rng, 6, 3)) +
                          GroupRingElement::one();
    auto lhs = specialize(e1 * e2, imgs, invs, weights, 2);
    auto rhs = specialize(e1, imgs, invs, weights, 2) * specialize(e2, imgs, invs, weights, 2);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) CHECK(lhs.at(i, j) == rhs.at(i, j));
  }
}
