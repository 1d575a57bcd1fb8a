#pragma once

// Fox free differential calculus and specialization of group-ring elements
// through a matrix representation twisted by the abelianization variable.
//
// Rules: d(x)/dx = 1, d(x^-1)/dx = -x^-1, d(uv)/dx = du/dx + u dv/dx.
// The derivative of a word is accumulated in a single left-to-right pass
// over its letters, carrying the growing prefix.

#include <map>

#include "alextor/matrix.hpp"
#include "alextor/words.hpp"

namespace alextor {

// Element of the integral group ring of a free group: formal Z-combination
// of reduced words.
class GroupRingElement {
public:
  using term_map = std::map<Word, BigInt>;

  GroupRingElement() = default;

  static GroupRingElement word(const Word& w, BigInt c = 1) {
    GroupRingElement e;
    e.add_term(reduce(w), c);
    return e;
  }
  static GroupRingElement one() { return word(Word{}); }

  void add_term(const Word& w, const BigInt& c) {
    if (sgn(c) == 0) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_[w] = c;
    } else {
      it->second += c;
      if (sgn(it->second) == 0) t_.erase(it);
    }
  }

  const term_map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  GroupRingElement operator+(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, c);
    return r;
  }
  GroupRingElement operator-(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, -c);
    return r;
  }
  GroupRingElement operator*(const GroupRingElement& o) const {
    GroupRingElement r;
    for (const auto& [w1, c1] : t_)
      for (const auto& [w2, c2] : o.t_) r.add_term(concat(w1, w2), c1 * c2);
    return r;
  }

  bool operator==(const GroupRingElement& o) const { return t_ == o.t_; }

private:
  term_map t_;
};

// d w / d x_gen, gen 1-based
inline GroupRingElement fox_derivative(const Word& w, int gen) {
  GroupRingElement out;
  Word prefix;
  for (int letter : w) {
    if (letter > 0) {
      if (letter == gen) out.add_term(prefix, 1);
      prefix.push_back(letter);  // prefix stays reduced: w is reduced
    } else {
      prefix.push_back(letter);
      if (-letter == gen) out.add_term(prefix, -1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Specialization g -> t^phi(g) * alpha(g), extended linearly.

// ring identities with the ambient prime threaded through for Fp
template <class R>
R coeff_from_bigint(const BigInt& c, const std::vector<Mat<R>>&);
template <>
inline BigInt coeff_from_bigint<BigInt>(const BigInt& c, const std::vector<Mat<BigInt>>&) {
  return c;
}
template <>
inline BigRat coeff_from_bigint<BigRat>(const BigInt& c, const std::vector<Mat<BigRat>>&) {
  return BigRat(c);
}
template <>
inline Fp coeff_from_bigint<Fp>(const BigInt& c, const std::vector<Mat<Fp>>& images) {
  long p = images.at(0).at(0, 0).prime();
  BigInt r = c % p;
  return Fp(r.get_si(), p);
}

template <class R>
R identity_entry(const std::vector<Mat<R>>&) { return R(1); }
template <>
inline Fp identity_entry<Fp>(const std::vector<Mat<Fp>>& images) {
  return Fp(1, images.at(0).at(0, 0).prime());
}
template <class R>
R zero_entry(const std::vector<Mat<R>>&) { return R(0); }
template <>
inline Fp zero_entry<Fp>(const std::vector<Mat<Fp>>& images) {
  return Fp(0, images.at(0).at(0, 0).prime());
}

// exact mode: k x k matrix over R[t^{+-1}]
template <class R>
Mat<LaurentPoly<R>> specialize(const GroupRingElement& e,
                               const std::vector<Mat<R>>& images,
                               const std::vector<Mat<R>>& inverses,
                               const std::vector<long>& weights, size_t k) {
  Mat<LaurentPoly<R>> out(k, k);
  for (const auto& [w, c] : e.terms()) {
    // alpha(w)
    Mat<R> m;
    bool have = false;
    for (int letter : w) {
      const Mat<R>& g = letter > 0 ? images[size_t(letter) - 1] : inverses[size_t(-letter) - 1];
      m = have ? m * g : g;
      have = true;
    }
    long exp = weight_sum(w, weights);
    R cc = coeff_from_bigint<R>(c, images);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) {
        R entry = have ? m.at(i, j) : (i == j ? identity_entry<R>(images) : zero_entry<R>(images));
        R v = cc * entry;
        if (!ring<R>::is_zero(v))
          out.at(i, j) = out.at(i, j) + LaurentPoly<R>::monomial(v, exp);
      }
  }
  return out;
}

// numeric mode: evaluate at a fixed complex t
inline Mat<Cplx> specialize_at(const GroupRingElement& e,
                               const std::vector<Mat<Cplx>>& images,
                               const std::vector<Mat<Cplx>>& inverses,
                               const std::vector<long>& weights, size_t k, Cplx t) {
  Mat<Cplx> out(k, k, Cplx(0, 0));
  for (const auto& [w, c] : e.terms()) {
    Mat<Cplx> m(k, k, Cplx(0, 0));
    for (size_t i = 0; i < k; ++i) m.at(i, i) = Cplx(1, 0);
    for (int letter : w)
      m = m * (letter > 0 ? images[size_t(letter) - 1] : inverses[size_t(-letter) - 1]);
    long exp = weight_sum(w, weights);
    Cplx tp = std::pow(t, double(exp));
    Cplx cc = Cplx(c.get_d(), 0.0) * tp;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) out.at(i, j) += cc * m.at(i, j);
  }
  return out;
}

}  // namespace alextor
