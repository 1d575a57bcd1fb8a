#pragma once

// Laurent rational functions recorded up to the unit ambiguity +-t^l.
// Equality is cross-multiplication up to such a unit; normalize_units picks
// a canonical representative so normalized classes compare structurally.

#include <optional>

#include "alextor/laurent.hpp"

namespace alextor {

namespace detail {

// monic gcd over Q[t], Euclid on shifted (non-negative exponent) polys
inline QPoly monic_gcd(QPoly a, QPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  a = a.shifted(-a.lowest_exp());
  b = b.shifted(-b.lowest_exp());
  while (!b.is_zero()) {
    // remainder of a by b
    while (!a.is_zero() && a.highest_exp() >= b.highest_exp()) {
      BigRat c = a.leading_coeff() / b.leading_coeff();
      a = a - b.shifted(a.highest_exp() - b.highest_exp()).scaled(c);
    }
    std::swap(a, b);
    if (!b.is_zero()) b = b.shifted(-b.lowest_exp());
  }
  if (a.is_zero()) return a;
  BigRat lead = a.leading_coeff();
  QPoly r;
  for (const auto& [e, c] : a.coeffs()) r.set(e, c / lead);
  return r;
}

inline ZPoly primitive_lift(const QPoly& p) {
  // clear denominators, divide by content
  BigInt den = 1;
  for (const auto& [e, c] : p.coeffs()) {
    BigInt d = c.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly z;
  for (const auto& [e, c] : p.coeffs()) {
    BigRat scaled = c * BigRat(den);
    scaled.canonicalize();
    z.set(e, scaled.get_num());
  }
  BigInt cont = content(z);
  if (cont == 0) return z;
  ZPoly out;
  for (const auto& [e, c] : z.coeffs()) out.set(e, c / cont);
  return out;
}

template <class R> struct poly_gcd_impl {
  // generic field case: Euclid
  static LaurentPoly<R> run(const LaurentPoly<R>& a0, const LaurentPoly<R>& b0) {
    LaurentPoly<R> a = a0, b = b0;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    a = a.shifted(-a.lowest_exp());
    b = b.shifted(-b.lowest_exp());
    while (!b.is_zero()) {
      while (!a.is_zero() && a.highest_exp() >= b.highest_exp()) {
        auto c = ring<R>::exact_div(a.leading_coeff(), b.leading_coeff());
        a = a - b.shifted(a.highest_exp() - b.highest_exp()).scaled(*c);
      }
      std::swap(a, b);
      if (!b.is_zero()) b = b.shifted(-b.lowest_exp());
    }
    return a;
  }
};

template <> struct poly_gcd_impl<BigInt> {
  static ZPoly run(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // primitive part via the rational gcd, content via integer gcd
    ZPoly g = primitive_lift(monic_gcd(to_rational(a), to_rational(b)));
    BigInt ca = content(a), cb = content(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return g.scaled(cg);
  }
};

}  // namespace detail

template <class R>
LaurentPoly<R> poly_gcd(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
  return detail::poly_gcd_impl<R>::run(a, b);
}

template <class R>
class TorsionClass {
public:
  // canonical zero class 0/1; only for rings with a context-free identity
  // (Fp identities carry the prime, so FpTorsion has no default state)
  TorsionClass()
    requires requires { ring<R>::one(); }
      : num_(), den_(LaurentPoly<R>::constant(ring<R>::one())) {}
  TorsionClass(LaurentPoly<R> num, LaurentPoly<R> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("TorsionClass: zero denominator");
  }

  const LaurentPoly<R>& num() const { return num_; }
  const LaurentPoly<R>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // deg(p/q) = deg(p) - deg(q); -inf when p = 0
  Degree degree() const {
    if (num_.is_zero()) return Degree::neg_infinity();
    return Degree::of(num_.degree().value - den_.degree().value);
  }

  // quotient of two polynomials whose top coefficients are units (+-1 for Z)
  bool is_monic() const;

  // equality up to +-t^l, by cross-multiplication
  bool equivalent(const TorsionClass& o) const {
    LaurentPoly<R> lhs = num_ * o.den_;
    LaurentPoly<R> rhs = o.num_ * den_;
    return unit_multiple(lhs, rhs);
  }

  static bool unit_multiple(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    LaurentPoly<R> bs = b.shifted(a.lowest_exp() - b.lowest_exp());
    return a == bs || a == -bs;
  }

  std::string str(const std::string& var = "t") const {
    if (num_.is_zero()) return "0";
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

private:
  LaurentPoly<R> num_;
  LaurentPoly<R> den_;
};

template <>
inline bool TorsionClass<BigInt>::is_monic() const {
  if (num_.is_zero()) return false;
  BigInt a = abs(num_.leading_coeff());
  BigInt b = abs(den_.leading_coeff());
  return a == 1 && b == 1;
}

template <>
inline bool TorsionClass<BigRat>::is_monic() const {
  if (num_.is_zero()) return false;
  BigRat a = abs(num_.leading_coeff());
  BigRat b = abs(den_.leading_coeff());
  return a == 1 && b == 1;
}

// Canonical representative: cancel the polynomial gcd, shift both supports to
// start at exponent 0, fix overall sign so the numerator's lowest coefficient
// is "positive" where the ring has signs.
template <class R>
TorsionClass<R> normalize_units(const TorsionClass<R>& f);

namespace detail {

template <class R>
int sign_of(const R&) { return 1; }
inline int sign_of(const BigInt& a) { return sgn(a) < 0 ? -1 : 1; }
inline int sign_of(const BigRat& a) { return sgn(a) < 0 ? -1 : 1; }

// over a field, scale numerator and denominator together (harmless for the
// class) so the denominator becomes monic and structural equality works
template <class R>
void canonical_scale(LaurentPoly<R>&, LaurentPoly<R>&) {}

inline void canonical_scale(QPoly& n, QPoly& d) {
  BigRat s = abs(d.leading_coeff());
  QPoly n2, d2;
  for (const auto& [e, c] : n.coeffs()) n2.set(e, c / s);
  for (const auto& [e, c] : d.coeffs()) d2.set(e, c / s);
  n = n2;
  d = d2;
}

inline void canonical_scale(FpPoly& n, FpPoly& d) {
  Fp s = d.leading_coeff();
  FpPoly n2, d2;
  for (const auto& [e, c] : n.coeffs()) n2.set(e, c / s);
  for (const auto& [e, c] : d.coeffs()) d2.set(e, c / s);
  n = n2;
  d = d2;
}

template <class R>
TorsionClass<R> normalize_impl(const TorsionClass<R>& f) {
  if (f.is_zero())
    return TorsionClass<R>(LaurentPoly<R>(), f.den().shifted(-f.den().lowest_exp()));
  LaurentPoly<R> n = f.num(), d = f.den();
  LaurentPoly<R> g = poly_gcd(n, d);
  if (!g.is_zero()) {
    auto qn = n.exact_div(g);
    auto qd = d.exact_div(g);
    if (qn && qd) {
      n = *qn;
      d = *qd;
    }
  }
  canonical_scale(n, d);
  n = n.shifted(-n.lowest_exp());
  d = d.shifted(-d.lowest_exp());
  if (sign_of(n.trailing_coeff()) < 0) {
    n = -n;
    d = -d;
  }
  return TorsionClass<R>(n, d);
}

}  // namespace detail

template <class R>
TorsionClass<R> normalize_units(const TorsionClass<R>& f) {
  return detail::normalize_impl(f);
}

using ZTorsion = TorsionClass<BigInt>;
using QTorsion = TorsionClass<BigRat>;
using FpTorsion = TorsionClass<Fp>;

}  // namespace alextor
