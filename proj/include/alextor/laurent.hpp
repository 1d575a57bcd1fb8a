#pragma once

// Exact Laurent polynomials over a coefficient ring, stored as sparse
// exponent -> coefficient maps with no zero entries (empty map == 0).

#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "alextor/ring.hpp"

namespace alextor {

// Degree of the zero polynomial. Kept as a dedicated sentinel type so it can
// never be confused with an honest integer degree.
struct Degree {
  bool finite = false;
  long value = 0;

  static Degree neg_infinity() { return Degree{}; }
  static Degree of(long v) { return Degree{true, v}; }

  bool operator==(const Degree& o) const {
    return finite == o.finite && (!finite || value == o.value);
  }
  bool operator!=(const Degree& o) const { return !(*this == o); }
  // neg-infinity is below every finite degree
  bool operator<=(const Degree& o) const {
    if (!finite) return true;
    if (!o.finite) return false;
    return value <= o.value;
  }
  std::string str() const { return finite ? std::to_string(value) : "-inf"; }
};

template <class R>
class LaurentPoly {
public:
  using coeff_map = std::map<long, R>;

  LaurentPoly() = default;

  static LaurentPoly constant(const R& c) {
    LaurentPoly p;
    if (!ring<R>::is_zero(c)) p.c_[0] = c;
    return p;
  }
  static LaurentPoly monomial(const R& c, long e) {
    LaurentPoly p;
    if (!ring<R>::is_zero(c)) p.c_[e] = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  const coeff_map& coeffs() const { return c_; }

  void set(long e, const R& c) {
    if (ring<R>::is_zero(c))
      c_.erase(e);
    else
      c_[e] = c;
  }
  R coeff(long e) const {
    auto it = c_.find(e);
    if (it == c_.end()) throw std::out_of_range("LaurentPoly: no such term");
    return it->second;
  }
  bool has_term(long e) const { return c_.count(e) != 0; }

  long lowest_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero has no support");
    return c_.begin()->first;
  }
  long highest_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero has no support");
    return c_.rbegin()->first;
  }
  const R& leading_coeff() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero has no leading coeff");
    return c_.rbegin()->second;
  }
  const R& trailing_coeff() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero has no trailing coeff");
    return c_.begin()->second;
  }

  // span of the support; -inf for 0
  Degree degree() const {
    if (is_zero()) return Degree::neg_infinity();
    return Degree::of(highest_exp() - lowest_exp());
  }

  LaurentPoly shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
  }

  // formal derivative d/dt
  LaurentPoly derivative() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) {
      if (e == 0) continue;
      R v = c * R(e);
      if (!ring<R>::is_zero(v)) r.c_[e - 1] = v;
    }
    return r;
  }

  // substitute t -> t^-1
  LaurentPoly reciprocal() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_) {
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        r.c_[e] = c;
      } else {
        it->second = it->second + c;
        if (ring<R>::is_zero(it->second)) r.c_.erase(it);
      }
    }
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_)
      for (const auto& [e2, c2] : o.c_) {
        long e = e1 + e2;
        R prod = c1 * c2;
        auto it = r.c_.find(e);
        if (it == r.c_.end()) {
          if (!ring<R>::is_zero(prod)) r.c_[e] = prod;
        } else {
          it->second = it->second + prod;
          if (ring<R>::is_zero(it->second)) r.c_.erase(it);
        }
      }
    return r;
  }

  LaurentPoly scaled(const R& s) const {
    LaurentPoly r;
    if (ring<R>::is_zero(s)) return r;
    for (const auto& [e, c] : c_) {
      R prod = c * s;
      if (!ring<R>::is_zero(prod)) r.c_[e] = prod;
    }
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact division in R[t^+-1]; nullopt when not divisible. Used by the
  // fraction-free determinant, where divisibility is guaranteed.
  std::optional<LaurentPoly> exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly();
    // reduce to ordinary polynomial division by shifting both to exponent 0
    LaurentPoly num = shifted(-lowest_exp());
    LaurentPoly den = d.shifted(-d.lowest_exp());
    LaurentPoly q;
    long shift = lowest_exp() - d.lowest_exp();
    while (!num.is_zero()) {
      long en = num.highest_exp();
      long ed = den.highest_exp();
      if (en < ed) return std::nullopt;
      auto c = ring<R>::exact_div(num.leading_coeff(), den.leading_coeff());
      if (!c) return std::nullopt;
      LaurentPoly term = monomial(*c, en - ed);
      q = q + term;
      num = num - den * term;
    }
    return q.shifted(shift);
  }

  // Horner evaluation. Cross-ring use (S != R) goes through double and is
  // meant for the numeric path only; same-ring use is exact. Negative lowest
  // exponent requires S to support division (fine for fields and x = 1).
  template <class S>
  S eval(const S& x, const S& one) const {
    if (is_zero()) return one - one;
    long lo = lowest_exp(), hi = highest_exp();
    S acc = one - one;
    for (long e = hi;; --e) {
      auto it = c_.find(e);
      if (it != c_.end()) acc = acc + coeff_cast<S>(it->second, one);
      if (e == lo) break;
      acc = acc * x;
    }
    S xp = one;
    for (long i = 0; i < (lo < 0 ? -lo : lo); ++i) xp = xp * x;
    if (lo >= 0) return S(acc * xp);
    return S(acc / xp);
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
      std::string cs = ring<R>::str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) { os << "-"; cs = cs.substr(1); }
      } else {
        os << (neg ? " - " : " + ");
        if (neg) cs = cs.substr(1);
      }
      first = false;
      if (e == 0) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

private:
  template <class S>
  static S coeff_cast(const R& c, const S& one) {
    if constexpr (std::is_same_v<S, R>)
      return c;
    else
      return one * S(ring<R>::to_double(c));
  }

  coeff_map c_;
};

using ZPoly = LaurentPoly<BigInt>;
using QPoly = LaurentPoly<BigRat>;
using FpPoly = LaurentPoly<Fp>;
using CPoly = LaurentPoly<Cplx>;

inline QPoly to_rational(const ZPoly& p) {
  QPoly q;
  for (const auto& [e, c] : p.coeffs()) q.set(e, BigRat(c));
  return q;
}

inline CPoly to_complex(const ZPoly& p) {
  CPoly q;
  for (const auto& [e, c] : p.coeffs()) q.set(e, Cplx(c.get_d(), 0.0));
  return q;
}

inline CPoly to_complex(const QPoly& p) {
  CPoly q;
  for (const auto& [e, c] : p.coeffs()) q.set(e, Cplx(c.get_d(), 0.0));
  return q;
}

// integer content and primitive part (Z coefficients)
inline BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.coeffs()) {
    BigInt a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

}  // namespace alextor
