#pragma once

// Coefficient rings for the exact algebra layer: arbitrary-precision integers
// and rationals (GMP), small prime fields, and complex doubles for the
// numeric path.

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace alextor {

using BigInt = mpz_class;
using BigRat = mpq_class;
using Cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Z/pZ for small primes. Invariant: 0 <= v < p, p prime (not re-checked here).
class Fp {
public:
  Fp() : v_(0), p_(2) {}
  Fp(long v, long p) : p_(p) {
    long r = v % p;
    v_ = r < 0 ? r + p : r;
  }

  long value() const { return v_; }
  long prime() const { return p_; }

  Fp operator+(const Fp& o) const { return Fp(v_ + o.v_, p_); }
  Fp operator-(const Fp& o) const { return Fp(v_ - o.v_, p_); }
  Fp operator*(const Fp& o) const { return Fp(v_ * o.v_, p_); }
  Fp operator-() const { return Fp(-v_, p_); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid
    long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      long q = a / b;
      long t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0, p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }
  bool is_zero() const { return v_ == 0; }

private:
  long v_;
  long p_;
};

// ---------------------------------------------------------------------------
// Ring operations used generically by the polynomial layer.

template <class R> struct ring {};

template <> struct ring<BigInt> {
  static BigInt zero() { return BigInt(0); }
  static BigInt one() { return BigInt(1); }
  static bool is_zero(const BigInt& a) { return sgn(a) == 0; }
  // exact division; nullopt when b does not divide a
  static std::optional<BigInt> exact_div(const BigInt& a, const BigInt& b) {
    if (sgn(b) == 0) return std::nullopt;
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) return std::nullopt;
    return q;
  }
  static std::string str(const BigInt& a) { return a.get_str(); }
  static double to_double(const BigInt& a) { return a.get_d(); }
};

template <> struct ring<BigRat> {
  static BigRat zero() { return BigRat(0); }
  static BigRat one() { return BigRat(1); }
  static bool is_zero(const BigRat& a) { return sgn(a) == 0; }
  static std::optional<BigRat> exact_div(const BigRat& a, const BigRat& b) {
    if (sgn(b) == 0) return std::nullopt;
    BigRat q = a / b;
    q.canonicalize();
    return q;
  }
  static std::string str(const BigRat& a) {
    BigRat c = a;
    c.canonicalize();
    return c.get_str();
  }
  static double to_double(const BigRat& a) { return a.get_d(); }
};

// Fp has no context-free zero()/one(): identities must carry the ambient
// prime, so generic code takes exemplars instead (see fp_*_like below).
template <> struct ring<Fp> {
  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static std::optional<Fp> exact_div(const Fp& a, const Fp& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
  }
  static std::string str(const Fp& a) { return std::to_string(a.value()); }
  static double to_double(const Fp& a) { return double(a.value()); }
};

template <> struct ring<Cplx> {
  static Cplx zero() { return Cplx(0.0, 0.0); }
  static Cplx one() { return Cplx(1.0, 0.0); }
  static bool is_zero(const Cplx& a) { return a.real() == 0.0 && a.imag() == 0.0; }
  static std::optional<Cplx> exact_div(const Cplx& a, const Cplx& b) {
    if (is_zero(b)) return std::nullopt;
    return a / b;
  }
  static std::string str(const Cplx& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", a.real(), a.imag());
    return buf;
  }
  static double to_double(const Cplx& a) { return a.real(); }
};

// Fp values carry their prime; additive/multiplicative identities must match
// the ambient prime. These helpers build them from a sample element.
inline Fp fp_zero_like(const Fp& sample) { return Fp(0, sample.prime()); }
inline Fp fp_one_like(const Fp& sample) { return Fp(1, sample.prime()); }

}  // namespace alextor
