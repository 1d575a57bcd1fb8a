#include "alextor/roots.hpp"

#include <cmath>
#include <random>

#include "alextor/torsion_class.hpp"

namespace alextor {

namespace {

using CL = std::complex<long double>;

struct DensePoly {
  std::vector<CL> c;  // ascending; c.front() and c.back() nonzero

  CL eval(CL z) const {
    CL acc(0, 0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
  }
  CL deriv(CL z) const {
    CL acc(0, 0);
    for (size_t i = c.size(); i-- > 1;) acc = acc * z + CL((long double)(i), 0) * c[i];
    return acc;
  }
  long double scale_at(long double az) const {
    long double s = 0, p = 1;
    for (size_t i = 0; i < c.size(); ++i) {
      s += std::abs(c[i]) * p;
      p *= az;
    }
    return s;
  }
};

std::vector<CL> initial_guesses(const DensePoly& p, std::mt19937_64& rng, bool perturb) {
  size_t n = p.c.size() - 1;
  long double an = std::abs(p.c[n]);
  long double bound = 0;
  for (size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(p.c[i]) / an);
  long double radius = std::pow(1.0L + bound, 0.7L);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  std::vector<CL> z(n);
  for (size_t i = 0; i < n; ++i) {
    long double angle = 2.0L * M_PIl * ((long double)(i) + 0.35L) / (long double)(n) + 0.42L;
    long double r = radius * (perturb ? (1.0L + jitter(rng)) : 1.0L);
    if (perturb) angle += jitter(rng);
    z[i] = std::polar(r, angle);
  }
  return z;
}

bool residuals_ok(const DensePoly& p, const std::vector<CL>& z, long double tol) {
  for (const CL& r : z)
    if (std::abs(p.eval(r)) > tol * p.scale_at(std::abs(r))) return false;
  return true;
}

// Jacobi-style Aberth iteration; deterministic for a fixed seed. Stops on
// the coordinatewise-update threshold or once every residual is at the
// noise floor (multiple roots plateau above the update threshold).
bool aberth(const DensePoly& p, std::vector<CL>& z, const RootFindOptions& opt) {
  size_t n = z.size();
  std::vector<CL> w(n);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    long double worst = 0;
    for (size_t i = 0; i < n; ++i) {
      CL pz = p.eval(z[i]);
      CL dz = p.deriv(z[i]);
      if (std::abs(dz) == 0.0L) {
        w[i] = CL(1e-8L, 1e-8L);
        worst = std::max(worst, (long double)1.0);
        continue;
      }
      CL newton = pz / dz;
      CL sum(0, 0);
      for (size_t j = 0; j < n; ++j)
        if (j != i) sum += CL(1, 0) / (z[i] - z[j]);
      CL denom = CL(1, 0) - newton * sum;
      CL off = std::abs(denom) == 0.0L ? newton : newton / denom;
      w[i] = off;
      worst = std::max(worst, std::abs(off) / std::max((long double)1.0, std::abs(z[i])));
    }
    for (size_t i = 0; i < n; ++i) z[i] -= w[i];
    if (worst < (long double)opt.update_tol) return true;
    if (iter % 8 == 7 && residuals_ok(p, z, 1e-15L)) return true;
  }
  return residuals_ok(p, z, 1e-15L);
}

std::vector<Cplx> roots_of_dense(DensePoly d, const RootFindOptions& opt) {
  size_t n = d.c.size() - 1;
  if (n == 0) return {};
  std::mt19937_64 rng(opt.seed);
  for (int attempt = 0; attempt <= opt.restarts; ++attempt) {
    std::vector<CL> z = initial_guesses(d, rng, attempt > 0);
    if (aberth(d, z, opt) && residuals_ok(d, z, (long double)opt.residual_tol)) {
      std::vector<Cplx> out(n);
      for (size_t i = 0; i < n; ++i) out[i] = Cplx(double(z[i].real()), double(z[i].imag()));
      std::sort(out.begin(), out.end(), [](const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
      });
      return out;
    }
  }
  throw RootFindFailure("poly_roots: no convergence within iteration budget (degree " +
                        std::to_string(n) + ")");
}

DensePoly dense_from(const CPoly& p) {
  long lo = p.lowest_exp(), hi = p.highest_exp();
  DensePoly d;
  d.c.assign(size_t(hi - lo) + 1, CL(0, 0));
  for (const auto& [e, c] : p.coeffs()) d.c[size_t(e - lo)] = CL(c.real(), c.imag());
  return d;
}

// Yun's square-free decomposition over Q: returns (square-free factor,
// multiplicity) pairs. Exact, so repeated roots are found as simple roots
// of the factors and never limited by clustering noise.
std::vector<std::pair<QPoly, int>> squarefree(const QPoly& input) {
  QPoly p = input.shifted(-input.lowest_exp());
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() == Degree::of(0)) return out;
  QPoly dp = p.derivative();
  QPoly a0 = poly_gcd(p, dp);
  if (a0.degree() == Degree::of(0)) {
    out.push_back({p, 1});
    return out;
  }
  QPoly b = *p.exact_div(a0);
  QPoly c = *dp.exact_div(a0);
  QPoly d = c - b.derivative();
  int i = 1;
  while (true) {
    if (b.degree() == Degree::of(0)) break;
    QPoly ai = poly_gcd(b, d);
    if (!(ai.degree() == Degree::of(0))) out.push_back({ai, i});
    b = *b.exact_div(ai);
    c = *d.exact_div(ai);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace

std::vector<Cplx> poly_roots(const CPoly& p, const RootFindOptions& opt) {
  if (p.is_zero()) throw std::domain_error("poly_roots: zero polynomial");
  if (p.degree() == Degree::of(0)) return {};
  return roots_of_dense(dense_from(p), opt);
}

std::vector<Cplx> poly_roots(const QPoly& p, const RootFindOptions& opt) {
  if (p.is_zero()) throw std::domain_error("poly_roots: zero polynomial");
  std::vector<Cplx> out;
  for (const auto& [factor, mult] : squarefree(p)) {
    std::vector<Cplx> r = roots_of_dense(dense_from(to_complex(factor)), opt);
    for (int m = 0; m < mult; ++m) out.insert(out.end(), r.begin(), r.end());
  }
  std::sort(out.begin(), out.end(), [](const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<Cplx> poly_roots(const ZPoly& p, const RootFindOptions& opt) {
  return poly_roots(to_rational(p), opt);
}

}  // namespace alextor
