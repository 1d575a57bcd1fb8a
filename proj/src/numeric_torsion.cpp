#include "alextor/numeric_torsion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include <omp.h>

namespace alextor {

namespace {

constexpr double kRelatorTol = 1e-8;
constexpr double kMonicTol = 1e-4;
constexpr double kCoeffTrim = 1e-9;  // relative trim threshold for fitted coefficients

struct Window {
  long lo, hi;
  long span() const { return hi - lo; }
};

// exponent range of t across the terms of a group-ring element
Window element_window(const GroupRingElement& e, const std::vector<long>& weights) {
  Window w{0, 0};
  bool first = true;
  for (const auto& [word, c] : e.terms()) {
    long s = weight_sum(word, weights);
    if (first) {
      w = {s, s};
      first = false;
    } else {
      w.lo = std::min(w.lo, s);
      w.hi = std::max(w.hi, s);
    }
  }
  return w;
}

// det(t^w alpha(x_j) - I) as an exact complex Laurent polynomial, by Leibniz
// expansion (k is small)
CPoly denominator_poly(const Mat<Cplx>& img, long weight, size_t k) {
  CPoly det;
  // Leibniz expansion with explicit sign tracking; k stays small
  std::function<void(std::vector<size_t>&, int)> rec = [&](std::vector<size_t>& cur, int sign) {
    if (cur.size() == k) {
      CPoly term = CPoly::constant(Cplx(double(sign), 0.0));
      for (size_t i = 0; i < k; ++i) {
        size_t j = cur[i];
        CPoly entry = CPoly::monomial(img.at(i, j), weight);
        if (i == j) entry = entry + CPoly::constant(Cplx(-1.0, 0.0));
        term = term * entry;
      }
      det = det + term;
      return;
    }
    for (size_t j = 0; j < k; ++j) {
      if (std::find(cur.begin(), cur.end(), j) != cur.end()) continue;
      int inversions = 0;
      for (size_t q : cur)
        if (q > j) ++inversions;
      cur.push_back(j);
      rec(cur, inversions % 2 == 0 ? sign : -sign);
      cur.pop_back();
    }
  };
  std::vector<size_t> cur;
  rec(cur, 1);
  return det;
}

}  // namespace

std::string NumericTorsionReport::str() const {
  std::ostringstream os;
  if (zero) {
    os << "tau = 0 (numerator vanishes at the sampled points)";
    return os.str();
  }
  os << "deg(tau) = " << degree << (monic ? ", monic" : ", not monic") << "; num span "
     << num_span << ", den span " << den_span;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "; |top| %.6g, |bottom| %.6g; fit residual %.3g; slopes [%.3f, %.3f]; "
                "condition %.3g; samples %d/circle",
                top_modulus, bottom_modulus, fit_residual, slope_bottom, slope_top, condition,
                samples_used);
  os << buf;
  if (!notes.empty()) os << "; " << notes;
  return os.str();
}

NumericTorsionReport twisted_torsion_numeric(const GroupPresentation& p,
                                             const Representation& alpha, int samples,
                                             bool parallel) {
  p.validate();
  if (!alpha.holds<Cplx>())
    throw std::invalid_argument("twisted_torsion_numeric: complex representation required");
  double res = alpha.relator_residual(p);
  if (res > kRelatorTol)
    throw std::invalid_argument("twisted_torsion_numeric: relator residual " +
                                std::to_string(res) + " exceeds 1e-8");
  const auto& images = alpha.images<Cplx>();
  size_t k = alpha.dimension();
  size_t n = p.rank();
  std::vector<Mat<Cplx>> inverses;
  for (const auto& m : images) inverses.push_back(invert_numeric(m));

  NumericTorsionReport rep;

  // deterministic denominator column scan
  size_t col = n;
  CPoly den;
  for (size_t j = 0; j < n; ++j) {
    CPoly d = denominator_poly(images[j], p.weights[j], k);
    double mag = 0;
    for (const auto& [e, c] : d.coeffs()) mag = std::max(mag, std::abs(c));
    if (mag > 1e-10) {
      col = j;
      den = d;
      break;
    }
  }
  if (col == n) throw NoValidColumn();
  rep.column = col;
  rep.den_span = den.degree().finite ? den.degree().value : 0;

  // Fox derivative elements and the exponent window of det(M_col)
  std::vector<GroupRingElement> elems;  // (n-1) x (n-1) row-major blocks
  Window det_window{0, 0};
  if (n > 1) {
    std::vector<std::vector<Window>> windows(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        GroupRingElement d = fox_derivative(p.relators[i], int(j) + 1);
        windows[i].push_back(element_window(d, p.weights));
        elems.push_back(std::move(d));
      }
    }
    det_window = {0, 0};
    for (size_t i = 0; i + 1 < n; ++i) {
      long lo = windows[i][0].lo, hi = windows[i][0].hi;
      for (const Window& w : windows[i]) {
        lo = std::min(lo, w.lo);
        hi = std::max(hi, w.hi);
      }
      det_window.lo += lo * long(k);
      det_window.hi += hi * long(k);
    }
  }
  long span = det_window.span();
  int min_samples = int(span) + 8;
  int S = samples;
  if (S < min_samples) {
    S = min_samples;
    rep.notes = "samples raised to " + std::to_string(S) + " to cover the exponent window";
  }
  rep.samples_used = S;

  const std::array<double, 3> radii = {0.5, 1.0, 2.0};
  std::array<std::vector<Cplx>, 3> values;
  for (auto& v : values) v.assign(size_t(S), Cplx(0, 0));

  auto eval_at = [&](Cplx t) -> Cplx {
    if (n == 1) return Cplx(1, 0);
    size_t m = (n - 1) * k;
    Mat<Cplx> big(m, m, Cplx(0, 0));
    size_t idx = 0;
    for (size_t i = 0; i + 1 < n; ++i) {
      size_t bj = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        Mat<Cplx> blk = specialize_at(elems[idx], images, inverses, p.weights, k, t);
        ++idx;
        for (size_t a = 0; a < k; ++a)
          for (size_t b = 0; b < k; ++b) big.at(i * k + a, bj * k + b) = blk.at(a, b);
        ++bj;
      }
    }
    return det_numeric(big);
  };

  long total = 3 * long(S);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long q = 0; q < total; ++q) {
      size_t ci = size_t(q) / size_t(S), si = size_t(q) % size_t(S);
      double th = 2.0 * M_PI * double(si) / double(S);
      values[ci][si] = eval_at(std::polar(radii[ci], th));
    }
  } else {
    for (long q = 0; q < total; ++q) {
      size_t ci = size_t(q) / size_t(S), si = size_t(q) % size_t(S);
      double th = 2.0 * M_PI * double(si) / double(S);
      values[ci][si] = eval_at(std::polar(radii[ci], th));
    }
  }

  // least-squares projection of the Laurent expansion, one circle at a time:
  // c_e(r) = (1/S) sum_s N(r w^s) (r w^s)^-e  with w = exp(2 pi i / S)
  auto project = [&](size_t ci) {
    std::vector<Cplx> c(size_t(span) + 1, Cplx(0, 0));
    double r = radii[ci];
    for (long e = det_window.lo; e <= det_window.hi; ++e) {
      Cplx acc(0, 0);
      for (int s = 0; s < S; ++s) {
        double th = 2.0 * M_PI * double(s) / double(S);
        acc += values[ci][size_t(s)] * std::polar(std::pow(r, double(-e)), -th * double(e));
      }
      c[size_t(e - det_window.lo)] = acc / double(S);
    }
    return c;
  };
  std::vector<Cplx> coeff = project(1);  // unit circle: orthonormal basis
  std::vector<Cplx> c_lo = project(0), c_hi = project(2);

  double cmax = 0;
  for (const Cplx& c : coeff) cmax = std::max(cmax, std::abs(c));
  if (cmax < 1e-12) {
    rep.zero = true;
    return rep;
  }
  double disagreement = 0;
  for (size_t i = 0; i < coeff.size(); ++i) {
    disagreement = std::max(disagreement, std::abs(coeff[i] - c_lo[i]));
    disagreement = std::max(disagreement, std::abs(coeff[i] - c_hi[i]));
  }
  rep.fit_residual = disagreement / cmax;
  rep.condition = std::pow(2.0, double(std::max(std::abs(det_window.lo),
                                                std::abs(det_window.hi))));
  if (rep.fit_residual > 1e-6) {
    if (!rep.notes.empty()) rep.notes += "; ";
    rep.notes += "ill-conditioned fit: cross-circle coefficients disagree";
  }

  long top = -1, bottom = -1;
  for (long i = 0; i < long(coeff.size()); ++i) {
    if (std::abs(coeff[size_t(i)]) > kCoeffTrim * cmax) {
      if (bottom < 0) bottom = i;
      top = i;
    }
  }
  rep.num_span = top - bottom;
  rep.degree = rep.num_span - rep.den_span;

  double den_lead = std::abs(den.leading_coeff());
  double den_trail = std::abs(den.trailing_coeff());
  rep.top_modulus = std::abs(coeff[size_t(top)]) / den_lead;
  rep.bottom_modulus = std::abs(coeff[size_t(bottom)]) / den_trail;
  rep.monic = std::abs(rep.top_modulus - 1.0) <= kMonicTol &&
              std::abs(rep.bottom_modulus - 1.0) <= kMonicTol;

  // slope diagnostics: circle means of log |N|
  std::array<double, 3> mean{};
  for (size_t ci = 0; ci < 3; ++ci) {
    double m = 0;
    int used = 0;
    for (const Cplx& v : values[ci]) {
      double a = std::abs(v);
      if (a > 0) {
        m += std::log(a);
        ++used;
      }
    }
    mean[ci] = used ? m / used : 0.0;
  }
  rep.slope_top = (mean[2] - mean[1]) / std::log(2.0);
  rep.slope_bottom = (mean[1] - mean[0]) / std::log(2.0);
  return rep;
}

}  // namespace alextor
