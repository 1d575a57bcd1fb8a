#include "alextor/max_product.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "alextor/mahler.hpp"

namespace alextor {

MaxProduct::MaxProduct(double scale, long shift, std::vector<Factor> factors)
    : scale_(scale), shift_(shift), factors_(std::move(factors)) {
  if (!(scale_ > 0.0)) throw std::invalid_argument("MaxProduct: scale must be positive");
  for (const auto& f : factors_)
    if (!(f.base > 0.0)) throw std::invalid_argument("MaxProduct: bases must be positive");
  canonicalize();
}

void MaxProduct::canonicalize() {
  for (auto& f : factors_)
    if (std::abs(f.base - 1.0) < kBaseMergeTol) f.base = 1.0;
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.base < b.base; });
  std::vector<Factor> merged;
  for (const auto& f : factors_) {
    if (!merged.empty() && std::abs(merged.back().base - f.base) < kBaseMergeTol) {
      merged.back().exponent += f.exponent;
    } else {
      merged.push_back(f);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Factor& f) { return f.exponent == 0; }),
               merged.end());
  factors_ = std::move(merged);
}

double MaxProduct::eval(double t) const {
  if (!(t > 0.0)) throw std::domain_error("MaxProduct: evaluation needs t > 0");
  double v = scale_ * std::pow(t, double(shift_));
  for (const auto& f : factors_) v *= std::pow(std::max(f.base, t), double(f.exponent));
  return v;
}

long MaxProduct::degree() const {
  long d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

MaxProduct::Coefficients MaxProduct::coefficients() const {
  double bottom = scale_;
  for (const auto& f : factors_) bottom *= std::pow(f.base, double(f.exponent));
  double top = scale_;
  bool monic = std::abs(bottom - 1.0) <= 1e-8 && std::abs(top - 1.0) <= 1e-8;
  return {bottom, top, monic};
}

MaxProduct MaxProduct::operator*(const MaxProduct& o) const {
  std::vector<Factor> f = factors_;
  f.insert(f.end(), o.factors_.begin(), o.factors_.end());
  return MaxProduct(scale_ * o.scale_, shift_ + o.shift_, std::move(f));
}

MaxProduct MaxProduct::inverted_argument() const {
  // max{a, 1/t} = (a/t) * max{1/a, t}, so
  // f(1/t) = C * prod a^e * t^{-m - sum e} * prod max{1/a, t}^e
  double c = scale_;
  long m = -shift_;
  std::vector<Factor> f;
  f.reserve(factors_.size());
  for (const auto& fa : factors_) {
    c *= std::pow(fa.base, double(fa.exponent));
    m -= fa.exponent;
    f.push_back({1.0 / fa.base, fa.exponent});
  }
  return MaxProduct(c, m, std::move(f));
}

bool MaxProduct::equivalent(const MaxProduct& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  double rel = std::abs(scale_ - o.scale_) / std::max(1.0, std::max(scale_, o.scale_));
  if (rel > 1e-8) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent != o.factors_[i].exponent) return false;
    double d = std::abs(factors_[i].base - o.factors_[i].base);
    if (d > kBaseMergeTol * std::max(1.0, factors_[i].base)) return false;
  }
  return true;
}

MaxProduct::Symmetry MaxProduct::symmetry_check() const {
  MaxProduct g = inverted_argument();
  bool holds = equivalent(g);
  long n = g.shift_ - shift_;
  return {holds, n, (n % 2 != 0) && holds};
}

double MaxProduct::constancy_radius() const {
  if (factors_.empty()) return std::numeric_limits<double>::infinity();
  return factors_.front().base;
}

std::string MaxProduct::str() const {
  std::ostringstream os;
  char buf[64];
  bool lead = false;
  if (std::abs(scale_ - 1.0) > 1e-12 || (factors_.empty() && shift_ == 0)) {
    std::snprintf(buf, sizeof buf, "%.12g", scale_);
    os << buf;
    lead = true;
  }
  if (shift_ != 0) {
    if (lead) os << " * ";
    os << "t";
    if (shift_ != 1) os << "^" << shift_;
    lead = true;
  }
  for (const auto& f : factors_) {
    if (lead) os << " * ";
    std::snprintf(buf, sizeof buf, "%.12g", f.base);
    os << "max{" << buf << ",t}";
    if (f.exponent != 1) os << "^" << f.exponent;
    lead = true;
  }
  return os.str();
}

MaxProduct l2_from_alexander(const ZPoly& delta, const RootFindOptions& opt) {
  if (delta.is_zero()) throw std::domain_error("l2_from_alexander: zero polynomial");
  BigInt at1 = delta.eval(BigInt(1), BigInt(1));
  if (at1 != 1 && at1 != -1)
    throw std::domain_error("l2_from_alexander: Delta(1) != +-1, not a knot polynomial");
  double c = std::abs(ring<BigInt>::to_double(delta.leading_coeff()));
  std::vector<MaxProduct::Factor> f;
  if (delta.degree() != Degree::of(0)) {
    for (const Cplx& r : poly_roots(delta, opt))
      f.push_back({snap_modulus(std::abs(r)), 1});
  }
  f.push_back({1.0, -1});
  return MaxProduct(c, 0, std::move(f));
}

MaxProduct torus_closed_form(long p, long q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus_closed_form: p,q must be coprime and >= 2");
  long e = (p - 1) * (q - 1) - 1;
  return MaxProduct(1.0, 0, {{1.0, e}});
}

StepReport step_consistency(const MaxProduct& f, const StepModel& s) {
  if (s.genus < 1) throw std::invalid_argument("step_consistency: genus >= 1 required");
  if (!(s.T >= 1.0)) throw std::invalid_argument("step_consistency: T >= 1 required");
  StepReport r{};
  r.bases_within_band = true;
  for (const auto& fa : f.factors()) {
    if (fa.base < 1.0 / s.T - 1e-8 || fa.base > s.T + 1e-8) r.bases_within_band = false;
  }
  r.degree_matches = f.degree() == 2 * s.genus - 1;
  r.monic = f.coefficients().monic;
  r.constancy_radius = f.constancy_radius();
  r.consistent = r.bases_within_band && r.degree_matches && r.monic;
  std::ostringstream os;
  os << "bases within [1/T,T]: " << (r.bases_within_band ? "yes" : "no")
     << "; degree == 2g-1: " << (r.degree_matches ? "yes" : "no")
     << "; monic: " << (r.monic ? "yes" : "no") << "; constancy radius "
     << r.constancy_radius;
  r.detail = os.str();
  return r;
}

UnknotReport unknot_detect(const MaxProduct& f, bool is_full_torsion) {
  MaxProduct unknot(1.0, 0, {{1.0, -1}});
  UnknotReport r{};
  r.matches_unknot_form = f.equivalent(unknot);
  r.conclusive = is_full_torsion;
  r.note = is_full_torsion
               ? "full torsion: matching the unknot form characterizes the trivial knot"
               : "abelianization torsion: matching the unknot form is necessary but "
                 "cannot certify unknottedness";
  return r;
}

}  // namespace alextor
