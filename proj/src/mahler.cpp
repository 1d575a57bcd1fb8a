#include "alextor/mahler.hpp"

#include <cmath>

namespace alextor {

namespace {

double from_roots(double lead, const std::vector<Cplx>& roots) {
  double m = lead;
  for (const Cplx& r : roots) m *= std::max(snap_modulus(std::abs(r)), 1.0);
  return m;
}

}  // namespace

double mahler(const CPoly& p, const RootFindOptions& opt) {
  if (p.is_zero()) throw std::domain_error("mahler: zero polynomial");
  double lead = std::abs(p.leading_coeff());
  if (p.degree() == Degree::of(0)) return lead;
  return from_roots(lead, poly_roots(p, opt));
}

double mahler(const ZPoly& p, const RootFindOptions& opt) {
  if (p.is_zero()) throw std::domain_error("mahler: zero polynomial");
  double lead = std::abs(ring<BigInt>::to_double(p.leading_coeff()));
  if (p.degree() == Degree::of(0)) return lead;
  return from_roots(lead, poly_roots(p, opt));  // exact square-free route
}

double mahler(const QPoly& p, const RootFindOptions& opt) {
  if (p.is_zero()) throw std::domain_error("mahler: zero polynomial");
  double lead = std::abs(ring<BigRat>::to_double(p.leading_coeff()));
  if (p.degree() == Degree::of(0)) return lead;
  return from_roots(lead, poly_roots(p, opt));
}

}  // namespace alextor
