#pragma once

// Mahler measure m(p) = |leading coefficient| * prod max(|root|, 1).
// Root moduli within 1e-8 of the unit circle are snapped to exactly 1:
// the polynomials in play are frequently cyclotomic products, where the
// closed forms downstream are exact.

#include "alextor/roots.hpp"

namespace alextor {

inline constexpr double kUnitCircleSnapTol = 1e-8;

double mahler(const ZPoly& p, const RootFindOptions& opt = {});
double mahler(const QPoly& p, const RootFindOptions& opt = {});
double mahler(const CPoly& p, const RootFindOptions& opt = {});

// |a| snapped to 1 when within the unit-circle tolerance
inline double snap_modulus(double a) {
  return std::abs(a - 1.0) < kUnitCircleSnapTol ? 1.0 : a;
}

}  // namespace alextor
