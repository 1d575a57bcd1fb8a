#pragma once

// The function class C * t^m * prod max{a_i, t}^{e_i} on (0, infinity),
// closed under products and t -> 1/t, and exactly representable symbolic
// data for every computed L2 torsion here. Two functions are equivalent
// when they differ only in the monomial shift m.

#include <cstdint>
#include <string>
#include <vector>

#include "alextor/laurent.hpp"
#include "alextor/roots.hpp"

namespace alextor {

class MaxProduct {
public:
  struct Factor {
    double base;    // a > 0
    long exponent;  // e != 0 after canonicalization
  };

  static constexpr double kBaseMergeTol = 1e-8;

  MaxProduct() : scale_(1.0), shift_(0) {}
  MaxProduct(double scale, long shift, std::vector<Factor> factors);

  static MaxProduct one() { return MaxProduct(); }

  double scale() const { return scale_; }
  long shift() const { return shift_; }
  const std::vector<Factor>& factors() const { return factors_; }

  double eval(double t) const;

  // degree of the asymptotic monomials: sum of factor exponents (independent
  // of the shift, so constant on equivalence classes)
  long degree() const;

  struct Coefficients {
    double bottom;  // t -> 0 limit coefficient: C * prod a^e
    double top;     // t -> infinity limit coefficient: C
    bool monic;     // both within 1e-8 of 1
  };
  Coefficients coefficients() const;

  MaxProduct operator*(const MaxProduct& o) const;

  // f(1/t), again a max-product via max{a, 1/t} = (a/t) max{1/a, t}
  MaxProduct inverted_argument() const;

  struct Symmetry {
    bool holds;  // f(1/t) equivalent to f
    long n;      // f(1/t) = t^n f(t) when holds
    bool n_odd;
  };
  Symmetry symmetry_check() const;

  // equivalence (ignores shift): equal scale and matching factor multisets
  // within the base-merge tolerance
  bool equivalent(const MaxProduct& o) const;

  // largest T' with f constant on (0, T'): the smallest base
  // (infinity when there are no factors)
  double constancy_radius() const;

  std::string str() const;

private:
  void canonicalize();

  double scale_;
  long shift_;
  std::vector<Factor> factors_;  // sorted by base, merged
};

// MaxProduct for tau2(K, phi_K) from the Alexander polynomial: scale
// |leading coefficient|, one factor (|root|, +1) per root (unit-circle
// snapped), one factor (1, -1).
MaxProduct l2_from_alexander(const ZPoly& delta, const RootFindOptions& opt = {});

// max{1, t}^{(p-1)(q-1)-1}, the closed form shared by every admissible
// homomorphism on a torus knot
MaxProduct torus_closed_form(long p, long q);

// fibered step model: the torsion is 1 below 1/T and t^{2g-1} above T,
// where T = exp(entropy of the monodromy)
struct StepModel {
  long genus;  // >= 1
  double T;    // >= 1
};

struct StepReport {
  bool bases_within_band;   // all bases in [1/T, T] (tolerance 1e-8)
  bool degree_matches;      // degree == 2*genus - 1
  bool monic;
  double constancy_radius;  // min base
  bool consistent;          // all of the above
  std::string detail;
};

// precondition: the knot is fibered with the given genus
StepReport step_consistency(const MaxProduct& f, const StepModel& s);

struct UnknotReport {
  bool matches_unknot_form;  // f equivalent to max{1,t}^-1
  bool conclusive;           // only the full torsion detects the unknot
  std::string note;
};

UnknotReport unknot_detect(const MaxProduct& f, bool is_full_torsion);

}  // namespace alextor
