#pragma once

// Numeric twisted torsion over complex representations: the Wada numerator
// det(M_j)(t) is sampled on circles of radii {1/2, 1, 2} and its Laurent
// coefficients recovered by least-squares projection (a discrete Fourier
// projection on each circle); the degree estimate and monic test come from
// the recovered leading/trailing coefficients, with the off-unit circles
// serving as a consistency check. Log-magnitude slope estimates across the
// circles are reported as supporting diagnostics.

#include <cstdint>

#include "alextor/representation.hpp"
#include "alextor/torsion.hpp"

namespace alextor {

struct NumericTorsionReport {
  bool zero = false;          // numerator vanished at (nearly) all samples
  long degree = 0;            // degree estimate for tau = num/den
  bool monic = false;         // fitted |top| and |bottom| of tau within 1e-4 of 1
  long num_span = 0;
  long den_span = 0;
  double top_modulus = 0.0;
  double bottom_modulus = 0.0;
  double fit_residual = 0.0;  // cross-circle coefficient disagreement (relative)
  double slope_top = 0.0;     // log-magnitude slope between |t| = 1 and 2
  double slope_bottom = 0.0;  // log-magnitude slope between |t| = 1/2 and 1
  double condition = 1.0;     // conditioning proxy of the off-unit projections
  int samples_used = 0;
  size_t column = 0;          // deleted block column
  std::string notes;

  std::string str() const;
};

// pre: relator residuals of alpha <= 1e-8; samples is raised to the minimal
// count the exponent window requires when too small (noted in the report)
NumericTorsionReport twisted_torsion_numeric(const GroupPresentation& p,
                                             const Representation& alpha, int samples,
                                             bool parallel = true);

}  // namespace alextor
