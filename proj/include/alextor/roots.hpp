#pragma once

// Simultaneous polynomial root finding (Aberth-Ehrlich iteration) for the
// moderate degrees arising here. The lowest power of t is factored out
// first; the returned list covers every root of the polynomial part, with
// multiple roots appearing as clustered repeats, so the count equals the
// span of the input.

#include <cstdint>
#include <vector>

#include "alextor/laurent.hpp"

namespace alextor {

struct RootFindFailure : std::runtime_error {
  explicit RootFindFailure(const std::string& what) : std::runtime_error(what) {}
};

struct RootFindOptions {
  int max_iterations = 200;
  double update_tol = 1e-13;     // coordinatewise update threshold
  double residual_tol = 1e-9;    // relative to the coefficient magnitude scale
  int restarts = 3;              // random perturbation restarts before giving up
  std::uint64_t seed = 0x5eed;
};

std::vector<Cplx> poly_roots(const CPoly& p, const RootFindOptions& opt = {});
std::vector<Cplx> poly_roots(const ZPoly& p, const RootFindOptions& opt = {});
std::vector<Cplx> poly_roots(const QPoly& p, const RootFindOptions& opt = {});

}  // namespace alextor
