#pragma once

// Braid words and the Artin action of a braid on the free group; closure
// presentations for knots.

#include <string>
#include <vector>

#include "alextor/presentation.hpp"

namespace alextor {

struct BraidWord {
  long strands = 2;
  std::vector<int> letters;  // signed generator indices, |i| in 1..strands-1

  // permutation induced on strands (0-based); closure is a knot iff n-cycle
  std::vector<long> permutation() const;
  bool closure_is_knot() const;
};

// Grammar: whitespace-separated tokens, either all `sK`/`SK` (S = inverse)
// or all signed integers `K`/`-K`, K >= 1. Mixed styles are rejected.
BraidWord parse_braid(const std::string& text);

// Artin automorphism images of the free-group generators under the braid:
// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
std::vector<Word> artin_images(const BraidWord& b);
// images under the inverse braid (for the automorphism round-trip check)
std::vector<Word> artin_images_inverse(const BraidWord& b);

// Closure presentation: generators x_1..x_n, relators x_i * (beta(x_i))^-1
// for i = 1..n-1 (the last one is a consequence and is dropped), all weights 1.
GroupPresentation braid_presentation(const BraidWord& b);

}  // namespace alextor
