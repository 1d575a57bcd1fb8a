#pragma once

// Planar-diagram codes and the Wirtinger presentation they induce.
//
// Convention: a crossing X(a,b,c,d) lists its four arc labels
// counterclockwise starting from the incoming under-arc a; the under-strand
// runs a -> c and the over-strand occupies entries b and d. Arc labels run
// 1..2n sequentially along the knot's orientation, so the over-strand runs
// b -> d when d follows b, and d -> b when b follows d. Only these
// combinatorial facts are validated; planarity is not.

#include <array>
#include <string>
#include <vector>

#include "alextor/presentation.hpp"

namespace alextor {

struct PDCode {
  std::vector<std::array<long, 4>> crossings;

  size_t arc_count() const { return crossings.size() * 2; }
  // each label occurs exactly twice; labels traverse a single closed cycle
  void validate() const;
};

// Text format: `X(a,b,c,d)` tuples, comma/whitespace separated.
PDCode parse_pd(const std::string& text);

// One generator per over-arc (maximal strand between undercrossings), one
// conjugation relator w x_j w^-1 x_k^-1 per crossing, last relator dropped,
// every weight 1.
GroupPresentation pd_to_wirtinger(const PDCode& code);

}  // namespace alextor
