#pragma once

// Deficiency-one group presentations with abelianization weights: the common
// output of all knot-notation front ends and the input to every torsion
// computation.

#include <numeric>
#include <string>
#include <vector>

#include "alextor/words.hpp"

namespace alextor {

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;   // freely reduced
  std::vector<long> weights;    // abelianization image per generator

  size_t rank() const { return generators.size(); }

  // Checks: deficiency one, reduced relators, relators abelianize to zero,
  // weights generate Z. Throws std::invalid_argument with a reason.
  void validate() const;

  // index of the designated meridian (first generator of weight 1), or -1
  long meridian() const {
    for (size_t i = 0; i < weights.size(); ++i)
      if (weights[i] == 1) return long(i);
    return -1;
  }
};

// free product with the designated meridians identified
GroupPresentation connected_sum(const GroupPresentation& p, const GroupPresentation& q);

// <a, b | a^p b^-q>, weights a -> q, b -> p
GroupPresentation torus_presentation(long p, long q);

// JSON round-trip (schema: {generators, relators, weights}); relator words
// accept both `a b a^-1` and single-letter case-flip (`abA`) styles and are
// always written in the first style.
std::string presentation_to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const std::string& text);

}  // namespace alextor
