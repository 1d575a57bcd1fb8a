#pragma once

// Brute-force enumeration of nonabelian representations into the 2x2
// special linear group over a small prime field. The first generator's
// image is fixed to one representative per conjugacy class; when every
// generator has abelianization weight 1 (Wirtinger-style presentations,
// where all generators are conjugate meridians) the remaining generators
// range over the conjugacy class of the first. Relators prune the search,
// with forced assignments propagated through relators that pin down a
// single remaining generator. Results are deduplicated up to global
// conjugation and returned in canonical search order, independent of the
// parallel schedule.

#include "alextor/representation.hpp"

namespace alextor {

struct RepSearchOptions {
  int budget = 50;        // stop after this many representations
  bool parallel = true;   // OpenMP over the root branches
  size_t node_cap = 4'000'000;  // per-branch safety valve on explored nodes
};

std::vector<Representation> rep_search_sl2_fp(const GroupPresentation& p, long prime,
                                              const RepSearchOptions& opt = {});

}  // namespace alextor
