#pragma once

// Automated verification harness over a knot table: symmetry and degree
// laws, fiberedness conditions, L2 closed forms, connected-sum
// multiplicativity, and the conjecture probes. Theorem-backed checks gate
// the exit status; conjecture-backed checks report but never fail a run.

#include <cstdint>

#include "alextor/cache.hpp"
#include "alextor/knot_table.hpp"

namespace alextor {

enum class Suite { All, Symmetry, Genus, Fibered, L2, Sum, Conjectures };

Suite suite_from_name(const std::string& name);

struct CheckResult {
  std::string knot;
  std::string check;   // the law being verified
  std::string detail;
  bool pass = false;
  bool theorem = false;  // theorem-backed (gates exit status) vs conjecture probe
};

struct CheckReport {
  std::vector<CheckResult> results;

  size_t theorem_failures() const;
  size_t conjecture_failures() const;
  std::string render() const;
};

CheckReport run_check_suite(const KnotTable& table, Suite which, std::uint64_t seed,
                            bool parallel = true, InvariantCache* cache = nullptr);

}  // namespace alextor
