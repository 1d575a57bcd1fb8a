#pragma once

// Knot-table ingestion: named knots with one input form each (braid word,
// planar-diagram code, raw presentation, or torus parameters) plus ingested
// genus/fiberedness/volume/entropy metadata anchoring the checks.

#include <optional>
#include <string>
#include <vector>

#include "alextor/presentation.hpp"

namespace alextor {

struct SourcedValue {
  double value = 0.0;
  std::string source;
};

struct KnotRecord {
  std::string name;
  std::optional<std::string> braid;
  std::optional<std::string> pd;
  std::optional<GroupPresentation> presentation;
  std::optional<std::pair<long, long>> torus;
  std::optional<long> genus;
  std::optional<bool> fibered;
  std::optional<SourcedValue> volume;
  std::optional<SourcedValue> entropy;
  std::vector<std::string> representations;  // paths relative to the table file

  // materialize the group presentation from whichever input form is present
  GroupPresentation build() const;
};

struct KnotTable {
  std::vector<KnotRecord> records;
  std::string directory;  // resolved directory of the table file

  const KnotRecord* find(const std::string& name) const;
};

// Parses and validates; when check_degree_bound is set, every record with a
// known genus has deg(Delta) <= 2*genus verified during ingestion.
KnotTable load_table(const std::string& path, bool check_degree_bound = true);

// CLI knot argument: "unknot", "torus:p,q", "braid:<word>", "pd:<code>",
// "file:<presentation.json>", or a name looked up in the table.
struct ResolvedKnot {
  std::string name;
  GroupPresentation presentation;
  const KnotRecord* record = nullptr;  // when resolved from the table
};
ResolvedKnot resolve_knot(const std::string& arg, const KnotTable* table);

GroupPresentation unknot_presentation();

}  // namespace alextor
