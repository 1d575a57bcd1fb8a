#include "alextor/knot_table.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "alextor/braid.hpp"
#include "alextor/pd.hpp"
#include "alextor/torsion.hpp"

namespace alextor {

using nlohmann::json;

GroupPresentation unknot_presentation() {
  GroupPresentation p;
  p.generators = {"x1"};
  p.weights = {1};
  p.validate();
  return p;
}

GroupPresentation KnotRecord::build() const {
  if (braid) return braid_presentation(parse_braid(*braid));
  if (pd) return pd_to_wirtinger(parse_pd(*pd));
  if (presentation) return *presentation;
  if (torus) return torus_presentation(torus->first, torus->second);
  throw std::invalid_argument("knot record '" + name + "' has no input form");
}

const KnotRecord* KnotTable::find(const std::string& name) const {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

SourcedValue sourced_from_json(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("value") || !j.contains("source"))
    throw std::invalid_argument(what + ": expected {value, source}");
  SourcedValue v;
  v.value = j.at("value").get<double>();
  if (v.value < 0) throw std::invalid_argument(what + ": negative value");
  v.source = j.at("source").get<std::string>();
  return v;
}

}  // namespace

KnotTable load_table(const std::string& path, bool check_degree_bound) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("table: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("table: parse error in '" + path + "': " + e.what());
  }
  if (!j.contains("knots") || !j.at("knots").is_array())
    throw std::invalid_argument("table: top-level 'knots' array required");

  KnotTable table;
  size_t slash = path.find_last_of('/');
  table.directory = slash == std::string::npos ? "." : path.substr(0, slash);

  std::set<std::string> names;
  size_t index = 0;
  for (const auto& rec : j.at("knots")) {
    ++index;
    auto fail = [&](const std::string& msg) {
      std::string name = rec.contains("name") && rec.at("name").is_string()
                             ? rec.at("name").get<std::string>()
                             : ("#" + std::to_string(index));
      throw std::invalid_argument("table record " + name + ": " + msg);
    };
    KnotRecord r;
    if (!rec.contains("name")) fail("missing name");
    r.name = rec.at("name").get<std::string>();
    if (!names.insert(r.name).second) fail("duplicate name");

    int forms = 0;
    if (rec.contains("braid")) {
      r.braid = rec.at("braid").get<std::string>();
      ++forms;
    }
    if (rec.contains("pd")) {
      r.pd = rec.at("pd").get<std::string>();
      ++forms;
    }
    if (rec.contains("presentation")) {
      r.presentation = presentation_from_json(rec.at("presentation").dump());
      ++forms;
    }
    if (rec.contains("torus")) {
      const auto& t = rec.at("torus");
      if (!t.is_array() || t.size() != 2) fail("torus: expected [p, q]");
      long p = t.at(0).get<long>(), q = t.at(1).get<long>();
      if (p < 2 || q < 2 || std::gcd(p, q) != 1) fail("torus: p,q must be coprime and >= 2");
      r.torus = {p, q};
      ++forms;
    }
    if (forms == 0) fail("no input form (braid/pd/presentation/torus)");

    if (rec.contains("genus")) {
      r.genus = rec.at("genus").get<long>();
      if (*r.genus < 0) fail("genus: negative");
    }
    if (rec.contains("fibered")) r.fibered = rec.at("fibered").get<bool>();
    if (rec.contains("volume")) r.volume = sourced_from_json(rec.at("volume"), "volume");
    if (rec.contains("entropy")) r.entropy = sourced_from_json(rec.at("entropy"), "entropy");
    if (rec.contains("representations"))
      r.representations = rec.at("representations").get<std::vector<std::string>>();

    try {
      GroupPresentation p = r.build();
      if (check_degree_bound && r.genus) {
        ZPoly delta = alexander_polynomial(p);
        Degree d = delta.degree();
        if (d.finite && d.value > 2 * (*r.genus))
          fail("deg(Delta) = " + d.str() + " exceeds 2*genus = " + std::to_string(2 * *r.genus));
      }
    } catch (const std::exception& e) {
      fail(std::string("input form rejected: ") + e.what());
    }

    table.records.push_back(std::move(r));
  }
  return table;
}

ResolvedKnot resolve_knot(const std::string& arg, const KnotTable* table) {
  ResolvedKnot out;
  out.name = arg;
  if (arg == "unknot") {
    out.presentation = unknot_presentation();
    return out;
  }
  auto starts = [&](const char* prefix) {
    return arg.rfind(prefix, 0) == 0;
  };
  if (starts("torus:")) {
    std::string rest = arg.substr(6);
    size_t comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("torus knot argument: expected torus:p,q");
    long p = std::stol(rest.substr(0, comma));
    long q = std::stol(rest.substr(comma + 1));
    out.presentation = torus_presentation(p, q);
    return out;
  }
  if (starts("braid:")) {
    out.presentation = braid_presentation(parse_braid(arg.substr(6)));
    return out;
  }
  if (starts("pd:")) {
    out.presentation = pd_to_wirtinger(parse_pd(arg.substr(3)));
    return out;
  }
  if (starts("file:")) {
    std::ifstream in(arg.substr(5));
    if (!in) throw std::invalid_argument("cannot open presentation file '" + arg.substr(5) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    out.presentation = presentation_from_json(ss.str());
    return out;
  }
  if (table) {
    const KnotRecord* r = table->find(arg);
    if (r) {
      out.presentation = r->build();
      out.record = r;
      return out;
    }
  }
  throw std::invalid_argument("unknown knot '" + arg +
                              "' (expected a table name, unknot, torus:p,q, braid:..., "
                              "pd:..., or file:...)");
}

}  // namespace alextor
