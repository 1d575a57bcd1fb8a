#include "alextor/presentation.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace alextor {

using nlohmann::json;

void GroupPresentation::validate() const {
  if (generators.empty()) throw std::invalid_argument("presentation: no generators");
  if (weights.size() != generators.size())
    throw std::invalid_argument("presentation: weight per generator required");
  if (relators.size() + 1 != generators.size())
    throw std::invalid_argument("presentation: deficiency one required (relators = generators - 1)");
  for (const auto& r : relators) {
    if (!is_reduced(r)) throw std::invalid_argument("presentation: relator not freely reduced");
    for (int x : r) {
      size_t i = size_t(std::abs(x));
      if (i == 0 || i > generators.size())
        throw std::invalid_argument("presentation: relator uses unknown generator");
    }
    if (weight_sum(r, weights) != 0)
      throw std::invalid_argument("presentation: relator does not abelianize to zero");
  }
  long g = 0;
  for (long w : weights) g = std::gcd(g, w);
  if (g != 1) throw std::invalid_argument("presentation: weights do not generate Z (gcd != 1)");
}

GroupPresentation connected_sum(const GroupPresentation& p, const GroupPresentation& q) {
  long mp = p.meridian(), mq = q.meridian();
  if (mp < 0 || mq < 0)
    throw std::invalid_argument("connected_sum: no weight-1 generator available");
  GroupPresentation out;
  out.generators = p.generators;
  std::map<std::string, int> used;
  for (const auto& g : out.generators) used[g] = 1;
  for (const auto& g : q.generators) {
    std::string name = g;
    while (used.count(name)) name += "'";
    used[name] = 1;
    out.generators.push_back(name);
  }
  out.weights = p.weights;
  out.weights.insert(out.weights.end(), q.weights.begin(), q.weights.end());
  out.relators = p.relators;
  int off = int(p.rank());
  for (const auto& r : q.relators) {
    Word s;
    for (int x : r) s.push_back(x > 0 ? x + off : x - off);
    out.relators.push_back(s);
  }
  // identify the designated meridians
  out.relators.push_back(reduce(Word{int(mp) + 1, -(int(mq) + 1 + off)}));
  out.validate();
  return out;
}

GroupPresentation torus_presentation(long p, long q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus_presentation: p,q must be coprime and >= 2");
  GroupPresentation out;
  out.generators = {"a", "b"};
  out.weights = {q, p};
  Word r;
  for (long i = 0; i < p; ++i) r.push_back(1);
  for (long i = 0; i < q; ++i) r.push_back(-2);
  out.relators = {reduce(r)};
  out.validate();
  return out;
}

namespace {

std::string word_to_string(const Word& w, const std::vector<std::string>& gens) {
  std::ostringstream os;
  bool first = true;
  for (int x : w) {
    if (!first) os << " ";
    first = false;
    os << gens[size_t(std::abs(x)) - 1];
    if (x < 0) os << "^-1";
  }
  return os.str();
}

Word word_from_string(const std::string& s, const std::vector<std::string>& gens) {
  std::map<std::string, int> index;
  bool all_single_lower = true;
  for (size_t i = 0; i < gens.size(); ++i) {
    index[gens[i]] = int(i) + 1;
    if (gens[i].size() != 1 || !std::islower((unsigned char)gens[i][0]))
      all_single_lower = false;
  }
  Word w;
  std::istringstream is(s);
  std::string tok;
  bool spaced = s.find(' ') != std::string::npos || s.find("^-1") != std::string::npos;
  if (spaced) {
    while (is >> tok) {
      bool inv = false;
      if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
        inv = true;
        tok = tok.substr(0, tok.size() - 3);
      }
      auto it = index.find(tok);
      if (it == index.end()) throw std::invalid_argument("relator: unknown generator '" + tok + "'");
      w.push_back(inv ? -it->second : it->second);
    }
  } else {
    // compact single-letter style with case flip for inverses
    if (!all_single_lower)
      throw std::invalid_argument("relator: compact style needs single lowercase generator names");
    for (char c : s) {
      if (std::isspace((unsigned char)c)) continue;
      bool inv = std::isupper((unsigned char)c);
      std::string name(1, char(std::tolower((unsigned char)c)));
      auto it = index.find(name);
      if (it == index.end()) throw std::invalid_argument(std::string("relator: unknown generator '") + c + "'");
      w.push_back(inv ? -it->second : it->second);
    }
  }
  if (!is_reduced(w)) w = reduce(w);
  return w;
}

}  // namespace

std::string presentation_to_json(const GroupPresentation& p) {
  json j;
  j["generators"] = p.generators;
  j["relators"] = json::array();
  for (const auto& r : p.relators) j["relators"].push_back(word_to_string(r, p.generators));
  j["weights"] = p.weights;
  return j.dump();
}

GroupPresentation presentation_from_json(const std::string& text) {
  json j = json::parse(text);
  GroupPresentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  p.weights = j.at("weights").get<std::vector<long>>();
  for (const auto& r : j.at("relators"))
    p.relators.push_back(word_from_string(r.get<std::string>(), p.generators));
  p.validate();
  return p;
}

}  // namespace alextor
