#include "alextor/pd.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace alextor {

namespace {

long next_label(long e, long n_arcs) { return e % n_arcs + 1; }

}  // namespace

void PDCode::validate() const {
  if (crossings.empty()) throw std::invalid_argument("pd: no crossings");
  long n_arcs = long(arc_count());
  std::map<long, int> count;
  for (const auto& x : crossings)
    for (long e : x) {
      if (e < 1 || e > n_arcs)
        throw std::invalid_argument("pd: arc label out of range 1..2n");
      count[e]++;
    }
  for (long e = 1; e <= n_arcs; ++e)
    if (count[e] != 2)
      throw std::invalid_argument("pd: arc label " + std::to_string(e) +
                                  " must occur exactly twice");
  // Every crossing advances the under-strand a -> c and the over-strand by
  // one label; collectively the sources must cover every label once, so the
  // labels traverse one closed cycle.
  std::map<long, int> sources;
  for (const auto& x : crossings) {
    long a = x[0], b = x[1], c = x[2], d = x[3];
    if (c != next_label(a, n_arcs))
      throw std::invalid_argument("pd: under-strand labels not sequential at crossing");
    bool b_to_d = d == next_label(b, n_arcs);
    bool d_to_b = b == next_label(d, n_arcs);
    // both can hold only in the degenerate 2-arc kink, where the choice is
    // immaterial (the over and under strands share one arc class)
    if (!b_to_d && !d_to_b)
      throw std::invalid_argument("pd: over-strand labels not sequential at crossing");
    sources[a]++;
    sources[b_to_d ? b : d]++;
  }
  for (long e = 1; e <= n_arcs; ++e)
    if (sources[e] != 1)
      throw std::invalid_argument("pd: arc labels do not form a single closed cycle");
}

PDCode parse_pd(const std::string& text) {
  PDCode code;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto skip_sep = [&] {
    while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ',')) ++i;
  };
  skip_sep();
  while (i < text.size()) {
    if (text[i] != 'X' && text[i] != 'x')
      throw std::invalid_argument("pd: expected X(a,b,c,d) tuple");
    ++i;
    skip_ws();
    if (i >= text.size() || (text[i] != '(' && text[i] != '['))
      throw std::invalid_argument("pd: expected '(' after X");
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::array<long, 4> tup{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(text.substr(i), &pos);
      } catch (...) {
        throw std::invalid_argument("pd: bad arc label");
      }
      if (v < 1) throw std::invalid_argument("pd: arc labels are positive");
      tup[size_t(k)] = v;
      i += pos;
      skip_ws();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',')
          throw std::invalid_argument("pd: expected ',' inside tuple");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != close)
      throw std::invalid_argument("pd: unterminated tuple");
    ++i;
    skip_sep();
    code.crossings.push_back(tup);
  }
  if (code.crossings.empty()) throw std::invalid_argument("pd: empty code");
  code.validate();
  return code;
}

GroupPresentation pd_to_wirtinger(const PDCode& code) {
  code.validate();
  long n_arcs = long(code.arc_count());
  // union-find: over-strand entries b,d of each crossing belong to one arc
  std::vector<long> parent(size_t(n_arcs) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<long(long)> find = [&](long x) {
    while (parent[size_t(x)] != x) {
      parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
      x = parent[size_t(x)];
    }
    return x;
  };
  for (const auto& x : code.crossings) {
    long rb = find(x[1]), rd = find(x[3]);
    if (rb != rd) parent[size_t(std::max(rb, rd))] = std::min(rb, rd);
  }
  // one generator per over-arc class, numbered in order of least label
  std::map<long, int> gen_of_class;
  std::vector<std::string> names;
  for (long e = 1; e <= n_arcs; ++e) {
    long r = find(e);
    if (!gen_of_class.count(r)) {
      gen_of_class[r] = int(gen_of_class.size()) + 1;
      names.push_back("x" + std::to_string(gen_of_class[r]));
    }
  }
  GroupPresentation p;
  p.generators = names;
  p.weights.assign(names.size(), 1);
  auto gen = [&](long label) { return gen_of_class.at(find(label)); };
  for (size_t ci = 0; ci < code.crossings.size(); ++ci) {
    const auto& x = code.crossings[ci];
    long a = x[0], b = x[1], c = x[2], d = x[3];
    bool b_to_d = d == next_label(b, n_arcs);
    int o = gen(b), in = gen(a), out = gen(c);
    // over running b->d conjugates one way, d->b the other; both relators
    // keep the single-generator-conjugator shape w x w^-1 y^-1
    Word r = b_to_d ? Word{o, out, -o, -in} : Word{o, in, -o, -out};
    p.relators.push_back(reduce(r));
  }
  p.relators.pop_back();  // one Wirtinger relator is a consequence of the rest
  p.validate();
  return p;
}

}  // namespace alextor
