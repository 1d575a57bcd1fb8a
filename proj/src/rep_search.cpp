#include "alextor/rep_search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include <omp.h>

namespace alextor {

namespace {

// 2x2 matrix over F_p with det 1, packed for cheap value semantics
struct M2 {
  long a, b, c, d;

  bool operator==(const M2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator<(const M2& o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
  }
};

struct SL2 {
  long p;
  std::vector<M2> elements;
  std::vector<M2> class_reps;                 // one per conjugacy class
  std::map<M2, std::vector<M2>> class_of;     // representative -> members
  std::map<M2, M2> rep_of;                    // element -> its class representative

  M2 mul(const M2& x, const M2& y) const {
    return {(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p,
            (x.c * y.a + x.d * y.c) % p, (x.c * y.b + x.d * y.d) % p};
  }
  M2 inv(const M2& x) const {
    // adjugate; det = 1
    return {x.d, (p - x.b) % p, (p - x.c) % p, x.a};
  }
  static M2 identity() { return {1, 0, 0, 1}; }
  bool commute(const M2& x, const M2& y) const { return mul(x, y) == mul(y, x); }
};

SL2 build_group(long p) {
  SL2 g;
  g.p = p;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) g.elements.push_back({a, b, c, d});
  std::set<M2> seen;
  for (const M2& x : g.elements) {
    if (seen.count(x)) continue;
    std::vector<M2> orbit;
    std::set<M2> orbit_set;
    for (const M2& h : g.elements) {
      M2 y = g.mul(g.mul(h, x), g.inv(h));
      if (orbit_set.insert(y).second) orbit.push_back(y);
    }
    std::sort(orbit.begin(), orbit.end());
    M2 rep = orbit.front();
    g.class_reps.push_back(rep);
    g.class_of[rep] = orbit;
    for (const M2& y : orbit) {
      g.rep_of[y] = rep;
      seen.insert(y);
    }
  }
  std::sort(g.class_reps.begin(), g.class_reps.end());
  return g;
}

struct SearchCtx {
  const SL2* g;
  const GroupPresentation* pres;
  std::vector<std::vector<M2>> candidates;  // per generator
  size_t node_cap;
};

bool word_is_identity(const SL2& g, const Word& w, const std::vector<M2>& imgs) {
  M2 m = SL2::identity();
  for (int l : w) m = g.mul(m, l > 0 ? imgs[size_t(l) - 1] : g.inv(imgs[size_t(-l) - 1]));
  return m == SL2::identity();
}

// relators fully supported by the assigned generators must map to I
bool assigned_relators_ok(const SearchCtx& ctx, const std::vector<M2>& imgs,
                          const std::vector<bool>& assigned) {
  for (const Word& r : ctx.pres->relators) {
    bool full = true;
    for (int l : r)
      if (!assigned[size_t(std::abs(l)) - 1]) { full = false; break; }
    if (full && !word_is_identity(*ctx.g, r, imgs)) return false;
  }
  return true;
}

// solve a relator u x^e v = 1 for the unique unassigned generator x occurring
// exactly once; returns false when the forced value is outside the candidate
// set or a contradiction appears
bool propagate(const SearchCtx& ctx, std::vector<M2>& imgs, std::vector<bool>& assigned) {
  const SL2& g = *ctx.g;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Word& r : ctx.pres->relators) {
      int target = 0, occurrences = 0;
      for (int l : r) {
        if (!assigned[size_t(std::abs(l)) - 1]) {
          if (target == 0 || std::abs(l) == target) {
            target = std::abs(l);
            ++occurrences;
          } else {
            occurrences = -1;  // two distinct unassigned generators
            break;
          }
        }
      }
      if (target == 0 || occurrences != 1) continue;
      M2 u = SL2::identity(), v = SL2::identity();
      int sign = 0;
      bool before = true;
      for (int l : r) {
        if (std::abs(l) == target && !assigned[size_t(std::abs(l)) - 1]) {
          sign = l > 0 ? 1 : -1;
          before = false;
          continue;
        }
        M2 m = l > 0 ? imgs[size_t(l) - 1] : g.inv(imgs[size_t(-l) - 1]);
        if (before)
          u = g.mul(u, m);
        else
          v = g.mul(v, m);
      }
      // u x^sign v = 1  =>  x^sign = u^-1 v^-1
      M2 x = g.mul(g.inv(u), g.inv(v));
      if (sign < 0) x = g.inv(x);
      const auto& allowed = ctx.candidates[size_t(target) - 1];
      if (std::find(allowed.begin(), allowed.end(), x) == allowed.end()) return false;
      imgs[size_t(target) - 1] = x;
      assigned[size_t(target) - 1] = true;
      if (!assigned_relators_ok(ctx, imgs, assigned)) return false;
      progress = true;
    }
  }
  return true;
}

bool nonabelian(const SL2& g, const std::vector<M2>& imgs) {
  for (size_t i = 0; i < imgs.size(); ++i)
    for (size_t j = i + 1; j < imgs.size(); ++j)
      if (!g.commute(imgs[i], imgs[j])) return true;
  return false;
}

std::vector<long> canonical_key(const SL2& g, const std::vector<M2>& imgs) {
  std::vector<long> best;
  for (const M2& h : g.elements) {
    std::vector<long> key;
    key.reserve(imgs.size() * 4);
    M2 hi = g.inv(h);
    for (const M2& m : imgs) {
      M2 c = g.mul(g.mul(h, m), hi);
      key.push_back(c.a);
      key.push_back(c.b);
      key.push_back(c.c);
      key.push_back(c.d);
    }
    if (best.empty() || key < best) best = key;
  }
  return best;
}

void dfs(const SearchCtx& ctx, std::vector<M2>& imgs, std::vector<bool>& assigned,
         size_t& nodes, int budget, std::vector<std::vector<M2>>& out) {
  if (int(out.size()) >= budget || nodes > ctx.node_cap) return;
  ++nodes;
  size_t n = imgs.size();
  size_t next = n;
  for (size_t i = 0; i < n; ++i)
    if (!assigned[i]) { next = i; break; }
  if (next == n) {
    // complete: relators already verified incrementally
    if (nonabelian(*ctx.g, imgs)) out.push_back(imgs);
    return;
  }
  for (const M2& cand : ctx.candidates[next]) {
    std::vector<M2> imgs2 = imgs;
    std::vector<bool> assigned2 = assigned;
    imgs2[next] = cand;
    assigned2[next] = true;
    if (!assigned_relators_ok(ctx, imgs2, assigned2)) continue;
    if (!propagate(ctx, imgs2, assigned2)) continue;
    dfs(ctx, imgs2, assigned2, nodes, budget, out);
    if (int(out.size()) >= budget || nodes > ctx.node_cap) return;
  }
}

}  // namespace

std::vector<Representation> rep_search_sl2_fp(const GroupPresentation& p, long prime,
                                              const RepSearchOptions& opt) {
  p.validate();
  if (prime != 2 && prime != 3 && prime != 5 && prime != 7 && prime != 11 && prime != 13)
    throw std::invalid_argument("rep_search: p must be one of 2, 3, 5, 7, 11, 13");
  if (p.rank() > 12) throw std::invalid_argument("rep_search: at most 12 generators");
  SL2 g = build_group(prime);

  bool all_meridional = std::all_of(p.weights.begin(), p.weights.end(),
                                    [](long w) { return w == 1; });
  if (!all_meridional && p.rank() > 4)
    return {};  // image enumeration without the conjugate-meridian cut is infeasible

  // root branches: (first image class representative, second image candidate)
  struct Branch {
    M2 first;
    M2 second;
  };
  std::vector<Branch> branches;
  std::vector<std::vector<M2>> cand_template(p.rank());
  for (const M2& rep : g.class_reps) {
    std::vector<M2> others =
        all_meridional ? g.class_of.at(rep) : g.elements;  // candidates per other generator
    if (p.rank() == 1) {
      branches.push_back({rep, SL2::identity()});
      continue;
    }
    for (const M2& c2 : others) branches.push_back({rep, c2});
  }

  int per_branch_budget = opt.budget;
  std::vector<std::vector<std::vector<M2>>> found(branches.size());

  auto run_branch = [&](size_t bi) {
    const Branch& br = branches[bi];
    SearchCtx ctx;
    ctx.g = &g;
    ctx.pres = &p;
    ctx.node_cap = opt.node_cap;
    ctx.candidates.assign(p.rank(), all_meridional ? g.class_of.at(g.rep_of.at(br.first))
                                                   : g.elements);
    ctx.candidates[0] = {br.first};
    std::vector<M2> imgs(p.rank(), SL2::identity());
    std::vector<bool> assigned(p.rank(), false);
    imgs[0] = br.first;
    assigned[0] = true;
    if (p.rank() > 1) {
      imgs[1] = br.second;
      assigned[1] = true;
    }
    if (!assigned_relators_ok(ctx, imgs, assigned)) return;
    if (!propagate(ctx, imgs, assigned)) return;
    size_t nodes = 0;
    dfs(ctx, imgs, assigned, nodes, per_branch_budget, found[bi]);
  };

  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t bi = 0; bi < branches.size(); ++bi) run_branch(bi);
  } else {
    for (size_t bi = 0; bi < branches.size(); ++bi) run_branch(bi);
  }

  // ordered merge + conjugation dedupe, independent of thread schedule
  std::set<std::vector<long>> seen;
  std::vector<Representation> out;
  FieldDesc field{FieldDesc::Type::PrimeField, prime};
  for (size_t bi = 0; bi < branches.size() && int(out.size()) < opt.budget; ++bi) {
    for (const auto& imgs : found[bi]) {
      if (int(out.size()) >= opt.budget) break;
      if (!seen.insert(canonical_key(g, imgs)).second) continue;
      Representation::FpImages mats;
      mats.reserve(imgs.size());
      for (const M2& m : imgs) {
        Mat<Fp> mm(2, 2, Fp(0, prime));
        mm.at(0, 0) = Fp(m.a, prime);
        mm.at(0, 1) = Fp(m.b, prime);
        mm.at(1, 0) = Fp(m.c, prime);
        mm.at(1, 1) = Fp(m.d, prime);
        mats.push_back(mm);
      }
      Representation rep(field, 2, mats, true);
      rep.validate(p);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace alextor
