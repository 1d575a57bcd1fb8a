#pragma once

// Words in a free group, stored as freely reduced sequences of signed
// 1-based generator indices (negative = inverse). Reduction is applied
// eagerly after every composition.

#include <string>
#include <vector>

namespace alextor {

using Word = std::vector<int>;

inline Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x == 0) continue;
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1]) return false;
  return true;
}

// image under a map generator -> integer weight
inline long weight_sum(const Word& w, const std::vector<long>& weights) {
  long s = 0;
  for (int x : w) s += x > 0 ? weights[size_t(x) - 1] : -weights[size_t(-x) - 1];
  return s;
}

// substitute each generator by its image word (used by the Artin action)
inline Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int x : w) {
    const Word& img = images[size_t(std::abs(x)) - 1];
    if (x > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce(out);
}

}  // namespace alextor
