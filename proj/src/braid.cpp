#include "alextor/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alextor {

std::vector<long> BraidWord::permutation() const {
  std::vector<long> p(static_cast<size_t>(strands), 0);
  for (size_t i = 0; i < p.size(); ++i) p[i] = long(i);
  for (int letter : letters) {
    size_t i = size_t(std::abs(letter)) - 1;
    std::swap(p[i], p[i + 1]);
  }
  return p;
}

bool BraidWord::closure_is_knot() const {
  auto p = permutation();
  long x = 0, steps = 0;
  do {
    x = p[size_t(x)];
    ++steps;
  } while (x != 0 && steps <= strands);
  return steps == strands;
}

BraidWord parse_braid(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::vector<int> letters;
  int style = 0;  // 1 = sK/SK, 2 = signed integer
  long maxi = 0;
  while (is >> tok) {
    int letter = 0;
    if (tok[0] == 's' || tok[0] == 'S') {
      if (style == 2) throw std::invalid_argument("braid: mixed token styles");
      style = 1;
      size_t pos = 0;
      long k = 0;
      try {
        k = std::stol(tok.substr(1), &pos);
      } catch (...) {
        throw std::invalid_argument("braid: bad token '" + tok + "'");
      }
      if (pos + 1 != tok.size() || k < 1)
        throw std::invalid_argument("braid: bad token '" + tok + "'");
      letter = tok[0] == 's' ? int(k) : -int(k);
    } else {
      if (style == 1) throw std::invalid_argument("braid: mixed token styles");
      style = 2;
      size_t pos = 0;
      long k = 0;
      try {
        k = std::stol(tok, &pos);
      } catch (...) {
        throw std::invalid_argument("braid: bad token '" + tok + "'");
      }
      if (pos != tok.size() || k == 0)
        throw std::invalid_argument("braid: bad token '" + tok + "'");
      letter = int(k);
    }
    letters.push_back(letter);
    maxi = std::max(maxi, long(std::abs(letter)));
  }
  if (letters.empty()) throw std::invalid_argument("braid: empty word");
  BraidWord b;
  b.strands = maxi + 1;
  b.letters = letters;
  if (!b.closure_is_knot())
    throw std::invalid_argument("braid: closure is a link, not a knot");
  return b;
}

namespace {

// images of x_1..x_n under one Artin generator
std::vector<Word> single_letter_images(long n, int letter) {
  std::vector<Word> imgs(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) imgs[size_t(k)] = {int(k) + 1};
  size_t i = size_t(std::abs(letter)) - 1;
  int xi = int(i) + 1, xj = xi + 1;
  if (letter > 0) {
    imgs[i] = {xi, xj, -xi};
    imgs[i + 1] = {xi};
  } else {
    imgs[i] = {xj};
    imgs[i + 1] = {-xj, xi, xj};
  }
  return imgs;
}

std::vector<Word> compose(const BraidWord& b, bool invert) {
  long n = b.strands;
  std::vector<Word> imgs(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) imgs[size_t(k)] = {int(k) + 1};
  // phi_w = phi_{l1} o ... o phi_{lm}: substitute letter images right-to-left
  std::vector<int> letters = b.letters;
  if (invert) {
    std::reverse(letters.begin(), letters.end());
    for (int& l : letters) l = -l;
  }
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    auto sub = single_letter_images(n, *it);
    for (auto& w : imgs) w = substitute(w, sub);
  }
  return imgs;
}

}  // namespace

std::vector<Word> artin_images(const BraidWord& b) { return compose(b, false); }
std::vector<Word> artin_images_inverse(const BraidWord& b) { return compose(b, true); }

GroupPresentation braid_presentation(const BraidWord& b) {
  auto imgs = artin_images(b);
  GroupPresentation p;
  for (long k = 1; k <= b.strands; ++k) p.generators.push_back("x" + std::to_string(k));
  p.weights.assign(size_t(b.strands), 1);
  for (long i = 0; i + 1 < b.strands; ++i) {
    Word r = concat(Word{int(i) + 1}, inverse(imgs[size_t(i)]));
    p.relators.push_back(r);
  }
  p.validate();
  return p;
}

}  // namespace alextor
