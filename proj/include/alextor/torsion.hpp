#pragma once

// Alexander polynomial / torsion and twisted torsion via the matrix of Fox
// derivatives: with generators x_1..x_n and relators r_1..r_{n-1}, specialize
// the Jacobian (d r_i / d x_j) through alpha tensored with t^phi, delete one
// block column j, and take
//     tau = det(M_j) / det(specialize(x_j - 1)).
// Any column with a nonzero denominator determinant gives the same class up
// to +-t^l.

#include <optional>

#include "alextor/fox.hpp"
#include "alextor/representation.hpp"
#include "alextor/torsion_class.hpp"

namespace alextor {

// thrown when every candidate denominator det(specialize(x_j - 1)) vanishes;
// distinct from the torsion being zero
struct NoValidColumn : std::runtime_error {
  NoValidColumn() : std::runtime_error("twisted torsion: no valid denominator column") {}
};

// Delta_K, normalized so the lowest exponent is 0 and Delta(1) = +1.
// Throws std::domain_error when Delta(1) is not +-1 (not a knot presentation).
ZPoly alexander_polynomial(const GroupPresentation& p);

// tau(K) = Delta_K / (1 - t)
ZTorsion alexander_torsion(const GroupPresentation& p);

// exact twisted torsion over Q or F_p; zero class when the twisted complex
// is non-acyclic. `force_column` (0-based) overrides the deterministic
// first-nonzero-denominator scan, for the column-independence checks.
template <class R>
TorsionClass<R> twisted_torsion(const GroupPresentation& p, const Representation& alpha,
                                std::optional<size_t> force_column = std::nullopt);

// (deg(tau)/k + 1)/2: rational lower bound for the Seifert genus
BigRat genus_bound(Degree tau_degree, long k);

struct FiberednessVerdict {
  enum class Status { Consistent, CertifiedNonFibered, Inconclusive };
  Status status = Status::Inconclusive;
  // certificates: a representation with vanishing torsion, or a violated
  // necessary condition of the fibered case
  std::optional<size_t> witness_rep;  // index into the reps argument
  std::string reason;
};

FiberednessVerdict fibered_check(const GroupPresentation& p, std::optional<long> known_genus,
                                 const std::vector<Representation>& reps);

// --- implementation of the exact twisted torsion ---------------------------

namespace detail {

template <class R>
LaurentPoly<R> one_poly(const std::vector<Mat<R>>& images) {
  return LaurentPoly<R>::constant(identity_entry<R>(images));
}

template <class R>
Mat<LaurentPoly<R>> wada_block_matrix(const GroupPresentation& p,
                                      const std::vector<Mat<R>>& images,
                                      const std::vector<Mat<R>>& inverses, size_t k,
                                      size_t delete_col) {
  size_t n = p.rank();
  Mat<LaurentPoly<R>> big((n - 1) * k, (n - 1) * k);
  size_t bj = 0;
  for (size_t j = 0; j < n; ++j) {
    if (j == delete_col) continue;
    for (size_t i = 0; i + 1 < n; ++i) {
      GroupRingElement d = fox_derivative(p.relators[i], int(j) + 1);
      Mat<LaurentPoly<R>> blk = specialize(d, images, inverses, p.weights, k);
      for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) big.at(i * k + a, bj * k + b) = blk.at(a, b);
    }
    ++bj;
  }
  return big;
}

// det(t^{w_j} alpha(x_j) - I)
template <class R>
LaurentPoly<R> denominator_poly(const GroupPresentation& p,
                                const std::vector<Mat<R>>& images,
                                const std::vector<Mat<R>>& inverses, size_t k, size_t j) {
  GroupRingElement e = GroupRingElement::word(Word{int(j) + 1}) - GroupRingElement::one();
  Mat<LaurentPoly<R>> m = specialize(e, images, inverses, p.weights, k);
  return det_exact(m);
}

template <class R>
std::vector<Mat<R>> invert_images(const std::vector<Mat<R>>& images);

}  // namespace detail

template <class R>
TorsionClass<R> twisted_torsion(const GroupPresentation& p, const Representation& alpha,
                                std::optional<size_t> force_column) {
  p.validate();
  const auto& images = alpha.images<R>();
  if (images.size() != p.rank())
    throw std::invalid_argument("twisted_torsion: one image per generator required");
  size_t k = alpha.dimension();
  auto inverses = detail::invert_images<R>(images);

  size_t n = p.rank();
  std::optional<size_t> col;
  LaurentPoly<R> den;
  if (force_column) {
    den = detail::denominator_poly(p, images, inverses, k, *force_column);
    if (den.is_zero()) throw NoValidColumn();
    col = *force_column;
  } else {
    for (size_t j = 0; j < n; ++j) {
      den = detail::denominator_poly(p, images, inverses, k, j);
      if (!den.is_zero()) { col = j; break; }
    }
    if (!col) throw NoValidColumn();
  }

  LaurentPoly<R> num;
  if (n == 1) {
    num = detail::one_poly(images);  // empty Jacobian: torsion of <x | >
  } else {
    num = det_exact(detail::wada_block_matrix(p, images, inverses, k, *col));
  }
  return TorsionClass<R>(num, den);
}

}  // namespace alextor
