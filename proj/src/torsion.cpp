#include "alextor/torsion.hpp"

namespace alextor {

namespace {

// linear extension of w -> t^{phi(w)} (the trivial rank-1 twist over Z)
ZPoly abelianize(const GroupRingElement& e, const std::vector<long>& weights) {
  ZPoly p;
  for (const auto& [w, c] : e.terms())
    p = p + ZPoly::monomial(c, weight_sum(w, weights));
  return p;
}

}  // namespace

ZPoly alexander_polynomial(const GroupPresentation& p) {
  p.validate();
  size_t n = p.rank();
  // column with nonzero weight so the denominator t^{w_j} - 1 is nonzero
  size_t col = 0;
  while (col < n && p.weights[col] == 0) ++col;
  if (col == n) throw std::domain_error("alexander: no generator of nonzero weight");

  ZPoly num;
  if (n == 1) {
    num = ZPoly::constant(1);
  } else {
    Mat<ZPoly> m(n - 1, n - 1);
    size_t bj = 0;
    for (size_t j = 0; j < n; ++j) {
      if (j == col) continue;
      for (size_t i = 0; i + 1 < n; ++i)
        m.at(i, bj) = abelianize(fox_derivative(p.relators[i], int(j) + 1), p.weights);
      ++bj;
    }
    num = det_exact(m);
  }
  // tau = num / (t^{w_col} - 1) and Delta = tau * (1 - t), up to units
  ZPoly tminus1 = ZPoly::monomial(1, 1) + ZPoly::constant(-1);
  ZPoly den = ZPoly::monomial(1, p.weights[col]) + ZPoly::constant(-1);
  ZPoly prod = num * tminus1;
  auto delta = prod.exact_div(den);
  if (!delta)
    throw std::domain_error("alexander: Jacobian determinant not divisible (corrupted presentation)");
  if (delta->is_zero())
    throw std::domain_error("alexander: vanishing polynomial (not a knot group presentation)");
  ZPoly d = delta->shifted(-delta->lowest_exp());
  BigInt at1 = d.eval(BigInt(1), BigInt(1));
  if (at1 != 1 && at1 != -1)
    throw std::domain_error("alexander: Delta(1) != +-1 (not a knot group presentation)");
  if (at1 == -1) d = -d;
  return d;
}

ZTorsion alexander_torsion(const GroupPresentation& p) {
  ZPoly delta = alexander_polynomial(p);
  ZPoly one_minus_t = ZPoly::constant(1) + ZPoly::monomial(-1, 1);
  return ZTorsion(delta, one_minus_t);
}

BigRat genus_bound(Degree tau_degree, long k) {
  if (!tau_degree.finite) throw std::domain_error("genus_bound: zero torsion gives no bound");
  if (k < 1) throw std::invalid_argument("genus_bound: k >= 1");
  BigRat b(tau_degree.value + k, 2 * k);
  b.canonicalize();
  return b;
}

namespace detail {

template <>
std::vector<Mat<BigRat>> invert_images<BigRat>(const std::vector<Mat<BigRat>>& images) {
  std::vector<Mat<BigRat>> out;
  out.reserve(images.size());
  for (const auto& m : images) out.push_back(invert_field(m, BigRat(1)));
  return out;
}

template <>
std::vector<Mat<Fp>> invert_images<Fp>(const std::vector<Mat<Fp>>& images) {
  std::vector<Mat<Fp>> out;
  out.reserve(images.size());
  Fp one(1, images.at(0).at(0, 0).prime());
  for (const auto& m : images) out.push_back(invert_field(m, one));
  return out;
}

}  // namespace detail

namespace {

bool qtorsion_is_monic(const QTorsion& t) {
  QTorsion n = normalize_units(t);
  if (n.is_zero()) return false;
  return abs(n.num().leading_coeff()) == 1 && abs(n.den().leading_coeff()) == 1;
}

}  // namespace

FiberednessVerdict fibered_check(const GroupPresentation& p, std::optional<long> known_genus,
                                 const std::vector<Representation>& reps) {
  FiberednessVerdict v;
  bool inconclusive_hit = false;

  ZTorsion classical = normalize_units(alexander_torsion(p));
  Degree d = classical.degree();
  if (known_genus) {
    long want = 2 * (*known_genus) - 1;
    if (d != Degree::of(want)) {
      v.status = FiberednessVerdict::Status::CertifiedNonFibered;
      v.reason = "classical torsion degree " + d.str() + " != 2*genus-1 = " + std::to_string(want);
      return v;
    }
  }
  if (!classical.is_monic()) {
    v.status = FiberednessVerdict::Status::CertifiedNonFibered;
    v.reason = "classical torsion is not monic";
    return v;
  }

  for (size_t i = 0; i < reps.size(); ++i) {
    const Representation& alpha = reps[i];
    long k = long(alpha.dimension());
    try {
      Degree dd;
      bool zero = false, monic_ok = true;
      if (alpha.holds<BigRat>()) {
        QTorsion t = twisted_torsion<BigRat>(p, alpha);
        zero = t.is_zero();
        dd = t.degree();
        monic_ok = zero ? true : qtorsion_is_monic(t);
      } else if (alpha.holds<Fp>()) {
        FpTorsion t = twisted_torsion<Fp>(p, alpha);
        zero = t.is_zero();
        dd = t.degree();
      } else {
        inconclusive_hit = true;  // complex representations: numeric path only
        continue;
      }
      if (zero) {
        v.status = FiberednessVerdict::Status::CertifiedNonFibered;
        v.witness_rep = i;
        v.reason = "twisted torsion vanishes (non-acyclic twisted complex)";
        return v;
      }
      if (known_genus && dd != Degree::of(k * (2 * (*known_genus) - 1))) {
        v.status = FiberednessVerdict::Status::CertifiedNonFibered;
        v.witness_rep = i;
        v.reason = "twisted torsion degree " + dd.str() + " != k(2*genus-1)";
        return v;
      }
      if (!monic_ok) {
        v.status = FiberednessVerdict::Status::CertifiedNonFibered;
        v.witness_rep = i;
        v.reason = "twisted torsion is not monic";
        return v;
      }
    } catch (const NoValidColumn&) {
      inconclusive_hit = true;
    }
  }

  v.status = inconclusive_hit ? FiberednessVerdict::Status::Inconclusive
                              : FiberednessVerdict::Status::Consistent;
  v.reason = inconclusive_hit ? "some representations could not be evaluated"
                              : "all computed torsions satisfy the fibered necessary conditions";
  return v;
}

}  // namespace alextor
