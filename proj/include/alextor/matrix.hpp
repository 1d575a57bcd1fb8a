#pragma once

// Dense matrices over Laurent-polynomial rings and over plain scalars.
// Exact determinants use fraction-free (Bareiss) elimination: every division
// along the way is exact in the coefficient ring.

#include <vector>

#include "alextor/laurent.hpp"

namespace alextor {

template <class T>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}
  Mat(size_t r, size_t c, T fill) : rows_(r), cols_(c), a_(r * c, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Mat without_col(size_t j) const {
    Mat r(rows_, cols_ - 1);
    for (size_t i = 0; i < rows_; ++i) {
      size_t cj = 0;
      for (size_t c = 0; c < cols_; ++c) {
        if (c == j) continue;
        r.at(i, cj++) = at(i, c);
      }
    }
    return r;
  }

  // accumulates from the first product instead of a default-constructed
  // zero: element types may carry runtime context (the prime of Fp)
  Mat operator*(const Mat& o) const {
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < o.cols_; ++j) {
        T acc = at(i, 0) * o.at(0, j);
        for (size_t k = 1; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
        r.at(i, j) = std::move(acc);
      }
    return r;
  }

private:
  size_t rows_, cols_;
  std::vector<T> a_;
};

// Bareiss fraction-free determinant over an integral domain with exact
// division. Requires size >= 1; 0x0 determinants are handled by callers,
// which know the ring's identity element.
template <class R>
LaurentPoly<R> det_exact(Mat<LaurentPoly<R>> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: square matrix required");
  size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("det_exact: empty matrix (caller supplies the unit)");
  if (n == 1) return m.at(0, 0);
  bool negate = false;
  LaurentPoly<R> prev_pivot;  // empty = "first step, divide by 1"
  for (size_t k = 0; k + 1 < n; ++k) {
    // pivot search
    if (m.at(k, k).is_zero()) {
      size_t pr = k;
      while (pr < n && m.at(pr, k).is_zero()) ++pr;
      if (pr == n) return LaurentPoly<R>();  // zero column -> det 0
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pr, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly<R> v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        if (!prev_pivot.is_zero()) {
          auto q = v.exact_div(prev_pivot);
          if (!q) throw std::logic_error("det_exact: non-exact Bareiss division");
          v = *q;
        }
        m.at(i, j) = std::move(v);
      }
      m.at(i, k) = LaurentPoly<R>();
    }
    prev_pivot = m.at(k, k);
  }
  LaurentPoly<R> d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

// LU determinant with partial pivoting for complex scalar matrices
// (the numeric sampling path).
inline Cplx det_numeric(Mat<Cplx> m) {
  size_t n = m.rows();
  if (n == 0) return Cplx(1.0, 0.0);
  Cplx det(1.0, 0.0);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    double best = std::abs(m.at(k, k));
    for (size_t i = k + 1; i < n; ++i) {
      double v = std::abs(m.at(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (best == 0.0) return Cplx(0.0, 0.0);
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      det = -det;
    }
    det *= m.at(k, k);
    Cplx inv = Cplx(1.0, 0.0) / m.at(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      Cplx f = m.at(i, k) * inv;
      if (f == Cplx(0.0, 0.0)) continue;
      for (size_t j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

// Complex inverse with magnitude pivoting (exact-zero tests are useless
// over floats).
inline Mat<Cplx> invert_numeric(Mat<Cplx> m) {
  size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("invert_numeric: square matrix required");
  Mat<Cplx> inv(n, n, Cplx(0, 0));
  for (size_t i = 0; i < n; ++i) inv.at(i, i) = Cplx(1, 0);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    double best = std::abs(m.at(k, k));
    for (size_t i = k + 1; i < n; ++i)
      if (std::abs(m.at(i, k)) > best) { best = std::abs(m.at(i, k)); piv = i; }
    if (best == 0.0) throw std::domain_error("invert_numeric: singular matrix");
    if (piv != k)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m.at(k, j), m.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    Cplx d = m.at(k, k);
    for (size_t j = 0; j < n; ++j) {
      m.at(k, j) /= d;
      inv.at(k, j) /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      Cplx f = m.at(i, k);
      if (f == Cplx(0, 0)) continue;
      for (size_t j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

// determinant over an exact field by Gaussian elimination
template <class T>
T det_field(Mat<T> m, const T& one) {
  size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det_field: square matrix required");
  T zero = one - one;
  if (n == 0) return one;
  T det = one;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m.at(piv, k) == zero) ++piv;
    if (piv == n) return zero;
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      det = zero - det;
    }
    det = det * m.at(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k) == zero) continue;
      T f = m.at(i, k) / m.at(k, k);
      for (size_t j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
    }
  }
  return det;
}

// Gauss-Jordan inverse over a field; throws on singular input.
template <class T>
Mat<T> invert_field(Mat<T> m, const T& one) {
  size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("invert_field: square matrix required");
  T zero = one - one;
  Mat<T> inv(n, n, zero);
  for (size_t i = 0; i < n; ++i) inv.at(i, i) = one;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m.at(piv, k) == zero) ++piv;
    if (piv == n) throw std::domain_error("invert_field: singular matrix");
    if (piv != k)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m.at(k, j), m.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    T d = m.at(k, k);
    for (size_t j = 0; j < n; ++j) {
      m.at(k, j) = m.at(k, j) / d;
      inv.at(k, j) = inv.at(k, j) / d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m.at(i, k) == zero) continue;
      T f = m.at(i, k);
      for (size_t j = 0; j < n; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
      }
    }
  }
  return inv;
}

}  // namespace alextor
