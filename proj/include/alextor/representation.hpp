#pragma once

// Linear representations of a presented group: generator -> invertible k x k
// matrix over Q, F_p, or complex floats.

#include <string>
#include <variant>
#include <vector>

#include "alextor/matrix.hpp"
#include "alextor/presentation.hpp"

namespace alextor {

struct FieldDesc {
  enum class Type { Rationals, PrimeField, ComplexFloat };
  Type type = Type::Rationals;
  long p = 0;  // for PrimeField

  std::string str() const {
    switch (type) {
      case Type::Rationals: return "Q";
      case Type::PrimeField: return "F" + std::to_string(p);
      case Type::ComplexFloat: return "C";
    }
    return "?";
  }
};

class Representation {
public:
  using QImages = std::vector<Mat<BigRat>>;
  using FpImages = std::vector<Mat<Fp>>;
  using CImages = std::vector<Mat<Cplx>>;

  Representation() = default;
  Representation(FieldDesc field, size_t dim, QImages imgs, bool special_linear)
      : field_(field), dim_(dim), images_(std::move(imgs)), sl_(special_linear) {}
  Representation(FieldDesc field, size_t dim, FpImages imgs, bool special_linear)
      : field_(field), dim_(dim), images_(std::move(imgs)), sl_(special_linear) {}
  Representation(FieldDesc field, size_t dim, CImages imgs, bool special_linear)
      : field_(field), dim_(dim), images_(std::move(imgs)), sl_(special_linear) {}

  const FieldDesc& field() const { return field_; }
  size_t dimension() const { return dim_; }
  bool special_linear() const { return sl_; }
  size_t generator_count() const;

  template <class R> const std::vector<Mat<R>>& images() const {
    return std::get<std::vector<Mat<R>>>(images_);
  }
  template <class R> bool holds() const {
    return std::holds_alternative<std::vector<Mat<R>>>(images_);
  }

  // Invariants: one invertible image per presentation generator, every
  // relator maps to the identity (exactly over exact fields; Frobenius
  // distance <= tol over C), det = 1 when flagged special-linear.
  // Throws std::invalid_argument on violation.
  void validate(const GroupPresentation& p, double complex_tol = 1e-8) const;

  // largest relator residual (Frobenius) over C; 0 for exact fields
  double relator_residual(const GroupPresentation& p) const;

  Representation to_complex() const;  // Q -> C recast (exact fields only)

private:
  FieldDesc field_;
  size_t dim_ = 1;
  std::variant<QImages, FpImages, CImages> images_;
  bool sl_ = false;
};

std::string representation_to_json(const Representation& r,
                                   const std::vector<std::string>& generator_names);
Representation representation_from_json(const std::string& text,
                                        const GroupPresentation& p);

// trivial rank-1 representation over the given field, one image per generator
Representation make_trivial(const GroupPresentation& p, const FieldDesc& f);

}  // namespace alextor
