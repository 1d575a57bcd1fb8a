#include "alextor/representation.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace alextor {

using nlohmann::json;

size_t Representation::generator_count() const {
  return std::visit([](const auto& v) { return v.size(); }, images_);
}

namespace {

template <class R>
Mat<R> word_image(const Word& w, const std::vector<Mat<R>>& imgs,
                  const std::vector<Mat<R>>& invs, size_t k, const R& one, const R& zero) {
  Mat<R> m(k, k, zero);
  for (size_t i = 0; i < k; ++i) m.at(i, i) = one;
  for (int letter : w)
    m = m * (letter > 0 ? imgs[size_t(letter) - 1] : invs[size_t(-letter) - 1]);
  return m;
}

template <class R>
void validate_exact(const GroupPresentation& p, const std::vector<Mat<R>>& imgs, size_t k,
                    const R& one, bool sl) {
  R zero = one - one;
  std::vector<Mat<R>> invs;
  for (const auto& m : imgs) {
    if (m.rows() != k || m.cols() != k)
      throw std::invalid_argument("representation: image dimension mismatch");
    invs.push_back(invert_field(m, one));  // throws when singular
    if (sl && !(det_field(m, one) == one))
      throw std::invalid_argument("representation: image determinant != 1 (special-linear flag)");
  }
  for (const auto& r : p.relators) {
    Mat<R> m = word_image(r, imgs, invs, k, one, zero);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j)
        if (!(m.at(i, j) == (i == j ? one : zero)))
          throw std::invalid_argument("representation: relator does not map to the identity");
  }
}

double complex_relator_residual(const GroupPresentation& p, const std::vector<Mat<Cplx>>& imgs,
                                size_t k) {
  std::vector<Mat<Cplx>> invs;
  for (const auto& m : imgs) invs.push_back(invert_numeric(m));
  double worst = 0.0;
  for (const auto& r : p.relators) {
    Mat<Cplx> m = word_image(r, imgs, invs, k, Cplx(1, 0), Cplx(0, 0));
    double fr = 0.0;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) {
        Cplx diff = m.at(i, j) - (i == j ? Cplx(1, 0) : Cplx(0, 0));
        fr += std::norm(diff);
      }
    worst = std::max(worst, std::sqrt(fr));
  }
  return worst;
}

}  // namespace

void Representation::validate(const GroupPresentation& p, double complex_tol) const {
  if (generator_count() != p.rank())
    throw std::invalid_argument("representation: one image per generator required");
  if (holds<BigRat>()) {
    validate_exact(p, images<BigRat>(), dim_, BigRat(1), sl_);
  } else if (holds<Fp>()) {
    long prime = images<Fp>().at(0).at(0, 0).prime();
    validate_exact(p, images<Fp>(), dim_, Fp(1, prime), sl_);
  } else {
    const auto& imgs = images<Cplx>();
    for (const auto& m : imgs) {
      if (m.rows() != dim_ || m.cols() != dim_)
        throw std::invalid_argument("representation: image dimension mismatch");
      invert_numeric(m);  // throws when singular
      if (sl_) {
        Cplx d = det_numeric(m);
        if (std::abs(d - Cplx(1, 0)) > complex_tol)
          throw std::invalid_argument("representation: image determinant != 1 (special-linear flag)");
      }
    }
    double res = complex_relator_residual(p, imgs, dim_);
    if (res > complex_tol)
      throw std::invalid_argument("representation: relator residual " + std::to_string(res) +
                                  " exceeds tolerance");
  }
}

double Representation::relator_residual(const GroupPresentation& p) const {
  if (!holds<Cplx>()) return 0.0;
  return complex_relator_residual(p, images<Cplx>(), dim_);
}

Representation Representation::to_complex() const {
  if (holds<Cplx>()) return *this;
  if (!holds<BigRat>())
    throw std::invalid_argument("to_complex: only rational representations can be recast");
  CImages out;
  for (const auto& m : images<BigRat>()) {
    Mat<Cplx> c(m.rows(), m.cols(), Cplx(0, 0));
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) c.at(i, j) = Cplx(m.at(i, j).get_d(), 0.0);
    out.push_back(c);
  }
  FieldDesc f;
  f.type = FieldDesc::Type::ComplexFloat;
  return Representation(f, dim_, out, sl_);
}

namespace {

json entry_to_json(const BigRat& c) {
  BigRat v = c;
  v.canonicalize();
  return v.get_str();
}
json entry_to_json(const Fp& c) { return c.value(); }
json entry_to_json(const Cplx& c) { return json::array({c.real(), c.imag()}); }

template <class R>
json images_to_json(const Representation& r, const std::vector<std::string>& names) {
  json imgs = json::object();
  const auto& v = r.images<R>();
  for (size_t g = 0; g < v.size(); ++g) {
    json rows = json::array();
    for (size_t i = 0; i < r.dimension(); ++i) {
      json row = json::array();
      for (size_t j = 0; j < r.dimension(); ++j) row.push_back(entry_to_json(v[g].at(i, j)));
      rows.push_back(row);
    }
    imgs[names.at(g)] = rows;
  }
  return imgs;
}

BigRat rat_from_json(const json& e) {
  if (e.is_number_integer()) return BigRat(long(e.get<long>()));
  std::string s = e.get<std::string>();
  BigRat r(s);
  r.canonicalize();
  return r;
}

}  // namespace

std::string representation_to_json(const Representation& r,
                                   const std::vector<std::string>& names) {
  json j;
  j["dimension"] = r.dimension();
  if (r.field().type == FieldDesc::Type::Rationals) {
    j["field"] = {{"type", "Q"}};
    j["images"] = images_to_json<BigRat>(r, names);
  } else if (r.field().type == FieldDesc::Type::PrimeField) {
    j["field"] = {{"type", "Fp"}, {"p", r.field().p}};
    j["images"] = images_to_json<Fp>(r, names);
  } else {
    j["field"] = {{"type", "C"}};
    j["images"] = images_to_json<Cplx>(r, names);
  }
  j["special_linear"] = r.special_linear();
  return j.dump(2);
}

Representation representation_from_json(const std::string& text, const GroupPresentation& p) {
  json j = json::parse(text);
  size_t k = j.at("dimension").get<size_t>();
  std::string ft = j.at("field").at("type").get<std::string>();
  bool sl = j.value("special_linear", false);
  const json& imgs = j.at("images");

  auto matrix_rows = [&](const std::string& name) -> const json& {
    if (!imgs.contains(name))
      throw std::invalid_argument("representation: missing image for generator '" + name + "'");
    return imgs.at(name);
  };

  Representation out;
  FieldDesc f;
  if (ft == "Q") {
    f.type = FieldDesc::Type::Rationals;
    Representation::QImages v;
    for (const auto& name : p.generators) {
      const json& rows = matrix_rows(name);
      Mat<BigRat> m(k, k, BigRat(0));
      for (size_t i = 0; i < k; ++i)
        for (size_t jx = 0; jx < k; ++jx) m.at(i, jx) = rat_from_json(rows.at(i).at(jx));
      v.push_back(m);
    }
    out = Representation(f, k, v, sl);
  } else if (ft == "Fp") {
    f.type = FieldDesc::Type::PrimeField;
    f.p = j.at("field").at("p").get<long>();
    Representation::FpImages v;
    for (const auto& name : p.generators) {
      const json& rows = matrix_rows(name);
      Mat<Fp> m(k, k, Fp(0, f.p));
      for (size_t i = 0; i < k; ++i)
        for (size_t jx = 0; jx < k; ++jx) m.at(i, jx) = Fp(rows.at(i).at(jx).get<long>(), f.p);
      v.push_back(m);
    }
    out = Representation(f, k, v, sl);
  } else if (ft == "C") {
    f.type = FieldDesc::Type::ComplexFloat;
    Representation::CImages v;
    for (const auto& name : p.generators) {
      const json& rows = matrix_rows(name);
      Mat<Cplx> m(k, k, Cplx(0, 0));
      for (size_t i = 0; i < k; ++i)
        for (size_t jx = 0; jx < k; ++jx) {
          const json& e = rows.at(i).at(jx);
          m.at(i, jx) = Cplx(e.at(0).get<double>(), e.at(1).get<double>());
        }
      v.push_back(m);
    }
    out = Representation(f, k, v, sl);
  } else {
    throw std::invalid_argument("representation: unknown field type '" + ft + "'");
  }
  out.validate(p);
  return out;
}

// trivial rank-1 representation over the given field, one image per generator
Representation make_trivial(const GroupPresentation& p, const FieldDesc& f) {
  switch (f.type) {
    case FieldDesc::Type::Rationals: {
      Representation::QImages v(p.rank(), Mat<BigRat>(1, 1, BigRat(1)));
      return Representation(f, 1, v, true);
    }
    case FieldDesc::Type::PrimeField: {
      Representation::FpImages v(p.rank(), Mat<Fp>(1, 1, Fp(1, f.p)));
      return Representation(f, 1, v, true);
    }
    case FieldDesc::Type::ComplexFloat: {
      Representation::CImages v(p.rank(), Mat<Cplx>(1, 1, Cplx(1, 0)));
      return Representation(f, 1, v, true);
    }
  }
  throw std::logic_error("make_trivial: unreachable");
}

}  // namespace alextor
