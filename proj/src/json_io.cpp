#include "magica/json_io.hpp"

namespace magica {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string require_string(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a scalar string");
  return j.get<std::string>();
}

}  // namespace

Json scalar_to_json(const GaussRat& x) { return print_gauss(x); }

GaussRat scalar_from_json(const Json& j) { return parse_gauss(require_string(j)); }

Json cd_to_json(const CdElement& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs) coeffs.push_back(print_gauss(c));
  return Json{{"dim", x.tag.dim}, {"coeffs", std::move(coeffs)}};
}

CdElement cd_from_json(const Json& j) {
  int dim = 0;
  try {
    dim = require(j, "dim").get<int>();
  } catch (const Json::exception&) {
    throw ParseError("'dim' must be an integer");
  }
  AlgebraTag tag = AlgebraTag::of(dim);
  const Json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != dim) {
    throw ParseError("'coeffs' must list exactly dim scalars");
  }
  CdElement x(tag);
  for (int i = 0; i < dim; ++i) x.coeffs[i] = scalar_from_json(coeffs.at(i));
  return x;
}

Json jordan_to_json(const JordanElement& a) {
  Json diag = Json::array();
  for (const auto& r : a.diag) diag.push_back(print_gauss(r));
  Json off = Json::array();
  for (const auto& x : a.off) off.push_back(cd_to_json(x));
  return Json{{"diag", std::move(diag)}, {"off", std::move(off)}};
}

JordanElement jordan_from_json(const Json& j) {
  const Json& diag = require(j, "diag");
  const Json& off = require(j, "off");
  if (!diag.is_array() || diag.size() != 3) throw ParseError("'diag' must list 3 scalars");
  if (!off.is_array() || off.size() != 3) throw ParseError("'off' must list 3 elements");
  CdElement x1 = cd_from_json(off.at(0));
  JordanElement a(x1.tag);
  a.off[0] = std::move(x1);
  for (int i = 1; i < 3; ++i) {
    CdElement xi = cd_from_json(off.at(i));
    if (xi.tag != a.tag) throw ParseError("off-diagonal slots disagree on the algebra");
    a.off[i] = std::move(xi);
  }
  for (int i = 0; i < 3; ++i) a.diag[i] = scalar_from_json(diag.at(i));
  return a;
}

Json fts_to_json(const FtsVector& x) {
  return Json{{"alpha", print_gauss(x.alpha)},
              {"A", jordan_to_json(x.a)},
              {"B", jordan_to_json(x.b)},
              {"beta", print_gauss(x.beta)}};
}

FtsVector fts_from_json(const Json& j) {
  JordanElement a = jordan_from_json(require(j, "A"));
  JordanElement b = jordan_from_json(require(j, "B"));
  if (a.tag != b.tag) throw ParseError("A and B disagree on the algebra");
  return {scalar_from_json(require(j, "alpha")), std::move(a), std::move(b),
          scalar_from_json(require(j, "beta"))};
}

Json quartic_to_json(const QuarticCoeffs& qc) {
  Json monomials = Json::array();
  for (const char* name : kQuarticMonomialNames) monomials.push_back(name);
  Json coeffs = Json::array();
  for (const auto& c : qc.c) coeffs.push_back(print_gauss(c));
  return Json{{"algebra", qc.tag.dim}, {"monomials", std::move(monomials)},
              {"coeffs", std::move(coeffs)}};
}

QuarticCoeffs quartic_from_json(const Json& j) {
  int dim = 0;
  try {
    dim = require(j, "algebra").get<int>();
  } catch (const Json::exception&) {
    throw ParseError("'algebra' must be an integer");
  }
  QuarticCoeffs qc{AlgebraTag::of(dim), {}};
  const Json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array() || coeffs.size() != 6) throw ParseError("'coeffs' must list 6 scalars");
  for (int i = 0; i < 6; ++i) qc.c[i] = scalar_from_json(coeffs.at(i));
  return qc;
}

}  // namespace magica
