#include "magica/compalg.hpp"

namespace magica {

AlgebraTag AlgebraTag::of(int d) {
  if (d != 1 && d != 2 && d != 4 && d != 8) {
    throw Error("algebra dimension must be one of 1, 2, 4, 8");
  }
  return AlgebraTag{d};
}

namespace {

// Basis product by recursive doubling; base case is the ground field.
// For i, j < dim, returns (sign, index) with e_i e_j = sign * e_index.
std::pair<int, int> basis_mul(int dim, int i, int j) {
  if (dim == 1) return {1, 0};
  int h = dim / 2;
  if (i < h && j < h) return basis_mul(h, i, j);
  if (i < h && j >= h) {
    // (a,0)(0,d) = (0, d a)
    auto [s, k] = basis_mul(h, j - h, i);
    return {s, k + h};
  }
  if (i >= h && j < h) {
    // (0,b)(c,0) = (0, b conj(c))
    auto [s, k] = basis_mul(h, i - h, j);
    return {j == 0 ? s : -s, k + h};
  }
  // (0,b)(0,d) = (-conj(d) b, 0)
  auto [s, k] = basis_mul(h, j - h, i - h);
  return {(j - h) == 0 ? -s : s, k};
}

CdTable build_table(int dim) {
  CdTable t;
  t.dim = dim;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      auto [s, k] = basis_mul(dim, i, j);
      t.sign[i][j] = static_cast<std::int8_t>(s);
      t.index[i][j] = static_cast<std::uint8_t>(k);
    }
  }
  return t;
}

}  // namespace

const CdTable& cd_table(int dim) {
  static const CdTable t1 = build_table(1);
  static const CdTable t2 = build_table(2);
  static const CdTable t4 = build_table(4);
  static const CdTable t8 = build_table(8);
  switch (dim) {
    case 1: return t1;
    case 2: return t2;
    case 4: return t4;
    case 8: return t8;
    default: throw Error("algebra dimension must be one of 1, 2, 4, 8");
  }
}

CdElement::CdElement(AlgebraTag t, std::vector<GaussRat> c) : tag(t), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != tag.dim) {
    throw Error("coefficient count does not match the algebra dimension");
  }
}

bool CdElement::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CdElement::is_scalar() const {
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) return false;
  }
  return true;
}

CdElement cd_zero(AlgebraTag tag) { return CdElement(tag); }

CdElement cd_one(AlgebraTag tag) { return cd_unit(tag, 0); }

CdElement cd_unit(AlgebraTag tag, int k) {
  if (k < 0 || k >= tag.dim) throw Error("basis index out of range");
  CdElement e(tag);
  e.coeffs[k] = kOne;
  return e;
}

CdElement cd_from_scalar(AlgebraTag tag, const GaussRat& s) {
  CdElement e(tag);
  e.coeffs[0] = s;
  return e;
}

namespace {
void check_tags(const CdElement& x, const CdElement& y) {
  if (x.tag != y.tag) throw TagMismatch();
}
}  // namespace

CdElement cd_add(const CdElement& x, const CdElement& y) {
  check_tags(x, y);
  CdElement z(x.tag);
  for (int i = 0; i < x.tag.dim; ++i) z.coeffs[i] = x.coeffs[i] + y.coeffs[i];
  return z;
}

CdElement cd_sub(const CdElement& x, const CdElement& y) {
  check_tags(x, y);
  CdElement z(x.tag);
  for (int i = 0; i < x.tag.dim; ++i) z.coeffs[i] = x.coeffs[i] - y.coeffs[i];
  return z;
}

CdElement cd_neg(const CdElement& x) {
  CdElement z(x.tag);
  for (int i = 0; i < x.tag.dim; ++i) z.coeffs[i] = -x.coeffs[i];
  return z;
}

CdElement cd_scale(const GaussRat& s, const CdElement& x) {
  CdElement z(x.tag);
  for (int i = 0; i < x.tag.dim; ++i) z.coeffs[i] = s * x.coeffs[i];
  return z;
}

CdElement cd_mul(const CdElement& x, const CdElement& y) {
  check_tags(x, y);
  const CdTable& t = cd_table(x.tag.dim);
  CdElement z(x.tag);
  for (int i = 0; i < x.tag.dim; ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (int j = 0; j < x.tag.dim; ++j) {
      if (y.coeffs[j].is_zero()) continue;
      GaussRat term = x.coeffs[i] * y.coeffs[j];
      if (t.sign[i][j] < 0) term = -term;
      z.coeffs[t.index[i][j]] += term;
    }
  }
  return z;
}

CdElement cd_conj(const CdElement& x) {
  CdElement z = x;
  for (int i = 1; i < x.tag.dim; ++i) z.coeffs[i] = -z.coeffs[i];
  return z;
}

GaussRat cd_norm(const CdElement& x) {
  // scalar part of x conj(x); the cross terms cancel, leaving sum of squares
  GaussRat n;
  for (const auto& c : x.coeffs) n += c * c;
  return n;
}

GaussRat cd_trace(const CdElement& x) { return x.coeffs[0] + x.coeffs[0]; }

ConjNormTrace cd_conj_norm_trace(const CdElement& x) {
  return {cd_conj(x), cd_norm(x), cd_trace(x)};
}

CdElement cd_random(AlgebraTag tag, Rng& rng, std::int64_t bound) {
  CdElement z(tag);
  for (int i = 0; i < tag.dim; ++i) z.coeffs[i] = rng.scalar(bound);
  return z;
}

}  // namespace magica
