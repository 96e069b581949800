#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "magica/scalar.hpp"

namespace magica {

/// One of the four complex composition algebras, identified by its
/// complex dimension (1, 2, 4 or 8).
struct AlgebraTag {
  int dim = 1;

  static AlgebraTag of(int d);
  friend bool operator==(AlgebraTag a, AlgebraTag b) { return a.dim == b.dim; }
  friend bool operator!=(AlgebraTag a, AlgebraTag b) { return a.dim != b.dim; }
};

inline constexpr std::array<int, 4> kAlgebraDims{1, 2, 4, 8};

/// Structure constants of the Cayley-Dickson basis: e_i e_j = sign * e_index.
struct CdTable {
  int dim = 0;
  std::array<std::array<std::int8_t, 8>, 8> sign{};
  std::array<std::array<std::uint8_t, 8>, 8> index{};
};

const CdTable& cd_table(int dim);

/// Element of a composition algebra over the Cayley-Dickson basis
/// e_0 = 1, e_1, ..., e_{dim-1}, with Gaussian-rational coefficients.
struct CdElement {
  AlgebraTag tag;
  std::vector<GaussRat> coeffs;

  explicit CdElement(AlgebraTag t) : tag(t), coeffs(t.dim) {}
  CdElement(AlgebraTag t, std::vector<GaussRat> c);

  bool is_zero() const;
  bool is_scalar() const;
  /// Coefficient of e_0.
  const GaussRat& scalar_part() const { return coeffs[0]; }

  friend bool operator==(const CdElement& a, const CdElement& b) {
    return a.tag == b.tag && a.coeffs == b.coeffs;
  }
};

CdElement cd_zero(AlgebraTag tag);
CdElement cd_one(AlgebraTag tag);
CdElement cd_unit(AlgebraTag tag, int k);
CdElement cd_from_scalar(AlgebraTag tag, const GaussRat& s);

CdElement cd_add(const CdElement& x, const CdElement& y);
CdElement cd_sub(const CdElement& x, const CdElement& y);
CdElement cd_neg(const CdElement& x);
CdElement cd_scale(const GaussRat& s, const CdElement& x);

/// Bilinear product under the doubling rule (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).
CdElement cd_mul(const CdElement& x, const CdElement& y);

/// Conjugation: negates e_1 ... e_{dim-1}.
CdElement cd_conj(const CdElement& x);

/// Quadratic norm, the scalar part of x * conj(x).
GaussRat cd_norm(const CdElement& x);

/// Linear trace, x + conj(x) as a scalar.
GaussRat cd_trace(const CdElement& x);

struct ConjNormTrace {
  CdElement conj;
  GaussRat norm;
  GaussRat trace;
};

ConjNormTrace cd_conj_norm_trace(const CdElement& x);

CdElement cd_random(AlgebraTag tag, Rng& rng, std::int64_t bound);

}  // namespace magica
