#pragma once

#include <array>
#include <vector>

#include "magica/compalg.hpp"

namespace magica {

/// Hermitian 3x3 matrix over a composition algebra, in slot form
///
///     [[r1,       x3, conj(x2)],
///      [conj(x3), r2,       x1],
///      [x2, conj(x1),       r3]].
///
/// The space has dimension 3*dim + 3 and carries the cubic norm; the dual
/// space is identified with it through the trace pairing.
struct JordanElement {
  AlgebraTag tag;
  std::array<GaussRat, 3> diag;
  std::array<CdElement, 3> off;

  explicit JordanElement(AlgebraTag t)
      : tag(t), diag{}, off{cd_zero(t), cd_zero(t), cd_zero(t)} {}

  bool is_zero() const;

  friend bool operator==(const JordanElement& a, const JordanElement& b) {
    return a.tag == b.tag && a.diag == b.diag && a.off == b.off;
  }
};

JordanElement j_zero(AlgebraTag tag);
JordanElement j_identity(AlgebraTag tag);
JordanElement j_diag(AlgebraTag tag, const GaussRat& r1, const GaussRat& r2, const GaussRat& r3);
/// E_{kk}, the diagonal idempotent in slot k (0-based).
JordanElement j_diag_unit(AlgebraTag tag, int k);

JordanElement j_add(const JordanElement& a, const JordanElement& b);
JordanElement j_sub(const JordanElement& a, const JordanElement& b);
JordanElement j_neg(const JordanElement& a);
JordanElement j_scale(const GaussRat& s, const JordanElement& a);
JordanElement j_random(AlgebraTag tag, Rng& rng, std::int64_t bound);

/// Flat coordinates (r1, r2, r3, x1 coords, x2 coords, x3 coords).
int j_flat_dim(AlgebraTag tag);
std::vector<GaussRat> j_flatten(const JordanElement& a);
JordanElement j_unflatten(AlgebraTag tag, const std::vector<GaussRat>& coords);

/// Basis in flat-coordinate order: E11, E22, E33, then each off slot
/// walked through the Cayley-Dickson units.
std::vector<JordanElement> j_basis(AlgebraTag tag);

/// Cubic norm N(A) = r1 r2 r3 - sum r_i n(x_i) + t((x1 x2) x3).
GaussRat det_norm(const JordanElement& a);

/// Adjugate A#: diagonal (r2 r3 - n(x1), ...), off slot i equal to
/// conj(x_k) conj(x_j) - r_i x_i for (i,j,k) cyclic. Satisfies
/// <A#, A> = 3 N(A) and (A#)# = N(A) A; the identity suite pins the
/// convention.
JordanElement sharp(const JordanElement& a);

/// Polarized adjugate A x B = (A+B)# - A# - B#.
JordanElement cross(const JordanElement& a, const JordanElement& b);

/// Trace pairing <A, B> = sum r_i(A) r_i(B) + sum t(x_i(A) conj(x_i(B))).
GaussRat trace_pair(const JordanElement& a, const JordanElement& b);

/// 0, 1, 2 or 3 by vanishing of A, A#, N(A).
int rank_of(const JordanElement& a);

/// Hermitian Gram element of the column (u1, u2, t) with scalar third
/// slot; nonzero results have rank exactly 1.
JordanElement gram_rank1(const CdElement& u1, const CdElement& u2, const GaussRat& t);

/// Random rank-1 element (a generic Gram element).
JordanElement random_rank1(AlgebraTag tag, Rng& rng, std::int64_t bound);

/// Random rank-2 element (sum of two generic rank-1 elements, validated).
JordanElement random_rank2(AlgebraTag tag, Rng& rng, std::int64_t bound);

/// Simultaneous row/column permutation; perm maps new slot -> old slot.
JordanElement permute_slots(const JordanElement& a, const std::array<int, 3>& perm);

}  // namespace magica
