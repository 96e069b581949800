#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "magica/jordan.hpp"
#include "magica/linalg.hpp"

namespace magica {

/// Element (alpha, A, B, beta) of the ambient representation
/// C + W + W* + C; flat coordinate order is (alpha, A, B, beta)
/// with dimension 6*dim + 8.
struct FtsVector {
  AlgebraTag tag;
  GaussRat alpha;
  JordanElement a;
  JordanElement b;
  GaussRat beta;

  explicit FtsVector(AlgebraTag t) : tag(t), alpha(), a(t), b(t), beta() {}
  FtsVector(GaussRat al, JordanElement aa, JordanElement bb, GaussRat be);

  bool is_zero() const;

  friend bool operator==(const FtsVector& x, const FtsVector& y) {
    return x.alpha == y.alpha && x.a == y.a && x.b == y.b && x.beta == y.beta;
  }
};

int fts_flat_dim(AlgebraTag tag);
Vec fts_flatten(const FtsVector& x);
FtsVector fts_unflatten(AlgebraTag tag, const Vec& coords);
FtsVector fts_zero(AlgebraTag tag);
FtsVector fts_add(const FtsVector& x, const FtsVector& y);
FtsVector fts_sub(const FtsVector& x, const FtsVector& y);
FtsVector fts_scale(const GaussRat& s, const FtsVector& x);
FtsVector fts_random(AlgebraTag tag, Rng& rng, std::int64_t bound);

/// The base point (1, 0, 0, 0) on the cone over the closed orbit.
FtsVector base_point(AlgebraTag tag);

/// Affine-cone parameterization (alpha^3, alpha^2 A, alpha A#, N(A)).
FtsVector phi_hat(const GaussRat& alpha, const JordanElement& a);

/// Names of the six invariant monomials, in coefficient order.
extern const std::array<const char*, 6> kQuarticMonomialNames;

/// m1..m6 = alpha^2 beta^2, alpha beta <A,B>, <A,B>^2, beta N(A),
/// alpha N*(B), <A#, B#>.
std::array<GaussRat, 6> quartic_monomials(const FtsVector& x);

/// The invariant quartic in the fixed monomial basis.
struct QuarticCoeffs {
  AlgebraTag tag;
  std::array<GaussRat, 6> c;
};

GaussRat eval_quartic(const QuarticCoeffs& qc, const FtsVector& x);

/// Dense exact linear operator on the ambient space.
struct LinOp {
  AlgebraTag tag;
  Mat m;

  static LinOp identity(AlgebraTag tag);
  FtsVector apply(const FtsVector& x) const;
  LinOp compose(const LinOp& other) const;  // this after other

  friend bool operator==(const LinOp& x, const LinOp& y) { return x.tag == y.tag && x.m == y.m; }
};

/// Scalar polynomial on flat coordinates, with a degree bound for jets.
struct PolyMap {
  int dim = 0;
  int degree = 0;
  std::function<GaussRat(const Vec&)> eval;
};

/// Vector-valued polynomial map on flat coordinates.
struct VecPolyMap {
  int in_dim = 0;
  int out_dim = 0;
  int degree = 0;
  std::function<Vec(const Vec&)> eval;
};

PolyMap quartic_poly(const QuarticCoeffs& qc);
/// The cubic norm as a polynomial on flat W coordinates (dim 3*dim+3).
PolyMap det_poly(AlgebraTag tag);
/// phi_hat on flat (alpha, A) coordinates (in dim 3*dim+4).
VecPolyMap phi_hat_map(AlgebraTag tag);

/// Expansion P(x + t v) = sum_k t^k coeffs[k].
struct LineJet {
  std::vector<GaussRat> coeffs;

  const GaussRat& at(int k) const { return coeffs[k]; }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Exact jet by interpolation at t = 0..d plus a probe at t = d+1 that
/// raises DegreeOverflow if the polynomial exceeds the stated degree.
LineJet line_jet(const PolyMap& p, const Vec& x, const Vec& v, int d);

/// Jet of a vector-valued map; returns d+1 coefficient vectors.
std::vector<Vec> vec_line_jet(const VecPolyMap& p, const Vec& x, const Vec& v, int d);

struct GradientHessian {
  Vec grad;   // flat
  Mat hess;   // symmetric, exact
};

/// First and second derivative data at x, recovered from line jets along
/// coordinate directions and their polarizations; hess(v, v) = 2 Phi_2(v).
GradientHessian poly_gradient_hessian(const PolyMap& p, const Vec& x);
Vec poly_gradient(const PolyMap& p, const Vec& x);

GradientHessian gradient_hessian(const QuarticCoeffs& qc, const FtsVector& x);
Vec quartic_gradient(const QuarticCoeffs& qc, const FtsVector& x);

/// The unique linear operator with L(phi_hat(alpha, A)) =
/// phi_hat(alpha, A + alpha C), solved from random cone samples and
/// verified on fresh ones.
LinOp derive_transvection(const JordanElement& c, Rng& rng);

/// Dual transvection, derived through the flip conjugation.
LinOp derive_dual_transvection(const JordanElement& d, Rng& rng);

/// The flip (alpha, A, B, beta) -> (beta, B, A, alpha).
LinOp flip_op(AlgebraTag tag);

/// Grading scaling diag(1, lambda, lambda^2, lambda^3); lambda != 0.
LinOp grading_scaling(AlgebraTag tag, const GaussRat& lambda);

struct CalibrationResult {
  QuarticCoeffs coeffs;
  int nullspace_dim = 0;
  int flip_sign = 0;  // Q o flip = flip_sign * Q, recorded not assumed
};

/// Solves for the one-dimensional invariance nullspace in the monomial
/// family and normalizes the beta^2 Hessian entry at the base point to 18.
CalibrationResult calibrate_quartic(AlgebraTag tag, int trials, std::uint64_t seed);

/// Directional derivative D_p Q as an evaluable cubic.
PolyMap polar_cubic(const QuarticCoeffs& qc, const FtsVector& p);

/// The combination 2 p3 Q - (beta + <A,B>/(3 p3)) H_p; degree 5 as a
/// polynomial, jets must use that bound.
PolyMap f_combination(const QuarticCoeffs& qc, const FtsVector& p);

}  // namespace magica
