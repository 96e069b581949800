#pragma once

#include "magica/strata.hpp"

namespace magica::ref {

/// Serial reference for the jet-based derivative assembly; the OpenMP
/// kernel must agree with this exactly.
GradientHessian poly_gradient_hessian(const PolyMap& p, const Vec& x);
GradientHessian gradient_hessian(const QuarticCoeffs& qc, const FtsVector& x);

/// Serial reference for the commutator closure: one bracket at a time,
/// no batching. Same span, same dimension.
LieClosure compute_lie_closure(AlgebraTag tag, std::uint64_t seed = 0);
int lie_closure_dim(AlgebraTag tag, std::uint64_t seed = 0);

}  // namespace magica::ref
