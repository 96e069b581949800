#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magica/freudenthal.hpp"

namespace magica {

/// Orbit stratum of a point of the ambient projective space; mutually
/// exclusive and exhaustive for nonzero vectors.
enum class StratumLabel { Zero, ClosedOrbitG, SigmaPlus, TauSmooth, Ambient };

const char* to_string(StratumLabel label);
StratumLabel stratum_from_string(const std::string& name);

/// Zero / Ambient by the quartic value, TauSmooth by a nonzero gradient,
/// and the two singular strata by the Hessian rank signature 1 vs dim+3.
/// Any other signature on a singular point is surfaced, never coerced.
StratumLabel classify(const QuarticCoeffs& qc, const FtsVector& x);

/// Random word of derived transvections, dual transvections and grading
/// scalings.
LinOp random_symmetry_word(AlgebraTag tag, Rng& rng, int max_factors = 3);

/// Reproducible sampler; every output classifies back to its label
/// (checked unless verify_output is false).
FtsVector sample_stratum(const QuarticCoeffs& qc, StratumLabel label, std::uint64_t seed,
                         bool verify_output = true);

/// Embedded tangent frame of the cone at (alpha, A): the point followed
/// by the 3*dim+4 first-derivative directions, as flat vectors.
std::vector<Vec> tangent_frame(const GaussRat& alpha, const JordanElement& a);

/// Random point of the embedded tangent space at a random cone point.
FtsVector random_tangent_point(AlgebraTag tag, Rng& rng, std::int64_t bound);

/// Exact rank of the (3*dim+4) x (6*dim+8) Jacobian of phi_hat.
int jacobian_rank_phi(const GaussRat& alpha, const JordanElement& a);

/// Infinitesimal transvection: the degree-1 coefficient of t -> L_{tC}.
Mat infinitesimal_transvection(const JordanElement& c, Rng& rng, bool dual);

/// Commutator closure of the infinitesimal transvections, both sides,
/// over a basis of W.
struct LieClosure {
  AlgebraTag tag;
  std::vector<Mat> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

LieClosure compute_lie_closure(AlgebraTag tag, std::uint64_t seed = 0);
int lie_closure_dim(AlgebraTag tag, std::uint64_t seed = 0);

struct OrbitDim {
  int dim = 0;
  /// True when the scaling direction x itself had to be adjoined to the
  /// tangent span; recorded rather than assumed.
  bool euler_added = false;
};

/// Affine-cone orbit dimension at x: rank of {M x} over the closure
/// basis, plus one if the Euler direction was missing.
OrbitDim orbit_dim(const LieClosure& closure, const FtsVector& x);

}  // namespace magica
