#pragma once

#include <cstdint>

#include "magica/freudenthal.hpp"

namespace magica {

/// How identically-zero claims about jet coefficients are certified:
/// randomized probing over the exact field, or exhaustive product-grid
/// evaluation within a budget.
enum class CertMode { Randomized, Grid };

inline constexpr long kDefaultGridBudget = 200000;

/// Leading-form data of a hypersurface germ at a point.
struct ConeProfile {
  int multiplicity = 0;
  int hessian_rank = 0;
  int kernel_dim = 0;
};

/// Smallest k with Phi_k not identically zero along lines through x.
/// A nonzero witness is conclusive; all-zero verdicts are probabilistic
/// in randomized mode and exhaustive in grid mode.
int multiplicity(const PolyMap& p, const Vec& x, int trials, Rng& rng,
                 CertMode mode = CertMode::Randomized, long grid_budget = kDefaultGridBudget);

/// Multiplicity plus the exact Hessian rank/kernel of the quartic at a
/// singular point (Q = 0 and grad Q = 0 are required).
ConeProfile hessian_profile(const QuarticCoeffs& qc, const FtsVector& x, int trials, Rng& rng);

/// Profile of the cubic norm on W at a rank-1 point.
ConeProfile secant_cone_rank(const JordanElement& x, int trials, Rng& rng);

struct PolarConeReport {
  bool phi1_is_18p3_beta = false;
  bool phi2_vanishes = false;
  bool phi3_matches_secant_cubic = false;
  bool phi3_independent_of_a = false;
  bool gradient_matches_hessian_pairing = false;

  bool all() const {
    return phi1_is_18p3_beta && phi2_vanishes && phi3_matches_secant_cubic &&
           phi3_independent_of_a && gradient_matches_hessian_pairing;
  }
};

/// Jet analysis of the polar combination at the base point: the
/// quadratic part cancels, and the cubic part on {beta_v = 0} is the
/// secant cubic 2 p3 c5 N*(B_v) with no A_v dependence.
PolarConeReport polar_cone_at_x0(const QuarticCoeffs& qc, const FtsVector& p, int trials,
                                 Rng& rng);

}  // namespace magica
