#include "magica/tancone.hpp"

#include <algorithm>

#include "magica/jordan.hpp"

namespace magica {

namespace {

int first_nonzero(const LineJet& jet) {
  for (int k = 0; k <= jet.degree(); ++k) {
    if (!jet.at(k).is_zero()) return k;
  }
  return jet.degree() + 1;
}

}  // namespace

int multiplicity(const PolyMap& p, const Vec& x, int trials, Rng& rng, CertMode mode,
                 long grid_budget) {
  if (trials < 1) throw Error("multiplicity needs at least one trial");
  if (static_cast<int>(x.size()) != p.dim) throw Error("point dimension mismatch");
  // Phi_0 = P(x) does not depend on the direction, so the floor is known
  const int floor_k = p.eval(x).is_zero() ? 1 : 0;
  if (floor_k == 0) return 0;
  int best = p.degree + 1;
  if (mode == CertMode::Randomized) {
    for (int t = 0; t < trials; ++t) {
      Vec v(p.dim);
      for (auto& c : v) c = rng.scalar(3);
      best = std::min(best, first_nonzero(line_jet(p, x, v, p.degree)));
      if (best == floor_k) return best;
    }
    if (best > p.degree) {
      throw Error("every sampled jet vanished; no multiplicity witness found");
    }
    return best;
  }
  // product grid {0..degree}^dim certifies per-variable degree <= degree
  long total = 1;
  bool overflow = false;
  for (int i = 0; i < p.dim; ++i) {
    total *= p.degree + 1;
    if (total > grid_budget) {
      overflow = true;
      break;
    }
  }
  if (overflow) throw InconclusiveZero();
  Vec v(p.dim, kZero);
  std::vector<int> odo(p.dim, 0);
  for (long step = 0; step < total; ++step) {
    best = std::min(best, first_nonzero(line_jet(p, x, v, p.degree)));
    if (best == floor_k) return best;
    for (int i = 0; i < p.dim; ++i) {
      if (++odo[i] <= p.degree) {
        v[i] = GaussRat(odo[i]);
        break;
      }
      odo[i] = 0;
      v[i] = kZero;
    }
  }
  if (best > p.degree) {
    throw Error("the polynomial vanishes identically on the certifying grid");
  }
  return best;
}

ConeProfile hessian_profile(const QuarticCoeffs& qc, const FtsVector& x, int trials, Rng& rng) {
  if (!eval_quartic(qc, x).is_zero()) {
    throw Error("hessian profile requires a point of the hypersurface");
  }
  GradientHessian gh = gradient_hessian(qc, x);
  for (const auto& g : gh.grad) {
    if (!g.is_zero()) throw Error("hessian profile requires a singular point");
  }
  PolyMap q = quartic_poly(qc);
  int mult = multiplicity(q, fts_flatten(x), trials, rng);
  int r = mat_rank(std::move(gh.hess));
  return {mult, r, q.dim - r};
}

ConeProfile secant_cone_rank(const JordanElement& x, int trials, Rng& rng) {
  if (rank_of(x) != 1) {
    throw RankPreconditionViolated("secant cone profile needs a rank-1 point");
  }
  PolyMap nw = det_poly(x.tag);
  Vec xf = j_flatten(x);
  int mult = multiplicity(nw, xf, trials, rng);
  GradientHessian gh = poly_gradient_hessian(nw, xf);
  int r = mat_rank(std::move(gh.hess));
  return {mult, r, nw.dim - r};
}

PolarConeReport polar_cone_at_x0(const QuarticCoeffs& qc, const FtsVector& p, int trials,
                                 Rng& rng) {
  AlgebraTag tag = qc.tag;
  PolyMap f = f_combination(qc, p);
  const Vec x0 = fts_flatten(base_point(tag));
  int n = f.dim;
  PolarConeReport rep;
  rep.phi2_vanishes = true;
  rep.phi3_matches_secant_cubic = true;
  rep.phi3_independent_of_a = true;
  // Phi_1 of H_p at the base point is linear in v, so probing the
  // coordinate directions certifies it exactly: 18 p3 beta_v
  {
    PolyMap hp = polar_cubic(qc, p);
    GaussRat p3_18 = GaussRat(18) * p.beta;
    rep.phi1_is_18p3_beta = true;
    for (int i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = kOne;
      const GaussRat& want = (i == n - 1) ? p3_18 : kZero;
      if (line_jet(hp, x0, e, 3).at(1) != want) {
        rep.phi1_is_18p3_beta = false;
        break;
      }
    }
  }
  GaussRat two_p3_c5 = (p.beta + p.beta) * qc.c[4];
  for (int t = 0; t < trials; ++t) {
    Vec v(n);
    for (auto& c : v) c = rng.scalar(2);
    LineJet jet = line_jet(f, x0, v, 5);
    if (!jet.at(0).is_zero() || !jet.at(1).is_zero() || !jet.at(2).is_zero()) {
      rep.phi2_vanishes = false;
    }
    // slice beta_v = 0: the cubic term is the secant cubic of the B block
    v[n - 1] = kZero;
    LineJet sliced = line_jet(f, x0, v, 5);
    FtsVector vv = fts_unflatten(tag, v);
    if (sliced.at(3) != two_p3_c5 * det_norm(vv.b)) rep.phi3_matches_secant_cubic = false;
    FtsVector va = vv;
    va.a = j_zero(tag);
    if (line_jet(f, x0, fts_flatten(va), 5).at(3) != sliced.at(3)) {
      rep.phi3_independent_of_a = false;
    }
  }
  // the polar gradient is the Hessian pairing with p; this is the
  // transversality mechanism at sigma+ points
  rep.gradient_matches_hessian_pairing = true;
  PolyMap hp = polar_cubic(qc, p);
  Vec pf = fts_flatten(p);
  int probes = std::min(trials, 3);
  for (int t = 0; t < probes; ++t) {
    FtsVector x = fts_random(tag, rng, 2);
    GradientHessian gh = gradient_hessian(qc, x);
    if (poly_gradient(hp, fts_flatten(x)) != mat_apply(gh.hess, pf)) {
      rep.gradient_matches_hessian_pairing = false;
    }
  }
  return rep;
}

}  // namespace magica
