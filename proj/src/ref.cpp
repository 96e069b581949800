#include "magica/ref.hpp"

namespace magica::ref {

GradientHessian poly_gradient_hessian(const PolyMap& p, const Vec& x) {
  int n = p.dim;
  Vec phi1(n), phi2(n);
  for (int i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = kOne;
    LineJet jet = line_jet(p, x, e, p.degree);
    phi1[i] = jet.at(1);
    phi2[i] = p.degree >= 2 ? jet.at(2) : kZero;
  }
  GradientHessian out;
  out.hess = Mat(n, n);
  for (int i = 0; i < n; ++i) {
    out.hess.at(i, i) = phi2[i] + phi2[i];
    for (int j = i + 1; j < n; ++j) {
      Vec e(n);
      e[i] = kOne;
      e[j] = kOne;
      GaussRat mixed = p.degree >= 2 ? line_jet(p, x, e, p.degree).at(2) : kZero;
      GaussRat h = mixed - phi2[i] - phi2[j];
      out.hess.at(i, j) = h;
      out.hess.at(j, i) = std::move(h);
    }
  }
  out.grad = std::move(phi1);
  return out;
}

GradientHessian gradient_hessian(const QuarticCoeffs& qc, const FtsVector& x) {
  return ref::poly_gradient_hessian(quartic_poly(qc), fts_flatten(x));
}

LieClosure compute_lie_closure(AlgebraTag tag, std::uint64_t seed) {
  Rng rng = Rng::derive(seed, fnv1a("lie_closure"), tag.dim);
  int n = fts_flat_dim(tag);
  LieClosure closure{tag, {}};
  EchelonSieve sieve(n * n);
  for (const auto& c : j_basis(tag)) {
    for (bool dual : {false, true}) {
      Mat ell = infinitesimal_transvection(c, rng, dual);
      if (sieve.insert(ell.a)) closure.basis.push_back(std::move(ell));
    }
  }
  for (std::size_t i = 1; i < closure.basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Mat b = mat_sub(mat_mul(closure.basis[i], closure.basis[j]),
                      mat_mul(closure.basis[j], closure.basis[i]));
      if (b.is_zero()) continue;
      if (sieve.insert(b.a)) closure.basis.push_back(std::move(b));
      if (closure.basis.size() > static_cast<std::size_t>(n) * n) throw ClosureDivergence();
    }
  }
  return closure;
}

int lie_closure_dim(AlgebraTag tag, std::uint64_t seed) {
  return ref::compute_lie_closure(tag, seed).dim();
}

}  // namespace magica::ref
