#include "magica/freudenthal.hpp"

#include <utility>

#include "magica/parallel.hpp"

namespace magica {

FtsVector::FtsVector(GaussRat al, JordanElement aa, JordanElement bb, GaussRat be)
    : tag(aa.tag), alpha(std::move(al)), a(std::move(aa)), b(std::move(bb)), beta(std::move(be)) {
  if (a.tag != b.tag) throw TagMismatch();
}

bool FtsVector::is_zero() const {
  return alpha.is_zero() && beta.is_zero() && a.is_zero() && b.is_zero();
}

int fts_flat_dim(AlgebraTag tag) { return 6 * tag.dim + 8; }

Vec fts_flatten(const FtsVector& x) {
  Vec out;
  out.reserve(fts_flat_dim(x.tag));
  out.push_back(x.alpha);
  for (auto& v : j_flatten(x.a)) out.push_back(std::move(v));
  for (auto& v : j_flatten(x.b)) out.push_back(std::move(v));
  out.push_back(x.beta);
  return out;
}

FtsVector fts_unflatten(AlgebraTag tag, const Vec& coords) {
  if (static_cast<int>(coords.size()) != fts_flat_dim(tag)) {
    throw Error("flat coordinate count does not match 6*dim + 8");
  }
  int d = j_flat_dim(tag);
  FtsVector x(tag);
  x.alpha = coords[0];
  x.a = j_unflatten(tag, Vec(coords.begin() + 1, coords.begin() + 1 + d));
  x.b = j_unflatten(tag, Vec(coords.begin() + 1 + d, coords.begin() + 1 + 2 * d));
  x.beta = coords[1 + 2 * d];
  return x;
}

FtsVector fts_zero(AlgebraTag tag) { return FtsVector(tag); }

FtsVector fts_add(const FtsVector& x, const FtsVector& y) {
  return {x.alpha + y.alpha, j_add(x.a, y.a), j_add(x.b, y.b), x.beta + y.beta};
}

FtsVector fts_sub(const FtsVector& x, const FtsVector& y) {
  return {x.alpha - y.alpha, j_sub(x.a, y.a), j_sub(x.b, y.b), x.beta - y.beta};
}

FtsVector fts_scale(const GaussRat& s, const FtsVector& x) {
  return {s * x.alpha, j_scale(s, x.a), j_scale(s, x.b), s * x.beta};
}

FtsVector fts_random(AlgebraTag tag, Rng& rng, std::int64_t bound) {
  return {rng.scalar(bound), j_random(tag, rng, bound), j_random(tag, rng, bound),
          rng.scalar(bound)};
}

FtsVector base_point(AlgebraTag tag) {
  FtsVector x(tag);
  x.alpha = kOne;
  return x;
}

namespace {

FtsVector phi_hat_unchecked(const GaussRat& alpha, const JordanElement& a) {
  JordanElement sa = sharp(a);
  return {alpha * alpha * alpha, j_scale(alpha * alpha, a), j_scale(alpha, sa), det_norm(a)};
}

}  // namespace

FtsVector phi_hat(const GaussRat& alpha, const JordanElement& a) {
  if (alpha.is_zero() && a.is_zero()) throw DegenerateInput("phi_hat at (0, 0)");
  return phi_hat_unchecked(alpha, a);
}

const std::array<const char*, 6> kQuarticMonomialNames{
    "alpha^2*beta^2", "alpha*beta*<A,B>", "<A,B>^2", "beta*N(A)", "alpha*N*(B)", "<A#,B#>"};

std::array<GaussRat, 6> quartic_monomials(const FtsVector& x) {
  GaussRat ab = trace_pair(x.a, x.b);
  JordanElement sa = sharp(x.a);
  JordanElement sb = sharp(x.b);
  return {x.alpha * x.alpha * x.beta * x.beta,
          x.alpha * x.beta * ab,
          ab * ab,
          x.beta * det_norm(x.a),
          x.alpha * det_norm(x.b),
          trace_pair(sa, sb)};
}

GaussRat eval_quartic(const QuarticCoeffs& qc, const FtsVector& x) {
  if (qc.tag != x.tag) throw TagMismatch();
  auto m = quartic_monomials(x);
  GaussRat s;
  for (int i = 0; i < 6; ++i) {
    if (!qc.c[i].is_zero() && !m[i].is_zero()) s += qc.c[i] * m[i];
  }
  return s;
}

LinOp LinOp::identity(AlgebraTag tag) { return {tag, Mat::identity(fts_flat_dim(tag))}; }

FtsVector LinOp::apply(const FtsVector& x) const {
  if (tag != x.tag) throw TagMismatch();
  return fts_unflatten(tag, mat_apply(m, fts_flatten(x)));
}

LinOp LinOp::compose(const LinOp& other) const {
  if (tag != other.tag) throw TagMismatch();
  return {tag, mat_mul(m, other.m)};
}

PolyMap quartic_poly(const QuarticCoeffs& qc) {
  AlgebraTag tag = qc.tag;
  return {fts_flat_dim(tag), 4,
          [qc, tag](const Vec& xf) { return eval_quartic(qc, fts_unflatten(tag, xf)); }};
}

PolyMap det_poly(AlgebraTag tag) {
  return {j_flat_dim(tag), 3,
          [tag](const Vec& xf) { return det_norm(j_unflatten(tag, xf)); }};
}

VecPolyMap phi_hat_map(AlgebraTag tag) {
  return {3 * tag.dim + 4, fts_flat_dim(tag), 3, [tag](const Vec& src) {
            GaussRat alpha = src[0];
            JordanElement a = j_unflatten(tag, Vec(src.begin() + 1, src.end()));
            return fts_flatten(phi_hat_unchecked(alpha, a));
          }};
}

namespace {

constexpr int kMaxJetDegree = 8;

const Mat& vandermonde_inverse(int d) {
  static const std::vector<Mat> cache = [] {
    std::vector<Mat> out;
    for (int deg = 0; deg <= kMaxJetDegree; ++deg) {
      Mat v(deg + 1, deg + 1);
      for (int t = 0; t <= deg; ++t) {
        GaussRat p = kOne;
        for (int k = 0; k <= deg; ++k) {
          v.at(t, k) = p;
          p *= GaussRat(t);
        }
      }
      out.push_back(mat_solve(v, Mat::identity(deg + 1)));
    }
    return out;
  }();
  if (d < 0 || d > kMaxJetDegree) throw Error("jet degree out of range");
  return cache[d];
}

GaussRat horner_at(const std::vector<GaussRat>& coeffs, const GaussRat& t) {
  GaussRat acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

LineJet line_jet(const PolyMap& p, const Vec& x, const Vec& v, int d) {
  if (static_cast<int>(x.size()) != p.dim || static_cast<int>(v.size()) != p.dim) {
    throw Error("jet point/direction dimension mismatch");
  }
  Vec pt = x;
  std::vector<GaussRat> vals(d + 1);
  vals[0] = p.eval(pt);
  for (int t = 1; t <= d; ++t) {
    for (int j = 0; j < p.dim; ++j) pt[j] += v[j];
    vals[t] = p.eval(pt);
  }
  const Mat& vinv = vandermonde_inverse(d);
  LineJet jet;
  jet.coeffs.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    GaussRat s;
    for (int t = 0; t <= d; ++t) {
      if (!vinv.at(k, t).is_zero() && !vals[t].is_zero()) s += vinv.at(k, t) * vals[t];
    }
    jet.coeffs[k] = std::move(s);
  }
  // probe one step past the requested degree
  for (int j = 0; j < p.dim; ++j) pt[j] += v[j];
  if (p.eval(pt) != horner_at(jet.coeffs, GaussRat(d + 1))) throw DegreeOverflow();
  return jet;
}

std::vector<Vec> vec_line_jet(const VecPolyMap& p, const Vec& x, const Vec& v, int d) {
  if (static_cast<int>(x.size()) != p.in_dim || static_cast<int>(v.size()) != p.in_dim) {
    throw Error("jet point/direction dimension mismatch");
  }
  Vec pt = x;
  std::vector<Vec> vals(d + 2);
  vals[0] = p.eval(pt);
  for (int t = 1; t <= d + 1; ++t) {
    for (int j = 0; j < p.in_dim; ++j) pt[j] += v[j];
    vals[t] = p.eval(pt);
  }
  const Mat& vinv = vandermonde_inverse(d);
  std::vector<Vec> coeffs(d + 1, Vec(p.out_dim));
  for (int k = 0; k <= d; ++k) {
    for (int j = 0; j < p.out_dim; ++j) {
      GaussRat s;
      for (int t = 0; t <= d; ++t) {
        if (!vinv.at(k, t).is_zero() && !vals[t][j].is_zero()) s += vinv.at(k, t) * vals[t][j];
      }
      coeffs[k][j] = std::move(s);
    }
  }
  GaussRat tp(d + 1);
  for (int j = 0; j < p.out_dim; ++j) {
    GaussRat acc;
    for (int k = d; k >= 0; --k) acc = acc * tp + coeffs[k][j];
    if (acc != vals[d + 1][j]) throw DegreeOverflow();
  }
  return coeffs;
}

GradientHessian poly_gradient_hessian(const PolyMap& p, const Vec& x) {
  int n = p.dim;
  std::vector<GaussRat> phi1(n), phi2(n);
  par::parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    Vec e(n);
    e[i] = kOne;
    LineJet jet = line_jet(p, x, e, p.degree);
    phi1[i] = jet.at(1);
    phi2[i] = p.degree >= 2 ? jet.at(2) : kZero;
  });
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<GaussRat> mixed(pairs.size());
  par::parallel_for(pairs.size(), [&](std::size_t k) {
    auto [i, j] = pairs[k];
    Vec e(n);
    e[i] = kOne;
    e[j] = kOne;
    mixed[k] = p.degree >= 2 ? line_jet(p, x, e, p.degree).at(2) : kZero;
  });
  GradientHessian out;
  out.grad = std::move(phi1);
  out.hess = Mat(n, n);
  for (int i = 0; i < n; ++i) out.hess.at(i, i) = phi2[i] + phi2[i];
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    GaussRat h = mixed[k] - phi2[i] - phi2[j];
    out.hess.at(i, j) = h;
    out.hess.at(j, i) = std::move(h);
  }
  return out;
}

Vec poly_gradient(const PolyMap& p, const Vec& x) {
  int n = p.dim;
  Vec grad(n);
  par::parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    Vec e(n);
    e[i] = kOne;
    grad[i] = line_jet(p, x, e, p.degree).at(1);
  });
  return grad;
}

GradientHessian gradient_hessian(const QuarticCoeffs& qc, const FtsVector& x) {
  return poly_gradient_hessian(quartic_poly(qc), fts_flatten(x));
}

Vec quartic_gradient(const QuarticCoeffs& qc, const FtsVector& x) {
  return poly_gradient(quartic_poly(qc), fts_flatten(x));
}

namespace {

// Solves for the linear operator matching sample pairs (x, y); the x's
// must span the ambient space. Every collected sample is re-checked
// against the solved operator.
LinOp derive_from_samples(AlgebraTag tag,
                          const std::function<std::pair<Vec, Vec>(Rng&)>& draw, Rng& rng) {
  int n = fts_flat_dim(tag);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Vec> xs, ys;
    std::vector<int> chosen;
    EchelonSieve sieve(n);
    for (int i = 0; i < 2 * n; ++i) {
      auto [x, y] = draw(rng);
      xs.push_back(std::move(x));
      ys.push_back(std::move(y));
      if (static_cast<int>(chosen.size()) < n && sieve.insert(xs.back())) {
        chosen.push_back(i);
      }
    }
    if (static_cast<int>(chosen.size()) < n) continue;
    Mat xt(n, n), yt(n, n);
    for (int r = 0; r < n; ++r) {
      for (int ccol = 0; ccol < n; ++ccol) {
        xt.at(r, ccol) = xs[chosen[r]][ccol];
        yt.at(r, ccol) = ys[chosen[r]][ccol];
      }
    }
    LinOp op{tag, mat_transpose(mat_solve(xt, yt))};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mat_apply(op.m, xs[i]) != ys[i]) {
        throw Error("derived operator has nonzero residual on fresh cone samples");
      }
    }
    return op;
  }
  throw SpanDeficiency();
}

std::pair<Vec, Vec> draw_transvection_sample(AlgebraTag tag, const JordanElement& c, Rng& rng) {
  GaussRat alpha = rng.scalar(3);
  JordanElement a = j_random(tag, rng, 3);
  FtsVector x = phi_hat_unchecked(alpha, a);
  FtsVector y = phi_hat_unchecked(alpha, j_add(a, j_scale(alpha, c)));
  return {fts_flatten(x), fts_flatten(y)};
}

}  // namespace

LinOp derive_transvection(const JordanElement& c, Rng& rng) {
  AlgebraTag tag = c.tag;
  return derive_from_samples(
      tag, [tag, &c](Rng& r) { return draw_transvection_sample(tag, c, r); }, rng);
}

LinOp derive_dual_transvection(const JordanElement& d, Rng& rng) {
  AlgebraTag tag = d.tag;
  LinOp sigma = flip_op(tag);
  // conjugating the plain transvection by the flip gives the unique
  // operator with L'_D(psi_hat(beta, B)) = psi_hat(beta, B + beta D)
  // for the flipped parameterization psi_hat = flip(phi_hat)
  LinOp tilde = derive_transvection(d, rng);
  return sigma.compose(tilde).compose(sigma);
}

LinOp flip_op(AlgebraTag tag) {
  int n = fts_flat_dim(tag);
  int d = j_flat_dim(tag);
  Mat m(n, n);
  m.at(0, n - 1) = kOne;
  m.at(n - 1, 0) = kOne;
  for (int i = 0; i < d; ++i) {
    m.at(1 + i, 1 + d + i) = kOne;
    m.at(1 + d + i, 1 + i) = kOne;
  }
  return {tag, std::move(m)};
}

LinOp grading_scaling(AlgebraTag tag, const GaussRat& lambda) {
  if (lambda.is_zero()) throw DegenerateInput("grading scaling with lambda = 0");
  int n = fts_flat_dim(tag);
  int d = j_flat_dim(tag);
  GaussRat l2 = lambda * lambda;
  Mat m(n, n);
  m.at(0, 0) = kOne;
  for (int i = 0; i < d; ++i) {
    m.at(1 + i, 1 + i) = lambda;
    m.at(1 + d + i, 1 + d + i) = l2;
  }
  m.at(n - 1, n - 1) = l2 * lambda;
  return {tag, std::move(m)};
}

CalibrationResult calibrate_quartic(AlgebraTag tag, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error("calibration needs at least one trial");
  Rng rng = Rng::derive(seed, fnv1a("calibrate_quartic"), static_cast<std::uint64_t>(tag.dim));
  constexpr int kOpsPerSide = 4;
  std::vector<LinOp> ops;
  ops.reserve(2 * kOpsPerSide);
  for (int k = 0; k < kOpsPerSide; ++k) {
    ops.push_back(derive_transvection(j_random(tag, rng, 2), rng));
  }
  for (int k = 0; k < kOpsPerSide; ++k) {
    ops.push_back(derive_dual_transvection(j_random(tag, rng, 2), rng));
  }
  int n = fts_flat_dim(tag);
  int pts_per_op = 3 * n;
  std::vector<FtsVector> points;
  points.reserve(static_cast<std::size_t>(ops.size()) * pts_per_op);
  for (std::size_t o = 0; o < ops.size(); ++o) {
    for (int k = 0; k < pts_per_op; ++k) points.push_back(fts_random(tag, rng, 3));
  }
  Mat rows(static_cast<int>(points.size()), 6);
  par::parallel_for(points.size(), [&](std::size_t idx) {
    const LinOp& op = ops[idx / pts_per_op];
    const FtsVector& x = points[idx];
    auto mx = quartic_monomials(x);
    auto my = quartic_monomials(op.apply(x));
    for (int c = 0; c < 6; ++c) rows.at(static_cast<int>(idx), c) = my[c] - mx[c];
  });
  auto ns = mat_nullspace(std::move(rows));
  if (ns.empty()) throw CalibrationEmpty();
  if (ns.size() > 1) throw CalibrationAmbiguous(static_cast<int>(ns.size()));
  QuarticCoeffs qc{tag, {}};
  for (int i = 0; i < 6; ++i) qc.c[i] = ns[0][i];
  // scale so the beta^2 Hessian entry at the base point is 18
  PolyMap q = quartic_poly(qc);
  Vec x0 = fts_flatten(base_point(tag));
  Vec ebeta(n);
  ebeta[n - 1] = kOne;
  GaussRat h = line_jet(q, x0, ebeta, 4).at(2);
  h += h;
  if (h.is_zero()) {
    throw Error("calibrated quartic has no beta^2 term at the base point; convention break");
  }
  GaussRat scalef = GaussRat(18) * h.inv();
  for (auto& c : qc.c) c *= scalef;
  // record which sign the flip realizes; never assumed
  LinOp sigma = flip_op(tag);
  bool plus = true, minus = true;
  for (int t = 0; t < trials && (plus || minus); ++t) {
    FtsVector x = fts_random(tag, rng, 4);
    GaussRat q1 = eval_quartic(qc, x);
    GaussRat q2 = eval_quartic(qc, sigma.apply(x));
    if (q2 != q1) plus = false;
    if (q2 != -q1) minus = false;
  }
  if (!plus && !minus) throw Error("flip does not preserve the calibrated quartic line");
  return {std::move(qc), 1, plus ? 1 : -1};
}

PolyMap polar_cubic(const QuarticCoeffs& qc, const FtsVector& p) {
  if (p.is_zero()) throw DegenerateInput("polar direction must be nonzero");
  PolyMap q = quartic_poly(qc);
  Vec pf = fts_flatten(p);
  return {q.dim, 3, [q, pf](const Vec& xf) { return line_jet(q, xf, pf, 4).at(1); }};
}

PolyMap f_combination(const QuarticCoeffs& qc, const FtsVector& p) {
  if (p.beta.is_zero()) throw RequiresNonzeroP3();
  PolyMap q = quartic_poly(qc);
  PolyMap hp = polar_cubic(qc, p);
  GaussRat two_p3 = p.beta + p.beta;
  GaussRat inv_3p3 = (GaussRat(3) * p.beta).inv();
  AlgebraTag tag = qc.tag;
  // beta * H_p brings the <A,B> prefactor to total degree five
  return {q.dim, 5, [=](const Vec& xf) {
            FtsVector x = fts_unflatten(tag, xf);
            GaussRat pref = x.beta + trace_pair(x.a, x.b) * inv_3p3;
            return two_p3 * q.eval(xf) - pref * hp.eval(xf);
          }};
}

}  // namespace magica
