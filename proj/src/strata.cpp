#include "magica/strata.hpp"

#include <utility>

#include "magica/parallel.hpp"

namespace magica {

const char* to_string(StratumLabel label) {
  switch (label) {
    case StratumLabel::Zero: return "Zero";
    case StratumLabel::ClosedOrbitG: return "ClosedOrbitG";
    case StratumLabel::SigmaPlus: return "SigmaPlus";
    case StratumLabel::TauSmooth: return "TauSmooth";
    case StratumLabel::Ambient: return "Ambient";
  }
  throw Error("unknown stratum label");
}

StratumLabel stratum_from_string(const std::string& name) {
  if (name == "Zero") return StratumLabel::Zero;
  if (name == "ClosedOrbitG") return StratumLabel::ClosedOrbitG;
  if (name == "SigmaPlus") return StratumLabel::SigmaPlus;
  if (name == "TauSmooth") return StratumLabel::TauSmooth;
  if (name == "Ambient") return StratumLabel::Ambient;
  throw ParseError("unknown stratum label '" + name + "'");
}

StratumLabel classify(const QuarticCoeffs& qc, const FtsVector& x) {
  if (qc.tag != x.tag) throw TagMismatch();
  if (x.is_zero()) return StratumLabel::Zero;
  if (!eval_quartic(qc, x).is_zero()) return StratumLabel::Ambient;
  Vec grad = quartic_gradient(qc, x);
  for (const auto& g : grad) {
    if (!g.is_zero()) return StratumLabel::TauSmooth;
  }
  GradientHessian gh = gradient_hessian(qc, x);
  int r = mat_rank(gh.hess);
  if (r == 1) return StratumLabel::ClosedOrbitG;
  if (r == qc.tag.dim + 3) return StratumLabel::SigmaPlus;
  throw UnexpectedSignature("hessian rank " + std::to_string(r) +
                            " at a nonzero singular point (expected 1 or " +
                            std::to_string(qc.tag.dim + 3) + ")");
}

LinOp random_symmetry_word(AlgebraTag tag, Rng& rng, int max_factors) {
  int len = static_cast<int>(rng.uniform(1, max_factors));
  LinOp word = LinOp::identity(tag);
  for (int k = 0; k < len; ++k) {
    switch (rng.uniform(0, 2)) {
      case 0:
        word = derive_transvection(j_random(tag, rng, 2), rng).compose(word);
        break;
      case 1:
        word = derive_dual_transvection(j_random(tag, rng, 2), rng).compose(word);
        break;
      default: {
        GaussRat lambda = rng.nonzero_scalar(2);
        word = grading_scaling(tag, lambda).compose(word);
        break;
      }
    }
  }
  return word;
}

std::vector<Vec> tangent_frame(const GaussRat& alpha, const JordanElement& a) {
  AlgebraTag tag = a.tag;
  VecPolyMap phi = phi_hat_map(tag);
  Vec src;
  src.reserve(phi.in_dim);
  src.push_back(alpha);
  for (auto& v : j_flatten(a)) src.push_back(std::move(v));
  std::vector<Vec> frame(1 + phi.in_dim);
  frame[0] = phi.eval(src);
  par::parallel_for(static_cast<std::size_t>(phi.in_dim), [&](std::size_t i) {
    Vec e(phi.in_dim);
    e[i] = kOne;
    frame[1 + i] = vec_line_jet(phi, src, e, 3)[1];
  });
  return frame;
}

FtsVector random_tangent_point(AlgebraTag tag, Rng& rng, std::int64_t bound) {
  JordanElement a = j_random(tag, rng, bound);
  auto frame = tangent_frame(kOne, a);
  int n = fts_flat_dim(tag);
  Vec y(n);
  for (const auto& column : frame) {
    GaussRat c = rng.scalar(bound);
    if (c.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (!column[j].is_zero()) y[j] += c * column[j];
    }
  }
  return fts_unflatten(tag, y);
}

FtsVector sample_stratum(const QuarticCoeffs& qc, StratumLabel label, std::uint64_t seed,
                         bool verify_output) {
  AlgebraTag tag = qc.tag;
  if (label == StratumLabel::Zero) {
    throw Error("the zero stratum has no sampler");
  }
  Rng rng = Rng::derive(seed, fnv1a("sample_stratum"),
                        (static_cast<std::uint64_t>(label) << 8) | tag.dim);
  constexpr int kMaxResample = 64;
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    FtsVector y = fts_zero(tag);
    switch (label) {
      case StratumLabel::ClosedOrbitG: {
        GaussRat alpha = rng.nonzero_scalar(3);
        JordanElement a = j_random(tag, rng, 3);
        y = random_symmetry_word(tag, rng).apply(phi_hat(alpha, a));
        break;
      }
      case StratumLabel::SigmaPlus: {
        FtsVector x(tag);
        x.a = random_rank2(tag, rng, 3);
        y = random_symmetry_word(tag, rng).apply(x);
        break;
      }
      case StratumLabel::TauSmooth: {
        y = random_tangent_point(tag, rng, 3);
        if (y.is_zero()) continue;
        bool grad_zero = true;
        for (const auto& g : quartic_gradient(qc, y)) {
          if (!g.is_zero()) {
            grad_zero = false;
            break;
          }
        }
        if (grad_zero) continue;
        break;
      }
      case StratumLabel::Ambient: {
        y = fts_random(tag, rng, 3);
        if (eval_quartic(qc, y).is_zero()) continue;
        break;
      }
      default:
        throw Error("unreachable stratum");
    }
    if (y.is_zero()) continue;
    if (!verify_output || classify(qc, y) == label) return y;
  }
  throw ResampleLimit(std::string("stratum ") + to_string(label));
}

int jacobian_rank_phi(const GaussRat& alpha, const JordanElement& a) {
  AlgebraTag tag = a.tag;
  auto frame = tangent_frame(alpha, a);
  Mat jac(static_cast<int>(frame.size()) - 1, fts_flat_dim(tag));
  for (std::size_t i = 1; i < frame.size(); ++i) {
    for (int j = 0; j < jac.cols; ++j) jac.at(static_cast<int>(i) - 1, j) = frame[i][j];
  }
  return mat_rank(std::move(jac));
}

Mat infinitesimal_transvection(const JordanElement& c, Rng& rng, bool dual) {
  AlgebraTag tag = c.tag;
  int n = fts_flat_dim(tag);
  // interpolate the cubic family t -> L_{tC} and keep the linear term
  std::vector<Mat> family;
  family.reserve(4);
  for (int t = 0; t <= 3; ++t) {
    JordanElement tc = j_scale(GaussRat(t), c);
    family.push_back(dual ? derive_dual_transvection(tc, rng).m
                          : derive_transvection(tc, rng).m);
  }
  // degree-1 row of the inverse Vandermonde on nodes 0..3
  Mat vdm(4, 4);
  for (int t = 0; t <= 3; ++t) {
    GaussRat p = kOne;
    for (int k = 0; k <= 3; ++k) {
      vdm.at(t, k) = p;
      p *= GaussRat(t);
    }
  }
  Mat vinv = mat_solve(std::move(vdm), Mat::identity(4));
  Mat ell(n, n);
  for (int t = 0; t <= 3; ++t) {
    const GaussRat& f = vinv.at(1, t);
    for (std::size_t k = 0; k < ell.a.size(); ++k) {
      if (!family[t].a[k].is_zero()) ell.a[k] += f * family[t].a[k];
    }
  }
  return ell;
}

namespace {

Vec flatten_mat(const Mat& m) { return m.a; }

}  // namespace

LieClosure compute_lie_closure(AlgebraTag tag, std::uint64_t seed) {
  Rng rng = Rng::derive(seed, fnv1a("lie_closure"), tag.dim);
  int n = fts_flat_dim(tag);
  LieClosure closure{tag, {}};
  EchelonSieve sieve(n * n);
  for (const auto& c : j_basis(tag)) {
    for (bool dual : {false, true}) {
      Mat ell = infinitesimal_transvection(c, rng, dual);
      if (sieve.insert(flatten_mat(ell))) closure.basis.push_back(std::move(ell));
    }
  }
  // bracket rounds: pair every frontier element with all earlier ones
  std::size_t frontier_start = 0;
  while (frontier_start < closure.basis.size()) {
    std::size_t frontier_end = closure.basis.size();
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t i = frontier_start; i < frontier_end; ++i) {
      for (std::size_t j = 0; j < i; ++j) jobs.emplace_back(i, j);
    }
    constexpr std::size_t kChunk = 128;  // bounds peak memory
    for (std::size_t begin = 0; begin < jobs.size(); begin += kChunk) {
      std::size_t end = std::min(begin + kChunk, jobs.size());
      std::vector<Mat> brackets(end - begin);
      par::parallel_for(end - begin, [&](std::size_t k) {
        auto [i, j] = jobs[begin + k];
        brackets[k] = mat_sub(mat_mul(closure.basis[i], closure.basis[j]),
                              mat_mul(closure.basis[j], closure.basis[i]));
      });
      for (auto& b : brackets) {
        if (b.is_zero()) continue;
        if (sieve.insert(flatten_mat(b))) closure.basis.push_back(std::move(b));
      }
      if (closure.basis.size() > static_cast<std::size_t>(n) * n) throw ClosureDivergence();
    }
    frontier_start = frontier_end;
  }
  return closure;
}

int lie_closure_dim(AlgebraTag tag, std::uint64_t seed) {
  return compute_lie_closure(tag, seed).dim();
}

OrbitDim orbit_dim(const LieClosure& closure, const FtsVector& x) {
  if (x.is_zero()) throw DegenerateInput("orbit dimension at the origin");
  if (closure.tag != x.tag) throw TagMismatch();
  Vec xf = fts_flatten(x);
  int n = fts_flat_dim(closure.tag);
  std::vector<Vec> images(closure.basis.size());
  par::parallel_for(closure.basis.size(), [&](std::size_t k) {
    images[k] = mat_apply(closure.basis[k], xf);
  });
  EchelonSieve sieve(n);
  for (auto& v : images) sieve.insert(std::move(v));
  OrbitDim out;
  out.dim = sieve.dim();
  if (!sieve.contains(xf)) {
    out.dim += 1;
    out.euler_added = true;
  }
  return out;
}

}  // namespace magica
