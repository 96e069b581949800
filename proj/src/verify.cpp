#include "magica/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include "magica/parallel.hpp"

namespace magica {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "fail";
    case CheckResult::Status::Skip: return "skip";
  }
  return "?";
}

constexpr std::array<int, 9> kClosureDims{0, 21, 35, 0, 66, 0, 0, 0, 133};

/// Per-algebra check runner. Sample pools and derived assets are built
/// once; every check draws its randomness from (seed, check id, index)
/// so reports are replayable and independent of scheduling.
class Checker {
 public:
  Checker(AlgebraTag tag, const RunConfig& cfg, const QuarticTamper* tamper,
          std::vector<std::pair<std::string, double>>& timings)
      : tag_(tag), cfg_(cfg), tamper_(tamper), timings_(timings), qc_{tag, {}} {}

  AlgebraReport run();

 private:
  // ----- infrastructure -----
  Rng trial_rng(const std::string& id, long index) const {
    return Rng::derive(cfg_.seed, fnv1a(id) ^ (0x9e3779b9u * tag_.dim),
                       static_cast<std::uint64_t>(index));
  }

  std::uint64_t pool_seed(const char* pool, long index) const {
    Rng r = Rng::derive(cfg_.seed, fnv1a(pool) ^ (0x85ebca6bu * tag_.dim),
                        static_cast<std::uint64_t>(index));
    return r.next_u64();
  }

  long capped(long pin) const { return std::min<long>(cfg_.trials, pin); }

  void add(CheckResult r) {
    r.seed = cfg_.seed;
    report_.checks.push_back(std::move(r));
  }

  /// Runs `samples` independent trials in parallel; fn returns a
  /// counterexample payload on failure. The lowest failing index wins,
  /// so the result does not depend on the schedule.
  template <class Fn>
  void trial_check(const std::string& id, long samples, const std::string& expected, Fn&& fn) {
    std::vector<std::uint8_t> ok(samples, 1);
    std::vector<Json> payloads(samples);
    par::parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
      Rng rng = trial_rng(id, static_cast<long>(i));
      std::optional<Json> bad = fn(rng, static_cast<long>(i));
      if (bad) {
        ok[i] = 0;
        payloads[i] = std::move(*bad);
      }
    });
    CheckResult r;
    r.id = id;
    r.expected = expected;
    r.samples = samples;
    long failures = std::count(ok.begin(), ok.end(), 0);
    if (failures == 0) {
      r.status = CheckResult::Status::Pass;
      r.observed = "0 failures in " + std::to_string(samples) + " samples";
    } else {
      r.status = CheckResult::Status::Fail;
      auto first = std::find(ok.begin(), ok.end(), 0) - ok.begin();
      r.observed = std::to_string(failures) + " failures in " + std::to_string(samples) +
                   " samples; first at index " + std::to_string(first);
      r.counterexample = std::move(payloads[first]);
    }
    add(std::move(r));
  }

  void plain_check(const std::string& id, const std::string& expected, bool pass,
                   const std::string& observed, long samples = 1, Json counterexample = {}) {
    CheckResult r;
    r.id = id;
    r.expected = expected;
    r.observed = observed;
    r.samples = samples;
    r.status = pass ? CheckResult::Status::Pass : CheckResult::Status::Fail;
    if (!pass) r.counterexample = std::move(counterexample);
    add(std::move(r));
  }

  void skip_check(const std::string& id, const std::string& expected, const std::string& why) {
    CheckResult r;
    r.id = id;
    r.expected = expected;
    r.observed = why;
    r.status = CheckResult::Status::Skip;
    add(std::move(r));
  }

  // ----- setup -----
  void calibrate();
  void build_pools();
  bool slow_allowed() const { return tag_.dim < 8 || cfg_.include_slow; }

  // ----- check groups -----
  void exactnum_checks();
  void compalg_checks();
  void jordan_checks();
  void freudenthal_checks();
  void strata_checks();
  void tancone_checks();

  AlgebraTag tag_;
  const RunConfig& cfg_;
  const QuarticTamper* tamper_;
  std::vector<std::pair<std::string, double>>& timings_;

  QuarticCoeffs qc_;
  AlgebraReport report_;
  std::vector<FtsVector> pool_g_, pool_sigma_, pool_tau_, pool_ambient_;
  std::optional<LieClosure> closure_;
};

void Checker::calibrate() {
  auto t0 = Clock::now();
  report_.calibration = calibrate_quartic(tag_, std::max(8, std::min(cfg_.trials, 50)), cfg_.seed);
  timings_.emplace_back("calibrate a=" + std::to_string(tag_.dim), seconds_since(t0));
  if (tamper_ && *tamper_) (*tamper_)(report_.calibration.coeffs);
  qc_ = report_.calibration.coeffs;
}

void Checker::build_pools() {
  auto t0 = Clock::now();
  long ng = tag_.dim == 8 ? 25 : capped(100);
  long ns = capped(50);
  long nt = tag_.dim == 8 ? 10 : capped(100);
  long na = capped(25);
  pool_g_.reserve(ng);
  pool_sigma_.reserve(ns);
  pool_tau_.reserve(nt);
  pool_ambient_.reserve(na);
  for (long i = 0; i < ng; ++i) {
    pool_g_.push_back(
        sample_stratum(qc_, StratumLabel::ClosedOrbitG, pool_seed("pool_g", i), false));
  }
  for (long i = 0; i < ns; ++i) {
    pool_sigma_.push_back(
        sample_stratum(qc_, StratumLabel::SigmaPlus, pool_seed("pool_sigma", i), false));
  }
  for (long i = 0; i < nt; ++i) {
    pool_tau_.push_back(
        sample_stratum(qc_, StratumLabel::TauSmooth, pool_seed("pool_tau", i), false));
  }
  for (long i = 0; i < na; ++i) {
    pool_ambient_.push_back(
        sample_stratum(qc_, StratumLabel::Ambient, pool_seed("pool_ambient", i), false));
  }
  timings_.emplace_back("pools a=" + std::to_string(tag_.dim), seconds_since(t0));
}

void Checker::exactnum_checks() {
  trial_check("exactnum.field_axioms", cfg_.trials, "field axioms hold exactly",
              [&](Rng& rng, long) -> std::optional<Json> {
                GaussRat x = rng.scalar(50), y = rng.scalar(50), z = rng.scalar(50);
                bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
                          x * (y + z) == x * y + x * z && x + (-x) == kZero &&
                          x.conj().conj() == x && (x * y).conj() == x.conj() * y.conj();
                if (!x.is_zero()) ok = ok && x * x.inv() == kOne;
                if (ok) return std::nullopt;
                return Json{{"x", print_gauss(x)}, {"y", print_gauss(y)}, {"z", print_gauss(z)}};
              });
  trial_check("exactnum.canonical_form", cfg_.trials,
              "lowest terms, positive denominator, text round-trip",
              [&](Rng& rng, long) -> std::optional<Json> {
                GaussRat x = rng.scalar(40), y = rng.scalar(40);
                GaussRat z = y.is_zero() ? x * y : x / y;
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), z.re.get_num().get_mpz_t(), z.re.get_den().get_mpz_t());
                bool ok = g == 1 && z.re.get_den() > 0 && z.im.get_den() > 0 &&
                          parse_gauss(print_gauss(z)) == z && parse_gauss(print_gauss(x)) == x;
                if (ok) return std::nullopt;
                return Json{{"x", print_gauss(x)}, {"y", print_gauss(y)}};
              });
  trial_check("exactnum.rng_contract", capped(50),
              "bounded draws, seed determinism, streams separate within 16 draws",
              [&](Rng& rng, long i) -> std::optional<Json> {
                std::uint64_t s1 = rng.next_u64(), s2 = s1 + 1 + rng.next_u64() % 1000;
                Rng a1(s1), a2(s1), b(s2);
                bool ok = true;
                bool differs = false;
                for (int k = 0; k < 16; ++k) {
                  GaussRat xa = a1.scalar(100);
                  ok = ok && xa == a2.scalar(100);
                  ok = ok && xa.re.get_den() <= 100 && abs(xa.re.get_num()) <= 100;
                  if (xa != b.scalar(100)) differs = true;
                }
                if (ok && differs) return std::nullopt;
                return Json{{"seed_a", std::to_string(s1)},
                            {"seed_b", std::to_string(s2)},
                            {"index", i}};
              });
}

void Checker::compalg_checks() {
  auto pair_fail = [](const CdElement& x, const CdElement& y) {
    return Json{{"x", cd_to_json(x)}, {"y", cd_to_json(y)}};
  };
  trial_check("compalg.norm_product", cfg_.trials, "n(xy) = n(x) n(y)",
              [&](Rng& rng, long) -> std::optional<Json> {
                CdElement x = cd_random(tag_, rng, 6), y = cd_random(tag_, rng, 6);
                if (cd_norm(cd_mul(x, y)) == cd_norm(x) * cd_norm(y)) return std::nullopt;
                return pair_fail(x, y);
              });
  trial_check("compalg.norm_definition", cfg_.trials,
              "x conj(x) is scalar and equals n(x)",
              [&](Rng& rng, long) -> std::optional<Json> {
                CdElement x = cd_random(tag_, rng, 6);
                CdElement p = cd_mul(x, cd_conj(x));
                if (p.is_scalar() && p.scalar_part() == cd_norm(x)) return std::nullopt;
                return Json{{"x", cd_to_json(x)}};
              });
  trial_check("compalg.alternativity", cfg_.trials, "x(xy) = (xx)y and (yx)x = y(xx)",
              [&](Rng& rng, long) -> std::optional<Json> {
                CdElement x = cd_random(tag_, rng, 6), y = cd_random(tag_, rng, 6);
                bool ok = cd_mul(x, cd_mul(x, y)) == cd_mul(cd_mul(x, x), y) &&
                          cd_mul(cd_mul(y, x), x) == cd_mul(y, cd_mul(x, x));
                if (ok) return std::nullopt;
                return pair_fail(x, y);
              });
  trial_check("compalg.conj_antiautomorphism", cfg_.trials, "conj(xy) = conj(y) conj(x)",
              [&](Rng& rng, long) -> std::optional<Json> {
                CdElement x = cd_random(tag_, rng, 6), y = cd_random(tag_, rng, 6);
                if (cd_conj(cd_mul(x, y)) == cd_mul(cd_conj(y), cd_conj(x))) return std::nullopt;
                return pair_fail(x, y);
              });
  trial_check("compalg.trace_symmetry", cfg_.trials, "t(xy) = t(yx)",
              [&](Rng& rng, long) -> std::optional<Json> {
                CdElement x = cd_random(tag_, rng, 6), y = cd_random(tag_, rng, 6);
                if (cd_trace(cd_mul(x, y)) == cd_trace(cd_mul(y, x))) return std::nullopt;
                return pair_fail(x, y);
              });
  trial_check("compalg.trace_associativity", cfg_.trials, "t((xy)z) = t(x(yz))",
              [&](Rng& rng, long) -> std::optional<Json> {
                CdElement x = cd_random(tag_, rng, 6), y = cd_random(tag_, rng, 6),
                          z = cd_random(tag_, rng, 6);
                if (cd_trace(cd_mul(cd_mul(x, y), z)) == cd_trace(cd_mul(x, cd_mul(y, z)))) {
                  return std::nullopt;
                }
                return Json{{"x", cd_to_json(x)}, {"y", cd_to_json(y)}, {"z", cd_to_json(z)}};
              });
  {
    // associativity holds iff dim <= 4, with a found witness at dim 8
    const std::string id = "compalg.associativity_boundary";
    long n = cfg_.trials;
    std::vector<std::uint8_t> assoc(n, 1);
    par::parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
      Rng rng = trial_rng(id, static_cast<long>(i));
      CdElement x = cd_random(tag_, rng, 6), y = cd_random(tag_, rng, 6),
                z = cd_random(tag_, rng, 6);
      assoc[i] = cd_mul(cd_mul(x, y), z) == cd_mul(x, cd_mul(y, z)) ? 1 : 0;
    });
    long witnesses = std::count(assoc.begin(), assoc.end(), 0);
    bool want_assoc = tag_.dim <= 4;
    bool pass = want_assoc ? witnesses == 0 : witnesses > 0;
    plain_check(id,
                want_assoc ? "associative on all sampled triples"
                           : "associator witness found among sampled triples",
                pass, std::to_string(witnesses) + " non-associative triples in " +
                          std::to_string(n) + " samples",
                n);
  }
  {
    const std::string id = "compalg.commutativity_boundary";
    long n = cfg_.trials;
    std::vector<std::uint8_t> comm(n, 1);
    par::parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
      Rng rng = trial_rng(id, static_cast<long>(i));
      CdElement x = cd_random(tag_, rng, 6), y = cd_random(tag_, rng, 6);
      comm[i] = cd_mul(x, y) == cd_mul(y, x) ? 1 : 0;
    });
    long witnesses = std::count(comm.begin(), comm.end(), 0);
    bool want_comm = tag_.dim <= 2;
    bool pass = want_comm ? witnesses == 0 : witnesses > 0;
    plain_check(id,
                want_comm ? "commutative on all sampled pairs"
                          : "commutator witness found among sampled pairs",
                pass, std::to_string(witnesses) + " non-commuting pairs in " + std::to_string(n) +
                          " samples",
                n);
  }
}

void Checker::jordan_checks() {
  auto j_fail = [](const JordanElement& a) { return Json{{"A", jordan_to_json(a)}}; };
  trial_check("jordan.sharp_pairing", cfg_.trials, "<A#, A> = 3 N(A)",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement a = j_random(tag_, rng, 5);
                GaussRat n = det_norm(a);
                if (trace_pair(sharp(a), a) == n + n + n) return std::nullopt;
                return j_fail(a);
              });
  trial_check("jordan.sharp_double", cfg_.trials, "(A#)# = N(A) A",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement a = j_random(tag_, rng, 5);
                if (sharp(sharp(a)) == j_scale(det_norm(a), a)) return std::nullopt;
                return j_fail(a);
              });
  trial_check("jordan.norm_of_sharp", cfg_.trials, "N(A#) = N(A)^2",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement a = j_random(tag_, rng, 5);
                GaussRat n = det_norm(a);
                if (det_norm(sharp(a)) == n * n) return std::nullopt;
                return j_fail(a);
              });
  trial_check("jordan.cross_polarization", cfg_.trials,
              "A x A = 2 A# and <A x B, C> fully symmetric",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement a = j_random(tag_, rng, 4), b = j_random(tag_, rng, 4),
                              c = j_random(tag_, rng, 4);
                JordanElement sa = sharp(a);
                bool ok = cross(a, a) == j_add(sa, sa);
                GaussRat t1 = trace_pair(cross(a, b), c);
                ok = ok && t1 == trace_pair(cross(a, c), b) && t1 == trace_pair(cross(b, c), a);
                if (ok) return std::nullopt;
                return Json{{"A", jordan_to_json(a)}, {"B", jordan_to_json(b)},
                            {"C", jordan_to_json(c)}};
              });
  trial_check("jordan.norm_polarization", cfg_.trials,
              "inclusion-exclusion polarization gives T(A,A,A) = 6 N(A)",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement a = j_random(tag_, rng, 5);
                auto n = [](const JordanElement& x) { return det_norm(x); };
                JordanElement a2 = j_add(a, a);
                JordanElement a3 = j_add(a2, a);
                // T(A,B,C) = N(A+B+C)-N(A+B)-N(A+C)-N(B+C)+N(A)+N(B)+N(C)
                GaussRat t = n(a3) - n(a2) - n(a2) - n(a2) + n(a) + n(a) + n(a);
                GaussRat six_n = GaussRat(6) * n(a);
                if (t == six_n) return std::nullopt;
                return j_fail(a);
              });
  trial_check("jordan.gram_sharp_vanishes", cfg_.trials,
              "Gram elements are nonzero with vanishing adjugate (rank 1)",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement g = random_rank1(tag_, rng, 5);
                if (sharp(g).is_zero() && rank_of(g) == 1) return std::nullopt;
                return j_fail(g);
              });
  trial_check("jordan.secant_vanishing", capped(100),
              "N(X1 + X2) = 0 for rank-1 pairs; generic sums have rank 2",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement x1 = random_rank1(tag_, rng, 4);
                JordanElement x2 = random_rank1(tag_, rng, 4);
                JordanElement s = j_add(x1, x2);
                if (det_norm(s).is_zero() && rank_of(s) == 2) return std::nullopt;
                return Json{{"X1", jordan_to_json(x1)}, {"X2", jordan_to_json(x2)}};
              });
  trial_check("jordan.rank_of_sharp", cfg_.trials, "rank(A#) <= 1 whenever rank(A) <= 2",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement a = random_rank2(tag_, rng, 4);
                if (rank_of(sharp(a)) <= 1) return std::nullopt;
                return j_fail(a);
              });
  trial_check("jordan.permutation_equivariance", capped(50),
              "N, sharp and the pairing commute with slot permutations",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement a = j_random(tag_, rng, 4), b = j_random(tag_, rng, 4);
                static const std::array<std::array<int, 3>, 6> perms{
                    std::array<int, 3>{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                for (const auto& p : perms) {
                  JordanElement pa = permute_slots(a, p);
                  bool ok = det_norm(pa) == det_norm(a) &&
                            sharp(pa) == permute_slots(sharp(a), p) &&
                            trace_pair(pa, permute_slots(b, p)) == trace_pair(a, b);
                  if (!ok) {
                    return Json{{"A", jordan_to_json(a)},
                                {"perm", Json::array({p[0], p[1], p[2]})}};
                  }
                }
                return std::nullopt;
              });
  trial_check("jordan.rank_semicontinuity", capped(50),
              "rank(A + sB) >= rank(A) for random exact s",
              [&](Rng& rng, long i) -> std::optional<Json> {
                JordanElement a =
                    i % 2 == 0 ? random_rank1(tag_, rng, 3) : random_rank2(tag_, rng, 3);
                int base = rank_of(a);
                JordanElement b = j_random(tag_, rng, 3);
                for (int k = 0; k < 3; ++k) {
                  GaussRat s = rng.nonzero_scalar(8);
                  if (rank_of(j_add(a, j_scale(s, b))) < base) {
                    return Json{{"A", jordan_to_json(a)}, {"B", jordan_to_json(b)},
                                {"s", print_gauss(s)}};
                  }
                }
                return std::nullopt;
              });
}

void Checker::freudenthal_checks() {
  int n = fts_flat_dim(tag_);
  {
    const std::string id = "freudenthal.span";
    Rng rng = trial_rng(id, 0);
    Mat pts(n, n);
    for (int i = 0; i < n; ++i) {
      FtsVector x = phi_hat(rng.nonzero_scalar(3), j_random(tag_, rng, 3));
      Vec f = fts_flatten(x);
      for (int j = 0; j < n; ++j) pts.at(i, j) = f[j];
    }
    int r = mat_rank(std::move(pts));
    plain_check(id, "rank " + std::to_string(n) + " from " + std::to_string(n) + " cone points",
                r == n, "rank " + std::to_string(r), n);
  }
  {
    const auto& cal = report_.calibration;
    PolyMap q = quartic_poly(qc_);
    Vec x0 = fts_flatten(base_point(tag_));
    Vec ebeta(n);
    ebeta[n - 1] = kOne;
    GaussRat h = line_jet(q, x0, ebeta, 4).at(2);
    h += h;
    bool pass = cal.nullspace_dim == 1 && h == GaussRat(18);
    std::ostringstream obs;
    obs << "nullspace dim " << cal.nullspace_dim << ", beta^2 entry " << print_gauss(h)
        << ", coeffs [";
    for (int i = 0; i < 6; ++i) obs << (i ? ", " : "") << print_gauss(qc_.c[i]);
    obs << "]";
    plain_check("freudenthal.calibration_unique",
                "one-dimensional invariance nullspace, beta^2 Hessian entry 18", pass, obs.str());
  }
  {
    // first-order conditions re-derived from gradient vanishing on the
    // cone: the stacked rows must annihilate the coefficients and cut
    // the six-dimensional space down to rank 3
    const std::string id = "freudenthal.gradient_relations";
    Rng rng = trial_rng(id, 0);
    std::vector<PolyMap> mono(6);
    for (int m = 0; m < 6; ++m) {
      QuarticCoeffs single{tag_, {}};
      single.c[m] = kOne;
      mono[m] = quartic_poly(single);
    }
    long pts = capped(10);
    std::vector<Vec> rows;
    bool annihilates = true;
    for (long k = 0; k < pts; ++k) {
      FtsVector x = phi_hat(rng.nonzero_scalar(3), j_random(tag_, rng, 3));
      Vec xf = fts_flatten(x);
      std::array<Vec, 6> grads;
      for (int m = 0; m < 6; ++m) grads[m] = poly_gradient(mono[m], xf);
      for (int i = 0; i < n; ++i) {
        Vec row(6);
        bool nonzero = false;
        for (int m = 0; m < 6; ++m) {
          row[m] = grads[m][i];
          nonzero = nonzero || !row[m].is_zero();
        }
        if (!nonzero) continue;
        GaussRat dot;
        for (int m = 0; m < 6; ++m) dot += row[m] * qc_.c[m];
        if (!dot.is_zero()) annihilates = false;
        rows.push_back(std::move(row));
      }
    }
    Mat rowmat(static_cast<int>(rows.size()), 6);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (int j = 0; j < 6; ++j) rowmat.at(static_cast<int>(i), j) = rows[i][j];
    }
    int r = mat_rank(std::move(rowmat));
    plain_check(id, "calibrated coefficients annihilated; relation rank 3",
                annihilates && r == 3,
                std::string(annihilates ? "annihilated" : "NOT annihilated") + ", relation rank " +
                    std::to_string(r),
                pts);
  }
  trial_check("freudenthal.phi_vanishing", cfg_.trials, "Q(phi_hat(alpha, A)) = 0",
              [&](Rng& rng, long) -> std::optional<Json> {
                GaussRat alpha = rng.scalar(4);
                JordanElement a = j_random(tag_, rng, 4);
                if (alpha.is_zero() && a.is_zero()) alpha = kOne;
                FtsVector x = phi_hat(alpha, a);
                GaussRat q = eval_quartic(qc_, x);
                if (q.is_zero()) return std::nullopt;
                return Json{{"point", fts_to_json(x)}, {"Q", print_gauss(q)}};
              });
  {
    const std::string id = "freudenthal.transvection_zero";
    Rng rng = trial_rng(id, 0);
    LinOp l = derive_transvection(j_zero(tag_), rng);
    plain_check(id, "transvection of 0 is the identity", l == LinOp::identity(tag_),
                l == LinOp::identity(tag_) ? "identity" : "not identity");
  }
  trial_check("freudenthal.transvection_base_action", capped(20),
              "L_C x0 = (1, C, C#, N(C))",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement c = j_random(tag_, rng, 3);
                LinOp l = derive_transvection(c, rng);
                FtsVector want{kOne, c, sharp(c), det_norm(c)};
                FtsVector got = l.apply(base_point(tag_));
                if (got == want) return std::nullopt;
                return Json{{"C", jordan_to_json(c)}, {"got", fts_to_json(got)}};
              });
  trial_check("freudenthal.transvection_additivity", capped(10), "L_C L_D = L_{C+D}",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement c = j_random(tag_, rng, 3), d = j_random(tag_, rng, 3);
                LinOp lc = derive_transvection(c, rng);
                LinOp ld = derive_transvection(d, rng);
                LinOp lcd = derive_transvection(j_add(c, d), rng);
                if (lc.compose(ld) == lcd) return std::nullopt;
                return Json{{"C", jordan_to_json(c)}, {"D", jordan_to_json(d)}};
              });
  trial_check("freudenthal.one_parameter", capped(2),
              "entries of t -> L_{tC} are cubic; L_{tC} L_{sC} = L_{(t+s)C} on the grid",
              [&](Rng& rng, long) -> std::optional<Json> {
                JordanElement c = j_random(tag_, rng, 2);
                std::array<LinOp, 7> fam{LinOp::identity(tag_), LinOp::identity(tag_),
                                         LinOp::identity(tag_), LinOp::identity(tag_),
                                         LinOp::identity(tag_), LinOp::identity(tag_),
                                         LinOp::identity(tag_)};
                for (int t = 0; t <= 6; ++t) {
                  fam[t] = derive_transvection(j_scale(GaussRat(t), c), rng);
                }
                // cubic interpolation from t = 0..3 must reproduce t = 4
                Mat vdm(4, 4);
                for (int t = 0; t <= 3; ++t) {
                  GaussRat pw = kOne;
                  for (int k = 0; k <= 3; ++k) {
                    vdm.at(t, k) = pw;
                    pw *= GaussRat(t);
                  }
                }
                Mat vinv = mat_solve(std::move(vdm), Mat::identity(4));
                Mat predict(fam[0].m.rows, fam[0].m.cols);
                GaussRat t4(4);
                for (int k = 3; k >= 0; --k) {
                  Mat coeff(fam[0].m.rows, fam[0].m.cols);
                  for (int t = 0; t <= 3; ++t) {
                    if (!vinv.at(k, t).is_zero()) {
                      coeff = mat_add(coeff, mat_scale(vinv.at(k, t), fam[t].m));
                    }
                  }
                  predict = mat_add(mat_scale(t4, predict), coeff);
                }
                if (!(predict == fam[4].m)) {
                  return Json{{"C", jordan_to_json(c)}, {"reason", "entries not cubic in t"}};
                }
                for (int t = 0; t <= 3; ++t) {
                  for (int s = 0; s <= 3; ++s) {
                    if (!(fam[t].compose(fam[s]) == fam[t + s])) {
                      return Json{{"C", jordan_to_json(c)},
                                  {"t", t},
                                  {"s", s},
                                  {"reason", "one-parameter law fails"}};
                    }
                  }
                }
                return std::nullopt;
              });
  trial_check("freudenthal.invariance", 10, "Q(L x) = Q(x) for derived transvections",
              [&](Rng& rng, long i) -> std::optional<Json> {
                JordanElement c = j_random(tag_, rng, 2);
                LinOp l = i % 2 == 0 ? derive_transvection(c, rng)
                                     : derive_dual_transvection(c, rng);
                long pts = capped(25);
                for (long k = 0; k < pts; ++k) {
                  FtsVector x = fts_random(tag_, rng, 3);
                  GaussRat lhs = eval_quartic(qc_, l.apply(x));
                  GaussRat rhs = eval_quartic(qc_, x);
                  if (lhs != rhs) {
                    return Json{{"point", fts_to_json(x)},
                                {"Q(Lx)", print_gauss(lhs)},
                                {"Q(x)", print_gauss(rhs)}};
                  }
                }
                return std::nullopt;
              });
  trial_check("freudenthal.grading", cfg_.trials, "Q(s_lambda x) = lambda^6 Q(x)",
              [&](Rng& rng, long) -> std::optional<Json> {
                GaussRat lambda = rng.nonzero_scalar(5);
                FtsVector x = fts_random(tag_, rng, 4);
                GaussRat l2 = lambda * lambda;
                GaussRat l6 = l2 * l2 * l2;
                if (eval_quartic(qc_, grading_scaling(tag_, lambda).apply(x)) ==
                    l6 * eval_quartic(qc_, x)) {
                  return std::nullopt;
                }
                return Json{{"lambda", print_gauss(lambda)}, {"point", fts_to_json(x)}};
              });
  trial_check("freudenthal.flip_conjugation", capped(25),
              "flip is an involution and L'_D psi_hat(beta, B) = psi_hat(beta, B + beta D)",
              [&](Rng& rng, long) -> std::optional<Json> {
                LinOp sigma = flip_op(tag_);
                if (!(sigma.compose(sigma) == LinOp::identity(tag_))) {
                  return Json{{"reason", "flip is not an involution"}};
                }
                JordanElement d = j_random(tag_, rng, 3);
                LinOp lp = derive_dual_transvection(d, rng);
                GaussRat beta = rng.scalar(3);
                JordanElement b = j_random(tag_, rng, 3);
                if (beta.is_zero() && b.is_zero()) beta = kOne;
                FtsVector psi = sigma.apply(phi_hat(beta, b));
                FtsVector want = sigma.apply(phi_hat(beta, j_add(b, j_scale(beta, d))));
                if (lp.apply(psi) == want) return std::nullopt;
                return Json{{"D", jordan_to_json(d)}, {"beta", print_gauss(beta)},
                            {"B", jordan_to_json(b)}};
              });
  {
    int eps = report_.calibration.flip_sign;
    plain_check("freudenthal.flip_sign", "Q o flip = eps Q with eps in {+1, -1}, recorded",
                eps == 1 || eps == -1, "eps = " + std::to_string(eps));
  }
  trial_check("freudenthal.homogeneity", cfg_.trials, "Q(c x) = c^4 Q(x)",
              [&](Rng& rng, long) -> std::optional<Json> {
                GaussRat c = rng.scalar(5);
                FtsVector x = fts_random(tag_, rng, 4);
                GaussRat c2 = c * c;
                if (eval_quartic(qc_, fts_scale(c, x)) == c2 * c2 * eval_quartic(qc_, x)) {
                  return std::nullopt;
                }
                return Json{{"c", print_gauss(c)}, {"point", fts_to_json(x)}};
              });
  trial_check("freudenthal.hessian_gradient_pairing", capped(5),
              "Hess Q(x) p = grad H_p(x)",
              [&](Rng& rng, long) -> std::optional<Json> {
                FtsVector x = fts_random(tag_, rng, 2);
                FtsVector p = fts_random(tag_, rng, 2);
                if (p.is_zero()) p = base_point(tag_);
                GradientHessian gh = gradient_hessian(qc_, x);
                Vec lhs = mat_apply(gh.hess, fts_flatten(p));
                Vec rhs = poly_gradient(polar_cubic(qc_, p), fts_flatten(x));
                if (lhs == rhs) return std::nullopt;
                return Json{{"point", fts_to_json(x)}, {"p", fts_to_json(p)}};
              });
  {
    const std::string id = "freudenthal.hessian_base_point";
    GradientHessian gh = gradient_hessian(qc_, base_point(tag_));
    bool grad_zero = true;
    for (const auto& g : gh.grad) grad_zero = grad_zero && g.is_zero();
    bool single = true;
    for (int i = 0; i < n && single; ++i) {
      for (int j = 0; j < n; ++j) {
        bool is_bb = i == n - 1 && j == n - 1;
        if (is_bb ? gh.hess.at(i, j) != GaussRat(18) : !gh.hess.at(i, j).is_zero()) {
          single = false;
          break;
        }
      }
    }
    int r = mat_rank(gh.hess);
    plain_check(id, "gradient 0; Hessian rank 1 with single beta^2 entry 18",
                grad_zero && single && r == 1,
                std::string(grad_zero ? "gradient 0" : "gradient NONZERO") + ", rank " +
                    std::to_string(r) + (single ? ", single entry 18" : ", unexpected entries"));
  }
}

void Checker::strata_checks() {
  int n = fts_flat_dim(tag_);
  {
    StratumLabel l = classify(qc_, base_point(tag_));
    plain_check("strata.classify_base_point", "ClosedOrbitG", l == StratumLabel::ClosedOrbitG,
                to_string(l));
  }
  {
    FtsVector x(tag_);
    x.a = j_add(j_diag_unit(tag_, 0), j_diag_unit(tag_, 1));
    StratumLabel l = classify(qc_, x);
    plain_check("strata.classify_diag_rank2", "SigmaPlus", l == StratumLabel::SigmaPlus,
                to_string(l));
  }
  auto roundtrip = [&](const char* id, const std::vector<FtsVector>& pool, StratumLabel want) {
    trial_check(id, static_cast<long>(pool.size()),
                std::string("all samples classify to ") + to_string(want),
                [&, want](Rng&, long i) -> std::optional<Json> {
                  StratumLabel got = classify(qc_, pool[i]);
                  if (got == want) return std::nullopt;
                  return Json{{"point", fts_to_json(pool[i])}, {"label", to_string(got)}};
                });
  };
  roundtrip("strata.roundtrip_g", pool_g_, StratumLabel::ClosedOrbitG);
  roundtrip("strata.roundtrip_sigma", pool_sigma_, StratumLabel::SigmaPlus);
  roundtrip("strata.roundtrip_tau", pool_tau_, StratumLabel::TauSmooth);
  roundtrip("strata.roundtrip_ambient", pool_ambient_, StratumLabel::Ambient);
  trial_check("strata.sigma_gradient_zero", static_cast<long>(pool_sigma_.size()),
              "gradient exactly zero on every stationary-bisecant sample",
              [&](Rng&, long i) -> std::optional<Json> {
                for (const auto& g : quartic_gradient(qc_, pool_sigma_[i])) {
                  if (!g.is_zero()) return Json{{"point", fts_to_json(pool_sigma_[i])}};
                }
                return std::nullopt;
              });
  {
    long spaces = tag_.dim == 8 ? 10 : capped(100);
    trial_check("strata.tangent_space_vanishing", spaces,
                "Q = 0 on 100 random points of each sampled embedded tangent space",
                [&](Rng& rng, long) -> std::optional<Json> {
                  JordanElement a = j_random(tag_, rng, 3);
                  auto frame = tangent_frame(kOne, a);
                  for (int k = 0; k < 100; ++k) {
                    Vec y(n);
                    for (const auto& column : frame) {
                      GaussRat c = rng.scalar(3);
                      if (c.is_zero()) continue;
                      for (int j = 0; j < n; ++j) {
                        if (!column[j].is_zero()) y[j] += c * column[j];
                      }
                    }
                    FtsVector pt = fts_unflatten(tag_, y);
                    GaussRat q = eval_quartic(qc_, pt);
                    if (!q.is_zero()) {
                      return Json{{"point", fts_to_json(pt)}, {"Q", print_gauss(q)}};
                    }
                  }
                  return std::nullopt;
                });
  }
  trial_check("strata.classifier_equivariance", capped(50),
              "labels invariant under symmetry words and nonzero scalings",
              [&](Rng& rng, long i) -> std::optional<Json> {
                const std::vector<FtsVector>* pools[] = {&pool_g_, &pool_sigma_, &pool_tau_,
                                                         &pool_ambient_};
                const auto& pool = *pools[i % 4];
                const FtsVector& x = pool[static_cast<std::size_t>(i / 4) % pool.size()];
                StratumLabel base = classify(qc_, x);
                LinOp w = random_symmetry_word(tag_, rng);
                StratumLabel moved = classify(qc_, w.apply(x));
                GaussRat c = rng.nonzero_scalar(4);
                StratumLabel scaled = classify(qc_, fts_scale(c, x));
                if (moved == base && scaled == base) return std::nullopt;
                return Json{{"point", fts_to_json(x)},
                            {"base", to_string(base)},
                            {"word", to_string(moved)},
                            {"scaled", to_string(scaled)}};
              });
  {
    const std::string id = "strata.jacobian_rank";
    int want = 3 * tag_.dim + 4;
    bool pass = jacobian_rank_phi(kOne, j_zero(tag_)) == want &&
                jacobian_rank_phi(kOne, j_identity(tag_)) == want;
    long pts = 20;
    std::vector<std::uint8_t> ok(pts, 1);
    par::parallel_for(static_cast<std::size_t>(pts), [&](std::size_t i) {
      Rng rng = trial_rng(id, static_cast<long>(i));
      GaussRat alpha = rng.nonzero_scalar(3);
      JordanElement a = j_random(tag_, rng, 3);
      ok[i] = jacobian_rank_phi(alpha, a) == want ? 1 : 0;
    });
    long bad = std::count(ok.begin(), ok.end(), 0);
    plain_check(id, "rank " + std::to_string(want) + " at the cone point and 20 random points",
                pass && bad == 0,
                bad == 0 && pass ? "all ranks " + std::to_string(want)
                                 : std::to_string(bad) + " deviations",
                pts + 2);
  }
  {
    int want = 6 * tag_.dim + 8;
    plain_check("strata.ambient_dimension", "dim V = 6a+8", fts_flat_dim(tag_) == want,
                std::to_string(fts_flat_dim(tag_)));
  }
  if (slow_allowed()) {
    auto t0 = Clock::now();
    closure_ = compute_lie_closure(tag_, cfg_.seed);
    timings_.emplace_back("lie_closure a=" + std::to_string(tag_.dim), seconds_since(t0));
    int want = kClosureDims[tag_.dim];
    plain_check("strata.lie_closure_dim",
                std::to_string(want) + " (the classical group dimension)",
                closure_->dim() == want, std::to_string(closure_->dim()),
                closure_->dim());
  } else {
    skip_check("strata.lie_closure_dim", "133", "skipped: a=8 closure needs --include-slow");
  }
  if (closure_) {
    const std::string id = "strata.orbit_dims";
    struct Expect {
      const std::vector<FtsVector>* pool;
      int dim;
      const char* name;
    };
    const std::array<Expect, 3> table{
        Expect{&pool_g_, 3 * tag_.dim + 4, "G"},
        Expect{&pool_sigma_, 5 * tag_.dim + 5, "sigma+"},
        Expect{&pool_tau_, 6 * tag_.dim + 7, "tau smooth"}};
    bool pass = true;
    std::ostringstream obs;
    long samples = 0;
    bool euler_ever_added = false;
    for (const auto& e : table) {
      long k = std::min<long>(5, static_cast<long>(e.pool->size()));
      samples += k;
      int got = -1;
      for (long i = 0; i < k; ++i) {
        OrbitDim od = orbit_dim(*closure_, (*e.pool)[i]);
        got = od.dim;
        euler_ever_added = euler_ever_added || od.euler_added;
        if (od.dim != e.dim) pass = false;
      }
      obs << e.name << "=" << got << " ";
    }
    obs << (euler_ever_added ? "(euler direction adjoined at least once)"
                             : "(euler direction always inside the tangent span)");
    plain_check(id, "affine orbit dims 3a+4 / 5a+5 / 6a+7", pass, obs.str(), samples);
  } else {
    skip_check("strata.orbit_dims", "affine orbit dims 3a+4 / 5a+5 / 6a+7",
               "skipped: a=8 closure needs --include-slow");
  }
  if (closure_) {
    trial_check("strata.sigma_kernel_orbit_tangents", std::min<long>(3, pool_sigma_.size()),
                "Hessian kernel at sigma+ equals the orbit tangent span (dim 5a+5)",
                [&](Rng&, long i) -> std::optional<Json> {
                  const FtsVector& x = pool_sigma_[i];
                  Vec xf = fts_flatten(x);
                  GradientHessian gh = gradient_hessian(qc_, x);
                  EchelonSieve span(n);
                  for (const auto& m : closure_->basis) {
                    Vec mx = mat_apply(m, xf);
                    for (const auto& hx : mat_apply(gh.hess, mx)) {
                      if (!hx.is_zero()) {
                        return Json{{"point", fts_to_json(x)},
                                    {"reason", "orbit tangent not in Hessian kernel"}};
                      }
                    }
                    span.insert(std::move(mx));
                  }
                  int r = mat_rank(gh.hess);
                  int kernel = n - r;
                  if (span.dim() == kernel && kernel == 5 * tag_.dim + 5) return std::nullopt;
                  return Json{{"point", fts_to_json(x)},
                              {"span", span.dim()},
                              {"kernel", kernel}};
                });
  } else {
    skip_check("strata.sigma_kernel_orbit_tangents",
               "Hessian kernel at sigma+ equals the orbit tangent span",
               "skipped: a=8 closure needs --include-slow");
  }
  {
    const std::string id = "strata.sampler_reproducibility";
    bool pass = true;
    for (StratumLabel l : {StratumLabel::ClosedOrbitG, StratumLabel::SigmaPlus,
                           StratumLabel::TauSmooth, StratumLabel::Ambient}) {
      std::uint64_t s = pool_seed("repro", static_cast<long>(l));
      if (!(sample_stratum(qc_, l, s, false) == sample_stratum(qc_, l, s, false))) pass = false;
    }
    plain_check(id, "identical samples from identical seeds", pass,
                pass ? "reproducible" : "diverged", 4);
  }
}

void Checker::tancone_checks() {
  int n = fts_flat_dim(tag_);
  PolyMap q = quartic_poly(qc_);
  const int mult_trials = std::min(cfg_.trials, 8);
  {
    const std::string id = "tancone.multiplicity_base_point";
    Rng rng = trial_rng(id, 0);
    int m = multiplicity(q, fts_flatten(base_point(tag_)), mult_trials, rng, cfg_.mode);
    plain_check(id, "2 (double hyperplane)", m == 2, std::to_string(m));
  }
  trial_check("tancone.multiplicity_smooth", std::min<long>(3, pool_tau_.size()),
              "multiplicity 1 at smooth tangent-variety points",
              [&](Rng& rng, long i) -> std::optional<Json> {
                int m = multiplicity(q, fts_flatten(pool_tau_[i]), mult_trials, rng, cfg_.mode);
                if (m == 1) return std::nullopt;
                return Json{{"point", fts_to_json(pool_tau_[i])}, {"multiplicity", m}};
              });
  trial_check("tancone.multiplicity_bound", static_cast<long>(pool_sigma_.size() + pool_g_.size()),
              "multiplicity at most 2 at every sampled singular point",
              [&](Rng& rng, long i) -> std::optional<Json> {
                const FtsVector& x = i < static_cast<long>(pool_sigma_.size())
                                         ? pool_sigma_[i]
                                         : pool_g_[i - pool_sigma_.size()];
                int m = multiplicity(q, fts_flatten(x), mult_trials, rng, cfg_.mode);
                if (m <= 2) return std::nullopt;
                return Json{{"point", fts_to_json(x)}, {"multiplicity", m}};
              });
  {
    const std::string id = "tancone.profile_base_point";
    Rng rng = trial_rng(id, 0);
    ConeProfile p = hessian_profile(qc_, base_point(tag_), mult_trials, rng);
    bool pass = p.multiplicity == 2 && p.hessian_rank == 1 && p.kernel_dim == 6 * tag_.dim + 7;
    plain_check(id, "(2, 1, 6a+7)", pass,
                "(" + std::to_string(p.multiplicity) + ", " + std::to_string(p.hessian_rank) +
                    ", " + std::to_string(p.kernel_dim) + ")");
  }
  trial_check("tancone.profile_sigma", static_cast<long>(pool_sigma_.size()),
              "(2, a+3, 5a+5) at stationary-bisecant samples",
              [&](Rng& rng, long i) -> std::optional<Json> {
                ConeProfile p = hessian_profile(qc_, pool_sigma_[i], mult_trials, rng);
                if (p.multiplicity == 2 && p.hessian_rank == tag_.dim + 3 &&
                    p.kernel_dim == 5 * tag_.dim + 5) {
                  return std::nullopt;
                }
                return Json{{"point", fts_to_json(pool_sigma_[i])},
                            {"profile", Json::array({p.multiplicity, p.hessian_rank,
                                                     p.kernel_dim})}};
              });
  trial_check("tancone.secant_cone_profile", capped(20),
              "(2, a+2, 2a+1) at rank-1 points of the norm cubic; multiplicity 1 at rank 2",
              [&](Rng& rng, long i) -> std::optional<Json> {
                JordanElement x1 = i == 0 ? j_diag_unit(tag_, 0) : random_rank1(tag_, rng, 4);
                ConeProfile p = secant_cone_rank(x1, mult_trials, rng);
                if (p.multiplicity != 2 || p.hessian_rank != tag_.dim + 2 ||
                    p.kernel_dim != 2 * tag_.dim + 1) {
                  return Json{{"X", jordan_to_json(x1)},
                              {"profile", Json::array({p.multiplicity, p.hessian_rank,
                                                       p.kernel_dim})}};
                }
                JordanElement x2 = random_rank2(tag_, rng, 4);
                int m = multiplicity(det_poly(tag_), j_flatten(x2), mult_trials, rng);
                if (m != 1) return Json{{"X", jordan_to_json(x2)}, {"multiplicity", m}};
                return std::nullopt;
              });
  {
    // one polar report per random p, aggregated over the pinned 20 draws
    const std::string id = "tancone.polar_cone";
    long np = 20;
    std::vector<std::uint8_t> ok(np, 1);
    std::vector<Json> payloads(np);
    par::parallel_for(static_cast<std::size_t>(np), [&](std::size_t i) {
      Rng rng = trial_rng(id, static_cast<long>(i));
      FtsVector p = fts_random(tag_, rng, 3);
      while (p.beta.is_zero()) p.beta = rng.scalar(3);
      PolarConeReport rep = polar_cone_at_x0(qc_, p, std::min(cfg_.trials, 10), rng);
      if (!rep.all()) {
        ok[i] = 0;
        payloads[i] = Json{{"p", fts_to_json(p)},
                           {"phi1_is_18p3_beta", rep.phi1_is_18p3_beta},
                           {"phi2_vanishes", rep.phi2_vanishes},
                           {"phi3_matches_secant_cubic", rep.phi3_matches_secant_cubic},
                           {"phi3_independent_of_a", rep.phi3_independent_of_a},
                           {"gradient_matches_hessian_pairing",
                            rep.gradient_matches_hessian_pairing}};
      }
    });
    long bad = std::count(ok.begin(), ok.end(), 0);
    CheckResult r;
    r.id = id;
    r.expected =
        "Phi1 = 18 p3 beta_v; Phi2 of f vanishes; Phi3 on beta_v=0 is 2 p3 c5 N*(B_v), no A_v "
        "dependence; grad H_p = Hess Q . p";
    r.samples = np;
    if (bad == 0) {
      r.status = CheckResult::Status::Pass;
      r.observed = "all 20 polar directions check out";
    } else {
      r.status = CheckResult::Status::Fail;
      auto first = std::find(ok.begin(), ok.end(), 0) - ok.begin();
      r.observed = std::to_string(bad) + " polar directions failed";
      r.counterexample = std::move(payloads[first]);
    }
    add(std::move(r));
  }
  trial_check("tancone.profile_symmetry_invariance", std::min<long>(3, pool_sigma_.size()),
              "profiles are invariant under derived symmetries",
              [&](Rng& rng, long i) -> std::optional<Json> {
                const FtsVector& x = pool_sigma_[i];
                LinOp w = derive_transvection(j_random(tag_, rng, 2), rng);
                ConeProfile a = hessian_profile(qc_, x, mult_trials, rng);
                ConeProfile b = hessian_profile(qc_, w.apply(x), mult_trials, rng);
                if (a.multiplicity == b.multiplicity && a.hessian_rank == b.hessian_rank) {
                  return std::nullopt;
                }
                return Json{{"point", fts_to_json(x)}};
              });
  trial_check("tancone.multiplicity_scaling", std::min<long>(3, pool_sigma_.size()),
              "multiplicity is invariant under nonzero scalings",
              [&](Rng& rng, long i) -> std::optional<Json> {
                const FtsVector& x = pool_sigma_[i];
                GaussRat c = rng.nonzero_scalar(5);
                int m1 = multiplicity(q, fts_flatten(x), mult_trials, rng);
                int m2 = multiplicity(q, fts_flatten(fts_scale(c, x)), mult_trials, rng);
                if (m1 == m2) return std::nullopt;
                return Json{{"point", fts_to_json(x)}, {"c", print_gauss(c)}};
              });
  trial_check("tancone.jet_completeness", capped(25), "P(x + v) equals the jet sum at t = 1",
              [&](Rng& rng, long) -> std::optional<Json> {
                FtsVector x = fts_random(tag_, rng, 3);
                FtsVector v = fts_random(tag_, rng, 3);
                LineJet jet = line_jet(q, fts_flatten(x), fts_flatten(v), 4);
                GaussRat total;
                for (const auto& c : jet.coeffs) total += c;
                if (total == eval_quartic(qc_, fts_add(x, v))) return std::nullopt;
                return Json{{"x", fts_to_json(x)}, {"v", fts_to_json(v)}};
              });
  (void)n;
}

AlgebraReport Checker::run() {
  report_.algebra = tag_.dim;
  calibrate();
  build_pools();
  exactnum_checks();
  compalg_checks();
  jordan_checks();
  freudenthal_checks();
  strata_checks();
  tancone_checks();
  return std::move(report_);
}

}  // namespace

bool AlgebraReport::all_pass() const {
  for (const auto& c : checks) {
    if (c.failed()) return false;
  }
  return true;
}

bool VerifyReport::all_pass() const {
  for (const auto& r : reports) {
    if (!r.all_pass()) return false;
  }
  return true;
}

VerifyReport run_verify(const RunConfig& config) { return run_verify(config, QuarticTamper{}); }

VerifyReport run_verify(const RunConfig& config, const QuarticTamper& tamper) {
  if (config.trials < 1) throw Error("trials must be >= 1");
  par::set_max_threads(config.threads);
  VerifyReport out;
  for (int dim : config.algebras) {
    Checker checker(AlgebraTag::of(dim), config, tamper ? &tamper : nullptr, out.timings);
    out.reports.push_back(checker.run());
  }
  return out;
}

Json report_to_json(const VerifyReport& report, const RunConfig& config) {
  Json cfg{{"algebras", config.algebras},
           {"seed", config.seed},
           {"trials", config.trials},
           {"mode", config.mode == CertMode::Randomized ? "randomized" : "grid"},
           {"include_slow", config.include_slow}};
  Json reports = Json::array();
  for (const auto& r : report.reports) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json jc{{"id", c.id},         {"status", status_name(c.status)},
              {"expected", c.expected}, {"observed", c.observed},
              {"samples", c.samples},  {"seed", c.seed}};
      if (c.failed() && !c.counterexample.is_null()) jc["counterexample"] = c.counterexample;
      checks.push_back(std::move(jc));
    }
    Json cal = quartic_to_json(r.calibration.coeffs);
    reports.push_back(Json{{"algebra", r.algebra},
                           {"calibration",
                            Json{{"coeffs", cal.at("coeffs")},
                                 {"monomials", cal.at("monomials")},
                                 {"flip_sign", r.calibration.flip_sign},
                                 {"nullspace_dim", r.calibration.nullspace_dim}}},
                           {"checks", std::move(checks)}});
  }
  return Json{{"config", std::move(cfg)},
              {"reports", std::move(reports)},
              {"all_pass", report.all_pass()}};
}

std::string report_to_text(const VerifyReport& report, const RunConfig& config) {
  std::ostringstream out;
  for (const auto& r : report.reports) {
    out << "algebra a=" << r.algebra << " calibration [";
    for (int i = 0; i < 6; ++i) {
      out << (i ? ", " : "") << print_gauss(r.calibration.coeffs.c[i]);
    }
    out << "] flip_sign=" << r.calibration.flip_sign << "\n";
    for (const auto& c : r.checks) {
      out << "  [" << status_name(c.status) << "] " << c.id << " (" << c.samples
          << " samples, seed " << c.seed << ")";
      if (c.failed()) out << " expected: " << c.expected << "; observed: " << c.observed;
      out << "\n";
    }
  }
  out << (report.all_pass() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  (void)config;
  return out.str();
}

std::string render_report(const VerifyReport& report, const RunConfig& config) {
  if (config.output == RunConfig::Output::Text) return report_to_text(report, config);
  return report_to_json(report, config).dump(2) + "\n";
}

}  // namespace magica
