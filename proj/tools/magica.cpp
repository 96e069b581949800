#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "magica/parallel.hpp"
#include "magica/ref.hpp"
#include "magica/verify.hpp"

namespace {

using namespace magica;

struct Opts {
  std::string algebra = "all";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int trials = 100;
  std::string mode = "randomized";
  bool include_slow = false;
  std::string output = "json";
  int threads = 0;
};

void add_common(CLI::App* sub, Opts& o) {
  sub->add_option("--algebra", o.algebra, "composition algebra dimension: 1, 2, 4, 8 or all")
      ->check(CLI::IsMember({"1", "2", "4", "8", "all"}))
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "base seed (MAGICA_SEED overrides the default)")
      ->capture_default_str();
  sub->add_option("--trials", o.trials, "randomized trials per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--mode", o.mode, "zero-certification mode")
      ->check(CLI::IsMember({"randomized", "grid"}))
      ->capture_default_str();
  sub->add_flag("--include-slow", o.include_slow, "include the a=8 closures and suites");
  sub->add_option("--output", o.output, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_option("--threads", o.threads, "worker threads (0 = default)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void apply_env_seed(CLI::App* sub, Opts& o) {
  if (sub->count("--seed") > 0) return;
  if (const char* env = std::getenv("MAGICA_SEED")) {
    o.seed = std::strtoull(env, nullptr, 10);
  }
}

RunConfig config_from(const Opts& o) {
  RunConfig cfg;
  if (o.algebra == "all") {
    cfg.algebras = {1, 2, 4};
    if (o.include_slow) cfg.algebras.push_back(8);
  } else {
    cfg.algebras = {std::stoi(o.algebra)};
  }
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.mode = o.mode == "grid" ? CertMode::Grid : CertMode::Randomized;
  cfg.include_slow = o.include_slow;
  cfg.output = o.output == "text" ? RunConfig::Output::Text : RunConfig::Output::Json;
  cfg.threads = o.threads;
  return cfg;
}

Json read_stdin_json() {
  std::string text((std::istreambuf_iterator<char>(std::cin)),
                   std::istreambuf_iterator<char>());
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("stdin is not valid JSON");
  return j;
}

QuarticCoeffs calibrated(AlgebraTag tag, const Opts& o) {
  return calibrate_quartic(tag, std::max(8, std::min(o.trials, 50)), o.seed).coeffs;
}

int cmd_calibrate(const Opts& o) {
  RunConfig cfg = config_from(o);
  magica::par::set_max_threads(cfg.threads);
  Json payloads = Json::array();
  for (int dim : cfg.algebras) {
    CalibrationResult cal =
        calibrate_quartic(AlgebraTag::of(dim), std::max(8, std::min(o.trials, 50)), o.seed);
    Json j = quartic_to_json(cal.coeffs);
    j["flip_sign"] = cal.flip_sign;
    j["nullspace_dim"] = cal.nullspace_dim;
    j["seed"] = o.seed;
    payloads.push_back(std::move(j));
    if (cfg.output == RunConfig::Output::Text) {
      const auto& c = cal.coeffs.c;
      std::cout << "a=" << dim << " coeffs";
      for (const auto& x : c) std::cout << " " << print_gauss(x);
      std::cout << " flip_sign=" << cal.flip_sign << "\n";
    }
  }
  if (cfg.output == RunConfig::Output::Json) {
    std::cout << Json{{"calibrations", std::move(payloads)}}.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const Opts& o) {
  RunConfig cfg = config_from(o);
  VerifyReport report = run_verify(cfg);
  std::cout << render_report(report, cfg);
  // stage timings go to stderr so reports stay byte-stable
  for (const auto& [name, secs] : report.timings) {
    std::cerr << "# " << name << ": " << secs << "s\n";
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_classify(const Opts& o) {
  FtsVector x = fts_from_json(read_stdin_json());
  if (o.algebra != "all" && std::stoi(o.algebra) != x.tag.dim) {
    throw ParseError("--algebra disagrees with the point's algebra tag");
  }
  magica::par::set_max_threads(o.threads);
  QuarticCoeffs qc = calibrated(x.tag, o);
  StratumLabel label = classify(qc, x);
  GaussRat q = eval_quartic(qc, x);
  bool grad_zero = true;
  for (const auto& g : quartic_gradient(qc, x)) grad_zero = grad_zero && g.is_zero();
  Json out{{"label", to_string(label)},
           {"algebra", x.tag.dim},
           {"q_value", print_gauss(q)},
           {"gradient_zero", grad_zero}};
  if (q.is_zero() && grad_zero && !x.is_zero()) {
    GradientHessian gh = gradient_hessian(qc, x);
    int r = mat_rank(gh.hess);
    out["hessian_rank"] = r;
    out["kernel_dim"] = fts_flat_dim(x.tag) - r;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_sample(const Opts& o, const std::string& label_name) {
  StratumLabel label = stratum_from_string(label_name);
  if (o.algebra == "all") throw ParseError("sample needs a single --algebra");
  AlgebraTag tag = AlgebraTag::of(std::stoi(o.algebra));
  magica::par::set_max_threads(o.threads);
  QuarticCoeffs qc = calibrated(tag, o);
  FtsVector x = sample_stratum(qc, label, o.seed);
  Json out{{"label", to_string(label)},
           {"algebra", tag.dim},
           {"seed", o.seed},
           {"point", fts_to_json(x)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_tangent_cone(const Opts& o) {
  FtsVector x = fts_from_json(read_stdin_json());
  if (o.algebra != "all" && std::stoi(o.algebra) != x.tag.dim) {
    throw ParseError("--algebra disagrees with the point's algebra tag");
  }
  magica::par::set_max_threads(o.threads);
  QuarticCoeffs qc = calibrated(x.tag, o);
  if (!eval_quartic(qc, x).is_zero()) {
    throw ParseError("the point is not on the tangent variety (Q != 0)");
  }
  PolyMap q = quartic_poly(qc);
  Rng rng = Rng::derive(o.seed, fnv1a("tangent-cone"), x.tag.dim);
  CertMode mode = o.mode == "grid" ? CertMode::Grid : CertMode::Randomized;
  int mult = multiplicity(q, fts_flatten(x), o.trials, rng, mode);
  GradientHessian gh = gradient_hessian(qc, x);
  int r = mat_rank(gh.hess);
  Json out{{"algebra", x.tag.dim},
           {"multiplicity", mult},
           {"hessian_rank", r},
           {"kernel_dim", fts_flat_dim(x.tag) - r}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_polar(const Opts& o) {
  RunConfig cfg = config_from(o);
  magica::par::set_max_threads(cfg.threads);
  bool all_ok = true;
  Json reports = Json::array();
  for (int dim : cfg.algebras) {
    AlgebraTag tag = AlgebraTag::of(dim);
    QuarticCoeffs qc = calibrated(tag, o);
    Json records = Json::array();
    long np = std::min(o.trials, 20);
    for (long i = 0; i < np; ++i) {
      Rng rng = Rng::derive(o.seed, fnv1a("polar"), (static_cast<std::uint64_t>(dim) << 32) | i);
      FtsVector p = fts_random(tag, rng, 3);
      while (p.beta.is_zero()) p.beta = rng.scalar(3);
      PolarConeReport rep = polar_cone_at_x0(qc, p, std::min(o.trials, 10), rng);
      all_ok = all_ok && rep.all();
      records.push_back(Json{{"p", fts_to_json(p)},
                             {"phi1_is_18p3_beta", rep.phi1_is_18p3_beta},
                             {"phi2_vanishes", rep.phi2_vanishes},
                             {"phi3_matches_secant_cubic", rep.phi3_matches_secant_cubic},
                             {"phi3_independent_of_a", rep.phi3_independent_of_a},
                             {"gradient_matches_hessian_pairing",
                              rep.gradient_matches_hessian_pairing}});
    }
    reports.push_back(Json{{"algebra", dim}, {"records", std::move(records)}});
  }
  std::cout << Json{{"polar", std::move(reports)}, {"all_pass", all_ok}}.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the third-row magic square geometry"};
  app.require_subcommand(1);

  Opts o;
  std::string sample_label;

  CLI::App* calibrate = app.add_subcommand("calibrate", "derive the invariant quartic");
  CLI::App* verify = app.add_subcommand("verify", "run the full verification report");
  CLI::App* classify = app.add_subcommand("classify", "classify a point read from stdin");
  CLI::App* sample = app.add_subcommand("sample", "sample a point of a stratum");
  CLI::App* tangent = app.add_subcommand("tangent-cone", "profile the quartic at a stdin point");
  CLI::App* polar = app.add_subcommand("polar", "polar divisor analysis at the base point");
  for (CLI::App* sub : {calibrate, verify, classify, sample, tangent, polar}) {
    add_common(sub, o);
  }
  sample->add_option("--label", sample_label, "stratum to sample")
      ->required()
      ->check(CLI::IsMember({"ClosedOrbitG", "SigmaPlus", "TauSmooth", "Ambient"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* active = app.get_subcommands().front();
  apply_env_seed(active, o);

  try {
    if (active == calibrate) return cmd_calibrate(o);
    if (active == verify) return cmd_verify(o);
    if (active == classify) return cmd_classify(o);
    if (active == sample) return cmd_sample(o, sample_label);
    if (active == tangent) return cmd_tangent_cone(o);
    if (active == polar) return cmd_polar(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
