#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "magica/json_io.hpp"
#include "magica/strata.hpp"
#include "magica/tancone.hpp"

namespace magica {

struct RunConfig {
  std::vector<int> algebras{1, 2, 4};
  std::uint64_t seed = 0;
  int trials = 100;
  CertMode mode = CertMode::Randomized;
  bool include_slow = false;
  enum class Output { Json, Text } output = Output::Json;
  int threads = 0;
};

struct CheckResult {
  enum class Status { Pass, Fail, Skip };

  std::string id;
  Status status = Status::Pass;
  std::string expected;
  std::string observed;
  long samples = 0;
  std::uint64_t seed = 0;
  Json counterexample;  // present only on failure

  bool failed() const { return status == Status::Fail; }
};

struct AlgebraReport {
  int algebra = 0;
  CalibrationResult calibration;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

struct VerifyReport {
  std::vector<AlgebraReport> reports;
  /// Wall-clock seconds for the expensive stages, by name. Kept out of
  /// the serialized report so identical configs give identical bytes.
  std::vector<std::pair<std::string, double>> timings;

  bool all_pass() const;
};

/// Optional hook that corrupts the calibrated quartic before the checks
/// run; used to prove the suite actually detects faults.
using QuarticTamper = std::function<void(QuarticCoeffs&)>;

VerifyReport run_verify(const RunConfig& config);
VerifyReport run_verify(const RunConfig& config, const QuarticTamper& tamper);

Json report_to_json(const VerifyReport& report, const RunConfig& config);
std::string report_to_text(const VerifyReport& report, const RunConfig& config);
/// Renders by config.output; JSON is one canonical line-wrapped dump.
std::string render_report(const VerifyReport& report, const RunConfig& config);

}  // namespace magica
