// Timings of the OpenMP kernels against their serial references.
#include <chrono>
#include <cstdio>
#include <cstring>

#include "magica/parallel.hpp"
#include "magica/ref.hpp"

using namespace magica;

namespace {

using Clock = std::chrono::steady_clock;

double time_of(const std::function<void()>& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, int dim, double serial, double parallel) {
  std::printf("%-28s a=%d  serial %8.3fs  parallel %8.3fs  speedup %.2fx\n", name, dim, serial,
              parallel, parallel > 0 ? serial / parallel : 0.0);
}

void bench_hessian(AlgebraTag tag, std::uint64_t seed) {
  CalibrationResult cal = calibrate_quartic(tag, 10, seed);
  Rng rng = Rng::derive(seed, fnv1a("bench_hessian"), tag.dim);
  FtsVector x = fts_random(tag, rng, 3);
  GradientHessian a, b;
  double ts = time_of([&] {
    par::set_max_threads(1);
    a = ref::gradient_hessian(cal.coeffs, x);
  });
  double tp = time_of([&] {
    par::set_max_threads(0);
    b = gradient_hessian(cal.coeffs, x);
  });
  if (!(a.hess == b.hess) || a.grad != b.grad) {
    std::printf("MISMATCH between serial and parallel hessian at a=%d\n", tag.dim);
  }
  row("gradient_hessian", tag.dim, ts, tp);
}

void bench_trials(AlgebraTag tag, std::uint64_t seed, long n) {
  auto body = [&](std::size_t i) {
    Rng rng = Rng::derive(seed, fnv1a("bench_trials"), i);
    JordanElement a = j_random(tag, rng, 5);
    GaussRat nn = det_norm(a);
    if (trace_pair(sharp(a), a) != nn + nn + nn) std::printf("identity failed?!\n");
  };
  double ts = time_of([&] { par::serial_for(static_cast<std::size_t>(n), body); });
  par::set_max_threads(0);
  double tp = time_of([&] { par::parallel_for(static_cast<std::size_t>(n), body); });
  row("sharp_pairing trials", tag.dim, ts, tp);
}

void bench_closure(AlgebraTag tag, std::uint64_t seed) {
  int ds = 0, dp = 0;
  double ts = time_of([&] {
    par::set_max_threads(1);
    ds = ref::lie_closure_dim(tag, seed);
  });
  double tp = time_of([&] {
    par::set_max_threads(0);
    dp = lie_closure_dim(tag, seed);
  });
  if (ds != dp) std::printf("MISMATCH closure dims %d vs %d at a=%d\n", ds, dp, tag.dim);
  row("lie_closure", tag.dim, ts, tp);
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) slow = true;
  }
  std::uint64_t seed = 0;
  for (int dim : {1, 2, 4}) {
    bench_hessian(AlgebraTag::of(dim), seed);
  }
  for (int dim : {2, 4}) {
    bench_trials(AlgebraTag::of(dim), seed, 2000);
  }
  for (int dim : {1, 2}) {
    bench_closure(AlgebraTag::of(dim), seed);
  }
  if (slow) bench_closure(AlgebraTag::of(4), seed);
  par::set_max_threads(0);
  return 0;
}
