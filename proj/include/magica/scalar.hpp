#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "magica/errors.hpp"

namespace magica {

/// Exact rational scalar. GMP keeps the canonical form: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses canonical text "p/q" (plain integers also accepted).
Rat parse_rat(const std::string& text);

/// Canonical text form "p/q", no spaces.
std::string print_rat(const Rat& r);

/// Gaussian rational re + im*i, the scalar field of every computation here.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(int v) : re(v), im(0) {}   // NOLINT: implicit by design
  GaussRat(long v) : re(v), im(0) {}  // NOLINT
  GaussRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return {re, -im}; }

  /// re^2 + im^2 (the field norm down to the rationals).
  Rat field_norm() const { return re * re + im * im; }

  GaussRat inv() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline const GaussRat kZero{};
inline const GaussRat kOne{1};

GaussRat imaginary_unit();

/// Parses canonical text "p/q", "p/q+r/s*i" or "p/q-r/s*i".
GaussRat parse_gauss(const std::string& text);
std::string print_gauss(const GaussRat& x);

/// Deterministic pseudo-random stream of bounded exact scalars
/// (splitmix64 underneath). One generator per task; never shared.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream derived from (seed, salts); stable across runs.
  static Rng derive(std::uint64_t seed, std::uint64_t salt_a, std::uint64_t salt_b = 0);

  std::uint64_t next_u64();

  /// Uniform in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Rational with |numerator| <= bound and 1 <= denominator <= bound
  /// before reduction (so also after). Requires bound >= 2.
  Rat rat(std::int64_t bound);

  /// Gaussian rational with both parts drawn by rat(bound).
  GaussRat scalar(std::int64_t bound);

  /// Nonzero variant (redraws; the zero draw has small probability).
  GaussRat nonzero_scalar(std::int64_t bound);

 private:
  std::uint64_t state_;
};

/// First element of the stream seeded by `seed`; contract entry point.
GaussRat rand_scalar(std::uint64_t seed, std::int64_t bound);

/// FNV-1a of a string, used to give every named check its own salt.
std::uint64_t fnv1a(const std::string& text);

}  // namespace magica
