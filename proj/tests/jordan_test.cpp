#include <doctest.h>

#include "magica/jordan.hpp"

using namespace magica;

namespace {
const std::array<AlgebraTag, 4> kTags{AlgebraTag::of(1), AlgebraTag::of(2), AlgebraTag::of(4),
                                      AlgebraTag::of(8)};
}

TEST_CASE("norm of identity and diagonal matrices") {
  for (auto tag : kTags) {
    CHECK(det_norm(j_identity(tag)) == kOne);
    JordanElement d = j_diag(tag, GaussRat(2), GaussRat(-3), GaussRat(make_rat(1, 2)));
    CHECK(det_norm(d) == GaussRat(-3));
    CHECK(sharp(j_identity(tag)) == j_identity(tag));
    CHECK(trace_pair(j_identity(tag), j_identity(tag)) == GaussRat(3));
  }
}

TEST_CASE("cubic interpolation along the diagonal recovers binomial multiples of N") {
  // N(A + tA) = (1+t)^3 N(A): exact interpolation at t = 0..3 is an
  // independent oracle for the polarization T(A,A,A) = 6 N(A)
  for (auto tag : kTags) {
    Rng rng(101 + tag.dim);
    for (int k = 0; k < 50; ++k) {
      JordanElement a = j_random(tag, rng, 5);
      GaussRat n = det_norm(a);
      // values at t = 0..3
      std::array<GaussRat, 4> vals;
      for (int t = 0; t <= 3; ++t) {
        vals[t] = det_norm(j_scale(GaussRat(1 + t), a));
      }
      // finite differences give 6 * leading coefficient = T(A,A,A)
      GaussRat d3 = vals[3] - GaussRat(3) * vals[2] + GaussRat(3) * vals[1] - vals[0];
      CHECK(d3 == GaussRat(6) * n);
    }
  }
}

TEST_CASE("adjugate identity suite on random elements") {
  for (auto tag : kTags) {
    Rng rng(7 + tag.dim);
    for (int k = 0; k < 200; ++k) {
      JordanElement a = j_random(tag, rng, 5);
      GaussRat n = det_norm(a);
      JordanElement sa = sharp(a);
      CHECK(trace_pair(sa, a) == n + n + n);
      CHECK(sharp(sa) == j_scale(n, a));
      CHECK(det_norm(sa) == n * n);
      CHECK(cross(a, a) == j_add(sa, sa));
    }
  }
}

TEST_CASE("trilinear form of the cross is fully symmetric") {
  for (auto tag : kTags) {
    Rng rng(13 + tag.dim);
    for (int k = 0; k < 100; ++k) {
      JordanElement a = j_random(tag, rng, 4), b = j_random(tag, rng, 4),
                    c = j_random(tag, rng, 4);
      GaussRat t = trace_pair(cross(a, b), c);
      CHECK(t == trace_pair(cross(a, c), b));
      CHECK(t == trace_pair(cross(b, c), a));
    }
  }
}

TEST_CASE("rank ladder on explicit elements") {
  for (auto tag : kTags) {
    CHECK(rank_of(j_zero(tag)) == 0);
    CHECK(rank_of(j_diag_unit(tag, 0)) == 1);
    CHECK(rank_of(j_add(j_diag_unit(tag, 0), j_diag_unit(tag, 1))) == 2);
    CHECK(rank_of(j_identity(tag)) == 3);
  }
}

TEST_CASE("gram elements: base example and rank-1 contract") {
  for (auto tag : kTags) {
    CHECK(gram_rank1(cd_one(tag), cd_zero(tag), kZero) == j_diag_unit(tag, 0));
    Rng rng(17 + tag.dim);
    for (int k = 0; k < 200; ++k) {
      JordanElement g = random_rank1(tag, rng, 5);
      CHECK(sharp(g).is_zero());
      CHECK(rank_of(g) == 1);
    }
  }
}

TEST_CASE("gram of the zero column is rejected") {
  AlgebraTag tag = AlgebraTag::of(2);
  CHECK_THROWS_AS(gram_rank1(cd_zero(tag), cd_zero(tag), kZero), DegenerateInput);
}

TEST_CASE("isotropic gram columns are surfaced as degenerate") {
  AlgebraTag tag = AlgebraTag::of(2);
  // u = 1 + i e1 has n(u) = 0 over the complexification
  CdElement u(tag);
  u.coeffs[0] = kOne;
  u.coeffs[1] = imaginary_unit();
  CHECK(cd_norm(u).is_zero());
  CHECK_THROWS_AS(gram_rank1(u, cd_zero(tag), kZero), DegenerateInput);
}

TEST_CASE("secant property: sums of rank-1 elements satisfy N = 0") {
  for (auto tag : kTags) {
    Rng rng(19 + tag.dim);
    for (int k = 0; k < 100; ++k) {
      JordanElement s = j_add(random_rank1(tag, rng, 4), random_rank1(tag, rng, 4));
      CHECK(det_norm(s).is_zero());
      CHECK(rank_of(s) <= 2);
    }
  }
}

TEST_CASE("sharp drops rank-2 elements to rank at most 1") {
  for (auto tag : kTags) {
    Rng rng(23 + tag.dim);
    for (int k = 0; k < 50; ++k) {
      JordanElement a = random_rank2(tag, rng, 4);
      CHECK(rank_of(sharp(a)) <= 1);
    }
  }
}

TEST_CASE("slot permutations commute with the cubic package") {
  const std::array<std::array<int, 3>, 6> perms{std::array<int, 3>{0, 1, 2}, {0, 2, 1},
                                                {1, 0, 2},                   {1, 2, 0},
                                                {2, 0, 1},                   {2, 1, 0}};
  for (auto tag : kTags) {
    Rng rng(29 + tag.dim);
    for (int k = 0; k < 20; ++k) {
      JordanElement a = j_random(tag, rng, 4), b = j_random(tag, rng, 4);
      for (const auto& p : perms) {
        JordanElement pa = permute_slots(a, p);
        CHECK(det_norm(pa) == det_norm(a));
        CHECK(sharp(pa) == permute_slots(sharp(a), p));
        CHECK(trace_pair(pa, permute_slots(b, p)) == trace_pair(a, b));
      }
    }
  }
}

TEST_CASE("flat coordinates round-trip") {
  for (auto tag : kTags) {
    Rng rng(31 + tag.dim);
    JordanElement a = j_random(tag, rng, 9);
    CHECK(j_unflatten(tag, j_flatten(a)) == a);
    CHECK(static_cast<int>(j_basis(tag).size()) == j_flat_dim(tag));
  }
}

TEST_CASE("rank is lower semicontinuous along sampled lines") {
  for (auto tag : kTags) {
    Rng rng(37 + tag.dim);
    for (int k = 0; k < 30; ++k) {
      JordanElement a = k % 2 == 0 ? random_rank1(tag, rng, 3) : random_rank2(tag, rng, 3);
      JordanElement b = j_random(tag, rng, 3);
      int base = rank_of(a);
      for (int j = 0; j < 4; ++j) {
        GaussRat s = rng.nonzero_scalar(9);
        CHECK(rank_of(j_add(a, j_scale(s, b))) >= base);
      }
    }
  }
}
