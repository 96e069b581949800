#include <doctest.h>

#include "magica/compalg.hpp"

using namespace magica;

namespace {
const std::array<AlgebraTag, 4> kTags{AlgebraTag::of(1), AlgebraTag::of(2), AlgebraTag::of(4),
                                      AlgebraTag::of(8)};
}

TEST_CASE("e1 squares to -1 for dim >= 2") {
  for (auto tag : kTags) {
    if (tag.dim < 2) continue;
    CdElement e1 = cd_unit(tag, 1);
    CdElement p = cd_mul(e1, e1);
    CHECK(p == cd_scale(GaussRat(-1), cd_one(tag)));
  }
}

TEST_CASE("unit element: conj, norm, trace") {
  for (auto tag : kTags) {
    auto [c, n, t] = cd_conj_norm_trace(cd_one(tag));
    CHECK(c == cd_one(tag));
    CHECK(n == kOne);
    CHECK(t == GaussRat(2));
  }
}

TEST_CASE("composition law on 500 random pairs per algebra") {
  for (auto tag : kTags) {
    Rng rng(11 + tag.dim);
    for (int k = 0; k < 500; ++k) {
      CdElement x = cd_random(tag, rng, 6), y = cd_random(tag, rng, 6);
      CHECK(cd_norm(cd_mul(x, y)) == cd_norm(x) * cd_norm(y));
    }
  }
}

TEST_CASE("octonion associator witness (e1 e2) e4 != e1 (e2 e4)") {
  AlgebraTag tag = AlgebraTag::of(8);
  CdElement e1 = cd_unit(tag, 1), e2 = cd_unit(tag, 2), e4 = cd_unit(tag, 4);
  CdElement lhs = cd_mul(cd_mul(e1, e2), e4);
  CdElement rhs = cd_mul(e1, cd_mul(e2, e4));
  CHECK(!(cd_sub(lhs, rhs).is_zero()));
}

TEST_CASE("associativity holds up to dim 4, commutativity up to dim 2") {
  for (auto tag : kTags) {
    Rng rng(23 + tag.dim);
    bool assoc = true, comm = true;
    for (int k = 0; k < 100; ++k) {
      CdElement x = cd_random(tag, rng, 5), y = cd_random(tag, rng, 5),
                z = cd_random(tag, rng, 5);
      if (!(cd_mul(cd_mul(x, y), z) == cd_mul(x, cd_mul(y, z)))) assoc = false;
      if (!(cd_mul(x, y) == cd_mul(y, x))) comm = false;
    }
    CHECK(assoc == (tag.dim <= 4));
    CHECK(comm == (tag.dim <= 2));
  }
}

TEST_CASE("alternativity on random pairs, all algebras") {
  for (auto tag : kTags) {
    Rng rng(5 + tag.dim);
    for (int k = 0; k < 200; ++k) {
      CdElement x = cd_random(tag, rng, 5), y = cd_random(tag, rng, 5);
      CHECK(cd_mul(x, cd_mul(x, y)) == cd_mul(cd_mul(x, x), y));
      CHECK(cd_mul(cd_mul(y, x), x) == cd_mul(y, cd_mul(x, x)));
    }
  }
}

TEST_CASE("trace associativity makes the triple trace cyclic") {
  for (auto tag : kTags) {
    Rng rng(7 + tag.dim);
    for (int k = 0; k < 100; ++k) {
      CdElement x = cd_random(tag, rng, 5), y = cd_random(tag, rng, 5),
                z = cd_random(tag, rng, 5);
      CHECK(cd_trace(cd_mul(x, y)) == cd_trace(cd_mul(y, x)));
      CHECK(cd_trace(cd_mul(cd_mul(x, y), z)) == cd_trace(cd_mul(x, cd_mul(y, z))));
    }
  }
}

TEST_CASE("tag mismatch is rejected") {
  CdElement x = cd_one(AlgebraTag::of(2));
  CdElement y = cd_one(AlgebraTag::of(4));
  CHECK_THROWS_AS(cd_mul(x, y), TagMismatch);
  CHECK_THROWS_AS(cd_add(x, y), TagMismatch);
}

TEST_CASE("only dimensions 1, 2, 4, 8 exist") {
  CHECK_THROWS_AS(AlgebraTag::of(3), Error);
  CHECK_THROWS_AS(AlgebraTag::of(16), Error);
}
