#include <doctest.h>

#include "magica/linalg.hpp"

using namespace magica;

namespace {

Mat random_mat(Rng& rng, int r, int c, int bound = 9) {
  Mat m(r, c);
  for (auto& x : m.a) x = rng.scalar(bound);
  return m;
}

}  // namespace

TEST_CASE("rank of products and stacked matrices") {
  Rng rng(1);
  Mat a = random_mat(rng, 5, 5);
  CHECK(mat_rank(a) == 5);  // generic square matrices are invertible
  // rank-1 outer product
  Mat u = random_mat(rng, 5, 1), v = random_mat(rng, 1, 5);
  Mat outer = mat_mul(u, v);
  CHECK(mat_rank(outer) == 1);
  CHECK(mat_rank(Mat::identity(7)) == 7);
  CHECK(mat_rank(Mat(4, 6)) == 0);
}

TEST_CASE("solve returns the exact solution") {
  Rng rng(2);
  Mat a = random_mat(rng, 6, 6);
  Mat x = random_mat(rng, 6, 3);
  Mat rhs = mat_mul(a, x);
  CHECK(mat_solve(a, rhs) == x);
}

TEST_CASE("solve throws on singular systems") {
  Mat a(3, 3);  // zero matrix
  Mat rhs = Mat::identity(3);
  CHECK_THROWS_AS(mat_solve(a, rhs), Error);
}

TEST_CASE("nullspace vectors annihilate the matrix") {
  Rng rng(3);
  // build a 4x7 matrix of rank at most 4: nullspace dim >= 3
  Mat m = random_mat(rng, 4, 7);
  auto basis = mat_nullspace(m);
  CHECK(basis.size() == 7 - mat_rank(m));
  for (const auto& v : basis) {
    Vec img = mat_apply(m, v);
    for (const auto& x : img) CHECK(x.is_zero());
  }
}

TEST_CASE("content stripping keeps integer coprime rows") {
  Vec row{GaussRat(make_rat(2, 3)), GaussRat(make_rat(4, 3)), GaussRat(make_rat(-2, 9))};
  strip_content(row);
  CHECK(row[0] == GaussRat(3));
  CHECK(row[1] == GaussRat(6));
  CHECK(row[2] == GaussRat(-1));
}

TEST_CASE("echelon sieve tracks spans exactly") {
  Rng rng(4);
  EchelonSieve sieve(6);
  std::vector<Vec> vs;
  for (int k = 0; k < 3; ++k) {
    Vec v(6);
    for (auto& x : v) x = rng.scalar(9);
    vs.push_back(v);
    CHECK(sieve.insert(v));
  }
  CHECK(sieve.dim() == 3);
  // a linear combination does not grow the span
  Vec combo(6);
  for (int k = 0; k < 3; ++k) {
    GaussRat c = rng.scalar(9);
    for (int j = 0; j < 6; ++j) combo[j] += c * vs[k][j];
  }
  CHECK(sieve.contains(combo));
  CHECK(!sieve.insert(combo));
  CHECK(sieve.dim() == 3);
  Vec fresh(6);
  for (auto& x : fresh) x = rng.scalar(9);
  CHECK(!sieve.contains(fresh));  // generic vector escapes a 3-dim span
}

TEST_CASE("matrix transpose and product shapes") {
  Rng rng(5);
  Mat a = random_mat(rng, 3, 5);
  Mat t = mat_transpose(a);
  CHECK(t.rows == 5);
  CHECK(t.cols == 3);
  CHECK(mat_transpose(t) == a);
  CHECK_THROWS_AS(mat_mul(a, a), Error);
}
