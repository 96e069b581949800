#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "magica/scalar.hpp"

namespace magica {

using Vec = std::vector<GaussRat>;

/// Dense matrix over the Gaussian rationals, row major.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<GaussRat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  GaussRat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const GaussRat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Mat identity(int n);
  bool is_zero() const;

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const GaussRat& s, const Mat& x);
Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_transpose(const Mat& m);

/// Rescales the row to coprime Gaussian-integer entries (clears
/// denominators, strips the integer content). No-op on zero rows.
void strip_content(Vec& row);

/// Exact rank by fraction-free elimination with per-row content stripping.
int mat_rank(Mat m);

/// Solves a X = rhs for square nonsingular a; throws on singular input.
Mat mat_solve(Mat a, Mat rhs);
Vec mat_solve_vec(const Mat& a, const Vec& rhs);

/// Basis of the right nullspace of m.
std::vector<Vec> mat_nullspace(Mat m);

/// Incremental exact span of row vectors, kept in echelon form with
/// coprime integer rows.
class EchelonSieve {
 public:
  explicit EchelonSieve(int ncols) : ncols_(ncols) {}

  /// Adds the vector to the span; returns true if the dimension grew.
  bool insert(Vec v);

  bool contains(Vec v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

 private:
  void reduce(Vec& v) const;

  int ncols_;
  std::vector<std::pair<int, Vec>> rows_;  // (pivot index, stripped row), sorted
};

}  // namespace magica
