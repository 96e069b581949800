#include "magica/linalg.hpp"

#include <algorithm>

namespace magica {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = kOne;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Mat mat_add(const Mat& x, const Mat& y) {
  Mat z(x.rows, x.cols);
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  Mat z(x.rows, x.cols);
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
  return z;
}

Mat mat_scale(const GaussRat& s, const Mat& x) {
  Mat z(x.rows, x.cols);
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = s * x.a[i];
  return z;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw Error("matrix shape mismatch in product");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const GaussRat& f = x.at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        const GaussRat& g = y.at(k, j);
        if (g.is_zero()) continue;
        z.at(i, j) += f * g;
      }
    }
  }
  return z;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  if (m.cols != static_cast<int>(v.size())) throw Error("matrix shape mismatch in apply");
  Vec out(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    GaussRat s;
    for (int j = 0; j < m.cols; ++j) {
      const GaussRat& f = m.at(i, j);
      if (f.is_zero() || v[j].is_zero()) continue;
      s += f * v[j];
    }
    out[i] = std::move(s);
  }
  return out;
}

Mat mat_transpose(const Mat& m) {
  Mat z(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) z.at(j, i) = m.at(i, j);
  }
  return z;
}

void strip_content(Vec& row) {
  mpz_class den_lcm = 1;
  for (const auto& x : row) {
    if (x.re != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.re.get_den().get_mpz_t());
    if (x.im != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.im.get_den().get_mpz_t());
  }
  mpz_class num_gcd = 0;
  Rat scale(den_lcm);
  for (auto& x : row) {
    if (x.re != 0) {
      x.re *= scale;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.re.get_num().get_mpz_t());
    }
    if (x.im != 0) {
      x.im *= scale;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.im.get_num().get_mpz_t());
    }
  }
  if (num_gcd == 0 || num_gcd == 1) return;
  Rat inv_gcd(1, num_gcd);
  // entries are integers here, so this stays exact
  for (auto& x : row) {
    if (x.re != 0) x.re *= inv_gcd;
    if (x.im != 0) x.im *= inv_gcd;
  }
}

int mat_rank(Mat m) {
  // Bareiss fraction-free elimination: rows are stripped to coprime
  // Gaussian integers up front, every update divides exactly by the
  // previous pivot, so entries stay minor-sized.
  std::vector<Vec> rows(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    rows[i].assign(m.a.begin() + static_cast<std::size_t>(i) * m.cols,
                   m.a.begin() + static_cast<std::size_t>(i + 1) * m.cols);
    strip_content(rows[i]);
  }
  int rank = 0;
  GaussRat prev_pivot = kOne;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i) {
      if (!rows[i][col].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const Vec& prow = rows[rank];
    const GaussRat& p = prow[col];
    GaussRat inv_prev = prev_pivot.inv();
    for (int i = rank + 1; i < m.rows; ++i) {
      GaussRat f = rows[i][col];
      for (int j = col; j < m.cols; ++j) {
        if (f.is_zero()) {
          if (rows[i][j].is_zero()) continue;
          rows[i][j] = rows[i][j] * p * inv_prev;
        } else {
          rows[i][j] = (p * rows[i][j] - f * prow[j]) * inv_prev;
        }
      }
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

namespace {

// Reduced row echelon form over the field; returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows, int ncols) {
  std::vector<int> pivots;
  int r = 0;
  int nrows = static_cast<int>(rows.size());
  for (int col = 0; col < ncols && r < nrows; ++col) {
    int piv = -1;
    for (int i = r; i < nrows; ++i) {
      if (!rows[i][col].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    GaussRat inv = rows[r][col].inv();
    for (auto& x : rows[r]) x = inv * x;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      GaussRat f = rows[i][col];
      for (std::size_t j = col; j < rows[i].size(); ++j) {
        rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat mat_solve(Mat a, Mat rhs) {
  if (a.rows != a.cols || a.rows != rhs.rows) throw Error("solve needs square a with matching rhs");
  int n = a.rows;
  std::vector<Vec> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i].reserve(n + rhs.cols);
    for (int j = 0; j < n; ++j) rows[i].push_back(a.at(i, j));
    for (int j = 0; j < rhs.cols; ++j) rows[i].push_back(rhs.at(i, j));
  }
  auto pivots = rref(rows, n);
  if (static_cast<int>(pivots.size()) != n) throw Error("singular system in exact solve");
  Mat x(n, rhs.cols);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < rhs.cols; ++j) x.at(i, j) = rows[i][n + j];
  }
  return x;
}

Vec mat_solve_vec(const Mat& a, const Vec& rhs) {
  Mat r(static_cast<int>(rhs.size()), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) r.at(static_cast<int>(i), 0) = rhs[i];
  Mat x = mat_solve(a, r);
  Vec out(x.rows);
  for (int i = 0; i < x.rows; ++i) out[i] = x.at(i, 0);
  return out;
}

std::vector<Vec> mat_nullspace(Mat m) {
  std::vector<Vec> rows(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    rows[i].assign(m.a.begin() + static_cast<std::size_t>(i) * m.cols,
                   m.a.begin() + static_cast<std::size_t>(i + 1) * m.cols);
  }
  auto pivots = rref(rows, m.cols);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols);
    v[free] = kOne;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void EchelonSieve::reduce(Vec& v) const {
  for (const auto& [piv, row] : rows_) {
    if (v[piv].is_zero()) continue;
    GaussRat f = v[piv];
    const GaussRat& p = row[piv];
    for (int j = 0; j < ncols_; ++j) {
      if (row[j].is_zero()) {
        v[j] = p * v[j];
      } else {
        v[j] = p * v[j] - f * row[j];
      }
    }
    strip_content(v);
  }
}

bool EchelonSieve::insert(Vec v) {
  if (static_cast<int>(v.size()) != ncols_) throw Error("sieve width mismatch");
  strip_content(v);
  reduce(v);
  int piv = -1;
  for (int j = 0; j < ncols_; ++j) {
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  }
  if (piv < 0) return false;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), piv,
                              [](const auto& r, int p) { return r.first < p; });
  rows_.insert(pos, {piv, std::move(v)});
  return true;
}

bool EchelonSieve::contains(Vec v) const {
  if (static_cast<int>(v.size()) != ncols_) throw Error("sieve width mismatch");
  strip_content(v);
  reduce(v);
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace magica
