#include "twf/linalg.hpp"

#include <gmp.h>

#include <stdexcept>
#include <utility>

namespace twf {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix(0, 0);
  int rows = static_cast<int>(cols[0].size());
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw std::invalid_argument("ragged column list");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  Matrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  return a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const Rational& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("shape mismatch");
  Vec y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

Matrix Matrix::vstack(const Matrix& a) const {
  if (cols_ != a.cols_ && rows_ != 0 && a.rows_ != 0)
    throw std::invalid_argument("shape mismatch in vstack");
  int c = rows_ == 0 ? a.cols_ : cols_;
  Matrix r(rows_ + a.rows_, c);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < c; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < c; ++j) r.at(rows_ + i, j) = a.at(i, j);
  return r;
}

Vec Matrix::row(int i) const {
  Vec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::col(int j) const {
  Vec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

namespace {

// Integer working copy: each row scaled by the lcm of its denominators.
// Row scalings change neither the rank nor singularity; the determinant is
// recovered by dividing out the scalings.
struct IntWork {
  int rows, cols;
  std::vector<Integer> a;
  std::vector<Integer> scale;  // per-row factor applied

  explicit IntWork(const Matrix& m) : rows(m.rows()), cols(m.cols()) {
    a.resize(static_cast<size_t>(rows) * cols);
    scale.assign(rows, Integer(1));
    for (int i = 0; i < rows; ++i) {
      Integer l(1);
      for (int j = 0; j < cols; ++j) l = l.lcm(m.at(i, j).den());
      scale[i] = l;
      for (int j = 0; j < cols; ++j) {
        const Rational& x = m.at(i, j);
        a[static_cast<size_t>(i) * cols + j] = x.num() * l.div_exact(x.den());
      }
    }
  }

  Integer& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
};

// Fraction-free elimination. Returns rank; if sign_out/piv_out are given the
// matrix is treated as square for a determinant (no column skipping needed,
// a pivotless column means det = 0, signalled by piv_out = 0).
int bareiss(IntWork& w, int* sign_out, Integer* piv_out) {
  Integer prev(1);
  Integer piv;
  int sign = 1;
  int r = 0;
  for (int c = 0; c < w.cols && r < w.rows; ++c) {
    int p = -1;
    for (int i = r; i < w.rows; ++i)
      if (!w.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) {
      if (piv_out) {
        *piv_out = Integer(0);
        if (sign_out) *sign_out = sign;
        return r;
      }
      continue;
    }
    if (p != r) {
      for (int j = c; j < w.cols; ++j) std::swap(w.at(p, j), w.at(r, j));
      sign = -sign;
    }
    piv = w.at(r, c);
    for (int i = r + 1; i < w.rows; ++i) {
      Integer lead = w.at(i, c);
      w.at(i, c) = Integer(0);
      if (lead.is_zero() && prev == Integer(1)) {
        // Row already reduced in this column; still rescale the tail.
        for (int j = c + 1; j < w.cols; ++j) w.at(i, j) = piv * w.at(i, j);
        continue;
      }
      for (int j = c + 1; j < w.cols; ++j)
        w.at(i, j) = (piv * w.at(i, j) - lead * w.at(r, j)).div_exact(prev);
    }
    prev = piv;
    ++r;
  }
  if (sign_out) *sign_out = sign;
  if (piv_out) *piv_out = piv;
  return r;
}

}  // namespace

int Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  IntWork w(*this);
  return bareiss(w, nullptr, nullptr);
}

Rational Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  if (rows_ == 0) return Rational(1);
  IntWork w(*this);
  int sign = 1;
  Integer piv(0);
  int r = bareiss(w, &sign, &piv);
  if (r < rows_ || piv.is_zero()) return Rational(0);
  // Bareiss leaves the determinant of the scaled matrix as the last pivot.
  Integer denom(1);
  for (const Integer& s : w.scale) denom = denom * s;
  Rational d(piv, denom);
  return sign > 0 ? d : -d;
}

namespace {

// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<Vec> Matrix::nullspace() const {
  Matrix m(*this);
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols_);
    v[c] = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(static_cast<int>(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec Matrix::solve(const Vec& b) const {
  if (rows_ != cols_ || static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("solve requires square A and matching b");
  Matrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != rows_ ||
      (!pivots.empty() && pivots.back() == cols_))
    throw std::runtime_error("singular system");
  Vec x(cols_);
  for (int i = 0; i < rows_; ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Rational(1);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != rows_ || (!pivots.empty() && pivots.back() >= cols_))
    throw std::runtime_error("singular matrix");
  Matrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

int rank_of_span(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  return Matrix::from_columns(vectors).rank();
}

bool span_contains(const std::vector<Vec>& space, const std::vector<Vec>& sub) {
  if (sub.empty()) return true;
  Matrix a = Matrix::from_columns(space);
  Matrix b = Matrix::from_columns(sub);
  if (space.empty()) return b.is_zero();
  Matrix both(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) both.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) both.at(i, a.cols() + j) = b.at(i, j);
  }
  return both.rank() == a.rank();
}

}  // namespace twf
