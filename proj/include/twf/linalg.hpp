// Dense exact-rational matrices with fraction-free (Bareiss) elimination.
//
// Rank and determinant run on an integer copy of the matrix (rows scaled by
// their denominator lcm) so that all intermediate entries are minors of the
// scaled matrix; every division in the elimination is exact.

#ifndef TWF_LINALG_HPP
#define TWF_LINALG_HPP

#include <vector>

#include "twf/rational.hpp"

namespace twf {

using Vec = std::vector<Rational>;

class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  Vec apply(const Vec& x) const;

  /// Stacks rows of a below this.
  Matrix vstack(const Matrix& a) const;

  Vec row(int i) const;
  Vec col(int j) const;

  /// Exact rank by fraction-free Gaussian elimination.
  int rank() const;

  /// Exact determinant (square matrices).
  Rational det() const;

  /// Basis of the right kernel {x : Ax = 0}.
  std::vector<Vec> nullspace() const;

  /// Solves Ax = b for square nonsingular A; throws if singular.
  Vec solve(const Vec& b) const;

  /// Inverse of a square nonsingular matrix.
  Matrix inverse() const;

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// rank of the matrix whose columns are the given coefficient vectors.
int rank_of_span(const std::vector<Vec>& vectors);

/// true iff every vector of sub lies in the span of the vectors of space.
bool span_contains(const std::vector<Vec>& space, const std::vector<Vec>& sub);

}  // namespace twf

#endif
