#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sl3 {

using Q = mpq_class;

// Dense matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Q& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Q& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Q& k) const;
  Matrix transpose() const;
  bool is_zero() const;
  friend bool operator==(const Matrix& x, const Matrix& y);

  // Vertical concatenation (same number of columns).
  static Matrix stack(const Matrix& top, const Matrix& bottom);
  std::vector<Q> row(int i) const;
  static Matrix from_rows(const std::vector<std::vector<Q>>& rows, int cols);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Q> data_;
};

// Reduced row echelon form with zero rows dropped; pivots receives pivot columns.
Matrix rref(Matrix m, std::vector<int>* pivots = nullptr);
int rank(const Matrix& m);
// Rows form a basis of {x : m x = 0}.
Matrix kernel(const Matrix& m);
// Inverse of a square matrix; throws if singular.
Matrix inverse(const Matrix& m);
bool invertible(const Matrix& m);

// Subspaces of Q^n stored as RREF row bases.
struct Subspace {
  int n = 0;
  Matrix basis;  // rows
  int dim() const { return basis.rows(); }
  static Subspace zero(int n) { return {n, Matrix(0, n)}; }
  static Subspace full(int n) { return {n, Matrix::identity(n)}; }
  static Subspace span(const Matrix& rows);
  friend bool operator==(const Subspace& x, const Subspace& y) { return x.n == y.n && x.basis == y.basis; }
};

Subspace sum(const Subspace& x, const Subspace& y);
Subspace intersect(const Subspace& x, const Subspace& y);
// Image of a subspace of the source under A (A maps column vectors).
Subspace image(const Matrix& A, const Subspace& x);
// {v : A v in y}.
Subspace preimage(const Matrix& A, const Subspace& y);
bool contains(const Subspace& x, const std::vector<Q>& v);

std::string to_string(const Q& q);

}  // namespace sl3
