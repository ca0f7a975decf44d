#include "sl3/linalg.hpp"

#include "sl3/errors.hpp"

namespace sl3 {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Q& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const Q& k) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= k;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool operator==(const Matrix& x, const Matrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw DomainError("stack: column mismatch");
  Matrix r(top.rows_ + bottom.rows_, top.cols_);
  for (int i = 0; i < top.rows_; ++i)
    for (int j = 0; j < top.cols_; ++j) r(i, j) = top(i, j);
  for (int i = 0; i < bottom.rows_; ++i)
    for (int j = 0; j < top.cols_; ++j) r(top.rows_ + i, j) = bottom(i, j);
  return r;
}

std::vector<Q> Matrix::row(int i) const {
  return std::vector<Q>(data_.begin() + std::size_t(i) * cols_, data_.begin() + std::size_t(i + 1) * cols_);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Q>>& rows, int cols) {
  Matrix m(int(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix rref(Matrix m, std::vector<int>* pivots) {
  std::vector<int> piv;
  int r = 0;
  for (int j = 0; j < m.cols() && r < m.rows(); ++j) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, j) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const Q inv = 1 / m(r, j);
    for (int k = j; k < m.cols(); ++k) m(r, k) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, j) == 0) continue;
      const Q f = m(i, j);
      for (int k = j; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    piv.push_back(j);
    ++r;
  }
  Matrix out(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < m.cols(); ++k) out(i, k) = m(i, k);
  if (pivots) *pivots = std::move(piv);
  return out;
}

int rank(const Matrix& m) { return rref(m).rows(); }

Matrix kernel(const Matrix& m) {
  std::vector<int> piv;
  const Matrix R = rref(m, &piv);
  const int n = m.cols();
  std::vector<bool> is_piv(n, false);
  for (int j : piv) is_piv[j] = true;
  std::vector<std::vector<Q>> rows;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<Q> v(n);
    v[f] = 1;
    for (int i = 0; i < R.rows(); ++i) v[piv[i]] = -R(i, f);
    rows.push_back(std::move(v));
  }
  return rref(Matrix::from_rows(rows, n));
}

Matrix inverse(const Matrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw DomainError("inverse: matrix is not square");
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv;
  const Matrix R = rref(aug, &piv);
  if (R.rows() < n || piv[n - 1] >= n) throw DomainError("inverse: matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = R(i, n + j);
  return inv;
}

bool invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Subspace Subspace::span(const Matrix& rows) { return {rows.cols(), rref(rows)}; }

Subspace sum(const Subspace& x, const Subspace& y) { return Subspace::span(Matrix::stack(x.basis, y.basis)); }

Subspace intersect(const Subspace& x, const Subspace& y) {
  // x ∩ y = annihilator of (ann x + ann y)
  const Matrix ax = kernel(x.basis), ay = kernel(y.basis);
  const Matrix both = Matrix::stack(ax, ay);
  if (both.rows() == 0) return Subspace::full(x.n);
  return {x.n, kernel(both)};
}

Subspace image(const Matrix& A, const Subspace& x) {
  if (x.dim() == 0) return Subspace::zero(A.rows());
  return Subspace::span(x.basis * A.transpose());
}

Subspace preimage(const Matrix& A, const Subspace& y) {
  const int n = A.cols();
  const Matrix ann = kernel(y.basis.rows() ? y.basis : Matrix(0, A.rows()));
  if (ann.rows() == 0) return Subspace::full(n);
  const Matrix cond = ann * A;
  return {n, kernel(cond)};
}

bool contains(const Subspace& x, const std::vector<Q>& v) {
  Matrix row(1, x.n);
  for (int j = 0; j < x.n; ++j) row(0, j) = v[j];
  return rank(Matrix::stack(x.basis, row)) == x.dim();
}

std::string to_string(const Q& q) { return q.get_str(); }

}  // namespace sl3
