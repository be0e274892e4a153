#include "cremona/matrix.hpp"

#include <utility>

#include "cremona/error.hpp"
#include "cremona/random.hpp"

namespace cremona {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp(1);
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    std::size_t j = 0;
    for (std::int64_t v : row) m(i, j++) = Fp(v);
    ++i;
  }
  return m;
}

std::vector<Fp> Matrix::apply(std::span<const Fp> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ArityMismatch, "matrix-vector size mismatch");
  std::vector<Fp> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Fp acc;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ArityMismatch, "matrix product size mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Fp aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

// In-place reduced row echelon form; returns pivot columns in row order.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const Fp inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const Fp factor = m(i, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Fp determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Fp det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Fp(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const Fp p = m(col, col);
    det *= p;
    const Fp inv = p.inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      const Fp factor = m(i, col) * inv;
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Fp(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::vector<Fp>> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Fp>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fp> v(m.cols());
    v[free] = Fp(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearChange::LinearChange(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0 || determinant(m_).is_zero())
    throw Error(ErrorKind::SingularChange, "linear change must be square and invertible");
}

LinearChange LinearChange::random(std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform();
    if (!determinant(m).is_zero()) return LinearChange(std::move(m));
  }
}

LinearChange LinearChange::sending_origin_to(std::span<const Fp> point) {
  const std::size_t n = point.size();
  std::size_t k = 0;
  while (k < n && point[k].is_zero()) ++k;
  if (k == n) throw Error(ErrorKind::InvalidArgument, "zero vector is not a projective point");
  // Columns: point, then e_j for j != k in increasing order; det = ±point[k].
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, 0) = point[i];
  std::size_t col = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    m(j, col++) = Fp(1);
  }
  return LinearChange(std::move(m));
}

LinearChange LinearChange::inverse() const { return LinearChange(*cremona::inverse(m_)); }

}  // namespace cremona
