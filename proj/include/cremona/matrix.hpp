#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

class Rng;

// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Fp& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Fp operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Fp> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<Fp> apply(std::span<const Fp> v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> data_;
};

Fp determinant(Matrix m);
std::size_t rank(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

// Right-kernel basis from the reduced row echelon form. Pivots are taken in
// the first column holding a nonzero entry, from the lowest-index row; one
// basis vector per free column, in increasing column order, with a 1 in that
// column. Output is a deterministic function of the input.
std::vector<std::vector<Fp>> nullspace(const Matrix& m);

// Invertible square matrix acting on coordinates: a form f becomes f∘M,
// i.e. (f∘M)(X) = f(M X).
class LinearChange {
 public:
  // Throws Error(SingularChange) when m is not square or not invertible.
  explicit LinearChange(Matrix m);

  static LinearChange identity(std::size_t n) { return LinearChange(Matrix::identity(n)); }
  static LinearChange random(std::size_t n, Rng& rng);
  // A change N with N·e_0 = point, completed by standard basis vectors.
  static LinearChange sending_origin_to(std::span<const Fp> point);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.rows(); }
  LinearChange inverse() const;

  friend bool operator==(const LinearChange&, const LinearChange&) = default;

 private:
  Matrix m_;
};

}  // namespace cremona
