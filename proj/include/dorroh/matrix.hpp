#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "dorroh/field.hpp"

namespace dorroh {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over an exact field.
///
/// Linear maps V -> W are stored as dim(W) x dim(V) matrices acting on column
/// vectors, so composition is ordinary multiplication. Tensor-product spaces
/// use the lexicographic basis e_i (x) f_j -> i * dim(W) + j (first factor
/// major), which is exactly the index layout produced by kron().
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  /// Integer literal rows, mostly for fixtures and tests.
  static Matrix from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix column(FieldSpec field, const std::vector<Scalar>& entries);
  /// The standard basis column e_i of length n.
  static Matrix unit_column(FieldSpec field, std::size_t n, std::size_t i);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Matrix col(std::size_t c) const;
  Matrix row(std::size_t r) const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  /// Columns [c0, c0 + n).
  Matrix cols_range(std::size_t c0, std::size_t n) const { return block(0, c0, rows_, n); }
  Matrix rows_range(std::size_t r0, std::size_t n) const { return block(r0, 0, n, cols_); }

  bool is_zero() const;
  bool col_is_zero(std::size_t c) const;
  bool col_equals(std::size_t c, const Matrix& other, std::size_t other_c) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Reduced row-echelon form; optionally reports the pivot column of each nonzero row.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Drops all-zero rows.
  Matrix nonzero_rows() const;

  /// Inverse of a square matrix; throws DimensionError when singular.
  Matrix inverse() const;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Kronecker product: (A (x) B)[i * B.rows + k, j * B.cols + l] = A[i, j] * B[k, l].
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c);

/// The flip V (x) W -> W (x) V for dim V = m, dim W = n.
Matrix swap_map(FieldSpec field, std::size_t m, std::size_t n);

/// The middle flip U (x) V (x) W (x) X -> U (x) W (x) V (x) X, the reshuffle behind
/// every "multiply componentwise" Sweedler expression.
Matrix middle_swap(FieldSpec field, std::size_t u, std::size_t v, std::size_t w, std::size_t x);

}  // namespace dorroh
