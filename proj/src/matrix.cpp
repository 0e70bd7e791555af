#include "dorroh/matrix.hpp"

#include <sstream>
#include <utility>

namespace dorroh {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::column(FieldSpec field, const std::vector<Scalar>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

Matrix Matrix::unit_column(FieldSpec field, std::size_t n, std::size_t i) {
  Matrix m(field, n, 1);
  m(i, 0) = field.one();
  return m;
}

Matrix Matrix::col(std::size_t c) const { return block(0, c, rows_, 1); }
Matrix Matrix::row(std::size_t r) const { return block(r, 0, 1, cols_); }

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::col_is_zero(std::size_t c) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, c).is_zero()) return false;
  return true;
}

bool Matrix::col_equals(std::size_t c, const Matrix& other, std::size_t other_c) const {
  if (rows_ != other.rows_) throw DimensionError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i)
    if (!((*this)(i, c) == other(i, other_c))) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  if (pivots) pivots->clear();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t p = lead;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != lead)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(lead, j));
    Scalar inv = m(lead, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!m(lead, j).is_zero()) m(i, j) -= f * m(lead, j);
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Matrix Matrix::nonzero_rows() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows_; ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < cols_ && !nz; ++j) nz = !(*this)(i, j).is_zero();
    if (nz) keep.push_back(i);
  }
  Matrix out(field_, keep.size(), cols_);
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(keep[k], j);
  return out;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw DimensionError("inverse of a non-square matrix");
  std::size_t n = rows_;
  Matrix aug = hstack(*this, identity(field_, n));
  std::vector<std::size_t> piv;
  Matrix r = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DimensionError("matrix is singular");
  return r.block(0, n, n, n);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row count mismatch");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column count mismatch");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero()) k(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
    }
  return k;
}

Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c) { return kron(kron(a, b), c); }

Matrix swap_map(FieldSpec field, std::size_t m, std::size_t n) {
  Matrix s(field, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) s(j * m + i, i * n + j) = field.one();
  return s;
}

Matrix middle_swap(FieldSpec field, std::size_t u, std::size_t v, std::size_t w, std::size_t x) {
  return kron(Matrix::identity(field, u), swap_map(field, v, w), Matrix::identity(field, x));
}

}  // namespace dorroh
