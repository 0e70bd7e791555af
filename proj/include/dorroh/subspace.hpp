#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dorroh/matrix.hpp"

namespace dorroh {

/// A subspace of k^n, stored by its RREF basis (rows, zero rows removed).
/// The RREF basis is canonical, so equality is plain matrix equality.
class Subspace {
 public:
  /// The zero subspace of k^n.
  Subspace(FieldSpec field, std::size_t ambient_dim);

  /// Row span of the given vectors.
  static Subspace span_rows(const Matrix& rows);
  /// Column span; this is the image of a linear map.
  static Subspace span_columns(const Matrix& cols) { return span_rows(cols.transpose()); }
  static Subspace whole(FieldSpec field, std::size_t n) { return span_rows(Matrix::identity(field, n)); }

  FieldSpec field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_dim(); }
  /// dim x ambient, RREF.
  const Matrix& basis() const { return basis_; }
  /// ambient x dim, basis vectors as columns.
  Matrix basis_columns() const { return basis_.transpose(); }
  Matrix vector(std::size_t i) const { return basis_.row(i).transpose(); }

  /// v may be a row or a column vector of length ambient_dim.
  bool contains(const Matrix& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (column) w.r.t. basis(); nullopt when v is outside.
  std::optional<Matrix> coordinates(const Matrix& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Subspace& a, const Subspace& b);

  std::string to_string() const;

 private:
  explicit Subspace(Matrix rref_basis) : basis_(std::move(rref_basis)) {}
  Matrix basis_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);

/// U/V represented by lifted coset representatives. V need not lie inside U;
/// the quotient is U/(U∩V).
class Quotient {
 public:
  Quotient(const Subspace& numerator, const Subspace& denominator);

  const Subspace& numerator() const { return num_; }
  const Subspace& denominator() const { return den_; }
  std::size_t dim() const { return reps_.rows(); }
  /// dim x ambient; row i lifts the i-th quotient basis vector.
  const Matrix& representatives() const { return reps_; }
  Matrix representative(std::size_t i) const { return reps_.row(i).transpose(); }
  /// Coordinates (dim x 1) of the class of v; v must lie in the numerator.
  Matrix class_of(const Matrix& v) const;
  /// Lift of a class given by coordinates.
  Matrix lift(const Matrix& coords) const;

 private:
  Subspace num_;
  Subspace den_;
  Matrix reps_;
  Matrix stacked_;  // columns [basis of U∩V | reps], solved against in class_of
};

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains;  // U ⊇ V
  Matrix quotient_basis;  // rows lift a basis of U/(U∩V)
};
SubspaceOps subspace_ops(const Subspace& u, const Subspace& v);

struct LinearSolution {
  std::optional<Matrix> particular;
  Subspace kernel;
};
/// Solve A x = b; free variables of the particular solution are set to zero.
LinearSolution solve_linear(const Matrix& a, const Matrix& b);
Subspace kernel(const Matrix& a);
Subspace image(const Matrix& a);
/// The image M(U).
Subspace image(const Matrix& m, const Subspace& u);
/// {v : M v ∈ W}.
Subspace preimage(const Matrix& m, const Subspace& w);
/// Annihilator {f : f(u) = 0 for all u ∈ U} in the dual coordinates.
Subspace annihilator(const Subspace& u);
/// U ⊗ V inside k^(m n).
Subspace tensor(const Subspace& u, const Subspace& v);

/// The map k^n → k^m sending the i-th basis vector of U to column i of values
/// and killing the unit vectors at U's non-pivot positions.
Matrix extend_by_zero(const Subspace& u, const Matrix& values);

// Enumeration over GF(p).

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t ambient_dim, std::uint32_t p, std::uint64_t budget);
  std::uint64_t subspace_count() const { return count_; }

 private:
  std::uint64_t count_;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 65536;

/// Gaussian binomial (n choose k)_p.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t p);
/// Number of subspaces of GF(p)^n.
std::uint64_t subspace_count(std::size_t n, std::uint32_t p);
/// Throws BudgetExceeded when p^(n^2) > budget.
void check_enumeration_budget(std::size_t n, FieldSpec field, std::uint64_t budget);

/// Every subspace of dimension k, each exactly once, in pivot-pattern order.
std::vector<Subspace> enumerate_subspaces_of_dim(std::size_t n, std::size_t k, FieldSpec field);
/// Every subspace of GF(p)^n, ordered by dimension then pivot pattern.
std::vector<Subspace> enumerate_subspaces(std::size_t n, FieldSpec field,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace dorroh
