#include "dorroh/subspace.hpp"

#include <limits>
#include <sstream>

namespace dorroh {

namespace {

Matrix as_column(const Matrix& v, std::size_t n) {
  if (v.cols() == 1 && v.rows() == n) return v;
  if (v.rows() == 1 && v.cols() == n) return v.transpose();
  throw DimensionError("vector of length " + std::to_string(n) + " expected, got " + std::to_string(v.rows()) +
                       "x" + std::to_string(v.cols()));
}

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field()))
    throw DimensionError("subspaces live in different ambient spaces");
}

std::uint64_t saturate(const mpz_class& z) {
  if (z > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max())))
    return std::numeric_limits<std::uint64_t>::max();
  return std::stoull(z.get_str());
}

}  // namespace

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace Subspace::span_rows(const Matrix& rows) { return Subspace(rows.rref().nonzero_rows()); }

bool Subspace::contains(const Matrix& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Matrix> Subspace::coordinates(const Matrix& v) const {
  Matrix col = as_column(v, ambient_dim());
  // RREF basis: the coordinate on row r is the entry of v at r's pivot column.
  Matrix c(field(), dim(), 1);
  Matrix rest = col;
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < dim(); ++r) {
    while (basis_(r, pivot).is_zero()) ++pivot;
    c(r, 0) = col(pivot, 0);
    if (c(r, 0).is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j) rest(j, 0) -= c(r, 0) * basis_(r, j);
  }
  if (!rest.is_zero()) return std::nullopt;
  return c;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.to_string() < b.to_string();
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t r = 0; r < dim(); ++r) {
    os << (r ? ", " : "") << "(";
    for (std::size_t j = 0; j < ambient_dim(); ++j) os << (j ? "," : "") << basis_(r, j).to_string();
    os << ")";
  }
  os << "}";
  return os.str();
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return Subspace::span_rows(vstack(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  // a·U = b·V  <=>  [U^T | -V^T] (a;b) = 0; the intersection is U^T a over that kernel.
  Matrix m = hstack(u.basis_columns(), v.basis_columns() * u.field().from_int(-1));
  Subspace k = kernel(m);
  if (k.is_zero()) return Subspace(u.field(), u.ambient_dim());
  Matrix coeffs = k.basis().cols_range(0, u.dim());
  return Subspace::span_rows(coeffs * u.basis());
}

Quotient::Quotient(const Subspace& numerator, const Subspace& denominator)
    : num_(numerator),
      den_(intersection(numerator, denominator)),
      reps_(numerator.field(), 0, numerator.ambient_dim()),
      stacked_(numerator.field(), numerator.ambient_dim(), 0) {
  Subspace acc = den_;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < num_.dim(); ++i) {
    Matrix v = num_.basis().row(i);
    if (acc.contains(v)) continue;
    keep.push_back(i);
    acc = sum(acc, Subspace::span_rows(v));
  }
  Matrix reps(num_.field(), keep.size(), num_.ambient_dim());
  for (std::size_t k = 0; k < keep.size(); ++k) reps.set_block(k, 0, num_.basis().row(keep[k]));
  reps_ = reps;
  stacked_ = hstack(den_.basis_columns(), reps_.transpose());
}

Matrix Quotient::class_of(const Matrix& v) const {
  Matrix col = as_column(v, num_.ambient_dim());
  LinearSolution s = solve_linear(stacked_, col);
  if (!s.particular) throw DimensionError("vector lies outside the quotient numerator");
  return s.particular->rows_range(den_.dim(), dim());
}

Matrix Quotient::lift(const Matrix& coords) const {
  if (coords.rows() != dim() || coords.cols() != 1) throw DimensionError("quotient coordinates have wrong length");
  return reps_.transpose() * coords;
}

SubspaceOps subspace_ops(const Subspace& u, const Subspace& v) {
  Quotient q(u, v);
  return SubspaceOps{sum(u, v), q.denominator(), u.contains(v), q.representatives()};
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || b.cols() != 1)
    throw DimensionError("solve_linear: A is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         ", b is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  std::size_t n = a.cols();
  std::vector<std::size_t> piv;
  Matrix r = hstack(a, b).rref(&piv);

  std::vector<bool> is_pivot(n, false);
  bool consistent = true;
  for (std::size_t c : piv) {
    if (c == n) consistent = false;
    else is_pivot[c] = true;
  }

  FieldSpec f = a.field();
  std::optional<Matrix> particular;
  if (consistent) {
    Matrix x(f, n, 1);
    for (std::size_t row = 0; row < piv.size(); ++row) x(piv[row], 0) = r(row, n);
    particular = x;
  }

  std::size_t rank = consistent ? piv.size() : piv.size() - 1;
  Matrix ker(f, n - rank, n);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    ker(k, free) = f.one();
    for (std::size_t row = 0; row < piv.size(); ++row)
      if (piv[row] < n) ker(k, piv[row]) = -r(row, free);
    ++k;
  }
  return LinearSolution{particular, Subspace::span_rows(ker)};
}

Subspace kernel(const Matrix& a) { return solve_linear(a, Matrix(a.field(), a.rows(), 1)).kernel; }

Subspace image(const Matrix& a) { return Subspace::span_columns(a); }

Subspace image(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw DimensionError("image: map and subspace disagree on dimension");
  if (u.is_zero()) return Subspace(m.field(), m.rows());
  return Subspace::span_columns(m * u.basis_columns());
}

Subspace preimage(const Matrix& m, const Subspace& w) {
  if (m.rows() != w.ambient_dim()) throw DimensionError("preimage: map and subspace disagree on dimension");
  Subspace ann = annihilator(w);
  if (ann.is_zero()) return Subspace::whole(m.field(), m.cols());
  return kernel(ann.basis() * m);
}

Subspace annihilator(const Subspace& u) {
  if (u.is_zero()) return Subspace::whole(u.field(), u.ambient_dim());
  return kernel(u.basis());
}

Subspace tensor(const Subspace& u, const Subspace& v) {
  if (!(u.field() == v.field())) throw FieldError("tensor of subspaces over different fields");
  if (u.is_zero() || v.is_zero()) return Subspace(u.field(), u.ambient_dim() * v.ambient_dim());
  return Subspace::span_rows(kron(u.basis(), v.basis()));
}

Matrix extend_by_zero(const Subspace& u, const Matrix& values) {
  if (values.cols() != u.dim()) throw DimensionError("extend_by_zero: one value per basis vector expected");
  std::size_t n = u.ambient_dim();
  FieldSpec f = u.field();
  std::vector<bool> pivot(n, false);
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!u.basis()(r, c).is_zero()) {
        pivot[c] = true;
        break;
      }
  Matrix frame(f, n, n), vals(f, values.rows(), n);
  if (n == 0) return vals;
  if (u.dim() > 0) {
    frame.set_block(0, 0, u.basis_columns());
    vals.set_block(0, 0, values);
  }
  std::size_t k = u.dim();
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) frame(c, k++) = f.one();
  return vals * frame.inverse();
}

BudgetExceeded::BudgetExceeded(std::size_t ambient_dim, std::uint32_t p, std::uint64_t budget)
    : std::runtime_error("enumeration of subspaces of GF(" + std::to_string(p) + ")^" + std::to_string(ambient_dim) +
                         " refused: p^(n^2) exceeds the budget " + std::to_string(budget) + " (" +
                         std::to_string(dorroh::subspace_count(ambient_dim, p)) + " subspaces)"),
      count_(dorroh::subspace_count(ambient_dim, p)) {}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t p) {
  if (k > n) return 0;
  mpz_class num = 1, den = 1, q = p;
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), n - i);
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return saturate(num / den);
}

std::uint64_t subspace_count(std::size_t n, std::uint32_t p) {
  mpz_class total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += mpz_class(std::to_string(gaussian_binomial(n, k, p)));
  return saturate(total);
}

void check_enumeration_budget(std::size_t n, FieldSpec field, std::uint64_t budget) {
  if (!field.is_finite()) throw FieldError("subspace enumeration needs a finite field");
  mpz_class cost;
  mpz_class p = field.characteristic();
  mpz_pow_ui(cost.get_mpz_t(), p.get_mpz_t(), n * n);
  if (cost > mpz_class(std::to_string(budget))) throw BudgetExceeded(n, field.characteristic(), budget);
}

std::vector<Subspace> enumerate_subspaces_of_dim(std::size_t n, std::size_t k, FieldSpec field) {
  if (!field.is_finite()) throw FieldError("subspace enumeration needs a finite field");
  std::vector<Subspace> out;
  if (k > n) return out;
  const std::uint32_t p = field.characteristic();

  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);

    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      Matrix m(field, k, n);
      for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = field.one();
      for (std::size_t f = 0; f < free.size(); ++f)
        if (digits[f]) m(free[f].first, free[f].second) = field.from_int(digits[f]);
      out.push_back(Subspace::span_rows(m));

      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }

    // next k-combination of {0..n-1}
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, FieldSpec field, std::uint64_t budget) {
  check_enumeration_budget(n, field, budget);
  std::vector<Subspace> all;
  for (std::size_t k = 0; k <= n; ++k) {
    auto part = enumerate_subspaces_of_dim(n, k, field);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace dorroh
