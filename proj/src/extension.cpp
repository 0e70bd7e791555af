#include "dorroh/extension.hpp"

namespace dorroh {

namespace {

std::vector<std::string> names_or_default(std::vector<std::string> names, const std::string& stem, std::size_t n) {
  if (names.empty()) return default_labels(stem, n);
  if (names.size() != n) throw DimensionError("expected " + std::to_string(n) + " basis names");
  return names;
}

std::string vec_str(const Matrix& v, const std::vector<std::string>& labels) { return render(v, labels); }

struct Frame {
  std::size_t h, i, n;
  Matrix p;  // columns: new basis in old coordinates
  Subspace hs, is;
};

Frame make_frame(std::size_t dim, const Matrix& h_rows, const Matrix& i_rows) {
  if (h_rows.cols() != dim || i_rows.cols() != dim)
    throw DimensionError("subspace bases must have " + std::to_string(dim) + " columns");
  Matrix p = reconstruction_map(h_rows, i_rows);
  if (p.rows() != p.cols() || p.rank() != dim)
    throw SplitError(SplitError::Kind::NotDirectSum,
                     "not a direct sum: dim H_sub + dim I_sub = " + std::to_string(h_rows.rows() + i_rows.rows()) +
                         ", rank " + std::to_string(p.rank()) + ", ambient " + std::to_string(dim));
  return Frame{h_rows.rows(), i_rows.rows(), dim, p, Subspace::span_rows(h_rows), Subspace::span_rows(i_rows)};
}

void check_subalgebra_and_ideal(const Algebra& a, const Frame& fr, const std::string& sub_word,
                                const std::string& ideal_word) {
  const auto& lab = a.basis;
  if (a.unit && !fr.hs.contains(*a.unit))
    throw SplitError(SplitError::Kind::NotSubstructure,
                     "H_sub is not a " + sub_word + ": the unit " + vec_str(*a.unit, lab) + " is not in H_sub");
  for (std::size_t r = 0; r < fr.h; ++r)
    for (std::size_t s = 0; s < fr.h; ++s) {
      Matrix u = fr.hs.vector(r), v = fr.hs.vector(s);
      Matrix uv = a.product(u, v);
      if (!fr.hs.contains(uv))
        throw SplitError(SplitError::Kind::NotSubstructure, "H_sub is not a " + sub_word + ": (" + vec_str(u, lab) +
                                                                ")·(" + vec_str(v, lab) + ") = " + vec_str(uv, lab) +
                                                                " is not in H_sub");
    }
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t r = 0; r < fr.i; ++r) {
      Matrix e = Matrix::unit_column(a.field, a.dim(), k), x = fr.is.vector(r);
      for (bool left : {true, false}) {
        Matrix prod = left ? a.product(e, x) : a.product(x, e);
        if (!fr.is.contains(prod))
          throw SplitError(SplitError::Kind::NotIdeal, "I_sub is not " + ideal_word + ": " +
                                                           (left ? lab[k] + "·(" + vec_str(x, lab) + ")"
                                                                 : "(" + vec_str(x, lab) + ")·" + lab[k]) +
                                                           " = " + vec_str(prod, lab) + " is not in I_sub");
      }
    }
}

void check_subcoalgebra_and_coideal(const Coalgebra& c, const Frame& fr, const std::string& sub_word,
                                    const std::string& ideal_word) {
  const auto& lab = c.basis;
  auto lab2 = tensor_labels(lab, lab);
  Subspace hh = tensor(fr.hs, fr.hs);
  Subspace whole = Subspace::whole(c.field, c.dim());
  Subspace co = sum(tensor(fr.is, whole), tensor(whole, fr.is));
  for (std::size_t r = 0; r < fr.h; ++r) {
    Matrix u = fr.hs.vector(r);
    Matrix d = c.comult * u;
    if (!hh.contains(d))
      throw SplitError(SplitError::Kind::NotSubstructure, "H_sub is not a " + sub_word + ": Δ(" + vec_str(u, lab) +
                                                              ") = " + vec_str(d, lab2) + " is not in H_sub⊗H_sub");
  }
  for (std::size_t r = 0; r < fr.i; ++r) {
    Matrix x = fr.is.vector(r);
    Matrix d = c.comult * x;
    if (!co.contains(d))
      throw SplitError(SplitError::Kind::NotIdeal, "I_sub is not " + ideal_word + ": Δ(" + vec_str(x, lab) + ") = " +
                                                       vec_str(d, lab2) + " is not in I_sub⊗A + A⊗I_sub");
    if (c.counit && !(*c.counit * x).is_zero())
      throw SplitError(SplitError::Kind::NotIdeal,
                       "I_sub is not " + ideal_word + ": ε(" + vec_str(x, lab) + ") is nonzero");
  }
}

AlgebraPair read_algebra_blocks(const Algebra& a, const Frame& fr, std::vector<std::string> hn,
                                std::vector<std::string> in) {
  Algebra m = change_basis(a, fr.p, default_labels("t", fr.n));
  FieldSpec f = a.field;
  std::size_t h = fr.h, i = fr.i, n = fr.n;
  Algebra ha(f, std::move(hn)), ia(f, std::move(in));
  BimoduleAction act = zero_action(f, h, i);
  for (std::size_t c = 0; c < h; ++c)
    for (std::size_t x = 0; x < h; ++x)
      for (std::size_t y = 0; y < h; ++y) ha.mult(c, x * h + y) = m.mult(c, x * n + y);
  for (std::size_t z = 0; z < i; ++z) {
    for (std::size_t a0 = 0; a0 < h; ++a0)
      for (std::size_t x = 0; x < i; ++x) {
        act.left(z, a0 * i + x) = m.mult(h + z, a0 * n + h + x);
        act.right(z, x * h + a0) = m.mult(h + z, (h + x) * n + a0);
      }
    for (std::size_t x = 0; x < i; ++x)
      for (std::size_t y = 0; y < i; ++y) ia.mult(z, x * i + y) = m.mult(h + z, (h + x) * n + h + y);
  }
  if (m.unit) ha.unit = m.unit->rows_range(0, h);
  return AlgebraPair{ha, ia, act};
}

CoalgebraPair read_coalgebra_blocks(const Coalgebra& c, const Frame& fr, std::vector<std::string> hn,
                                    std::vector<std::string> in) {
  Coalgebra m = change_basis(c, fr.p, default_labels("t", fr.n));
  FieldSpec f = c.field;
  std::size_t h = fr.h, i = fr.i, n = fr.n;
  Coalgebra hc(f, std::move(hn)), ic(f, std::move(in));
  BicomoduleCoaction co = zero_coaction(f, h, i);
  for (std::size_t k = 0; k < h; ++k)
    for (std::size_t x = 0; x < h; ++x)
      for (std::size_t y = 0; y < h; ++y) hc.comult(x * h + y, k) = m.comult(x * n + y, k);
  for (std::size_t z = 0; z < i; ++z) {
    for (std::size_t a0 = 0; a0 < h; ++a0)
      for (std::size_t y = 0; y < i; ++y) {
        co.left(a0 * i + y, z) = m.comult(a0 * n + h + y, h + z);
        co.right(y * h + a0, z) = m.comult((h + y) * n + a0, h + z);
      }
    for (std::size_t x = 0; x < i; ++x)
      for (std::size_t y = 0; y < i; ++y) ic.comult(x * i + y, z) = m.comult((h + x) * n + h + y, h + z);
  }
  if (m.counit) hc.counit = m.counit->cols_range(0, h);
  return CoalgebraPair{hc, ic, co};
}

}  // namespace

CanonicalMaps canonical_maps(FieldSpec f, std::size_t h, std::size_t i) {
  std::size_t n = h + i;
  CanonicalMaps m{Matrix(f, n, h), Matrix(f, n, i), Matrix(f, h, n), Matrix(f, i, n)};
  for (std::size_t k = 0; k < h; ++k) m.tau_h(k, k) = m.pi_h(k, k) = f.one();
  for (std::size_t k = 0; k < i; ++k) m.tau_i(h + k, k) = m.pi_i(k, h + k) = f.one();
  return m;
}

std::vector<std::string> total_labels(const std::vector<std::string>& h, const std::vector<std::string>& i) {
  std::vector<std::string> out;
  for (const auto& b : h) out.push_back("(" + b + ",0)");
  for (const auto& x : i) out.push_back("(0," + x + ")");
  return out;
}

Algebra assemble_algebra(const AlgebraPair& p) {
  check_shape(p.h);
  check_shape(p.i);
  check_shape(p.h, p.i.dim(), p.act);
  FieldSpec f = p.h.field;
  std::size_t h = p.h.dim(), i = p.i.dim(), n = h + i;
  Algebra t(f, total_labels(p.h.basis, p.i.basis));
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b)
      for (std::size_t c = 0; c < h; ++c) t.mult(c, a * n + b) = p.h.mult(c, a * h + b);
  for (std::size_t z = 0; z < i; ++z) {
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t y = 0; y < i; ++y) {
        t.mult(h + z, a * n + h + y) = p.act.left(z, a * i + y);
        t.mult(h + z, (h + y) * n + a) = p.act.right(z, y * h + a);
      }
    for (std::size_t x = 0; x < i; ++x)
      for (std::size_t y = 0; y < i; ++y) t.mult(h + z, (h + x) * n + h + y) = p.i.mult(z, x * i + y);
  }
  if (p.h.unit) {
    Matrix u(f, n, 1);
    u.set_block(0, 0, *p.h.unit);
    t.unit = u;
  }
  return t;
}

Coalgebra assemble_coalgebra(const CoalgebraPair& p) {
  check_shape(p.h);
  check_shape(p.i);
  check_shape(p.h, p.i.dim(), p.coact);
  FieldSpec f = p.h.field;
  std::size_t h = p.h.dim(), i = p.i.dim(), n = h + i;
  Coalgebra t(f, total_labels(p.h.basis, p.i.basis));
  for (std::size_t k = 0; k < h; ++k)
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t b = 0; b < h; ++b) t.comult(a * n + b, k) = p.h.comult(a * h + b, k);
  for (std::size_t x = 0; x < i; ++x) {
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t y = 0; y < i; ++y) {
        t.comult(a * n + h + y, h + x) += p.coact.left(a * i + y, x);
        t.comult((h + y) * n + a, h + x) += p.coact.right(y * h + a, x);
      }
    for (std::size_t y = 0; y < i; ++y)
      for (std::size_t z = 0; z < i; ++z) t.comult((h + y) * n + h + z, h + x) += p.i.comult(y * i + z, x);
  }
  if (p.h.counit) {
    Matrix e(f, 1, n);
    e.set_block(0, 0, *p.h.counit);
    t.counit = e;
  }
  return t;
}

AlgebraExtension extend_algebra(const AlgebraPair& p) {
  AnalysisReport r = validate_dorroh_pair_algebras(p);
  if (!r.passed()) throw InvalidPair("not a Dorroh pair of algebras", r);
  Algebra t = assemble_algebra(p);
  AnalysisReport tr = validate_algebra(t, "total.");
  if (!tr.passed()) throw InvalidPair("extension product is not associative", tr);
  return AlgebraExtension{p, t, canonical_maps(p.h.field, p.h.dim(), p.i.dim())};
}

CoalgebraExtension extend_coalgebra(const CoalgebraPair& p) {
  AnalysisReport r = validate_dorroh_pair_coalgebras(p);
  if (!r.passed()) throw InvalidPair("not a Dorroh pair of coalgebras", r);
  Coalgebra t = assemble_coalgebra(p);
  AnalysisReport tr = validate_coalgebra(t, "total.");
  if (!tr.passed()) throw InvalidPair("extension comultiplication is not coassociative", tr);
  return CoalgebraExtension{p, t, canonical_maps(p.h.field, p.h.dim(), p.i.dim())};
}

BialgebraExtension extend_bialgebra(const BialgebraPair& p) {
  if (p.i_alg.dim() != p.i_coalg.dim()) throw DimensionError("I has different algebra and coalgebra dimensions");
  AlgebraExtension a = extend_algebra(p.algebra_pair());
  CoalgebraExtension c = extend_coalgebra(p.coalgebra_pair());
  return BialgebraExtension{p, Bialgebra(a.total, c.total), a.maps};
}

Matrix reconstruction_map(const Matrix& h_rows, const Matrix& i_rows) { return vstack(h_rows, i_rows).transpose(); }

AlgebraPair split_algebra_extension(const Algebra& a, const Matrix& h_rows, const Matrix& i_rows,
                                    std::vector<std::string> h_names, std::vector<std::string> i_names) {
  check_shape(a);
  Frame fr = make_frame(a.dim(), h_rows, i_rows);
  check_subalgebra_and_ideal(a, fr, "subalgebra", "an ideal");
  return read_algebra_blocks(a, fr, names_or_default(std::move(h_names), "h", fr.h),
                             names_or_default(std::move(i_names), "x", fr.i));
}

CoalgebraPair split_coalgebra_extension(const Coalgebra& c, const Matrix& h_rows, const Matrix& i_rows,
                                        std::vector<std::string> h_names, std::vector<std::string> i_names) {
  check_shape(c);
  Frame fr = make_frame(c.dim(), h_rows, i_rows);
  check_subcoalgebra_and_coideal(c, fr, "subcoalgebra", "a coideal");
  return read_coalgebra_blocks(c, fr, names_or_default(std::move(h_names), "h", fr.h),
                               names_or_default(std::move(i_names), "x", fr.i));
}

BialgebraPair split_bialgebra_extension(const Bialgebra& a, const Matrix& h_rows, const Matrix& i_rows,
                                        std::vector<std::string> h_names, std::vector<std::string> i_names) {
  check_shape(a.alg);
  check_shape(a.coalg);
  Frame fr = make_frame(a.dim(), h_rows, i_rows);
  check_subalgebra_and_ideal(a.alg, fr, "subbialgebra", "a biideal");
  check_subcoalgebra_and_coideal(a.coalg, fr, "subbialgebra", "a biideal");
  auto hn = names_or_default(std::move(h_names), "h", fr.h);
  auto in = names_or_default(std::move(i_names), "x", fr.i);
  AlgebraPair ap = read_algebra_blocks(a.alg, fr, hn, in);
  CoalgebraPair cp = read_coalgebra_blocks(a.coalg, fr, hn, in);
  std::optional<Matrix> s_h;
  if (a.antipode) {
    for (std::size_t r = 0; r < fr.h; ++r)
      if (!fr.hs.contains(*a.antipode * fr.hs.vector(r)))
        throw SplitError(SplitError::Kind::NotSubstructure, "H_sub is not stable under the antipode");
    Matrix s = fr.p.inverse() * *a.antipode * fr.p;
    s_h = s.block(0, 0, fr.h, fr.h);
  }
  return BialgebraPair{Bialgebra(ap.h, cp.h, s_h), ap.i, cp.i, ap.act, cp.coact};
}

BialgebraPair split_bialgebra_extension(const Bialgebra& a, const Subspace& h_sub, const Subspace& i_sub,
                                        std::vector<std::string> h_names, std::vector<std::string> i_names) {
  return split_bialgebra_extension(a, h_sub.basis(), i_sub.basis(), std::move(h_names), std::move(i_names));
}

}  // namespace dorroh
