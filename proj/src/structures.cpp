#include "dorroh/structures.hpp"

namespace dorroh {

namespace {

Matrix id(FieldSpec f, std::size_t n) { return Matrix::identity(f, n); }

void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionError(what);
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Algebra::Algebra(FieldSpec f, std::vector<std::string> names)
    : field(f), basis(std::move(names)), mult(f, basis.size(), basis.size() * basis.size()) {}

void Algebra::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  require(i < dim() && j < dim() && k < dim(), "algebra structure constant index out of range");
  mult(k, i * dim() + j) += c;
}

Coalgebra::Coalgebra(FieldSpec f, std::vector<std::string> names)
    : field(f), basis(std::move(names)), comult(f, basis.size() * basis.size(), basis.size()) {}

void Coalgebra::add(std::size_t k, std::size_t i, std::size_t j, const Scalar& c) {
  require(i < dim() && j < dim() && k < dim(), "coalgebra structure constant index out of range");
  comult(i * dim() + j, k) += c;
}

Bialgebra::Bialgebra(Algebra a, Coalgebra c, std::optional<Matrix> s)
    : alg(std::move(a)), coalg(std::move(c)), antipode(std::move(s)) {
  require(alg.dim() == coalg.dim(), "bialgebra: algebra and coalgebra dimensions differ");
  if (antipode) require(antipode->rows() == dim() && antipode->cols() == dim(), "antipode has the wrong shape");
}

BimoduleAction zero_action(FieldSpec f, std::size_t dh, std::size_t di) {
  return BimoduleAction{Matrix(f, di, dh * di), Matrix(f, di, di * dh)};
}

BicomoduleCoaction zero_coaction(FieldSpec f, std::size_t dh, std::size_t di) {
  return BicomoduleCoaction{Matrix(f, dh * di, di), Matrix(f, di * dh, di)};
}

BimoduleAction scalar_action(FieldSpec f, std::size_t di) { return BimoduleAction{id(f, di), id(f, di)}; }

BicomoduleCoaction scalar_coaction(FieldSpec f, std::size_t di) { return BicomoduleCoaction{id(f, di), id(f, di)}; }

Bialgebra ground_field_hopf(FieldSpec f, const std::string& name) {
  Algebra a(f, {name});
  a.add(0, 0, 0, f.one());
  a.unit = id(f, 1);
  Coalgebra c(f, {name});
  c.add(0, 0, 0, f.one());
  c.counit = id(f, 1);
  return Bialgebra(a, c, id(f, 1));
}

void check_shape(const Algebra& a) {
  std::size_t n = a.dim();
  require(a.mult.rows() == n && a.mult.cols() == n * n, "multiplication tensor has shape " + shape(a.mult));
  if (a.unit) require(a.unit->rows() == n && a.unit->cols() == 1, "unit vector has shape " + shape(*a.unit));
}

void check_shape(const Coalgebra& c) {
  std::size_t n = c.dim();
  require(c.comult.rows() == n * n && c.comult.cols() == n, "comultiplication tensor has shape " + shape(c.comult));
  if (c.counit) require(c.counit->rows() == 1 && c.counit->cols() == n, "counit has shape " + shape(*c.counit));
}

void check_shape(const Algebra& h, std::size_t di, const BimoduleAction& act) {
  std::size_t dh = h.dim();
  require(act.left.rows() == di && act.left.cols() == dh * di, "left action has shape " + shape(act.left));
  require(act.right.rows() == di && act.right.cols() == di * dh, "right action has shape " + shape(act.right));
}

void check_shape(const Coalgebra& h, std::size_t di, const BicomoduleCoaction& co) {
  std::size_t dh = h.dim();
  require(co.left.rows() == dh * di && co.left.cols() == di, "left coaction has shape " + shape(co.left));
  require(co.right.rows() == di * dh && co.right.cols() == di, "right coaction has shape " + shape(co.right));
}

AnalysisReport validate_algebra(const Algebra& a, const std::string& prefix) {
  check_shape(a);
  AnalysisReport r;
  FieldSpec f = a.field;
  std::size_t n = a.dim();
  const auto& b = a.basis;
  check_map_equality(r, prefix + "assoc", "(uv)w = u(vw)", a.mult * kron(a.mult, id(f, n)),
                     a.mult * kron(id(f, n), a.mult), tensor_labels(b, b, b), b);
  if (a.unit) {
    check_map_equality(r, prefix + "unit-left", "1·u = u", a.mult * kron(*a.unit, id(f, n)), id(f, n), b, b);
    check_map_equality(r, prefix + "unit-right", "u·1 = u", a.mult * kron(id(f, n), *a.unit), id(f, n), b, b);
  }
  return r;
}

AnalysisReport validate_coalgebra(const Coalgebra& c, const std::string& prefix) {
  check_shape(c);
  AnalysisReport r;
  FieldSpec f = c.field;
  std::size_t n = c.dim();
  const auto& b = c.basis;
  check_map_equality(r, prefix + "coassoc", "(Δ⊗1)Δ = (1⊗Δ)Δ", kron(c.comult, id(f, n)) * c.comult,
                     kron(id(f, n), c.comult) * c.comult, b, tensor_labels(b, b, b));
  if (c.counit) {
    check_map_equality(r, prefix + "counit-left", "(ε⊗1)Δ = id", kron(*c.counit, id(f, n)) * c.comult, id(f, n), b,
                       b);
    check_map_equality(r, prefix + "counit-right", "(1⊗ε)Δ = id", kron(id(f, n), *c.counit) * c.comult, id(f, n),
                       b, b);
  }
  return r;
}

AnalysisReport validate_bialgebra(const Bialgebra& h, const std::string& prefix) {
  AnalysisReport r;
  r.merge(validate_algebra(h.alg, prefix));
  r.merge(validate_coalgebra(h.coalg, prefix));
  FieldSpec f = h.field();
  std::size_t n = h.dim();
  const auto& b = h.basis();
  const Matrix& m = h.alg.mult;
  const Matrix& d = h.coalg.comult;
  check_map_equality(r, prefix + "bialg", "Δ(uv) = Δ(u)Δ(v)", d * m, kron(m, m) * middle_swap(f, n, n, n, n) * kron(d, d),
                     tensor_labels(b, b), tensor_labels(b, b));
  std::vector<std::string> one{"1"};
  if (h.alg.unit) {
    check_map_equality(r, prefix + "bialg-unit", "Δ(1) = 1⊗1", d * *h.alg.unit, kron(*h.alg.unit, *h.alg.unit), one,
                       tensor_labels(b, b));
  }
  if (h.coalg.counit) {
    check_map_equality(r, prefix + "bialg-counit", "ε(uv) = ε(u)ε(v)", *h.coalg.counit * m,
                       kron(*h.coalg.counit, *h.coalg.counit), tensor_labels(b, b), one);
  }
  if (h.alg.unit && h.coalg.counit) {
    check_map_equality(r, prefix + "bialg-unit-counit", "ε(1) = 1", *h.coalg.counit * *h.alg.unit, id(f, 1), one, one);
  }
  if (h.antipode) {
    const Matrix& s = *h.antipode;
    if (!h.alg.unit || !h.coalg.counit) {
      r.record(prefix + "antipode-left", "Σ S(u1)u2 = ε(u)1", false, Witness{"", "", "", "antipode needs unit and counit"});
    } else {
      Matrix ue = *h.alg.unit * *h.coalg.counit;
      check_map_equality(r, prefix + "antipode-left", "Σ S(u1)u2 = ε(u)1", m * kron(s, id(f, n)) * d, ue, b, b);
      check_map_equality(r, prefix + "antipode-right", "Σ u1S(u2) = ε(u)1", m * kron(id(f, n), s) * d, ue, b, b);
    }
  }
  return r;
}

AnalysisReport validate_bimodule(const Algebra& h, const std::vector<std::string>& ib, const BimoduleAction& act,
                                 const std::string& prefix) {
  check_shape(h);
  check_shape(h, ib.size(), act);
  AnalysisReport r;
  FieldSpec f = h.field;
  std::size_t dh = h.dim();
  const auto& hb = h.basis;
  std::size_t di = ib.size();
  const Matrix& l = act.left;
  const Matrix& ra = act.right;
  check_map_equality(r, prefix + "lmod.assoc", "(ab)x = a(bx)", l * kron(h.mult, id(f, di)), l * kron(id(f, dh), l),
                     tensor_labels(hb, hb, ib), ib);
  check_map_equality(r, prefix + "rmod.assoc", "x(ab) = (xa)b", ra * kron(id(f, di), h.mult), ra * kron(ra, id(f, dh)),
                     tensor_labels(ib, hb, hb), ib);
  check_map_equality(r, prefix + "bimod", "(ax)b = a(xb)", ra * kron(l, id(f, dh)), l * kron(id(f, dh), ra),
                     tensor_labels(hb, ib, hb), ib);
  if (h.unit) {
    check_map_equality(r, prefix + "lmod.unital", "1x = x", l * kron(*h.unit, id(f, di)), id(f, di), ib, ib);
    check_map_equality(r, prefix + "rmod.unital", "x1 = x", ra * kron(id(f, di), *h.unit), id(f, di), ib, ib);
  }
  return r;
}

AnalysisReport validate_bicomodule(const Coalgebra& h, const std::vector<std::string>& ib, const BicomoduleCoaction& co,
                                   const std::string& prefix) {
  check_shape(h);
  check_shape(h, ib.size(), co);
  AnalysisReport r;
  FieldSpec f = h.field;
  std::size_t dh = h.dim();
  const auto& hb = h.basis;
  std::size_t di = ib.size();
  const Matrix& cl = co.left;
  const Matrix& cr = co.right;
  check_map_equality(r, prefix + "lcomod.coassoc", "(Δ⊗1)ρ_l = (1⊗ρ_l)ρ_l", kron(h.comult, id(f, di)) * cl,
                     kron(id(f, dh), cl) * cl, ib, tensor_labels(hb, hb, ib));
  check_map_equality(r, prefix + "rcomod.coassoc", "(1⊗Δ)ρ_r = (ρ_r⊗1)ρ_r", kron(id(f, di), h.comult) * cr,
                     kron(cr, id(f, dh)) * cr, ib, tensor_labels(ib, hb, hb));
  check_map_equality(r, prefix + "bicomod", "(1⊗ρ_r)ρ_l = (ρ_l⊗1)ρ_r", kron(id(f, dh), cr) * cl,
                     kron(cl, id(f, dh)) * cr, ib, tensor_labels(hb, ib, hb));
  if (h.counit) {
    check_map_equality(r, prefix + "lcomod.counital", "(ε⊗1)ρ_l = id", kron(*h.counit, id(f, di)) * cl, id(f, di), ib,
                       ib);
    check_map_equality(r, prefix + "rcomod.counital", "(1⊗ε)ρ_r = id", kron(id(f, di), *h.counit) * cr, id(f, di), ib,
                       ib);
  }
  return r;
}

AnalysisReport validate_dorroh_pair_algebras(const AlgebraPair& p) {
  check_shape(p.h);
  check_shape(p.i);
  if (!(p.h.field == p.i.field)) throw FieldError("H and I are over different fields");
  check_shape(p.h, p.i.dim(), p.act);
  AnalysisReport r;
  r.merge(validate_algebra(p.h, "H."));
  r.merge(validate_algebra(p.i, "I."));
  AnalysisReport mod = validate_bimodule(p.h, p.i.basis, p.act);
  r.merge(mod);

  FieldSpec f = p.h.field;
  std::size_t dh = p.h.dim(), di = p.i.dim();
  const auto& hb = p.h.basis;
  const auto& ib = p.i.basis;
  const Matrix& m = p.i.mult;
  const Matrix& l = p.act.left;
  const Matrix& ra = p.act.right;
  check_map_equality(r, "dpa.1", "a(xy) = (ax)y", l * kron(id(f, dh), m), m * kron(l, id(f, di)),
                     tensor_labels(hb, ib, ib), ib);
  check_map_equality(r, "dpa.2", "(xa)y = x(ay)", m * kron(ra, id(f, di)), m * kron(id(f, di), l),
                     tensor_labels(ib, hb, ib), ib);
  check_map_equality(r, "dpa.3", "(xy)a = x(ya)", ra * kron(m, id(f, dh)), m * kron(id(f, di), ra),
                     tensor_labels(ib, ib, hb), ib);
  return r;
}

AnalysisReport validate_dorroh_pair_coalgebras(const CoalgebraPair& p) {
  check_shape(p.h);
  check_shape(p.i);
  if (!(p.h.field == p.i.field)) throw FieldError("H and P are over different fields");
  check_shape(p.h, p.i.dim(), p.coact);
  AnalysisReport r;
  r.merge(validate_coalgebra(p.h, "H."));
  r.merge(validate_coalgebra(p.i, "I."));
  r.merge(validate_bicomodule(p.h, p.i.basis, p.coact));

  FieldSpec f = p.h.field;
  std::size_t dh = p.h.dim(), di = p.i.dim();
  const auto& hb = p.h.basis;
  const auto& ib = p.i.basis;
  const Matrix& d = p.i.comult;
  const Matrix& cl = p.coact.left;
  const Matrix& cr = p.coact.right;
  check_map_equality(r, "dpc.1", "Σ x1⊗x2(0)⊗x2(1) = Σ x(0)1⊗x(0)2⊗x(1)", kron(id(f, di), cr) * d,
                     kron(d, id(f, dh)) * cr, ib, tensor_labels(ib, ib, hb));
  check_map_equality(r, "dpc.2", "Σ x1(-1)⊗x1(0)⊗x2 = Σ x(-1)⊗x(0)1⊗x(0)2", kron(cl, id(f, di)) * d,
                     kron(id(f, dh), d) * cl, ib, tensor_labels(hb, ib, ib));
  check_map_equality(r, "dpc.3", "Σ x1(0)⊗x1(1)⊗x2 = Σ x1⊗x2(-1)⊗x2(0)", kron(cr, id(f, di)) * d,
                     kron(id(f, di), cl) * d, ib, tensor_labels(ib, hb, ib));
  return r;
}

bool is_algebra_hom(const Matrix& fm, const Algebra& a, const Algebra& b, bool unital) {
  if (!(fm * a.mult == b.mult * kron(fm, fm))) return false;
  if (unital && a.unit && b.unit && !(fm * *a.unit == *b.unit)) return false;
  return true;
}

bool is_coalgebra_hom(const Matrix& fm, const Coalgebra& a, const Coalgebra& b, bool counital) {
  if (!(kron(fm, fm) * a.comult == b.comult * fm)) return false;
  if (counital && a.counit && b.counit && !(*b.counit * fm == *a.counit)) return false;
  return true;
}

Algebra change_basis(const Algebra& a, const Matrix& p, std::vector<std::string> names) {
  Matrix pinv = p.inverse();
  Algebra out(a.field, std::move(names));
  out.mult = pinv * a.mult * kron(p, p);
  if (a.unit) out.unit = pinv * *a.unit;
  return out;
}

Coalgebra change_basis(const Coalgebra& c, const Matrix& p, std::vector<std::string> names) {
  Matrix pinv = p.inverse();
  Coalgebra out(c.field, std::move(names));
  out.comult = kron(pinv, pinv) * c.comult * p;
  if (c.counit) out.counit = *c.counit * p;
  return out;
}

Algebra dual(const Coalgebra& c) {
  Algebra a(c.field, c.basis);
  a.mult = c.comult.transpose();
  if (c.counit) a.unit = c.counit->transpose();
  return a;
}

Coalgebra dual(const Algebra& a) {
  Coalgebra c(a.field, a.basis);
  c.comult = a.mult.transpose();
  if (a.unit) c.counit = a.unit->transpose();
  return c;
}

}  // namespace dorroh
