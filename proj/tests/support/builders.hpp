#pragma once

// Hand-entered structure constants used as independent references by the tests.

#include "dorroh/extension.hpp"

namespace testing_support {

using namespace dorroh;

inline Scalar s(FieldSpec f, long v) { return f.from_int(v); }

/// k with e·e = e, Δe = e⊗e.
inline Bialgebra ground(FieldSpec f) { return ground_field_hopf(f, "1"); }

/// Group algebra kC2 on {1, g}.
inline Bialgebra kc2_hopf(FieldSpec f) {
  Algebra a(f, {"1", "g"});
  a.add(0, 0, 0, s(f, 1));
  a.add(0, 1, 1, s(f, 1));
  a.add(1, 0, 1, s(f, 1));
  a.add(1, 1, 0, s(f, 1));
  a.unit = Matrix::unit_column(f, 2, 0);
  Coalgebra c(f, {"1", "g"});
  c.add(0, 0, 0, s(f, 1));
  c.add(1, 1, 1, s(f, 1));
  c.counit = Matrix::from_ints(f, {{1, 1}});
  return Bialgebra(a, c, Matrix::identity(f, 2));
}

/// Sweedler's four-dimensional Hopf algebra on {1, g, x, gx}.
inline Bialgebra sweedler(FieldSpec f) {
  Algebra a(f, {"1", "g", "x", "gx"});
  for (std::size_t k = 0; k < 4; ++k) {
    a.add(0, k, k, s(f, 1));
    if (k != 0) a.add(k, 0, k, s(f, 1));
  }
  a.add(1, 1, 0, s(f, 1));
  a.add(1, 2, 3, s(f, 1));
  a.add(1, 3, 2, s(f, 1));
  a.add(2, 1, 3, s(f, -1));
  a.add(3, 1, 2, s(f, -1));
  a.unit = Matrix::unit_column(f, 4, 0);
  Coalgebra c(f, {"1", "g", "x", "gx"});
  c.add(0, 0, 0, s(f, 1));
  c.add(1, 1, 1, s(f, 1));
  c.add(2, 2, 0, s(f, 1));
  c.add(2, 1, 2, s(f, 1));
  c.add(3, 3, 1, s(f, 1));
  c.add(3, 0, 3, s(f, 1));
  c.counit = Matrix::from_ints(f, {{1, 1, 0, 0}});
  Matrix sa = Matrix::from_ints(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  return Bialgebra(a, c, sa);
}

/// H = k, I = kx with x² = c·x and Δ_I(x) = d·x⊗x, scalar (co)actions.
inline BialgebraPair unitization_1d(FieldSpec f, long c, long d) {
  Algebra i(f, {"x"});
  i.add(0, 0, 0, s(f, c));
  Coalgebra ic(f, {"x"});
  ic.add(0, 0, 0, s(f, d));
  return BialgebraPair{ground(f), i, ic, scalar_action(f, 1), scalar_coaction(f, 1)};
}

/// x² = −2x, Δ_I(x) = x⊗x: the extension is kC2 via (α, βx) ↦ α + β(g − 1).
inline BialgebraPair kc2_pair(FieldSpec f) { return unitization_1d(f, -2, 1); }
inline BialgebraPair kc2_broken_pair(FieldSpec f) { return unitization_1d(f, -2, 0); }

/// Dual numbers: H = k, I = km with m² = 0.
inline AlgebraPair dualnum_pair(FieldSpec f) {
  Algebra i(f, {"m"});
  return AlgebraPair{ground(f).alg, i, scalar_action(f, 1)};
}

/// H = k, I = k × U with U = ku, u² = 0, on the basis {e, u} with e = (1, 0).
inline AlgebraPair ex42_pair(FieldSpec f) {
  Algebra i(f, {"e", "u"});
  i.add(0, 0, 0, s(f, 1));
  return AlgebraPair{ground(f).alg, i, scalar_action(f, 2)};
}

/// Counitization of P = kx with Δ_P(x) = d·x⊗x.
inline CoalgebraPair counit_pair(FieldSpec f, long d) {
  Coalgebra p(f, {"x"});
  p.add(0, 0, 0, s(f, d));
  return CoalgebraPair{ground(f).coalg, p, scalar_coaction(f, 1)};
}

inline Matrix vec(FieldSpec f, std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.push_back(f.from_int(x));
  return Matrix::column(f, v);
}

inline Subspace span(FieldSpec f, std::initializer_list<std::initializer_list<long>> rows) {
  return Subspace::span_rows(Matrix::from_ints(f, rows));
}

}  // namespace testing_support
