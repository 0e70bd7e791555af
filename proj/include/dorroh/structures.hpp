#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dorroh/report.hpp"

namespace dorroh {

/// Finite-dimensional, possibly non-unital algebra given by structure constants.
/// mult is dim x dim^2: column i*dim+j holds e_i·e_j.
struct Algebra {
  FieldSpec field;
  std::vector<std::string> basis;
  Matrix mult;
  std::optional<Matrix> unit;  // dim x 1

  /// Zero multiplication, no unit.
  Algebra(FieldSpec f, std::vector<std::string> names);
  std::size_t dim() const { return basis.size(); }
  Matrix product(const Matrix& u, const Matrix& v) const { return mult * kron(u, v); }
  /// Adds c·e_k to e_i·e_j.
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
};

/// Possibly non-counital coalgebra. comult is dim^2 x dim: column k holds Δ(e_k).
struct Coalgebra {
  FieldSpec field;
  std::vector<std::string> basis;
  Matrix comult;
  std::optional<Matrix> counit;  // 1 x dim

  Coalgebra(FieldSpec f, std::vector<std::string> names);
  std::size_t dim() const { return basis.size(); }
  /// Adds c·e_i⊗e_j to Δ(e_k).
  void add(std::size_t k, std::size_t i, std::size_t j, const Scalar& c);
};

/// Algebra and coalgebra on the same basis, with an optional antipode (dim x dim).
struct Bialgebra {
  Algebra alg;
  Coalgebra coalg;
  std::optional<Matrix> antipode;

  Bialgebra(Algebra a, Coalgebra c, std::optional<Matrix> s = std::nullopt);
  std::size_t dim() const { return alg.dim(); }
  FieldSpec field() const { return alg.field; }
  const std::vector<std::string>& basis() const { return alg.basis; }
};

/// H-bimodule structure on I. left: dimI x (dimH·dimI), right: dimI x (dimI·dimH).
struct BimoduleAction {
  Matrix left;
  Matrix right;
};

/// H-bicomodule structure on I. left: (dimH·dimI) x dimI, right: (dimI·dimH) x dimI.
struct BicomoduleCoaction {
  Matrix left;
  Matrix right;
};

BimoduleAction zero_action(FieldSpec f, std::size_t dim_h, std::size_t dim_i);
BicomoduleCoaction zero_coaction(FieldSpec f, std::size_t dim_h, std::size_t dim_i);
/// For H = k (one basis vector, the unit): a·x = x·a = a x.
BimoduleAction scalar_action(FieldSpec f, std::size_t dim_i);
/// For H = k: ρ_l(x) = 1⊗x, ρ_r(x) = x⊗1.
BicomoduleCoaction scalar_coaction(FieldSpec f, std::size_t dim_i);

/// The ground field k as a Hopf algebra on the basis {1}.
Bialgebra ground_field_hopf(FieldSpec f, const std::string& name = "1");

struct AlgebraPair {
  Algebra h;
  Algebra i;
  BimoduleAction act;
};

struct CoalgebraPair {
  Coalgebra h;
  Coalgebra i;
  BicomoduleCoaction coact;
};

/// Both pair structures on the same (H, I).
struct BialgebraPair {
  Bialgebra h;
  Algebra i_alg;
  Coalgebra i_coalg;
  BimoduleAction act;
  BicomoduleCoaction coact;

  AlgebraPair algebra_pair() const { return AlgebraPair{h.alg, i_alg, act}; }
  CoalgebraPair coalgebra_pair() const { return CoalgebraPair{h.coalg, i_coalg, coact}; }
  std::size_t dim_h() const { return h.dim(); }
  std::size_t dim_i() const { return i_alg.dim(); }
  FieldSpec field() const { return h.field(); }
};

/// Throws DimensionError when tensor shapes disagree with the declared dimensions.
void check_shape(const Algebra& a);
void check_shape(const Coalgebra& c);
void check_shape(const Algebra& h, std::size_t dim_i, const BimoduleAction& act);
void check_shape(const Coalgebra& h, std::size_t dim_i, const BicomoduleCoaction& coact);

// Validators report every failing basis tuple. Condition ids are prefixed by `prefix`.

AnalysisReport validate_algebra(const Algebra& a, const std::string& prefix = "");
AnalysisReport validate_coalgebra(const Coalgebra& c, const std::string& prefix = "");
/// Hopf axioms: bialgebra compatibility, unit/counit multiplicativity, antipode.
AnalysisReport validate_bialgebra(const Bialgebra& b, const std::string& prefix = "");
AnalysisReport validate_bimodule(const Algebra& h, const std::vector<std::string>& i_basis, const BimoduleAction& act,
                                 const std::string& prefix = "");
AnalysisReport validate_bicomodule(const Coalgebra& h, const std::vector<std::string>& i_basis,
                                   const BicomoduleCoaction& coact,
                                   const std::string& prefix = "");
/// Module axioms plus a(xy)=(ax)y, (xa)y=x(ay), (xy)a=x(ya) (ids dpa.1..3).
AnalysisReport validate_dorroh_pair_algebras(const AlgebraPair& p);
/// Comodule axioms plus the three coaction/comultiplication compatibilities (ids dpc.1..3).
AnalysisReport validate_dorroh_pair_coalgebras(const CoalgebraPair& p);

/// f: A -> B with f(uv) = f(u)f(v) (and f(1) = 1 when both are unital and `unital`).
bool is_algebra_hom(const Matrix& f, const Algebra& a, const Algebra& b, bool unital = false);
/// (f⊗f)Δ_A = Δ_B f (and ε_B f = ε_A when both are counital and `counital`).
bool is_coalgebra_hom(const Matrix& f, const Coalgebra& a, const Coalgebra& b, bool counital = false);

/// The same structures expressed in a new basis. p's columns are the new basis
/// vectors written in the old one.
Algebra change_basis(const Algebra& a, const Matrix& p, std::vector<std::string> names);
Coalgebra change_basis(const Coalgebra& c, const Matrix& p, std::vector<std::string> names);

/// Dual algebra of a coalgebra (mult = Δ^T, unit = ε^T) and vice versa.
Algebra dual(const Coalgebra& c);
Coalgebra dual(const Algebra& a);

}  // namespace dorroh
