#pragma once

#include <stdexcept>

#include "dorroh/structures.hpp"
#include "dorroh/subspace.hpp"

namespace dorroh {

/// Injections and projections for H ⊕ I with the H block first.
struct CanonicalMaps {
  Matrix tau_h;  // (h+i) x h
  Matrix tau_i;  // (h+i) x i
  Matrix pi_h;   // h x (h+i)
  Matrix pi_i;   // i x (h+i)
};
CanonicalMaps canonical_maps(FieldSpec f, std::size_t dim_h, std::size_t dim_i);

/// Basis labels of H ⊕ I: "(b,0)" for H, "(0,x)" for I.
std::vector<std::string> total_labels(const std::vector<std::string>& h, const std::vector<std::string>& i);

class InvalidPair : public std::runtime_error {
 public:
  InvalidPair(const std::string& what, AnalysisReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const AnalysisReport& report() const { return report_; }

 private:
  AnalysisReport report_;
};

struct AlgebraExtension {
  AlgebraPair pair;
  Algebra total;
  CanonicalMaps maps;
  std::size_t dim_h() const { return pair.h.dim(); }
  std::size_t dim_i() const { return pair.i.dim(); }
  FieldSpec field() const { return total.field; }
};

struct CoalgebraExtension {
  CoalgebraPair pair;
  Coalgebra total;
  CanonicalMaps maps;
  std::size_t dim_h() const { return pair.h.dim(); }
  std::size_t dim_i() const { return pair.i.dim(); }
  FieldSpec field() const { return total.field; }
};

struct BialgebraExtension {
  BialgebraPair pair;
  Bialgebra total;  // antipode left empty; see solve_antipode
  CanonicalMaps maps;
  AlgebraExtension algebra() const { return AlgebraExtension{pair.algebra_pair(), total.alg, maps}; }
  CoalgebraExtension coalgebra() const { return CoalgebraExtension{pair.coalgebra_pair(), total.coalg, maps}; }
  std::size_t dim_h() const { return pair.dim_h(); }
  std::size_t dim_i() const { return pair.dim_i(); }
  FieldSpec field() const { return pair.field(); }
};

/// (a,x)(b,y) = (ab, ay + xb + xy); unit (1_H, 0) when H is unital. No validation.
Algebra assemble_algebra(const AlgebraPair& p);
/// Δ(h,x) = Σ(h1,0)⊗(h2,0) + Σ(x(-1),0)⊗(0,x(0)) + Σ(0,x(0))⊗(x(1),0) + Σ(0,x1)⊗(0,x2);
/// counit (ε_H, 0) when H is counital. No validation.
Coalgebra assemble_coalgebra(const CoalgebraPair& p);

/// Validate the pair, build the extension, and re-validate the total structure.
/// Throws InvalidPair carrying the failing report.
AlgebraExtension extend_algebra(const AlgebraPair& p);
CoalgebraExtension extend_coalgebra(const CoalgebraPair& p);
/// Both levels; the bialgebra compatibility itself is not required here.
BialgebraExtension extend_bialgebra(const BialgebraPair& p);

class SplitError : public std::runtime_error {
 public:
  enum class Kind { NotDirectSum, NotSubstructure, NotIdeal };
  SplitError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Split a structure on A = H_sub ⊕ I_sub into pair data. Subspaces are given by
// basis rows in A's coordinates; the pair's bases follow those rows in order.
// The optional names label the H and I bases (default "h0..", "x0..").

AlgebraPair split_algebra_extension(const Algebra& a, const Matrix& h_rows, const Matrix& i_rows,
                                    std::vector<std::string> h_names = {}, std::vector<std::string> i_names = {});
CoalgebraPair split_coalgebra_extension(const Coalgebra& c, const Matrix& h_rows, const Matrix& i_rows,
                                        std::vector<std::string> h_names = {},
                                        std::vector<std::string> i_names = {});
/// Also carries a given antipode over to S_H after checking S(H) ⊆ H.
BialgebraPair split_bialgebra_extension(const Bialgebra& a, const Matrix& h_rows, const Matrix& i_rows,
                                        std::vector<std::string> h_names = {},
                                        std::vector<std::string> i_names = {});
BialgebraPair split_bialgebra_extension(const Bialgebra& a, const Subspace& h_sub, const Subspace& i_sub,
                                        std::vector<std::string> h_names = {},
                                        std::vector<std::string> i_names = {});

/// The isomorphism H ⋉_d I -> A, (h,x) ↦ h + x, as a matrix (columns = [h_rows; i_rows]^T).
Matrix reconstruction_map(const Matrix& h_rows, const Matrix& i_rows);

}  // namespace dorroh
