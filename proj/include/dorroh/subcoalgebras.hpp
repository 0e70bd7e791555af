#pragma once

#include <cstdint>

#include "dorroh/extension.hpp"

namespace dorroh {

/// T ⊆ C ⋉ P read through η(c) = p + R when (c, p) ∈ T.
struct SubcoalgebraDecomposition {
  Subspace t;
  Subspace d, e;  // inside C
  Subspace q, r;  // inside P
  Quotient d_mod_e;
  Quotient q_mod_r;
  Matrix eta;      // dim(Q/R) x dim C: η on D, zero on the coordinate complement of D
  Matrix eta_bar;  // dim(Q/R) x dim(D/E)
  Matrix pi;       // dim(Q/R) x dim P: the projection Q → Q/R, zero off Q
  Matrix proj;     // dim(D/E) x dim C: the projection D → D/E, zero off D

  /// Some p ∈ Q with η(c) = p + R; c must lie in D.
  Matrix lift(const Matrix& c) const { return q_mod_r.lift(eta * c); }
  Subspace reconstruct() const;
};

SubcoalgebraDecomposition decompose_subcoalgebra(const CoalgebraExtension& ext, const Subspace& t);

/// Δ(t) ∈ T ⊗ T on a basis of T.
bool is_subcoalgebra_of(const Coalgebra& c, const Subspace& t, AnalysisReport* report = nullptr,
                        const std::string& id = "oracle");
bool is_subcoalgebra(const CoalgebraExtension& ext, const Subspace& t, AnalysisReport* report = nullptr);

/// Ids P3.3a, P3.3b, P3.3c, P3.3-oracle, P3.3-iff, C3.4a, C3.4c, C3.4-iff and,
/// when T is a subcoalgebra, P3.3-eta.
AnalysisReport check_subcoalgebra_criteria(const SubcoalgebraDecomposition& dec, const CoalgebraExtension& ext);

/// Ids L3.1-seq1, L3.1-seq2, L3.1-homs.
AnalysisReport verify_coalgebra_exact_sequences(const SubcoalgebraDecomposition& dec, const CoalgebraExtension& ext);

struct SubcoalgebraQuotientIsos {
  Quotient t_mod_er;
  Matrix theta;    // T/(E,R) → D/E, (c, p) + (E,R) ↦ c + E
  Matrix eta_bar;  // D/E → Q/R
  bool verified = false;
  AnalysisReport ledger;  // C3.5-coideal, C3.5-iso1, C3.5-iso2
};
/// Throws std::invalid_argument unless T is a subcoalgebra.
SubcoalgebraQuotientIsos subcoalgebra_quotient_isos(const SubcoalgebraDecomposition& dec,
                                                    const CoalgebraExtension& ext);

std::vector<Subspace> enumerate_subcoalgebras(const CoalgebraExtension& ext,
                                              std::uint64_t budget = kDefaultEnumerationBudget, bool parallel = true);

/// k ⋉ P with ρ_l(p) = 1⊗p and ρ_r(p) = p⊗1.
CoalgebraExtension counitization(const Coalgebra& p);

enum class SubcoalgebraCase { A, B, C };
char case_letter(SubcoalgebraCase c);

/// span{(1,0)} is reported as case (b) with Q = 0: there D = E = k.
struct ClassifiedSubcoalgebra {
  Subspace t;
  SubcoalgebraCase kind;
  Subspace q;  // case (b)
  Subspace r;  // case (c)
  Matrix x;    // case (c): T = k(1,x) + (0,R), x ∉ R
};

/// Builds every subcoalgebra of k ⋉ P from the three cases, over GF(p), sorted.
std::vector<ClassifiedSubcoalgebra> classify_counitization_subcoalgebras(
    const Coalgebra& p, std::uint64_t budget = kDefaultEnumerationBudget);
/// Tags one subcoalgebra of a counitization (any field). Throws std::invalid_argument
/// when C is not the ground coalgebra or T is not a subcoalgebra.
ClassifiedSubcoalgebra classify_counitization_subcoalgebra(const CoalgebraExtension& ext, const Subspace& t);

/// Ids C4.final-a, -b, -c, -oracle, -iff. Throws std::invalid_argument when the
/// coproduct on M is nonzero.
AnalysisReport check_trivial_coext_subcoalgebra(const CoalgebraExtension& ext, const Subspace& t);

/// The dual pair of algebras: C*, P* with actions transposed from the coactions.
AlgebraPair dual_pair(const CoalgebraPair& p);

}  // namespace dorroh
