#pragma once

#include <cstdint>

#include "dorroh/extension.hpp"

namespace dorroh {

/// K ⊆ A ⋉ I read through the sign convention φ(x) = a + Z when (a, −x) ∈ K.
struct IdealDecomposition {
  Subspace k;
  Subspace b, z;  // inside A
  Subspace j, l;  // inside I
  Quotient b_mod_z;
  Quotient j_mod_l;
  Matrix phi;      // dim(B/Z) x dim I: φ on J, zero on the coordinate complement of J
  Matrix phi_bar;  // dim(B/Z) x dim(J/L), columns follow j_mod_l's representatives

  /// Some a ∈ B with φ(x) = a + Z; x must lie in J.
  Matrix lift(const Matrix& x) const { return b_mod_z.lift(phi * x); }
  /// {(a, −x) : x ∈ J, φ(x) = a + Z}, rebuilt from the data above.
  Subspace reconstruct() const;
};

/// Total on any subspace of the total space.
IdealDecomposition decompose_ideal(const AlgebraExtension& ext, const Subspace& k);

/// Two-sided ideal test on basis products. Failures go to `id` when a report is given.
bool is_two_sided_ideal(const Algebra& a, const Subspace& k, AnalysisReport* report = nullptr,
                        const std::string& id = "oracle");
bool is_ideal(const AlgebraExtension& ext, const Subspace& k, AnalysisReport* report = nullptr);

/// Ids P2.1a, P2.1b, P2.1b', P2.1c, P2.1c', C2.2b, C2.2b', C2.2c, C2.2c',
/// P2.1-oracle, and P2.1-iff / C2.2-iff (each criteria set agrees with the oracle).
AnalysisReport check_ideal_criteria(const IdealDecomposition& dec, const AlgebraExtension& ext);

/// Ids L2.3-seq1, L2.3-seq2, L2.3-homs. Meaningful for any subspace.
AnalysisReport verify_ideal_exact_sequences(const IdealDecomposition& dec, const AlgebraExtension& ext);

struct IdealQuotientIsos {
  Quotient k_mod_zl;
  Matrix iso1;  // K/(Z,L) → B/Z, (a, −y) + (Z,L) ↦ a + Z
  Matrix iso2;  // B/Z → J/L, the inverse of φ̄
  bool verified = false;
  AnalysisReport ledger;  // P2.4-ideal, P2.4-iso1, P2.4-iso2
};
/// Throws std::invalid_argument unless K is an ideal.
IdealQuotientIsos ideal_quotient_isos(const IdealDecomposition& dec, const AlgebraExtension& ext);

/// Every ideal of the extension over GF(p), in enumeration order. The parallel
/// and serial scans return the same list.
std::vector<Subspace> enumerate_ideals(const AlgebraExtension& ext, std::uint64_t budget = kDefaultEnumerationBudget,
                                       bool parallel = true);

/// k ⋉ I with the scalar actions; H is the ground field on the basis {1}.
AlgebraExtension unitization(const Algebra& i);

enum class IdealCase { A, B, C };
char case_letter(IdealCase c);

struct ClassifiedIdeal {
  Subspace k;
  IdealCase kind;
  Subspace l;  // case (a)
  Subspace j;  // case (c)
  Matrix phi;  // case (c): 1 x dim I, the epimorphism J → k, zero off J
};

/// Builds every ideal of k ⋉ I from the three cases, over GF(p), sorted.
std::vector<ClassifiedIdeal> classify_unitization_ideals(const Algebra& i,
                                                         std::uint64_t budget = kDefaultEnumerationBudget);
/// Tags a single ideal of a unitization (any field). Throws std::invalid_argument
/// when H is not one-dimensional and unital, or K is not an ideal.
ClassifiedIdeal classify_unitization_ideal(const AlgebraExtension& ext, const Subspace& k);

/// Ids C4.3a, C4.3b, C4.3c, C4.3-oracle, C4.3-iff. Throws std::invalid_argument
/// when the product on I is nonzero.
AnalysisReport check_trivial_ext_ideal(const AlgebraExtension& ext, const Subspace& k);

}  // namespace dorroh
