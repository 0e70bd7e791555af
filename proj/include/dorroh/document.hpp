#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dorroh/hopf.hpp"

namespace dorroh {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Sparse coordinates of one tensor. Zero values are never stored, so two
/// tables are equal exactly when their tensors are.
struct SparseTable {
  bool declared = false;
  std::map<std::vector<std::size_t>, Scalar> entries;

  void set(const std::vector<std::size_t>& idx, const Scalar& c);
  bool operator==(const SparseTable&) const = default;
};

struct SpaceSpec {
  std::string name;
  std::vector<std::string> labels;
  SparseTable mult;      // (i,j,k): e_i·e_j ∋ c e_k
  SparseTable unit;      // (k)
  SparseTable comult;    // (k,i,j): Δ(e_k) ∋ c e_i⊗e_j
  SparseTable counit;    // (k)
  SparseTable antipode;  // (i,k): S(e_i) ∋ c e_k
  std::optional<std::vector<unsigned>> degrees;

  std::size_t dim() const { return labels.size(); }
  bool has_algebra() const { return mult.declared || unit.declared; }
  bool has_coalgebra() const { return comult.declared || counit.declared; }
  bool operator==(const SpaceSpec&) const = default;
};

struct PairBinding {
  std::string h;
  std::string i;
  SparseTable act_left;     // (a,x,k): a·x ∋ c e_k
  SparseTable act_right;    // (x,a,k): x·a ∋ c e_k
  SparseTable coact_left;   // (x,a,y): ρ_l(x) ∋ c a⊗y
  SparseTable coact_right;  // (x,y,a): ρ_r(x) ∋ c y⊗a
  bool operator==(const PairBinding&) const = default;
};

/// Spanning vectors in the coordinates of H ⊕ I (H block first).
struct SubspaceLiteral {
  std::string name;
  std::vector<std::vector<Scalar>> vectors;
  bool operator==(const SubspaceLiteral&) const = default;
};

struct StructureDocument {
  FieldSpec field = FieldSpec::rationals();
  std::vector<SpaceSpec> spaces;
  std::optional<PairBinding> pair;
  std::vector<SubspaceLiteral> subs;

  bool operator==(const StructureDocument&) const = default;

  const SpaceSpec* find_space(const std::string& name) const;
  /// Throws std::invalid_argument for unknown names.
  const SpaceSpec& space(const std::string& name) const;
  SpaceSpec& add_space(const std::string& name, std::vector<std::string> labels);

  // Assembled structures. Undeclared tables are zero.
  Algebra algebra(const std::string& name) const;
  Coalgebra coalgebra(const std::string& name) const;
  Bialgebra bialgebra(const std::string& name) const;

  /// Throws std::invalid_argument when no pair is declared.
  const PairBinding& binding() const;
  std::size_t total_dim() const;
  BimoduleAction action() const;
  BicomoduleCoaction coaction() const;
  AlgebraPair algebra_pair() const;
  CoalgebraPair coalgebra_pair() const;
  BialgebraPair bialgebra_pair() const;
  /// Pair levels present: H carries the structure.
  bool pair_has_algebra() const;
  bool pair_has_coalgebra() const;

  const SubspaceLiteral* find_sub(const std::string& name) const;
  Subspace subspace(const std::string& name) const;

  // Writers used to build documents from computed structures.
  void put_algebra(const std::string& name, const Algebra& a);
  void put_coalgebra(const std::string& name, const Coalgebra& c);
  void put_antipode(const std::string& name, const Matrix& s);
  /// Binds two existing spaces and stores the (co)action tensors.
  void put_pair(const std::string& h, const std::string& i, const BimoduleAction& act,
                const BicomoduleCoaction& coact);
  void put_sub(const std::string& name, const Subspace& s);
};

StructureDocument parse_document(const std::string& text);
/// Canonical text: tables in index order, zero entries omitted, no comments.
std::string serialize_document(const StructureDocument& doc);
/// The same document read over another field; throws ParseError when a scalar
/// has no image there.
StructureDocument reinterpret(const StructureDocument& doc, FieldSpec field);

}  // namespace dorroh
