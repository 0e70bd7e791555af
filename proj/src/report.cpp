#include "dorroh/report.hpp"

#include <stdexcept>

namespace dorroh {

Condition& AnalysisReport::declare(const std::string& id, const std::string& description) {
  auto [it, inserted] = conditions_.try_emplace(id);
  if (inserted) {
    it->second.id = id;
    it->second.description = description.empty() ? describe_condition(id) : description;
  }
  return it->second;
}

void AnalysisReport::fail(const std::string& id, Witness w) {
  auto it = conditions_.find(id);
  if (it == conditions_.end()) it = conditions_.find(declare(id, "").id);
  Condition& c = it->second;
  c.passed = false;
  ++c.failures;
  if (c.witnesses.size() < kWitnessCap) c.witnesses.push_back(std::move(w));
}

void AnalysisReport::record(const std::string& id, const std::string& description, bool ok, Witness w) {
  declare(id, description);
  if (!ok) fail(id, std::move(w));
}

bool AnalysisReport::passed() const {
  for (const auto& [id, c] : conditions_)
    if (!c.passed) return false;
  return true;
}

bool AnalysisReport::passed(const std::string& id) const {
  auto it = conditions_.find(id);
  if (it == conditions_.end()) throw std::out_of_range("no condition with id " + id);
  return it->second.passed;
}

std::vector<std::string> AnalysisReport::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& [id, c] : conditions_)
    if (!c.passed) out.push_back(id);
  return out;
}

void AnalysisReport::merge(const AnalysisReport& other, const std::string& prefix) {
  for (const auto& [id, c] : other.conditions_) {
    Condition& mine = declare(prefix + id, c.description);
    mine.passed = mine.passed && c.passed;
    mine.failures += c.failures;
    for (const auto& w : c.witnesses)
      if (mine.witnesses.size() < kWitnessCap) mine.witnesses.push_back(w);
  }
  for (const auto& [k, v] : other.notes_) notes_[prefix + k] = v;
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "⊗" + y);
  return out;
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                       const std::vector<std::string>& c) {
  return tensor_labels(tensor_labels(a, b), c);
}

std::vector<std::string> default_labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::string render(const Matrix& v, const std::vector<std::string>& labels) {
  Matrix col = v.cols() == 1 ? v : v.transpose();
  if (col.rows() != labels.size()) throw DimensionError("render: label count does not match vector length");
  std::string out;
  for (std::size_t i = 0; i < col.rows(); ++i) {
    const Scalar& s = col(i, 0);
    if (s.is_zero()) continue;
    std::string coef = s.to_string();
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (out.empty()) out = negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (coef != "1") out += coef + "·";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

bool check_map_equality(AnalysisReport& report, const std::string& id, const std::string& description,
                        const Matrix& lhs, const Matrix& rhs, const std::vector<std::string>& in_labels,
                        const std::vector<std::string>& out_labels) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw DimensionError(id + ": sides have shapes " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                         " and " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  report.declare(id, description);
  bool ok = true;
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    if (lhs.col_equals(j, rhs, j)) continue;
    ok = false;
    report.fail(id, Witness{in_labels.at(j), render(lhs.col(j), out_labels), render(rhs.col(j), out_labels), ""});
  }
  return ok;
}

std::string describe_condition(const std::string& id) {
  static const std::map<std::string, std::string> catalog = {
      {"e1", "Δ_H(ab) = Σ a1b1⊗a2b2 (H is a bialgebra)"},
      {"e2", "Δ_I(ay) = Σ a1y1⊗a2y2"},
      {"e3", "Δ_I(xb) = Σ x1b1⊗x2b2"},
      {"e4", "ρ_l(ay) = Σ a1y(-1)⊗a2y(0)"},
      {"e5", "ρ_l(xb) = Σ x(-1)b1⊗x(0)b2"},
      {"e6", "ρ_r(ay) = Σ a1y(0)⊗a2y(1)"},
      {"e7", "ρ_r(xb) = Σ x(0)b1⊗x(1)b2"},
      {"e8", "ρ_l(xy) = Σ x(-1)y(-1)⊗x(0)y(0)"},
      {"e9", "ρ_r(xy) = Σ x(0)y(0)⊗x(1)y(1)"},
      {"e10", "Δ_I(xy) equals the seven-term compatibility sum"},
      {"oracle", "Δ(uv) = Δ(u)Δ(v) on the total space (direct check)"},
      {"iff", "conjunction of e1..e10 agrees with the direct check"},
      {"P1.7", "S_I solves both antipode equations"},
      {"P1.7-conv", "S = S_H ⊕ S_I is a two-sided convolution inverse of id"},
      {"C1.9a.1", "S_I(hx) = S_I(x)S_H(h)"},
      {"C1.9a.2", "S_I(xh) = S_H(h)S_I(x)"},
      {"C1.9a.3", "S_I(xy) = S_I(y)S_I(x)"},
      {"C1.9b.1", "ρ_r(S_I x) = Σ S_I(x(0))⊗S_H(x(-1))"},
      {"C1.9b.2", "ρ_l(S_I x) = Σ S_H(x(1))⊗S_I(x(0))"},
      {"C1.9b.3", "Δ_I(S_I x) = Σ S_I(x2)⊗S_I(x1)"},
      {"P2.1a", "Z and B are ideals of A"},
      {"P2.1b", "J is a subalgebra and an A-subbimodule of I"},
      {"P2.1b'", "J is an A-subbimodule of I"},
      {"P2.1c", "φ is a multiplicative A-bimodule map; ay−xy, ya−yx ∈ Ker φ"},
      {"P2.1c'", "φ is an A-bimodule map; ay−xy, ya−yx ∈ Ker φ"},
      {"P2.1-oracle", "K is a two-sided ideal (direct check)"},
      {"P2.1-iff", "criteria conjunction agrees with the direct check, both variants"},
      {"C2.2-iff", "both quotient-form criteria sets agree with the direct check"},
      {"C2.2b", "J subalgebra + subbimodule, L ideal + subbimodule"},
      {"C2.2b'", "J and L are A-subbimodules"},
      {"C2.2c", "φ̄: J/L → B/Z is a multiplicative A-bimodule isomorphism"},
      {"C2.2c'", "φ̄: J/L → B/Z is an A-bimodule isomorphism"},
      {"L2.3-seq1", "0 → L → K → B → 0 is exact"},
      {"L2.3-seq2", "0 → Z → K → J → 0 is exact"},
      {"L2.3-homs", "τ_A, τ_I, π_A are algebra homomorphisms"},
      {"P2.4-ideal", "(Z,L) is an ideal of K"},
      {"P2.4-iso1", "K/(Z,L) → B/Z is a multiplicative bijection"},
      {"P2.4-iso2", "B/Z → J/L is a multiplicative bijection"},
      {"P3.3a", "D is a subcoalgebra of C"},
      {"P3.3b", "Q subcoalgebra + subbicomodule, R coideal of Q + subbicomodule, ρ(Q) lands over D"},
      {"P3.3c", "η is a bicomodule map and satisfies both mixed identities"},
      {"P3.3-oracle", "Δ(T) ⊆ T⊗T (direct check)"},
      {"P3.3-iff", "criteria conjunction agrees with the direct check"},
      {"P3.3-eta", "η is a coalgebra homomorphism"},
      {"C3.4-iff", "quotient-form criteria agree with the direct check"},
      {"C3.4a", "D and E are subcoalgebras of C"},
      {"C3.4c", "η̄: D/E → Q/R is a bicomodule isomorphism satisfying both mixed identities"},
      {"L3.1-seq1", "0 → R → T → D → 0 is exact"},
      {"L3.1-seq2", "0 → E → T → Q → 0 is exact"},
      {"L3.1-homs", "τ_C, π_C, π_P are coalgebra homomorphisms"},
      {"C3.5-coideal", "(E,R) is a coideal of T"},
      {"C3.5-iso1", "θ: T/(E,R) → D/E is a coalgebra bijection"},
      {"C3.5-iso2", "η̄: D/E → Q/R is a coalgebra bijection"},
      {"P4.1a", "K = (0,L) with L an ideal of I"},
      {"P4.1b", "K is the whole extension"},
      {"P4.1c", "K is the graph of an algebra epimorphism J → k"},
      {"C4.3a", "B, Z ideals of A and B² ⊆ Z"},
      {"C4.3b", "J is an A-subbimodule of M"},
      {"C4.3c", "φ is an A-bimodule epimorphism, BM and MB lie in Ker φ"},
      {"C4.3-oracle", "K is a two-sided ideal (direct check)"},
      {"C4.3-iff", "trivial-extension criteria agree with the direct check"},
      {"P4.4a", "T = 0"},
      {"P4.4b", "T = (k,Q) with Q a subcoalgebra of P"},
      {"P4.4c", "T = k(1,x) + (0,R)"},
      {"C4.final-a", "E, D subcoalgebras and Δ(D) ⊆ E⊗D + D⊗E"},
      {"C4.final-b", "Q, R subbicomodules, ρ_l(Q) ⊆ E⊗Q, ρ_r(Q) ⊆ Q⊗E"},
      {"C4.final-c", "η is a C-bicomodule homomorphism"},
      {"C4.final-oracle", "Δ(T) ⊆ T⊗T (direct check)"},
      {"C4.final-iff", "trivial-coextension criteria agree with the direct check"},
      {"hopf-bimodule", "ρ_l and ρ_r are H-bimodule maps (M is a Hopf bimodule)"},
      {"ZT", "Σ m(-1)x(0)⊗m(0)x(1) + Σ m(0)x(-1)⊗m(1)x(0) = 0"},
      {"ZT-consistency", "ZT verdict agrees with e1..e10 on the induced pair"},
      {"P4.1", "the three unitization cases give exactly the ideals found by enumeration"},
      {"P4.4", "the three counitization cases give exactly the subcoalgebras found by enumeration"},
      {"graded-split", "S_I equals the restriction of the graded antipode to the positive part"},
      {"grading.mult", "deg(uv) = deg u + deg v"},
      {"grading.comult", "Δ preserves total degree"},
      {"grading.unit", "the unit lies in degree 0"},
      {"grading.counit", "ε vanishes in positive degree"},
      {"grading.antipode", "S preserves degree"},
      {"radford", "Π-image and k(1,0) + (0, I^coH) agree, and are closed under the product"},
  };
  auto it = catalog.find(id);
  return it == catalog.end() ? std::string() : it->second;
}

}  // namespace dorroh
