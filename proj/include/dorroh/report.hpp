#pragma once

#include <map>
#include <string>
#include <vector>

#include "dorroh/matrix.hpp"

namespace dorroh {

/// One failing instance of an identity: where it was evaluated and both sides.
struct Witness {
  std::string at;  // basis tuple, e.g. "(x, y)"
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct Condition {
  std::string id;
  std::string description;
  bool passed = true;
  std::size_t failures = 0;  // total failing instances; witnesses are capped
  std::vector<Witness> witnesses;
};

/// Per-condition pass/fail ledger. Conditions are keyed (and iterated) by id.
class AnalysisReport {
 public:
  static constexpr std::size_t kWitnessCap = 8;

  /// Registers a condition (passing until a failure is recorded). Idempotent.
  Condition& declare(const std::string& id, const std::string& description);
  void fail(const std::string& id, Witness w);
  /// declare + optionally fail in one step.
  void record(const std::string& id, const std::string& description, bool ok, Witness w = {});

  bool passed() const;
  bool has(const std::string& id) const { return conditions_.count(id) != 0; }
  /// Throws std::out_of_range for unknown ids.
  bool passed(const std::string& id) const;
  const Condition& at(const std::string& id) const { return conditions_.at(id); }
  const std::map<std::string, Condition>& conditions() const { return conditions_; }
  std::vector<std::string> failed_ids() const;

  /// Copies every condition of other, with ids prefixed.
  void merge(const AnalysisReport& other, const std::string& prefix = "");

  void note(const std::string& key, const std::string& value) { notes_[key] = value; }
  const std::map<std::string, std::string>& notes() const { return notes_; }

 private:
  std::map<std::string, Condition> conditions_;
  std::map<std::string, std::string> notes_;
};

/// Basis labels for V (x) W: "a⊗b".
std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b);
std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                       const std::vector<std::string>& c);
std::vector<std::string> default_labels(const std::string& stem, std::size_t n);

/// Exact rendering of a coordinate vector: "2·x⊗x - 1/2·y", or "0".
std::string render(const Matrix& v, const std::vector<std::string>& labels);

/// Declares `id` and compares lhs and rhs column by column; each differing
/// column becomes a witness labelled by the input basis. Returns equality.
bool check_map_equality(AnalysisReport& report, const std::string& id, const std::string& description,
                        const Matrix& lhs, const Matrix& rhs, const std::vector<std::string>& in_labels,
                        const std::vector<std::string>& out_labels);

/// Short human description for a condition id, or "" for ids outside the catalog.
std::string describe_condition(const std::string& id);

}  // namespace dorroh
