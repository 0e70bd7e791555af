#include "dorroh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dorroh/document.hpp"
#include "dorroh/gallery.hpp"
#include "dorroh/hopf.hpp"
#include "dorroh/ideals.hpp"
#include "dorroh/subcoalgebras.hpp"

namespace dorroh::cli {

namespace {

using json = nlohmann::json;

// Raised for bad input that is not a failing condition.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string format = "human";
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string sub;
  std::string space;
  std::string field;
  std::string name;
  bool ideals = false;
  bool subcoalgebras = false;
  bool list = false;
};

struct Outcome {
  AnalysisReport ledger;
  json data = json::object();
  std::string raw;  // printed verbatim in human mode (documents)
};

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_report_string());
    rows.push_back(row);
  }
  return rows;
}

json subspace_json(const Subspace& s, const std::vector<std::string>& labels) {
  json out = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(render(s.vector(r), labels));
  return out;
}

FieldSpec parse_field(const std::string& f) {
  std::smatch m;
  if (f == "Q") return FieldSpec::rationals();
  if (std::regex_match(f, m, std::regex(R"(GF\s*\(?\s*(\d{1,10})\s*\)?)"))) {
    unsigned long p = std::stoul(m[1]);
    if (p < (1ul << 31) && is_prime(p)) return FieldSpec::prime(static_cast<std::uint32_t>(p));
  }
  throw UsageError("bad field '" + f + "' (use Q or GF p)");
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

void require_pair(const StructureDocument& doc) {
  if (!doc.pair) throw UsageError("the document declares no pair");
}

void require_finite(const StructureDocument& doc, const char* what) {
  if (!doc.field.is_finite()) throw UsageError(std::string(what) + " needs a finite field; this document is over Q");
}

std::vector<std::string> pair_labels(const StructureDocument& doc) {
  const PairBinding& b = doc.binding();
  return total_labels(doc.space(b.h).labels, doc.space(b.i).labels);
}

Subspace named_sub(const StructureDocument& doc, const Options& o) {
  if (o.sub.empty()) throw UsageError("name a subspace with --sub");
  if (!doc.find_sub(o.sub)) throw UsageError("no subspace named '" + o.sub + "'");
  return doc.subspace(o.sub);
}

// Copies only the listed conditions, tagging failures with the subspace they came from.
void merge_ids(AnalysisReport& dst, const AnalysisReport& src, const std::vector<std::string>& ids,
               const std::string& where) {
  for (const auto& id : ids) {
    if (!src.has(id)) continue;
    const Condition& c = src.at(id);
    dst.declare(id, c.description);
    for (const auto& w : c.witnesses) {
      Witness t = w;
      t.note = where + (w.note.empty() ? "" : "; " + w.note);
      dst.fail(id, t);
    }
    if (!c.passed && c.witnesses.empty()) dst.fail(id, Witness{"", "", "", where});
  }
}

AlgebraExtension algebra_ext(const StructureDocument& doc) {
  require_pair(doc);
  if (!doc.pair_has_algebra()) throw UsageError("H carries no algebra structure");
  return extend_algebra(doc.algebra_pair());
}

CoalgebraExtension coalgebra_ext(const StructureDocument& doc) {
  require_pair(doc);
  if (!doc.pair_has_coalgebra()) throw UsageError("H carries no coalgebra structure");
  return extend_coalgebra(doc.coalgebra_pair());
}

bool is_unitization(const AlgebraExtension& ext) { return ext.dim_h() == 1 && ext.pair.h.unit.has_value(); }
bool is_counitization(const CoalgebraExtension& ext) {
  return ext.dim_h() == 1 && ext.pair.h.counit.has_value();
}

// ---- commands ----

void cmd_validate(const StructureDocument& doc, Outcome& o) {
  for (const auto& s : doc.spaces) {
    std::string pre = s.name + ":";
    // I of a pair is not a bialgebra by itself; its compatibility is e10
    bool pair_i = doc.pair && doc.pair->i == s.name;
    if (pair_i) {
      if (s.has_algebra()) o.ledger.merge(validate_algebra(doc.algebra(s.name)), pre);
      if (s.has_coalgebra()) o.ledger.merge(validate_coalgebra(doc.coalgebra(s.name)), pre);
    } else if (s.has_algebra() && s.has_coalgebra()) {
      Bialgebra b = doc.bialgebra(s.name);
      o.ledger.merge(validate_bialgebra(b), pre);
      if (s.degrees) o.ledger.merge(check_grading(b, *s.degrees), pre);
    } else if (s.has_algebra()) {
      o.ledger.merge(validate_algebra(doc.algebra(s.name)), pre);
    } else if (s.has_coalgebra()) {
      o.ledger.merge(validate_coalgebra(doc.coalgebra(s.name)), pre);
    }
    if (s.antipode.declared && !(s.has_algebra() && s.has_coalgebra()))
      o.ledger.record(pre + "antipode", "an antipode needs both an algebra and a coalgebra", false);
    if (s.degrees && !(s.has_algebra() && s.has_coalgebra()))
      o.ledger.record(pre + "grading", "degrees are checked on bialgebras only", false);
    o.data["spaces"][s.name] = s.dim();
  }
  if (doc.pair) {
    if (doc.pair_has_algebra()) o.ledger.merge(validate_dorroh_pair_algebras(doc.algebra_pair()), "pair:");
    if (doc.pair_has_coalgebra()) o.ledger.merge(validate_dorroh_pair_coalgebras(doc.coalgebra_pair()), "pair:");
    for (const auto& lit : doc.subs) o.data["subspaces"][lit.name] = doc.subspace(lit.name).dim();
  }
}

void cmd_extend(const StructureDocument& doc, Outcome& o) {
  require_pair(doc);
  StructureDocument total;
  total.field = doc.field;
  // plain labels for H ⊕ I, qualified by space name only when they collide
  const PairBinding& b = doc.binding();
  std::vector<std::string> labels = doc.space(b.h).labels;
  const auto& il = doc.space(b.i).labels;
  labels.insert(labels.end(), il.begin(), il.end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    labels.clear();
    for (const auto& l : doc.space(b.h).labels) labels.push_back(b.h + "." + l);
    for (const auto& l : il) labels.push_back(b.i + "." + l);
  }
  total.add_space("T", labels);
  if (!doc.pair_has_algebra() && !doc.pair_has_coalgebra()) throw UsageError("H carries no structure");
  if (doc.pair_has_algebra()) {
    AlgebraExtension ext = extend_algebra(doc.algebra_pair());
    o.ledger.merge(validate_algebra(ext.total), "total:");
    total.put_algebra("T", ext.total);
  }
  if (doc.pair_has_coalgebra()) {
    CoalgebraExtension ext = extend_coalgebra(doc.coalgebra_pair());
    o.ledger.merge(validate_coalgebra(ext.total), "total:");
    total.put_coalgebra("T", ext.total);
  }
  o.raw = serialize_document(total);
  o.data["document"] = o.raw;
  o.data["dim"] = labels.size();
}

BialgebraPair full_pair(const StructureDocument& doc) {
  require_pair(doc);
  if (!doc.pair_has_algebra() || !doc.pair_has_coalgebra())
    throw UsageError("H needs both an algebra and a coalgebra structure");
  return doc.bialgebra_pair();
}

void cmd_check_bialgebra(const StructureDocument& doc, Outcome& o) {
  BialgebraPair p = full_pair(doc);
  BialgebraConditionReport r = check_bialgebra_conditions(p);
  o.ledger.merge(r.ledger);
  o.data["equations"] = r.equations_pass;
  o.data["oracle"] = r.oracle_pass;
  if (p.i_alg.mult.is_zero() && p.i_coalg.comult.is_zero()) {
    // trivial extension: also run the specialized test
    AnalysisReport zt = check_trivial_ext_bialgebra(p.h, p.i_alg.basis, p.act, p.coact);
    merge_ids(o.ledger, zt, {"hopf-bimodule", "ZT", "ZT-consistency"}, "trivial extension");
    o.data["trivial_extension"] = true;
  }
}

void cmd_solve_antipode(const StructureDocument& doc, Outcome& o) {
  BialgebraPair p = full_pair(doc);
  if (!p.h.antipode) throw UsageError("H has no antipode; add 'antipode' entries");
  AntipodeSolution sol = solve_antipode(p);
  o.ledger.merge(sol.ledger);
  o.data["exists"] = sol.exists;
  o.data["solution_space_dim"] = sol.solution_space_dim;
  o.data["S_H"] = matrix_json(sol.s_h);
  if (!sol.exists) return;
  o.data["S_I"] = matrix_json(sol.s_i);
  o.data["S"] = matrix_json(sol.total());
  o.ledger.merge(verify_antipode_identities(sol, p));
  RadfordResult rad = radford_subalgebra(p, sol.s_h);
  o.ledger.record("radford", "", rad.equal && rad.closed,
                  Witness{"", "", "", rad.equal ? "not closed under the product" : "the two descriptions differ"});
  std::vector<std::string> labels = pair_labels(doc);
  o.data["radford"] = {{"basis", subspace_json(rad.via_pi, labels)},
                       {"dim", rad.via_pi.dim()},
                       {"dim_times_dim_H_is_total", rad.dimension_matches}};
}

void cmd_split_graded(const StructureDocument& doc, const Options& opt, Outcome& o) {
  const SpaceSpec* s = nullptr;
  if (!opt.space.empty()) {
    s = doc.find_space(opt.space);
    if (!s) throw UsageError("no space named '" + opt.space + "'");
  } else {
    for (const auto& sp : doc.spaces)
      if (sp.degrees) {
        s = &sp;
        break;
      }
  }
  if (!s || !s->degrees) throw UsageError("no graded space; add a 'deg' line or pass --space");
  if (!s->has_algebra() || !s->has_coalgebra() || !s->antipode.declared)
    throw UsageError("space '" + s->name + "' needs an algebra, a coalgebra and an antipode");
  Bialgebra a = doc.bialgebra(s->name);
  o.ledger.merge(check_grading(a, *s->degrees));
  if (!o.ledger.passed()) return;
  GradedSplit g = split_graded_hopf(a, *s->degrees);
  o.ledger.merge(g.antipode.ledger);
  o.ledger.record("graded-split", "", g.matches_restriction);
  o.data["dim_H"] = g.pair.dim_h();
  o.data["dim_I"] = g.pair.dim_i();
  o.data["S_I"] = matrix_json(g.antipode.s_i);
  o.data["restricted_S_I"] = matrix_json(g.restricted_s_i);
  o.data["solution_space_dim"] = g.antipode.solution_space_dim;
}

void cmd_analyze_ideal(const StructureDocument& doc, const Options& opt, Outcome& o) {
  AlgebraExtension ext = algebra_ext(doc);
  Subspace k = named_sub(doc, opt);
  IdealDecomposition dec = decompose_ideal(ext, k);
  o.ledger.merge(check_ideal_criteria(dec, ext));
  const auto& hb = ext.pair.h.basis;
  const auto& ib = ext.pair.i.basis;
  o.data["K"] = subspace_json(k, ext.total.basis);
  o.data["B"] = subspace_json(dec.b, hb);
  o.data["Z"] = subspace_json(dec.z, hb);
  o.data["J"] = subspace_json(dec.j, ib);
  o.data["L"] = subspace_json(dec.l, ib);
  o.data["phi"] = matrix_json(dec.phi);
  bool ideal = is_ideal(ext, k);
  o.data["ideal"] = ideal;
  if (!ideal) return;
  o.ledger.merge(verify_ideal_exact_sequences(dec, ext));
  IdealQuotientIsos isos = ideal_quotient_isos(dec, ext);
  o.ledger.merge(isos.ledger);
  o.data["quotient_dims"] = {isos.k_mod_zl.dim(), dec.b_mod_z.dim(), dec.j_mod_l.dim()};
  if (is_unitization(ext))
    o.data["unitization_case"] = std::string(1, case_letter(classify_unitization_ideal(ext, k).kind));
  if (ext.pair.i.mult.is_zero()) o.ledger.merge(check_trivial_ext_ideal(ext, k));
}

void cmd_analyze_subcoalgebra(const StructureDocument& doc, const Options& opt, Outcome& o) {
  CoalgebraExtension ext = coalgebra_ext(doc);
  Subspace t = named_sub(doc, opt);
  SubcoalgebraDecomposition dec = decompose_subcoalgebra(ext, t);
  o.ledger.merge(check_subcoalgebra_criteria(dec, ext));
  const auto& cb = ext.pair.h.basis;
  const auto& pb = ext.pair.i.basis;
  o.data["T"] = subspace_json(t, ext.total.basis);
  o.data["D"] = subspace_json(dec.d, cb);
  o.data["E"] = subspace_json(dec.e, cb);
  o.data["Q"] = subspace_json(dec.q, pb);
  o.data["R"] = subspace_json(dec.r, pb);
  o.data["eta"] = matrix_json(dec.eta);
  bool sub = is_subcoalgebra(ext, t);
  o.data["subcoalgebra"] = sub;
  if (!sub) return;
  o.ledger.merge(verify_coalgebra_exact_sequences(dec, ext));
  SubcoalgebraQuotientIsos isos = subcoalgebra_quotient_isos(dec, ext);
  o.ledger.merge(isos.ledger);
  o.data["quotient_dims"] = {isos.t_mod_er.dim(), dec.d_mod_e.dim(), dec.q_mod_r.dim()};
  if (is_counitization(ext))
    o.data["counitization_case"] = std::string(1, case_letter(classify_counitization_subcoalgebra(ext, t).kind));
  if (ext.pair.i.comult.is_zero()) o.ledger.merge(check_trivial_coext_subcoalgebra(ext, t));
}

void cmd_enumerate(const StructureDocument& doc, const Options& opt, Outcome& o) {
  if (opt.ideals == opt.subcoalgebras) throw UsageError("pass exactly one of --ideals, --subcoalgebras");
  require_finite(doc, "enumerate");
  require_pair(doc);
  std::size_t n = doc.total_dim();
  std::vector<Subspace> all = enumerate_subspaces(n, doc.field, opt.budget);
  std::vector<std::string> labels = pair_labels(doc);
  json found = json::array();
  if (opt.ideals) {
    AlgebraExtension ext = algebra_ext(doc);
    std::vector<Subspace> ideals = enumerate_ideals(ext, opt.budget);
    bool trivial = ext.pair.i.mult.is_zero();
    for (const auto& k : all) {
      IdealDecomposition dec = decompose_ideal(ext, k);
      std::string where = "K = " + k.to_string();
      merge_ids(o.ledger, check_ideal_criteria(dec, ext), {"P2.1-iff", "C2.2-iff"}, where);
      if (trivial) merge_ids(o.ledger, check_trivial_ext_ideal(ext, k), {"C4.3-iff"}, where);
      bool listed = std::find(ideals.begin(), ideals.end(), k) != ideals.end();
      if (!listed) continue;
      AnalysisReport per = verify_ideal_exact_sequences(dec, ext);
      per.merge(ideal_quotient_isos(dec, ext).ledger);
      merge_ids(o.ledger, per, {"L2.3-seq1", "L2.3-seq2", "P2.4-ideal", "P2.4-iso1", "P2.4-iso2"}, where);
      found.push_back(subspace_json(k, labels));
    }
    o.data["ideals"] = found;
  } else {
    CoalgebraExtension ext = coalgebra_ext(doc);
    std::vector<Subspace> subs = enumerate_subcoalgebras(ext, opt.budget);
    bool trivial = ext.pair.i.comult.is_zero();
    for (const auto& t : all) {
      SubcoalgebraDecomposition dec = decompose_subcoalgebra(ext, t);
      std::string where = "T = " + t.to_string();
      merge_ids(o.ledger, check_subcoalgebra_criteria(dec, ext), {"P3.3-iff", "C3.4-iff"}, where);
      if (trivial) merge_ids(o.ledger, check_trivial_coext_subcoalgebra(ext, t), {"C4.final-iff"}, where);
      if (std::find(subs.begin(), subs.end(), t) == subs.end()) continue;
      AnalysisReport per = verify_coalgebra_exact_sequences(dec, ext);
      per.merge(subcoalgebra_quotient_isos(dec, ext).ledger);
      merge_ids(o.ledger, per, {"L3.1-seq1", "L3.1-seq2", "C3.5-coideal", "C3.5-iso1", "C3.5-iso2"}, where);
      found.push_back(subspace_json(t, labels));
    }
    o.data["subcoalgebras"] = found;
  }
  o.data["count"] = found.size();
  o.data["subspaces_checked"] = all.size();
}

void cmd_classify_unitization(const StructureDocument& doc, const Options& opt, Outcome& o) {
  AlgebraExtension ext = algebra_ext(doc);
  if (!is_unitization(ext)) throw UsageError("H must be the ground field with its unit");
  std::vector<std::string> labels = ext.total.basis;
  if (!opt.sub.empty()) {
    Subspace k = named_sub(doc, opt);
    if (!is_ideal(ext, k, &o.ledger)) return;
    ClassifiedIdeal c = classify_unitization_ideal(ext, k);
    o.ledger.record(std::string("P4.1") + case_letter(c.kind), "", true);
    o.data["case"] = std::string(1, case_letter(c.kind));
    o.data["K"] = subspace_json(k, labels);
    return;
  }
  require_finite(doc, "classify-unitization without --sub");
  std::vector<ClassifiedIdeal> cls = classify_unitization_ideals(ext.pair.i, opt.budget);
  std::vector<Subspace> en = enumerate_ideals(ext, opt.budget);
  std::vector<Subspace> mine;
  json list = json::array();
  for (const auto& c : cls) {
    mine.push_back(c.k);
    list.push_back({{"case", std::string(1, case_letter(c.kind))}, {"K", subspace_json(c.k, labels)}});
  }
  std::sort(en.begin(), en.end());
  o.ledger.record("P4.1", "", mine == en,
                  Witness{"", std::to_string(mine.size()) + " classified", std::to_string(en.size()) + " enumerated",
                          ""});
  o.data["ideals"] = list;
  o.data["count"] = cls.size();
}

void cmd_classify_counitization(const StructureDocument& doc, const Options& opt, Outcome& o) {
  CoalgebraExtension ext = coalgebra_ext(doc);
  if (!is_counitization(ext)) throw UsageError("C must be the ground field with its counit");
  std::vector<std::string> labels = ext.total.basis;
  if (!opt.sub.empty()) {
    Subspace t = named_sub(doc, opt);
    if (!is_subcoalgebra(ext, t, &o.ledger)) return;
    ClassifiedSubcoalgebra c = classify_counitization_subcoalgebra(ext, t);
    o.ledger.record(std::string("P4.4") + case_letter(c.kind), "", true);
    o.data["case"] = std::string(1, case_letter(c.kind));
    o.data["T"] = subspace_json(t, labels);
    return;
  }
  require_finite(doc, "classify-counitization without --sub");
  std::vector<ClassifiedSubcoalgebra> cls = classify_counitization_subcoalgebras(ext.pair.i, opt.budget);
  std::vector<Subspace> en = enumerate_subcoalgebras(ext, opt.budget);
  std::vector<Subspace> mine;
  json list = json::array();
  for (const auto& c : cls) {
    mine.push_back(c.t);
    list.push_back({{"case", std::string(1, case_letter(c.kind))}, {"T", subspace_json(c.t, labels)}});
  }
  std::sort(en.begin(), en.end());
  o.ledger.record("P4.4", "", mine == en,
                  Witness{"", std::to_string(mine.size()) + " classified", std::to_string(en.size()) + " enumerated",
                          ""});
  o.data["subcoalgebras"] = list;
  o.data["count"] = cls.size();
}

// ---- output ----

json report_json(const std::string& command, const std::vector<std::string>& args, const Outcome& o, int code) {
  json conds = json::object();
  for (const auto& [id, c] : o.ledger.conditions()) {
    json ws = json::array();
    for (const auto& w : c.witnesses) ws.push_back({{"at", w.at}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"note", w.note}});
    conds[id] = {{"description", c.description}, {"passed", c.passed}, {"failures", c.failures}, {"witnesses", ws}};
  }
  json notes = json::object();
  for (const auto& [k, v] : o.ledger.notes()) notes[k] = v;
  return {{"command", command}, {"args", args},       {"conditions", conds},  {"notes", notes},
          {"data", o.data},     {"exit_code", code}, {"status", code == kPass ? "pass" : "fail"}};
}

void human_value(std::ostream& out, const json& v, const std::string& indent) {
  if (v.is_string()) {
    out << v.get<std::string>();
  } else if (v.is_array() && !v.empty() && v[0].is_array()) {
    for (const auto& row : v) {
      out << "\n" << indent << "[";
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << (row[k].is_string() ? row[k].get<std::string>() : row[k].dump());
      out << "]";
    }
  } else if (v.is_array() && !v.empty() && v[0].is_object()) {
    for (const auto& item : v) {
      out << "\n" << indent << "-";
      for (const auto& [k, x] : item.items()) {
        out << " " << k << ": ";
        human_value(out, x, indent + "    ");
      }
    }
  } else if (v.is_array()) {
    out << "{";
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << (v[k].is_string() ? v[k].get<std::string>() : v[k].dump());
    out << "}";
  } else if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      bool block = x.is_object() || (x.is_array() && !x.empty() && (x[0].is_array() || x[0].is_object()));
      out << "\n" << indent << k << (block ? ":" : ": ");
      human_value(out, x, indent + "  ");
    }
  } else {
    out << v.dump();
  }
}

void human_report(std::ostream& out, const std::string& command, const Outcome& o, int code) {
  out << command << ": " << (code == kPass ? "all conditions hold" : "some conditions fail") << "\n";
  for (const auto& [id, c] : o.ledger.conditions()) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << id;
    if (!c.description.empty()) out << "  " << c.description;
    out << "\n";
    if (c.passed) continue;
    for (const auto& w : c.witnesses) {
      out << "      ";
      if (!w.at.empty()) out << "at " << w.at << ": ";
      if (!w.lhs.empty() || !w.rhs.empty()) out << w.lhs << "  vs  " << w.rhs;
      if (!w.note.empty()) out << "  (" << w.note << ")";
      out << "\n";
    }
    if (c.failures > c.witnesses.size()) out << "      ... " << c.failures << " failing instances in total\n";
  }
  for (const auto& [k, v] : o.ledger.notes()) out << "  note " << k << ": " << v << "\n";
  for (const auto& [k, v] : o.data.items()) {
    if (k == "document") continue;
    bool block = v.is_object() || (v.is_array() && !v.empty() && (v[0].is_array() || v[0].is_object()));
    out << k << (block ? ":" : ": ");
    human_value(out, v, "  ");
    out << "\n";
  }
  if (!o.raw.empty()) out << o.raw;
}

int gallery_command(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  if (opt.list) {
    for (const auto& n : gallery_names()) out << n << "\n";
    return kPass;
  }
  if (opt.name.empty()) throw UsageError("name a fixture, or pass --list");
  std::string text;
  try {
    if (opt.field.empty())
      text = gallery_text(opt.name);
    else
      text = serialize_document(gallery(opt.name, parse_field(opt.field)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (opt.format == "machine") {
    Outcome o;
    o.data["document"] = text;
    o.data["name"] = opt.name;
    out << report_json("gallery", args, o, kPass).dump(2) << "\n";
  } else {
    out << text;
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dorroh extensions of algebras, coalgebras and Hopf algebras over exact fields", "dorroh"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("--format", opt.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--budget", opt.budget, "largest subspace enumeration attempted (p^(n^2))");

  auto with_input = [&](CLI::App* sc) {
    sc->add_option("input", opt.input, "document file, or - for standard input");
    sc->fallthrough();
    return sc;
  };
  with_input(app.add_subcommand("validate", "check every declared structure and the pair axioms"));
  with_input(app.add_subcommand("extend", "print the structure constants of H ⋉ I"));
  with_input(app.add_subcommand("check-bialgebra", "test e1..e10 against the direct coproduct check"));
  with_input(app.add_subcommand("solve-antipode", "solve for S_I and verify the antipode identities"));
  auto* sg = with_input(app.add_subcommand("split-graded", "split a graded Hopf algebra into degree 0 and the rest"));
  sg->add_option("--space", opt.space, "graded space (default: the first with degrees)");
  for (const char* name : {"analyze-ideal", "analyze-subcoalgebra", "classify-unitization", "classify-counitization"}) {
    auto* sc = with_input(app.add_subcommand(name, std::string("run ") + name + " on a document"));
    sc->add_option("--sub", opt.sub, "name of a 'sub' literal in the document");
  }
  app.get_subcommand("analyze-ideal")->description("decompose a subspace and test the ideal criteria");
  app.get_subcommand("analyze-subcoalgebra")->description("decompose a subspace and test the subcoalgebra criteria");
  app.get_subcommand("classify-unitization")->description("sort the ideals of k ⋉ I into the three cases");
  app.get_subcommand("classify-counitization")->description("sort the subcoalgebras of k ⋉ P into the three cases");
  auto* en = with_input(app.add_subcommand("enumerate", "list every ideal or subcoalgebra over GF(p)"));
  en->add_flag("--ideals", opt.ideals);
  en->add_flag("--subcoalgebras", opt.subcoalgebras);
  auto* ga = app.add_subcommand("gallery", "print a built-in fixture");
  ga->add_option("name", opt.name);
  ga->add_option("--field", opt.field, "read the fixture over Q or GF p");
  ga->add_flag("--list", opt.list);
  ga->fallthrough();

  std::vector<std::string> argv_store{"dorroh"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "gallery") return gallery_command(opt, args, out);
    StructureDocument doc = parse_document(read_input(opt.input, in));
    Outcome o;
    try {
      if (command == "validate") cmd_validate(doc, o);
      else if (command == "extend") cmd_extend(doc, o);
      else if (command == "check-bialgebra") cmd_check_bialgebra(doc, o);
      else if (command == "solve-antipode") cmd_solve_antipode(doc, o);
      else if (command == "split-graded") cmd_split_graded(doc, opt, o);
      else if (command == "analyze-ideal") cmd_analyze_ideal(doc, opt, o);
      else if (command == "analyze-subcoalgebra") cmd_analyze_subcoalgebra(doc, opt, o);
      else if (command == "enumerate") cmd_enumerate(doc, opt, o);
      else if (command == "classify-unitization") cmd_classify_unitization(doc, opt, o);
      else if (command == "classify-counitization") cmd_classify_counitization(doc, opt, o);
    } catch (const InvalidPair& e) {
      o.ledger.merge(e.report(), "pair:");
      o.ledger.note("pair", e.what());
    } catch (const GradingError& e) {
      o.ledger.merge(e.report());
    }
    int code = o.ledger.passed() ? kPass : kFail;
    if (opt.format == "machine")
      out << report_json(command, args, o, code).dump(2) << "\n";
    else
      human_report(out, command, o, code);
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "; raise --budget to proceed\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace dorroh::cli
