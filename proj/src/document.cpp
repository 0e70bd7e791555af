#include "dorroh/document.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace dorroh {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

void SparseTable::set(const std::vector<std::size_t>& idx, const Scalar& c) {
  if (c.is_zero())
    entries.erase(idx);
  else
    entries.insert_or_assign(idx, c);
}

namespace {

// Character cursor over one line. Columns are 1-based byte offsets.
class Cursor {
 public:
  Cursor(const std::string& line, std::size_t lineno) : s_(line), line_(lineno) {}

  [[noreturn]] void error(const std::string& msg, std::size_t col = 0) {
    throw ParseError(line_, col ? col : column(), msg);
  }
  // column of the next token
  std::size_t column() {
    skip_ws();
    return pos_ + 1;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  std::string word(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           std::string("()[],=").find(s_[pos_]) == std::string::npos)
      ++pos_;
    if (start == pos_) error(std::string("expected ") + what);
    return s_.substr(start, pos_ - start);
  }
  void finish() {
    if (!at_end()) error("unexpected trailing text");
  }

 private:
  const std::string& s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool is_identifier(const std::string& w) {
  if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
  return std::all_of(w.begin(), w.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-';
  });
}

bool is_integer(const std::string& w, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !w.empty() && (w[0] == '-' || w[0] == '+')) i = 1;
  if (i == w.size()) return false;
  return std::all_of(w.begin() + static_cast<long>(i), w.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Parser {
 public:
  StructureDocument run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = raw.substr(0, raw.find('#'));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      Cursor c(line, lineno);
      if (c.at_end()) continue;
      statement(c);
    }
    if (!have_field_) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing field declaration");
    return std::move(doc_);
  }

 private:
  void statement(Cursor& c) {
    std::size_t col = c.column();
    std::string key = c.word("keyword");
    if (key == "field") return field(c);
    if (!have_field_) c.error("the first statement must be 'field'", col);
    if (key == "space") return space(c);
    if (key == "mult") return space_table(c, key, &SpaceSpec::mult, 3);
    if (key == "comult") return space_table(c, key, &SpaceSpec::comult, 3);
    if (key == "unit") return space_table(c, key, &SpaceSpec::unit, 1);
    if (key == "counit") return space_table(c, key, &SpaceSpec::counit, 1);
    if (key == "antipode") return space_table(c, key, &SpaceSpec::antipode, 2);
    if (key == "deg") return degrees(c);
    if (key == "pair") return pair(c);
    if (key == "actL") return pair_table(c, key, &PairBinding::act_left, {'h', 'i', 'i'});
    if (key == "actR") return pair_table(c, key, &PairBinding::act_right, {'i', 'h', 'i'});
    if (key == "coactL") return pair_table(c, key, &PairBinding::coact_left, {'i', 'h', 'i'});
    if (key == "coactR") return pair_table(c, key, &PairBinding::coact_right, {'i', 'i', 'h'});
    if (key == "sub") return sub(c);
    c.error("unknown keyword '" + key + "'", col);
  }

  void field(Cursor& c) {
    if (have_field_) c.error("field declared twice");
    std::size_t col = c.column();
    std::string w = c.word("field name");
    if (w == "Q") {
      doc_.field = FieldSpec::rationals();
    } else if (w == "GF") {
      std::size_t pcol = c.column();
      std::string p = c.word("characteristic");
      if (!is_integer(p, false) || p.size() > 10) c.error("bad characteristic '" + p + "'", pcol);
      unsigned long v = std::stoul(p);
      if (v >= (1ul << 31) || !is_prime(v)) c.error(p + " is not a prime below 2^31", pcol);
      doc_.field = FieldSpec::prime(static_cast<std::uint32_t>(v));
    } else {
      c.error("unknown field '" + w + "' (use Q or GF p)", col);
    }
    c.finish();
    have_field_ = true;
  }

  std::string identifier(Cursor& c, const char* what) {
    std::size_t col = c.column();
    std::string w = c.word(what);
    if (!is_identifier(w)) c.error("bad name '" + w + "'", col);
    return w;
  }

  std::size_t natural(Cursor& c, const char* what) {
    std::size_t col = c.column();
    std::string w = c.word(what);
    if (!is_integer(w, false) || w.size() > 9) c.error("expected a non-negative integer, got '" + w + "'", col);
    return std::stoul(w);
  }

  Scalar scalar(Cursor& c) {
    std::size_t col = c.column();
    std::string w = c.word("scalar");
    std::size_t slash = w.find('/');
    std::string num = w.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : w.substr(slash + 1);
    if (!is_integer(num, true) || !is_integer(den, false)) c.error("bad scalar '" + w + "'", col);
    if (num[0] == '+') num.erase(0, 1);
    try {
      return doc_.field.from_fraction(mpz_class(num), mpz_class(den));
    } catch (const FieldError&) {
      c.error("scalar '" + w + "' is not in " + doc_.field.name(), col);
    }
  }

  SpaceSpec& space_ref(Cursor& c) {
    std::size_t col = c.column();
    std::string name = identifier(c, "space name");
    for (auto& s : doc_.spaces)
      if (s.name == name) return s;
    c.error("unknown space '" + name + "'", col);
  }

  void space(Cursor& c) {
    std::size_t col = c.column();
    std::string name = identifier(c, "space name");
    if (doc_.find_space(name)) c.error("space '" + name + "' declared twice", col);
    std::size_t n = natural(c, "dimension");
    std::vector<std::string> labels;
    if (c.accept('[')) {
      std::set<std::string> seen;
      if (!c.peek(']')) {
        do {
          std::size_t lcol = c.column();
          std::string l = c.word("label");
          if (!seen.insert(l).second) c.error("duplicate label '" + l + "'", lcol);
          labels.push_back(l);
        } while (c.accept(','));
      }
      c.expect(']');
      if (labels.size() != n) c.error("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
    } else {
      labels = default_labels("e", n);
    }
    c.finish();
    doc_.add_space(name, labels);
  }

  // "(i,j,k) = c" with each index checked against its bound.
  void entry(Cursor& c, const std::string& tag, SparseTable& t, const std::vector<std::size_t>& bounds) {
    c.expect('(');
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < bounds.size(); ++b) {
      if (b) c.expect(',');
      std::size_t col = c.column();
      std::size_t v = natural(c, "index");
      if (v >= bounds[b])
        c.error("index " + std::to_string(v) + " out of range (dimension " + std::to_string(bounds[b]) + ")", col);
      idx.push_back(v);
    }
    c.expect(')');
    c.expect('=');
    std::size_t col = c.column();
    Scalar v = scalar(c);
    c.finish();
    if (!seen_.insert({tag, idx}).second) c.error("entry given twice", col);
    t.set(idx, v);
  }

  void space_table(Cursor& c, const std::string& key, SparseTable SpaceSpec::*table, std::size_t arity) {
    SpaceSpec& s = space_ref(c);
    SparseTable& t = s.*table;
    t.declared = true;
    if (c.at_end()) return;
    entry(c, key + " " + s.name, t, std::vector<std::size_t>(arity, s.dim()));
  }

  void degrees(Cursor& c) {
    SpaceSpec& s = space_ref(c);
    if (s.degrees) c.error("degrees of '" + s.name + "' given twice");
    c.expect('[');
    std::vector<unsigned> d;
    if (!c.peek(']')) {
      do d.push_back(static_cast<unsigned>(natural(c, "degree")));
      while (c.accept(','));
    }
    c.expect(']');
    c.finish();
    if (d.size() != s.dim()) c.error("expected " + std::to_string(s.dim()) + " degrees");
    s.degrees = d;
  }

  void pair(Cursor& c) {
    if (doc_.pair) c.error("pair declared twice");
    std::size_t hcol = c.column();
    const SpaceSpec& h = space_ref(c);
    const SpaceSpec& i = space_ref(c);
    c.finish();
    if (h.name == i.name) c.error("a pair needs two different spaces", hcol);
    PairBinding b;
    b.h = h.name;
    b.i = i.name;
    doc_.pair = b;
  }

  void pair_table(Cursor& c, const std::string& key, SparseTable PairBinding::*table, std::vector<char> shape) {
    if (!doc_.pair) c.error("declare 'pair H I' first");
    std::size_t dh = doc_.space(doc_.pair->h).dim(), di = doc_.space(doc_.pair->i).dim();
    std::vector<std::size_t> bounds;
    for (char s : shape) bounds.push_back(s == 'h' ? dh : di);
    entry(c, key, (*doc_.pair).*table, bounds);
  }

  void sub(Cursor& c) {
    if (!doc_.pair) c.error("declare 'pair H I' first");
    std::size_t col = c.column();
    std::string name = identifier(c, "subspace name");
    if (doc_.find_sub(name)) c.error("subspace '" + name + "' declared twice", col);
    c.expect('=');
    c.expect('[');
    std::size_t n = doc_.total_dim();
    SubspaceLiteral lit{name, {}};
    if (!c.peek(']')) {
      do {
        std::size_t vcol = c.column();
        c.expect('(');
        std::vector<Scalar> v;
        if (!c.peek(')')) {
          do v.push_back(scalar(c));
          while (c.accept(','));
        }
        c.expect(')');
        if (v.size() != n)
          c.error("vector has " + std::to_string(v.size()) + " coordinates, the total space has " + std::to_string(n),
                  vcol);
        lit.vectors.push_back(std::move(v));
      } while (c.accept(','));
    }
    c.expect(']');
    c.finish();
    doc_.subs.push_back(std::move(lit));
  }

  StructureDocument doc_;
  bool have_field_ = false;
  std::set<std::pair<std::string, std::vector<std::size_t>>> seen_;
};

Matrix column_of(FieldSpec f, std::size_t n, const SparseTable& t) {
  Matrix m(f, n, 1);
  for (const auto& [idx, c] : t.entries) m(idx[0], 0) = c;
  return m;
}

void put_table(std::ostream& out, const std::string& head, const SparseTable& t) {
  if (!t.declared) return;
  if (t.entries.empty()) {
    out << head << "\n";
    return;
  }
  for (const auto& [idx, c] : t.entries) {
    out << head << " (";
    for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? "," : "") << idx[k];
    out << ") = " << c.to_string() << "\n";
  }
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + xs[k];
  return s;
}

}  // namespace

const SpaceSpec* StructureDocument::find_space(const std::string& name) const {
  for (const auto& s : spaces)
    if (s.name == name) return &s;
  return nullptr;
}

const SpaceSpec& StructureDocument::space(const std::string& name) const {
  if (const SpaceSpec* s = find_space(name)) return *s;
  throw std::invalid_argument("no space named '" + name + "'");
}

SpaceSpec& StructureDocument::add_space(const std::string& name, std::vector<std::string> labels) {
  if (find_space(name)) throw std::invalid_argument("space '" + name + "' already exists");
  SpaceSpec s;
  s.name = name;
  s.labels = std::move(labels);
  spaces.push_back(std::move(s));
  return spaces.back();
}

Algebra StructureDocument::algebra(const std::string& name) const {
  const SpaceSpec& s = space(name);
  Algebra a(field, s.labels);
  for (const auto& [idx, c] : s.mult.entries) a.add(idx[0], idx[1], idx[2], c);
  if (s.unit.declared) a.unit = column_of(field, s.dim(), s.unit);
  return a;
}

Coalgebra StructureDocument::coalgebra(const std::string& name) const {
  const SpaceSpec& s = space(name);
  Coalgebra co(field, s.labels);
  for (const auto& [idx, c] : s.comult.entries) co.add(idx[0], idx[1], idx[2], c);
  if (s.counit.declared) co.counit = column_of(field, s.dim(), s.counit).transpose();
  return co;
}

Bialgebra StructureDocument::bialgebra(const std::string& name) const {
  const SpaceSpec& s = space(name);
  std::optional<Matrix> anti;
  if (s.antipode.declared) {
    Matrix m(field, s.dim(), s.dim());
    for (const auto& [idx, c] : s.antipode.entries) m(idx[1], idx[0]) = c;
    anti = m;
  }
  return Bialgebra(algebra(name), coalgebra(name), anti);
}

const PairBinding& StructureDocument::binding() const {
  if (!pair) throw std::invalid_argument("the document declares no pair");
  return *pair;
}

std::size_t StructureDocument::total_dim() const {
  const PairBinding& b = binding();
  return space(b.h).dim() + space(b.i).dim();
}

BimoduleAction StructureDocument::action() const {
  const PairBinding& b = binding();
  std::size_t dh = space(b.h).dim(), di = space(b.i).dim();
  BimoduleAction act = zero_action(field, dh, di);
  for (const auto& [idx, c] : b.act_left.entries) act.left(idx[2], idx[0] * di + idx[1]) = c;
  for (const auto& [idx, c] : b.act_right.entries) act.right(idx[2], idx[0] * dh + idx[1]) = c;
  return act;
}

BicomoduleCoaction StructureDocument::coaction() const {
  const PairBinding& b = binding();
  std::size_t dh = space(b.h).dim(), di = space(b.i).dim();
  BicomoduleCoaction co = zero_coaction(field, dh, di);
  for (const auto& [idx, c] : b.coact_left.entries) co.left(idx[1] * di + idx[2], idx[0]) = c;
  for (const auto& [idx, c] : b.coact_right.entries) co.right(idx[1] * dh + idx[2], idx[0]) = c;
  return co;
}

AlgebraPair StructureDocument::algebra_pair() const {
  const PairBinding& b = binding();
  return AlgebraPair{algebra(b.h), algebra(b.i), action()};
}

CoalgebraPair StructureDocument::coalgebra_pair() const {
  const PairBinding& b = binding();
  return CoalgebraPair{coalgebra(b.h), coalgebra(b.i), coaction()};
}

BialgebraPair StructureDocument::bialgebra_pair() const {
  const PairBinding& b = binding();
  return BialgebraPair{bialgebra(b.h), algebra(b.i), coalgebra(b.i), action(), coaction()};
}

bool StructureDocument::pair_has_algebra() const { return space(binding().h).has_algebra(); }
bool StructureDocument::pair_has_coalgebra() const { return space(binding().h).has_coalgebra(); }

const SubspaceLiteral* StructureDocument::find_sub(const std::string& name) const {
  for (const auto& s : subs)
    if (s.name == name) return &s;
  return nullptr;
}

Subspace StructureDocument::subspace(const std::string& name) const {
  const SubspaceLiteral* lit = find_sub(name);
  if (!lit) throw std::invalid_argument("no subspace named '" + name + "'");
  std::size_t n = total_dim();
  if (lit->vectors.empty()) return Subspace(field, n);
  Matrix rows(field, lit->vectors.size(), n);
  for (std::size_t r = 0; r < lit->vectors.size(); ++r)
    for (std::size_t k = 0; k < n; ++k) rows(r, k) = lit->vectors[r][k];
  return Subspace::span_rows(rows);
}

namespace {
SpaceSpec& ensure_space(StructureDocument& d, const std::string& name, const std::vector<std::string>& labels) {
  for (auto& s : d.spaces)
    if (s.name == name) {
      if (s.dim() != labels.size()) throw DimensionError("space '" + name + "' has a different dimension");
      return s;
    }
  return d.add_space(name, labels);
}
}  // namespace

void StructureDocument::put_algebra(const std::string& name, const Algebra& a) {
  SpaceSpec& s = ensure_space(*this, name, a.basis);
  std::size_t n = a.dim();
  s.mult = SparseTable{};
  s.mult.declared = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.mult.set({i, j, k}, a.mult(k, i * n + j));
  s.unit = SparseTable{};
  s.unit.declared = a.unit.has_value();
  if (a.unit)
    for (std::size_t k = 0; k < n; ++k) s.unit.set({k}, (*a.unit)(k, 0));
}

void StructureDocument::put_coalgebra(const std::string& name, const Coalgebra& c) {
  SpaceSpec& s = ensure_space(*this, name, c.basis);
  std::size_t n = c.dim();
  s.comult = SparseTable{};
  s.comult.declared = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s.comult.set({k, i, j}, c.comult(i * n + j, k));
  s.counit = SparseTable{};
  s.counit.declared = c.counit.has_value();
  if (c.counit)
    for (std::size_t k = 0; k < n; ++k) s.counit.set({k}, (*c.counit)(0, k));
}

void StructureDocument::put_antipode(const std::string& name, const Matrix& m) {
  SpaceSpec* s = nullptr;
  for (auto& sp : spaces)
    if (sp.name == name) s = &sp;
  if (!s) throw std::invalid_argument("no space named '" + name + "'");
  s->antipode = SparseTable{};
  s->antipode.declared = true;
  for (std::size_t i = 0; i < s->dim(); ++i)
    for (std::size_t k = 0; k < s->dim(); ++k) s->antipode.set({i, k}, m(k, i));
}

void StructureDocument::put_pair(const std::string& h, const std::string& i, const BimoduleAction& act,
                                 const BicomoduleCoaction& coact) {
  std::size_t dh = space(h).dim(), di = space(i).dim();
  check_shape(Algebra(field, space(h).labels), di, act);
  check_shape(Coalgebra(field, space(h).labels), di, coact);
  PairBinding b;
  b.h = h;
  b.i = i;
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t x = 0; x < di; ++x)
      for (std::size_t k = 0; k < di; ++k) {
        b.act_left.set({a, x, k}, act.left(k, a * di + x));
        b.act_right.set({x, a, k}, act.right(k, x * dh + a));
        b.coact_left.set({x, a, k}, coact.left(a * di + k, x));
        b.coact_right.set({x, k, a}, coact.right(k * dh + a, x));
      }
  pair = std::move(b);
}

void StructureDocument::put_sub(const std::string& name, const Subspace& sub) {
  SubspaceLiteral lit{name, {}};
  for (std::size_t r = 0; r < sub.dim(); ++r) {
    std::vector<Scalar> v;
    for (std::size_t k = 0; k < sub.ambient_dim(); ++k) v.push_back(sub.basis()(r, k));
    lit.vectors.push_back(std::move(v));
  }
  for (auto& s : subs)
    if (s.name == name) {
      s = std::move(lit);
      return;
    }
  subs.push_back(std::move(lit));
}

StructureDocument parse_document(const std::string& text) { return Parser().run(text); }

std::string serialize_document(const StructureDocument& doc) {
  std::ostringstream out;
  if (doc.field.is_rational())
    out << "field Q\n";
  else
    out << "field GF " << doc.field.characteristic() << "\n";
  for (const auto& s : doc.spaces) {
    for (const auto& l : s.labels)
      if (l.empty() || l.find_first_of("()[],=# \t\n") != std::string::npos)
        throw std::invalid_argument("label '" + l + "' cannot be written in the text format");
    out << "space " << s.name << " " << s.dim() << " [" << join(s.labels) << "]\n";
    put_table(out, "mult " + s.name, s.mult);
    put_table(out, "unit " + s.name, s.unit);
    put_table(out, "comult " + s.name, s.comult);
    put_table(out, "counit " + s.name, s.counit);
    put_table(out, "antipode " + s.name, s.antipode);
    if (s.degrees) {
      std::vector<std::string> d;
      for (unsigned v : *s.degrees) d.push_back(std::to_string(v));
      out << "deg " << s.name << " [" << join(d) << "]\n";
    }
  }
  if (doc.pair) {
    const PairBinding& b = *doc.pair;
    out << "pair " << b.h << " " << b.i << "\n";
    // bare pair tables carry no information, so only entries are written
    for (auto [head, t] : {std::pair{"actL", &b.act_left}, std::pair{"actR", &b.act_right},
                           std::pair{"coactL", &b.coact_left}, std::pair{"coactR", &b.coact_right}}) {
      for (const auto& [idx, c] : t->entries)
        out << head << " (" << idx[0] << "," << idx[1] << "," << idx[2] << ") = " << c.to_string() << "\n";
    }
  }
  for (const auto& lit : doc.subs) {
    out << "sub " << lit.name << " = [";
    for (std::size_t r = 0; r < lit.vectors.size(); ++r) {
      std::vector<std::string> v;
      for (const auto& c : lit.vectors[r]) v.push_back(c.to_string());
      out << (r ? "," : "") << "(" << join(v) << ")";
    }
    out << "]\n";
  }
  return out.str();
}

StructureDocument reinterpret(const StructureDocument& doc, FieldSpec field) {
  std::string text = serialize_document(doc);
  std::string head = field.is_rational() ? "field Q" : "field GF " + std::to_string(field.characteristic());
  text = head + text.substr(text.find('\n'));
  return parse_document(text);
}

}  // namespace dorroh
