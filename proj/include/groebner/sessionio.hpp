/*
   Copyright 2026 The groebner-kernel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GROEBNER_SESSIONIO_HPP
#define GROEBNER_SESSIONIO_HPP

#include <nlohmann/json.hpp>

#include <iomanip>
#include <set>

#include "groebner/modsyz.hpp"
#include "groebner/planecurves.hpp"
#include "groebner/resolutions.hpp"

namespace groebner {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Session language
//
//   session    := { statement }
//   statement  := ring | ideal | matrix | divisor | version | command
//   ring       := "ring" NAME "=" field "[" names "]" clauses ";"
//   field      := "QQ" | "Fp" ":" INT
//   clauses    := { "weights" "(" ints ")" | ORDERING-NAME }
//   ideal      := "ideal" NAME "=" poly { "," poly } ";"
//   matrix     := "matrix" NAME "=" "[" row { "," row } "]" ";"
//   row        := "[" poly { "," poly } "]"
//   divisor    := "divisor" NAME "=" [sign] term { sign term } ";"
//   term       := [ INT "*" ] point
//   point      := "(" scalar ":" scalar [ ":" scalar ] ")"
//   version    := "format_version" INT ";"
//   command    := NAME { arg } ";"
//
// Polynomial grammar: "+ - * / ^" with parentheses, integer and rational
// literals; "^" binds tighter than unary minus; implicit multiplication is
// a parse error; "/" requires a nonzero constant divisor. Comments: "#".
// ---------------------------------------------------------------------------

namespace sess {

struct Token {
  enum class Kind { ident, integer, punct, end };
  Kind kind = Kind::end;
  std::string text;
  long value = 0;
  char punct = 0;
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(text[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_')) {
        s += text[i];
        advance(text[i++]);
      }
      t.kind = Token::Kind::ident;
      t.text = std::move(s);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      std::string s;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (v > (1L << 56)) throw ParseError("integer literal too large", line, col);
        v = v * 10 + (text[i] - '0');
        s += text[i];
        advance(text[i++]);
      }
      t.kind = Token::Kind::integer;
      t.value = v;
      t.text = std::move(s);
    } else if (std::string("+-*/^(),;:=[]").find(c) != std::string::npos) {
      t.kind = Token::Kind::punct;
      t.punct = c;
      t.text = std::string(1, c);
      advance(c);
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::Kind::end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

}  // namespace sess

struct RingDeclStmt {
  std::string name;
  RingPtr ring;
};
struct IdealDeclStmt {
  std::string name;
  RingPtr ring;
  std::vector<MultiPoly> polys;
};
struct MatrixDeclStmt {
  std::string name;
  PolyMatrix matrix;
};
struct DivisorDeclStmt {
  std::string name;
  RingPtr ring;
  std::vector<std::pair<std::vector<FieldElem>, int>> terms;
};

struct CommandArg {
  enum class Kind { name, poly, integer, point };
  Kind kind = Kind::name;
  std::string name;
  MultiPoly poly;
  long integer = 0;
  std::vector<FieldElem> point;
};

struct CommandStmt {
  std::string command;
  std::vector<CommandArg> args;
  RingPtr ring;  // active ring at the statement
  int line = 1, col = 1;
};

struct Statement {
  enum class Kind { ring_decl, ideal_decl, matrix_decl, divisor_decl, command };
  Kind kind = Kind::command;
  RingDeclStmt ring_decl;
  IdealDeclStmt ideal_decl;
  MatrixDeclStmt matrix_decl;
  DivisorDeclStmt divisor_decl;
  CommandStmt command;
};

struct SessionAST {
  int format_version = 1;
  std::vector<Statement> statements;
};

inline std::optional<MonomialOrdering> ordering_by_name(const std::string& name,
                                                        const RingPtr& ring) {
  if (name == "lex") return MonomialOrdering::lex();
  if (name == "degrevlex") return MonomialOrdering::degrevlex();
  if (name == "wdegrevlex") return MonomialOrdering::wdegrevlex(ring->weights());
  if (name == "negwdegrevlex" || name == "neg_wdegrevlex")
    return MonomialOrdering::neg_wdegrevlex(ring->weights());
  if (name == "negdegrevlex")
    return MonomialOrdering::neg_wdegrevlex(std::vector<int>(ring->nvars(), 1));
  return std::nullopt;
}

/// Recursive-descent parser for the session language. Polynomials are
/// resolved against the active ring while parsing, so undeclared
/// identifiers fail with a position.
class SessionParser {
 public:
  explicit SessionParser(const std::string& text) : toks_(sess::lex(text)) {}

  SessionAST parse() {
    SessionAST ast;
    bool first = true;
    while (!at_end()) {
      if (first && peek_ident("format_version")) {
        next();
        ast.format_version = static_cast<int>(expect_int());
        expect(';');
        first = false;
        continue;
      }
      first = false;
      ast.statements.push_back(statement());
    }
    return ast;
  }

  /// Parses a single polynomial expression against a given ring (used by
  /// the CLI's one-shot commands).
  static MultiPoly parse_polynomial(const std::string& text, const RingPtr& ring) {
    SessionParser p(text);
    p.active_ = ring;
    MultiPoly f = p.expression();
    if (!p.at_end()) throw ParseError("trailing input after polynomial",
                                      p.cur().line, p.cur().col);
    return f;
  }

  /// Parses "QQ[x,y,z] lex weights(...)" style ring descriptions.
  static RingPtr parse_ring_description(const std::string& text) {
    SessionParser p("ring R = " + text + ";");
    SessionAST ast = p.parse();
    if (ast.statements.size() != 1 ||
        ast.statements[0].kind != Statement::Kind::ring_decl)
      throw ParseError("expected a ring description", 1, 1);
    return ast.statements[0].ring_decl.ring;
  }

 private:
  Statement statement() {
    const sess::Token& t = cur();
    if (t.kind != sess::Token::Kind::ident)
      throw ParseError("expected a statement (ring/ideal/matrix/divisor/command)",
                       t.line, t.col);
    if (t.text == "ring") return ring_decl();
    if (t.text == "ideal") return ideal_decl();
    if (t.text == "matrix") return matrix_decl();
    if (t.text == "divisor") return divisor_decl();
    return command();
  }

  Statement ring_decl() {
    next();  // ring
    Statement st;
    st.kind = Statement::Kind::ring_decl;
    st.ring_decl.name = expect_ident();
    declare(st.ring_decl.name);
    expect('=');
    Field field = field_spec();
    expect('[');
    std::vector<std::string> vars;
    vars.push_back(expect_ident());
    while (accept(',')) vars.push_back(expect_ident());
    expect(']');
    std::vector<int> weights;
    std::string ord_name;
    while (!check(';')) {
      std::string word = expect_ident();
      if (word == "weights") {
        expect('(');
        weights.push_back(static_cast<int>(expect_int()));
        while (accept(',')) weights.push_back(static_cast<int>(expect_int()));
        expect(')');
      } else {
        ord_name = word;
      }
    }
    expect(';');
    RingPtr probe = PolyRing::make(field, vars, weights);
    std::optional<MonomialOrdering> ord;
    if (!ord_name.empty()) {
      ord = ordering_by_name(ord_name, probe);
      if (!ord)
        throw ParseError("unknown ordering '" + ord_name + "'", cur().line, cur().col);
    }
    st.ring_decl.ring = ord ? PolyRing::make(field, vars, weights, *ord) : probe;
    active_ = st.ring_decl.ring;
    return st;
  }

  Statement ideal_decl() {
    next();  // ideal
    Statement st;
    st.kind = Statement::Kind::ideal_decl;
    st.ideal_decl.name = expect_ident();
    declare(st.ideal_decl.name);
    st.ideal_decl.ring = need_ring();
    expect('=');
    st.ideal_decl.polys.push_back(expression());
    while (accept(',')) st.ideal_decl.polys.push_back(expression());
    expect(';');
    return st;
  }

  Statement matrix_decl() {
    next();  // matrix
    Statement st;
    st.kind = Statement::Kind::matrix_decl;
    std::string name = expect_ident();
    declare(name);
    RingPtr R = need_ring();
    expect('=');
    expect('[');
    std::vector<std::vector<MultiPoly>> rows;
    do {
      expect('[');
      std::vector<MultiPoly> row;
      row.push_back(expression());
      while (accept(',')) row.push_back(expression());
      expect(']');
      if (!rows.empty() && rows[0].size() != row.size())
        throw ParseError("ragged matrix rows", cur().line, cur().col);
      rows.push_back(std::move(row));
    } while (accept(','));
    expect(']');
    expect(';');
    PolyMatrix m(R, static_cast<int>(rows.size()),
                 static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    st.matrix_decl = {name, std::move(m)};
    return st;
  }

  Statement divisor_decl() {
    next();  // divisor
    Statement st;
    st.kind = Statement::Kind::divisor_decl;
    st.divisor_decl.name = expect_ident();
    declare(st.divisor_decl.name);
    st.divisor_decl.ring = need_ring();
    expect('=');
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    while (true) {
      int mult = 1;
      if (cur().kind == sess::Token::Kind::integer) {
        mult = static_cast<int>(expect_int());
        expect('*');
      }
      st.divisor_decl.terms.push_back({point_literal(), sign * mult});
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else break;
    }
    expect(';');
    return st;
  }

  Statement command() {
    Statement st;
    st.kind = Statement::Kind::command;
    st.command.line = cur().line;
    st.command.col = cur().col;
    st.command.command = expect_ident();
    st.command.ring = active_;
    while (!check(';')) {
      if (at_end())
        throw ParseError("unterminated command (missing ';')", cur().line, cur().col);
      st.command.args.push_back(argument());
    }
    expect(';');
    return st;
  }

  CommandArg argument() {
    CommandArg a;
    // A bare identifier that is not a ring variable is a name reference.
    if (cur().kind == sess::Token::Kind::ident &&
        (!active_ || active_->var_index(cur().text) < 0)) {
      a.kind = CommandArg::Kind::name;
      a.name = expect_ident();
      return a;
    }
    // Plain integer literals work without any ring in scope.
    auto continues_poly = [&](std::size_t k) {
      const sess::Token& t = toks_[std::min(k, toks_.size() - 1)];
      return t.kind == sess::Token::Kind::punct &&
             (t.punct == '*' || t.punct == '^' || t.punct == '/' ||
              t.punct == '+' || t.punct == '-');
    };
    if (cur().kind == sess::Token::Kind::integer && !continues_poly(pos_ + 1)) {
      a.kind = CommandArg::Kind::integer;
      a.integer = expect_int();
      return a;
    }
    if (check('-') && toks_[pos_ + 1].kind == sess::Token::Kind::integer &&
        !continues_poly(pos_ + 2)) {
      next();
      a.kind = CommandArg::Kind::integer;
      a.integer = -expect_int();
      return a;
    }
    // A parenthesized group may be a point literal.
    if (check('(')) {
      std::size_t save = pos_;
      try {
        a.point = point_literal();
        a.kind = CommandArg::Kind::point;
        return a;
      } catch (const ParseError&) {
        pos_ = save;
      }
    }
    MultiPoly f = expression();
    a.poly = f;
    a.kind = CommandArg::Kind::poly;
    if (f.is_constant()) {
      FieldElem c = f.constant_term();
      if (c.is_rational()) {
        const mpq_class& q = c.rational_value();
        if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
          a.kind = CommandArg::Kind::integer;
          a.integer = q.get_num().get_si();
        }
      } else {
        a.kind = CommandArg::Kind::integer;
        a.integer = static_cast<long>(c.residue());
      }
    }
    return a;
  }

  Field field_spec() {
    std::string word = expect_ident();
    if (word == "QQ") return Field::rationals();
    if (word == "Fp") {
      expect(':');
      long p = expect_int();
      return Field::prime_field(static_cast<std::uint64_t>(p));
    }
    throw ParseError("expected field 'QQ' or 'Fp:<p>'", cur().line, cur().col);
  }

  std::vector<FieldElem> point_literal() {
    expect('(');
    std::vector<FieldElem> coords;
    coords.push_back(scalar_literal());
    expect(':');
    coords.push_back(scalar_literal());
    if (accept(':')) coords.push_back(scalar_literal());
    expect(')');
    return coords;
  }

  FieldElem scalar_literal() {
    RingPtr R = need_ring();
    bool neg = accept('-');
    long num = expect_int();
    long den = 1;
    if (accept('/')) den = expect_int();
    if (den == 0) throw ParseError("zero denominator", cur().line, cur().col);
    FieldElem v;
    if (R->field().is_rationals())
      v = FieldElem::rational(num, den);
    else
      v = FieldElem::modular(R->field().characteristic, num) /
          FieldElem::modular(R->field().characteristic, den);
    return neg ? -v : v;
  }

  // expression := term { (+|-) term }
  MultiPoly expression() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  // term := factor { (*|/) factor }
  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const sess::Token& t = cur();
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("'/' needs a nonzero constant divisor", t.line, t.col);
        acc = acc.scaled(d.constant_term().inverse());
      } else {
        return acc;
      }
    }
  }

  // factor := - factor | power
  MultiPoly factor() {
    if (accept('-')) return -factor();
    accept('+');
    return power();
  }

  // power := primary [ ^ INT ]   (binds tighter than unary minus)
  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      long e = expect_int();
      if (e > 4096) throw ParseError("exponent too large", cur().line, cur().col);
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  MultiPoly primary() {
    const sess::Token& t = cur();
    RingPtr R = need_ring();
    if (t.kind == sess::Token::Kind::integer) {
      next();
      return MultiPoly::constant(R, FieldElem::integer(R->field(), t.value));
    }
    if (t.kind == sess::Token::Kind::ident) {
      int vi = R->var_index(t.text);
      if (vi < 0)
        throw ParseError("undeclared identifier '" + t.text + "'", t.line, t.col);
      next();
      return MultiPoly::variable(R, vi);
    }
    if (accept('(')) {
      MultiPoly e = expression();
      expect(')');
      return e;
    }
    throw ParseError("expected an operand (number, variable or '(')", t.line, t.col);
  }

  RingPtr need_ring() {
    if (!active_)
      throw ParseError("no ring declared yet", cur().line, cur().col);
    return active_;
  }

  void declare(const std::string& name) {
    if (!declared_.insert(name).second)
      throw ParseError("name '" + name + "' already declared", cur().line, cur().col);
  }

  const sess::Token& cur() const { return toks_[pos_]; }
  bool at_end() const { return cur().kind == sess::Token::Kind::end; }
  void next() { if (!at_end()) ++pos_; }

  bool check(char p) const {
    return cur().kind == sess::Token::Kind::punct && cur().punct == p;
  }
  bool accept(char p) {
    if (!check(p)) return false;
    next();
    return true;
  }
  void expect(char p) {
    if (!accept(p))
      throw ParseError(std::string("expected '") + p + "'", cur().line, cur().col);
  }
  bool peek_ident(const std::string& s) const {
    return cur().kind == sess::Token::Kind::ident && cur().text == s;
  }
  std::string expect_ident() {
    if (cur().kind != sess::Token::Kind::ident)
      throw ParseError("expected an identifier", cur().line, cur().col);
    std::string s = cur().text;
    next();
    return s;
  }
  long expect_int() {
    if (cur().kind != sess::Token::Kind::integer)
      throw ParseError("expected an integer", cur().line, cur().col);
    long v = cur().value;
    next();
    return v;
  }

  std::vector<sess::Token> toks_;
  std::size_t pos_ = 0;
  RingPtr active_;
  std::set<std::string> declared_;
};

inline SessionAST parse_session(const std::string& text) {
  return SessionParser(text).parse();
}

// ---------------------------------------------------------------------------
// Result documents and rendering
// ---------------------------------------------------------------------------

struct ResultEntry {
  std::string kind;  // gb | ideal | matrix | betti | hilbert | integer | ratfuns | report
  json value;
  std::vector<std::string> warnings;
};

struct ResultDocument {
  std::vector<ResultEntry> entries;
  std::optional<std::string> error;
};

inline json betti_to_json(const BettiTable& b) {
  json rows = json::array();
  for (const auto& [ij, v] : b.entries)
    rows.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", v}});
  return rows;
}

/// Paper-style Betti layout: columns are homological degrees i, row labels
/// are j with b_{ij} = beta_{i,i+j}; zeros print as "-".
inline std::string betti_to_text(const BettiTable& b) {
  if (b.entries.empty()) return "(empty Betti table)\n";
  int imax = 0, bmin = 0, bmax = 0;
  bool first = true;
  for (const auto& [ij, v] : b.entries) {
    imax = std::max(imax, ij.first);
    int disp = ij.second - ij.first;
    if (first) {
      bmin = bmax = disp;
      first = false;
    }
    bmin = std::min(bmin, disp);
    bmax = std::max(bmax, disp);
  }
  std::vector<long> totals(imax + 1, 0);
  for (const auto& [ij, v] : b.entries) totals[ij.first] += v;
  auto cell = [](long v) {
    return v == 0 ? std::string("-") : std::to_string(v);
  };
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= imax; ++i) os << " " << std::setw(6) << i;
  os << "\n";
  for (int j = bmin; j <= bmax; ++j) {
    os << std::setw(4) << j << " :";
    for (int i = 0; i <= imax; ++i)
      os << " " << std::setw(6) << cell(b.at(i, i + j));
    os << "\n";
  }
  os << "total:";
  for (int i = 0; i <= imax; ++i) os << " " << std::setw(6) << totals[i];
  os << "\n";
  return os.str();
}

inline std::string hilbert_poly_to_text(const std::vector<mpq_class>& tpoly) {
  if (tpoly.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t k = tpoly.size(); k-- > 0;) {
    if (tpoly[k] == 0) continue;
    mpq_class c = tpoly[k];
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    bool show_c = (k == 0) || c != 1;
    if (show_c) {
      s += c.get_num().get_str();
      if (c.get_den() != 1) s += "/" + c.get_den().get_str();
      if (k > 0) s += "*";
    }
    if (k > 0) {
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return first ? "0" : s;
}

inline std::string render_text(const ResultDocument& doc) {
  std::ostringstream os;
  for (const auto& e : doc.entries) {
    for (const auto& w : e.warnings) os << "warning: " << w << "\n";
    if (e.kind == "integer") {
      os << e.value.at("value").dump() << "\n";
      continue;
    }
    if (e.kind == "gb" || e.kind == "ideal") {
      if (e.value.contains("ordering"))
        os << e.kind << " (" << e.value["ordering"].get<std::string>() << "):\n";
      else
        os << e.kind << ":\n";
      for (const auto& g : e.value.at("elements"))
        os << "  " << g.get<std::string>() << "\n";
      continue;
    }
    if (e.kind == "matrix") {
      for (const auto& row : e.value.at("rows")) {
        os << "  [";
        bool first = true;
        for (const auto& x : row) {
          if (!first) os << ", ";
          first = false;
          os << x.get<std::string>();
        }
        os << "]\n";
      }
      if (e.value.at("rows").empty()) os << "  (empty matrix)\n";
      continue;
    }
    if (e.kind == "betti") {
      os << e.value.at("text").get<std::string>();
      continue;
    }
    if (e.kind == "hilbert") {
      os << "P(t) = " << e.value.at("polynomial").get<std::string>()
         << "; dim " << e.value.at("dim").get<int>()
         << "; degree " << e.value.at("degree").get<long>()
         << "; arithmetic genus " << e.value.at("arithmetic_genus").get<long>() << "\n";
      continue;
    }
    if (e.kind == "ratfuns") {
      os << "l = " << e.value.at("ell").get<long>() << "\n";
      for (const auto& f : e.value.at("basis"))
        os << "  (" << f.at("numerator").get<std::string>() << ")/("
           << f.at("denominator").get<std::string>() << ")\n";
      continue;
    }
    if (e.kind == "report") {
      if (e.value.contains("display")) {
        os << e.value.at("display").get<std::string>() << "\n";
      } else {
        for (auto it = e.value.begin(); it != e.value.end(); ++it)
          os << it.key() << ": "
             << (it.value().is_string() ? it.value().get<std::string>()
                                        : it.value().dump())
             << "\n";
      }
      continue;
    }
    os << e.value.dump() << "\n";
  }
  if (doc.error) os << "error: " << *doc.error << "\n";
  return os.str();
}

inline std::string render_json(const ResultDocument& doc) {
  json out;
  out["format_version"] = 1;
  out["results"] = json::array();
  for (const auto& e : doc.entries)
    out["results"].push_back(
        {{"kind", e.kind}, {"value", e.value}, {"warnings", e.warnings}});
  if (doc.error) out["error"] = *doc.error;
  return out.dump(2) + "\n";
}

inline std::string render(const ResultDocument& doc, const std::string& format) {
  if (format == "json") return render_json(doc);
  if (format == "text") return render_text(doc);
  throw MathError("unknown output format '" + format + "'");
}

}  // namespace groebner

#endif  // GROEBNER_SESSIONIO_HPP
