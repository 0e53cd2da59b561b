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

#ifndef GROEBNER_DRIVER_HPP
#define GROEBNER_DRIVER_HPP

#include <atomic>
#include <thread>

#include "groebner/sessionio.hpp"

namespace groebner {

/// Session environment: declared objects. Declarations are append-only,
/// which keeps snapshots cheap for parallel command execution.
struct SessionEnv {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, PolyMatrix> matrices;
  std::map<std::string, DivisorDeclStmt> divisors;
  std::string default_ordering;  // CLI --ordering override, may be empty
};

namespace driver_detail {

inline json ideal_json(const std::vector<MultiPoly>& gens, const RingPtr& R) {
  json elems = json::array();
  for (const auto& g : gens) elems.push_back(g.to_string());
  return {{"ring", R->to_string()}, {"elements", elems}};
}

inline json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return {{"rows", rows},
          {"ring", m.ring() ? m.ring()->to_string() : ""},
          {"nrows", m.rows()},
          {"ncols", m.cols()}};
}

struct ArgReader {
  const CommandStmt& cmd;
  const SessionEnv& env;
  std::size_t next = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw MathError("command '" + cmd.command + "': " + msg);
  }
  bool done() const { return next >= cmd.args.size(); }
  const CommandArg& take(const char* what) {
    if (done()) fail(std::string("missing argument: ") + what);
    return cmd.args[next++];
  }
  const CommandArg* peek() const {
    return done() ? nullptr : &cmd.args[next];
  }

  Ideal ideal(const char* what) {
    const CommandArg& a = take(what);
    if (a.kind == CommandArg::Kind::name) {
      auto it = env.ideals.find(a.name);
      if (it == env.ideals.end()) fail("unknown ideal '" + a.name + "'");
      return it->second;
    }
    if (a.kind == CommandArg::Kind::poly || a.kind == CommandArg::Kind::integer)
      return Ideal(cmd.ring, {a.poly});
    fail(std::string("expected an ideal for ") + what);
  }

  MultiPoly poly(const char* what) {
    const CommandArg& a = take(what);
    if (a.kind == CommandArg::Kind::poly) return a.poly;
    if (a.kind == CommandArg::Kind::integer) {
      if (!cmd.ring) fail("no ring in scope");
      return MultiPoly::constant(cmd.ring, a.integer);
    }
    fail(std::string("expected a polynomial for ") + what);
  }

  long integer(const char* what) {
    const CommandArg& a = take(what);
    if (a.kind != CommandArg::Kind::integer)
      fail(std::string("expected an integer for ") + what);
    return a.integer;
  }

  std::vector<FieldElem> point(const char* what) {
    const CommandArg& a = take(what);
    if (a.kind != CommandArg::Kind::point)
      fail(std::string("expected a point for ") + what);
    return a.point;
  }

  PolyMatrix matrix(const char* what) {
    const CommandArg& a = take(what);
    if (a.kind != CommandArg::Kind::name)
      fail(std::string("expected a matrix name for ") + what);
    auto it = env.matrices.find(a.name);
    if (it == env.matrices.end()) fail("unknown matrix '" + a.name + "'");
    return it->second;
  }

  const DivisorDeclStmt* divisor_opt() {
    if (done()) return nullptr;
    const CommandArg& a = cmd.args[next];
    if (a.kind != CommandArg::Kind::name) return nullptr;
    auto it = env.divisors.find(a.name);
    if (it == env.divisors.end()) return nullptr;
    ++next;
    return &it->second;
  }

  /// Trailing ordering name; falls back to the CLI-wide --ordering, then to
  /// the ring default.
  MonomialOrdering ordering(const RingPtr& R) {
    if (!done()) {
      const CommandArg& a = cmd.args[next];
      if (a.kind == CommandArg::Kind::name) {
        auto ord = ordering_by_name(a.name, R);
        if (ord) {
          ++next;
          return *ord;
        }
      }
    }
    if (!env.default_ordering.empty()) {
      auto ord = ordering_by_name(env.default_ordering, R);
      if (!ord) throw MathError("unknown ordering '" + env.default_ordering + "'");
      return *ord;
    }
    return R->default_ordering();
  }

  void finish() {
    if (!done()) fail("unexpected extra argument");
  }
};

inline std::vector<SingularPoint> to_singular_points(const DivisorDeclStmt& d) {
  std::vector<SingularPoint> out;
  for (const auto& [coords, mult] : d.terms) {
    if (mult < 2)
      throw MathError("singular point multiplicities must be >= 2");
    out.push_back({ProjPoint(coords), mult, true});
  }
  return out;
}

inline Divisor to_divisor(const DivisorDeclStmt& d) {
  Divisor out;
  for (const auto& [coords, mult] : d.terms) out.push_back({ProjPoint(coords), mult});
  return out;
}

}  // namespace driver_detail

/// Executes one command against an environment snapshot.
inline ResultEntry execute_command(const CommandStmt& cmd, const SessionEnv& env) {
  using namespace driver_detail;
  ArgReader args{cmd, env};
  const std::string& op = cmd.command;
  ResultEntry out;

  auto ideal_entry = [&](const Ideal& I, const char* kind) {
    out.kind = kind;
    out.value = ideal_json(I.generators(), I.ring());
  };

  if (op == "gb") {
    Ideal I = args.ideal("ideal");
    MonomialOrdering ord = args.ordering(I.ring());
    args.finish();
    GroebnerBasis gb = reduced_groebner_basis(I, ord);
    out.kind = "gb";
    out.value = ideal_json(gb.elements, I.ring());
    out.value["ordering"] = ord.key();
    out.value["minimal"] = gb.minimal;
    out.value["reduced"] = gb.reduced;
    return out;
  }
  if (op == "nf") {
    MultiPoly f = args.poly("polynomial");
    Ideal I = args.ideal("ideal");
    MonomialOrdering ord = args.ordering(I.ring());
    args.finish();
    MultiPoly h = normal_form(f, I, ord);
    out.kind = "report";
    out.value = {{"display", h.to_string()}, {"normal_form", h.to_string()},
                 {"ordering", ord.key()}};
    return out;
  }
  if (op == "eliminate") {
    Ideal I = args.ideal("ideal");
    std::vector<int> vars;
    while (!args.done()) {
      const CommandArg& a = args.take("variable");
      if (a.kind == CommandArg::Kind::name) {
        int vi = I.ring()->var_index(a.name);
        if (vi < 0) args.fail("unknown variable '" + a.name + "'");
        vars.push_back(vi);
      } else if (a.kind == CommandArg::Kind::poly) {
        const auto& ts = a.poly.terms();
        if (ts.size() != 1 || !ts[0].coef.is_one() || total_of(ts[0].exp) != 1)
          args.fail("expected a variable");
        for (int i = 0; i < I.ring()->nvars(); ++i)
          if (ts[0].exp[i] == 1) vars.push_back(i);
      } else {
        args.fail("expected a variable");
      }
    }
    ideal_entry(eliminate(I, vars), "ideal");
    return out;
  }
  if (op == "dim") {
    Ideal I = args.ideal("ideal");
    args.finish();
    out.kind = "integer";
    out.value = {{"value", affine_dim(I)}};
    return out;
  }
  if (op == "intersect" || op == "quotient") {
    Ideal I = args.ideal("first ideal");
    Ideal J = args.ideal("second ideal");
    args.finish();
    ideal_entry(op == "intersect" ? intersect(I, J) : colon(I, J), "ideal");
    return out;
  }
  if (op == "saturate") {
    Ideal I = args.ideal("first ideal");
    Ideal J = args.ideal("second ideal");
    args.finish();
    auto [S, m] = saturate(I, J);
    out.kind = "report";
    json elems = json::array();
    for (const auto& g : S.generators()) elems.push_back(g.to_string());
    out.value = {{"elements", elems}, {"exponent", m},
                 {"ring", I.ring()->to_string()}};
    return out;
  }
  if (op == "closure") {
    Ideal I = args.ideal("ideal");
    args.finish();
    Ideal C = projective_closure(I);
    ideal_entry(C, "ideal");
    return out;
  }
  if (op == "syz") {
    if (const CommandArg* a = args.peek();
        a && a->kind == CommandArg::Kind::name && env.matrices.count(a->name)) {
      PolyMatrix m = args.matrix("matrix");
      args.finish();
      out.kind = "matrix";
      out.value = matrix_json(syzygies_on_generators(m.columns()));
      return out;
    }
    Ideal I = args.ideal("ideal");
    args.finish();
    out.kind = "matrix";
    out.value = matrix_json(syzygies_on_generators(I.generators()));
    return out;
  }
  if (op == "kernel") {
    PolyMatrix phi0 = args.matrix("lift matrix");
    PolyMatrix psi = args.matrix("target presentation");
    PolyMatrix phiM = args.matrix("source presentation");
    args.finish();
    KernelResult k = kernel(phi0, psi, phiM);
    out.kind = "report";
    out.value = {{"generators", matrix_json(k.generators)},
                 {"presentation", matrix_json(k.presentation)}};
    return out;
  }
  if (op == "resolve" || op == "betti" || op == "hilbert") {
    Ideal I = args.ideal("ideal");
    bool schreyer_table = false;
    if (const CommandArg* a = args.peek();
        a && a->kind == CommandArg::Kind::name && a->name == "schreyer") {
      schreyer_table = true;
      ++args.next;
    }
    args.finish();
    GradedFreeResolution res = free_resolution(I, true);
    if (op == "resolve") {
      out.kind = "report";
      json twists = json::array();
      for (const auto& tw : res.twists) twists.push_back(tw);
      std::string disp;
      for (std::size_t i = 0; i < res.twists.size(); ++i) {
        if (i) disp += " <- ";
        std::map<int, int> cnt;
        for (int t : res.twists[i]) cnt[t]++;
        if (res.twists[i].empty()) disp += "0";
        std::string part;
        for (auto& [t, c] : cnt) {
          if (!part.empty()) part += " (+) ";
          part += "S";
          if (t != 0) part += "(-" + std::to_string(t) + ")";
          if (c > 1) part += "^" + std::to_string(c);
        }
        disp += part.empty() ? "0" : part;
      }
      disp += " <- 0";
      out.value = {{"display", disp}, {"twists", twists}, {"ranks", res.ranks},
                   {"length", res.length()}};
      return out;
    }
    if (op == "betti") {
      BettiTable b = schreyer_table ? betti_table(res) : minimal_betti(res);
      out.kind = "betti";
      out.value = {{"entries", betti_to_json(b)}, {"text", betti_to_text(b)},
                   {"minimal", !schreyer_table}};
      return out;
    }
    HilbertData hd = hilbert_data(res);
    out.kind = "hilbert";
    out.value = {{"polynomial", hilbert_poly_to_text(hd.polynomial)},
                 {"dim", hd.dim},
                 {"degree", static_cast<long>(hd.degree.get_si())},
                 {"arithmetic_genus", static_cast<long>(hd.arithmetic_genus.get_si())}};
    return out;
  }
  if (op == "imult") {
    MultiPoly f = args.poly("first curve");
    MultiPoly g = args.poly("second curve");
    std::vector<FieldElem> p = args.point("point");
    args.finish();
    auto m = intersection_multiplicity(f, g, p);
    out.kind = "integer";
    if (m) out.value = {{"value", *m}};
    else out.value = {{"value", "infinite"}};
    return out;
  }
  if (op == "mult") {
    MultiPoly f = args.poly("curve");
    std::vector<FieldElem> p = args.point("point");
    args.finish();
    CurveMultiplicity cm = curve_multiplicity(f, p);
    out.kind = "report";
    out.value = {{"display", "m=" + std::to_string(cm.multiplicity) +
                                 " ordinary=" + (cm.ordinary ? "true" : "false")},
                 {"multiplicity", cm.multiplicity},
                 {"tangent_cone", cm.tangent_cone.to_string()},
                 {"ordinary", cm.ordinary}};
    return out;
  }
  if (op == "milnor") {
    MultiPoly f = args.poly("polynomial");
    std::vector<FieldElem> p(f.ring()->nvars(), FieldElem::zero(f.ring()->field()));
    if (!args.done()) p = args.point("point");
    args.finish();
    MilnorTjurina mt = milnor_tjurina(f, p);
    auto fmt = [](const std::optional<long>& v) {
      return v ? json(*v) : json("infinite");
    };
    out.kind = "report";
    std::string disp = "mu=" + (mt.milnor ? std::to_string(*mt.milnor) : "infinite") +
                       " tau=" + (mt.tjurina ? std::to_string(*mt.tjurina) : "infinite");
    out.value = {{"display", disp}, {"milnor", fmt(mt.milnor)},
                 {"tjurina", fmt(mt.tjurina)}};
    return out;
  }
  if (op == "dual") {
    MultiPoly F = args.poly("curve");
    args.finish();
    MultiPoly d = dual_curve(F);
    out.kind = "report";
    out.value = {{"display", d.to_string()},
                 {"dual", d.to_string()},
                 {"ring", d.ring()->to_string()},
                 {"degree", d.weighted_degree()}};
    return out;
  }
  if (op == "pluecker") {
    long d = args.integer("degree");
    long delta = args.integer("delta");
    long kappa = args.integer("kappa");
    args.finish();
    PlueckerReport r = pluecker(d, delta, kappa);
    out.kind = "report";
    std::string disp = "g=" + std::to_string(r.genus) +
                       " dcheck=" + std::to_string(r.dual_degree) +
                       " flexes=" + std::to_string(r.flexes) +
                       " bitangents=" + std::to_string(r.bitangents);
    if (!r.hypotheses_ok) disp += " (hypotheses violated)";
    out.value = {{"display", disp},
                 {"genus", r.genus},
                 {"dual_degree", r.dual_degree},
                 {"flexes", r.flexes},
                 {"bitangents", r.bitangents},
                 {"hypotheses_ok", r.hypotheses_ok},
                 {"dual_consistent", r.dual_consistent}};
    if (!r.hypotheses_ok) out.warnings.push_back("hypotheses violated");
    return out;
  }
  if (op == "genus") {
    long d = args.integer("degree");
    std::vector<long long> deltas;
    while (!args.done()) deltas.push_back(args.integer("delta"));
    GenusResult g = plane_genus(d, deltas);
    out.kind = "integer";
    out.value = {{"value", g.genus}};
    if (g.negative) out.warnings.push_back("negative genus: hypotheses violated");
    return out;
  }
  if (op == "adjoint") {
    MultiPoly F = args.poly("curve");
    const DivisorDeclStmt* sing = args.divisor_opt();
    args.finish();
    std::vector<SingularPoint> pts =
        sing ? to_singular_points(*sing) : std::vector<SingularPoint>{};
    ideal_entry(ordinary_adjoint_ideal(F, pts), "ideal");
    return out;
  }
  if (op == "rrspace") {
    MultiPoly F = args.poly("curve");
    const DivisorDeclStmt* dstmt = args.divisor_opt();
    const DivisorDeclStmt* sstmt = args.divisor_opt();
    args.finish();
    Divisor D = dstmt ? to_divisor(*dstmt) : Divisor{};
    std::vector<SingularPoint> sing =
        sstmt ? to_singular_points(*sstmt) : std::vector<SingularPoint>{};
    RiemannRochSpace rr = riemann_roch_space(F, D, sing);
    out.kind = "ratfuns";
    json basis = json::array();
    for (const auto& h : rr.numerators)
      basis.push_back({{"numerator", h.to_string()},
                       {"denominator", rr.denominator.to_string()}});
    out.value = {{"ell", rr.ell}, {"e", rr.e}, {"basis", basis}};
    return out;
  }
  if (op == "bezout") {
    MultiPoly F = args.poly("first curve");
    MultiPoly G = args.poly("second curve");
    const DivisorDeclStmt* dstmt = args.divisor_opt();
    long residual = args.done() ? 0 : args.integer("residual");
    args.finish();
    std::vector<std::pair<ProjPoint, long>> pts;
    if (dstmt)
      for (const auto& [coords, mult] : dstmt->terms)
        pts.push_back({ProjPoint(coords), mult});
    BezoutReport r = bezout_certify(F, G, pts, residual);
    out.kind = "report";
    std::string disp = "total=" + std::to_string(r.total) + " expected=" +
                       std::to_string(r.deg_f * r.deg_g) +
                       (r.certified ? " certified" : " NOT certified");
    json mults = json::array();
    for (long m : r.multiplicities) mults.push_back(m);
    out.value = {{"display", disp},
                 {"deg_f", r.deg_f},
                 {"deg_g", r.deg_g},
                 {"multiplicities", mults},
                 {"residual", r.residual},
                 {"total", r.total},
                 {"claims_match", r.claims_match},
                 {"certified", r.certified}};
    return out;
  }
  throw MathError("unknown command '" + op + "'");
}

/// Applies a declaration to the environment.
inline void apply_declaration(const Statement& st, SessionEnv& env) {
  switch (st.kind) {
    case Statement::Kind::ring_decl:
      env.rings[st.ring_decl.name] = st.ring_decl.ring;
      break;
    case Statement::Kind::ideal_decl:
      env.ideals[st.ideal_decl.name] = Ideal(st.ideal_decl.ring, st.ideal_decl.polys);
      break;
    case Statement::Kind::matrix_decl:
      env.matrices.emplace(st.matrix_decl.name, st.matrix_decl.matrix);
      break;
    case Statement::Kind::divisor_decl:
      env.divisors[st.divisor_decl.name] = st.divisor_decl;
      break;
    case Statement::Kind::command:
      break;
  }
}

/// Runs a parsed session. With jobs > 1, command statements run on a small
/// thread pool against environment snapshots; results keep statement order.
inline ResultDocument run_session(const SessionAST& ast, int jobs = 1,
                                  const std::string& default_ordering = {}) {
  ResultDocument doc;
  SessionEnv env;
  env.default_ordering = default_ordering;

  if (jobs <= 1) {
    for (const auto& st : ast.statements) {
      if (st.kind == Statement::Kind::command)
        doc.entries.push_back(execute_command(st.command, env));
      else
        apply_declaration(st, env);
    }
    return doc;
  }

  struct Task {
    CommandStmt cmd;
    SessionEnv snapshot;
  };
  std::vector<Task> tasks;
  for (const auto& st : ast.statements) {
    if (st.kind == Statement::Kind::command)
      tasks.push_back({st.command, env});
    else
      apply_declaration(st, env);
  }
  std::vector<ResultEntry> results(tasks.size());
  std::atomic<std::size_t> cursor{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&]() {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = execute_command(tasks[i].cmd, tasks[i].snapshot);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    doc.entries.push_back(std::move(results[i]));
  }
  return doc;
}

inline ResultDocument run_session_text(const std::string& text, int jobs = 1,
                                       const std::string& default_ordering = {}) {
  return run_session(parse_session(text), jobs, default_ordering);
}

}  // namespace groebner

#endif  // GROEBNER_DRIVER_HPP
