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

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "groebner/driver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string format = "text";
  std::string ordering;
  std::string field = "QQ";
  double timeout = 0.0;
  int jobs = 1;
};

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw groebner::MathError("cannot open file '" + path + "'");
  return read_stream(in);
}

int run_text(const GlobalOptions& g, const std::string& session_text) {
  groebner::ResultDocument doc;
  std::optional<groebner::DeadlineGuard> guard;
  if (g.timeout > 0) guard.emplace(g.timeout);
  try {
    doc = groebner::run_session_text(session_text, g.jobs, g.ordering);
  } catch (const groebner::TimeoutError& e) {
    doc.error = e.what();
    std::cout << groebner::render(doc, g.format);
    std::cerr << e.what() << "\n";
    return kExitMath;
  } catch (const groebner::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const groebner::MathError& e) {
    doc.error = e.what();
    std::cout << groebner::render(doc, g.format);
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  std::cout << groebner::render(doc, g.format);
  return kExitOk;
}

/// Assembles the session text for a one-shot subcommand. Arguments use the
/// session grammar; ideal generator lists are comma-separated inside one
/// shell argument.
std::string synthesize(const std::string& cmd, const std::string& ring,
                       std::vector<std::string> args) {
  std::ostringstream s;
  if (!ring.empty()) s << "ring R = " << ring << ";\n";
  auto need = [&](std::size_t n) {
    if (args.size() < n)
      throw groebner::MathError("subcommand '" + cmd + "' needs at least " +
                                std::to_string(n) + " argument(s)");
  };
  auto tail = [&](std::size_t from) {
    std::string t;
    for (std::size_t i = from; i < args.size(); ++i) t += " " + args[i];
    return t;
  };
  auto is_matrix_literal = [](const std::string& a) {
    return !a.empty() && a[0] == '[';
  };

  if (cmd == "gb" || cmd == "dim" || cmd == "closure" || cmd == "resolve" ||
      cmd == "betti" || cmd == "hilbert" || cmd == "eliminate") {
    need(1);
    s << "ideal I = " << args[0] << ";\n";
    s << cmd << " I" << tail(1) << ";\n";
    return s.str();
  }
  if (cmd == "nf") {
    need(2);
    s << "ideal I = " << args[1] << ";\n";
    s << "nf " << args[0] << " I" << tail(2) << ";\n";
    return s.str();
  }
  if (cmd == "intersect" || cmd == "quotient" || cmd == "saturate") {
    need(2);
    s << "ideal I = " << args[0] << ";\nideal J = " << args[1] << ";\n";
    s << cmd << " I J" << tail(2) << ";\n";
    return s.str();
  }
  if (cmd == "syz") {
    need(1);
    if (is_matrix_literal(args[0])) {
      s << "matrix M = " << args[0] << ";\nsyz M;\n";
    } else {
      s << "ideal I = " << args[0] << ";\nsyz I;\n";
    }
    return s.str();
  }
  if (cmd == "kernel") {
    need(3);
    s << "matrix A = " << args[0] << ";\nmatrix B = " << args[1]
      << ";\nmatrix C = " << args[2] << ";\nkernel A B C;\n";
    return s.str();
  }
  if (cmd == "adjoint") {
    need(1);
    if (args.size() >= 2) {
      s << "divisor S = " << args[1] << ";\n";
      s << "adjoint " << args[0] << " S;\n";
    } else {
      s << "adjoint " << args[0] << ";\n";
    }
    return s.str();
  }
  if (cmd == "rrspace") {
    need(2);
    s << "divisor D = " << args[1] << ";\n";
    if (args.size() >= 3) {
      s << "divisor S = " << args[2] << ";\n";
      s << "rrspace " << args[0] << " D S;\n";
    } else {
      s << "rrspace " << args[0] << " D;\n";
    }
    return s.str();
  }
  if (cmd == "bezout") {
    need(2);
    if (args.size() >= 3) {
      s << "divisor P = " << args[2] << ";\n";
      s << "bezout " << args[0] << " " << args[1] << " P" << tail(3) << ";\n";
    } else {
      s << "bezout " << args[0] << " " << args[1] << ";\n";
    }
    return s.str();
  }
  // imult, mult, milnor, dual, pluecker, genus: plain splice
  s << cmd << tail(0) << ";\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutative-algebra kernel: Groebner bases, syzygies, free "
               "resolutions, local standard bases and plane-curve invariants"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--format", g.format, "Output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--ordering", g.ordering,
                 "Default ordering: lex|degrevlex|wdegrevlex|negwdegrevlex");
  app.add_option("--field", g.field, "Coefficient field: QQ or Fp:<p>");
  app.add_option("--timeout", g.timeout, "Abort after this many seconds (exit 1)");
  app.add_option("--jobs", g.jobs, "Run independent session statements concurrently")
      ->check(CLI::PositiveNumber);

  std::string run_path;
  auto* cmd_run = app.add_subcommand("run", "Execute a session file ('-' for stdin)");
  cmd_run->add_option("file", run_path, "Session file")->required();

  struct OneShot {
    CLI::App* sub = nullptr;
    std::string ring;
    std::vector<std::string> args;
    std::string command;
    bool wants_ring = true;
  };
  std::vector<std::shared_ptr<OneShot>> shots;
  auto add_shot = [&](const std::string& name, const std::string& help,
                      bool wants_ring = true) {
    auto shot = std::make_shared<OneShot>();
    shot->command = name;
    shot->wants_ring = wants_ring;
    shot->sub = app.add_subcommand(name, help);
    if (wants_ring)
      shot->sub->add_option("--ring", shot->ring,
                            "Ring description, e.g. 'QQ[x,y,z] lex'");
    shot->sub->add_option("args", shot->args, "Arguments in session syntax");
    shots.push_back(shot);
  };

  add_shot("gb", "Reduced Groebner basis: gb 'f1, f2, ...' [ordering]");
  add_shot("nf", "Normal form: nf 'f' 'g1, g2, ...' [ordering]");
  add_shot("eliminate", "Eliminate variables: eliminate 'f1, ...' x y");
  add_shot("dim", "Dimension of V(I): dim 'f1, ...'");
  add_shot("intersect", "Intersection: intersect 'f1, ...' 'g1, ...'");
  add_shot("quotient", "Colon ideal: quotient 'f1, ...' 'g1, ...'");
  add_shot("saturate", "Saturation: saturate 'f1, ...' 'g1, ...'");
  add_shot("closure", "Projective closure: closure 'f1, ...'");
  add_shot("syz", "Syzygies: syz 'f1, ...' or syz '[[...],[...]]'");
  add_shot("kernel", "Kernel of a module map: kernel '[[lift]]' '[[target]]' '[[source]]'");
  add_shot("resolve", "Free resolution of R/I: resolve 'f1, ...'");
  add_shot("betti", "Minimal Betti table: betti 'f1, ...' [schreyer]");
  add_shot("hilbert", "Hilbert data of R/I: hilbert 'f1, ...'");
  add_shot("imult", "Intersection multiplicity: imult 'f' 'g' '(a:b)'");
  add_shot("mult", "Curve multiplicity: mult 'f' '(a:b)'");
  add_shot("milnor", "Milnor/Tjurina numbers: milnor 'f' ['(a:b)']");
  add_shot("dual", "Dual curve: dual 'F'");
  add_shot("pluecker", "Pluecker invariants: pluecker d delta kappa", false);
  add_shot("genus", "Geometric genus: genus d [delta...]", false);
  add_shot("adjoint", "Adjoint ideal: adjoint 'F' 'r1*(a:b:c) + ...'");
  add_shot("rrspace", "Riemann-Roch space: rrspace 'F' 'n1*(a:b:c) + ...' [sing]");
  add_shot("bezout", "Bezout check: bezout 'F' 'G' 'm1*(a:b:c) + ...' residual");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_run->parsed()) {
      std::string text =
          run_path == "-" ? read_stream(std::cin) : read_file(run_path);
      return run_text(g, text);
    }
    for (const auto& shot : shots) {
      if (!shot->sub->parsed()) continue;
      std::vector<std::string> args = shot->args;
      if (shot->wants_ring && args.empty())
        args.push_back(read_stream(std::cin));  // polynomials from stdin
      std::string ring = shot->ring;
      if (!ring.empty() && ring[0] == '[') ring = g.field + ring;
      return run_text(g, synthesize(shot->command, ring, std::move(args)));
    }
  } catch (const groebner::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const groebner::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitUsage;
}
