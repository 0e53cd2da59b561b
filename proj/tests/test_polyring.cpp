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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "groebner/polyring.hpp"

using namespace groebner;

namespace {

RingPtr ring3() { return PolyRing::make(Field::rationals(), {"x1", "x2", "x3"}); }

Exponents ev(std::initializer_list<int> l) {
  Exponents e;
  for (int x : l) e.push_back(x);
  return e;
}

}  // namespace

TEST_CASE("lex and degrevlex compare as in the defining examples") {
  auto lex = MonomialOrdering::lex();
  auto drl = MonomialOrdering::degrevlex();
  // x1^2 > x1x2 > x1x3 > x2^2 under lex
  CHECK(lex.compare(ev({2, 0, 0}), ev({1, 1, 0})) > 0);
  CHECK(lex.compare(ev({1, 1, 0}), ev({1, 0, 1})) > 0);
  CHECK(lex.compare(ev({1, 0, 1}), ev({0, 2, 0})) > 0);
  // x1^2 > x1x2 > x2^2 > x1x3 under degrevlex
  CHECK(drl.compare(ev({2, 0, 0}), ev({1, 1, 0})) > 0);
  CHECK(drl.compare(ev({1, 1, 0}), ev({0, 2, 0})) > 0);
  CHECK(drl.compare(ev({0, 2, 0}), ev({1, 0, 1})) > 0);
  // reflexive
  CHECK(drl.compare(ev({1, 2, 3}), ev({1, 2, 3})) == 0);
  CHECK_THROWS_AS(lex.compare(ev({1}), ev({1, 2})), MathError);
}

TEST_CASE("orderings are total and multiplicative") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(0, 6);
  auto rand_ev = [&]() { return ev({d(rng), d(rng), d(rng)}); };
  std::vector<MonomialOrdering> ords{
      MonomialOrdering::lex(), MonomialOrdering::degrevlex(),
      MonomialOrdering::wdegrevlex({2, 3, 1}),
      MonomialOrdering::neg_wdegrevlex({1, 1, 1}),
      MonomialOrdering::block({{MonomialOrdering::degrevlex(), {0, 2}},
                               {MonomialOrdering::lex(), {1}}})};
  for (const auto& ord : ords) {
    for (int i = 0; i < 300; ++i) {
      Exponents a = rand_ev(), b = rand_ev(), c = rand_ev();
      int ab = ord.compare(a, b);
      CHECK(ab == -ord.compare(b, a));
      CHECK(ord.compare(exp_add(a, c), exp_add(b, c)) == ab);
      if (a == b) CHECK(ab == 0);
    }
  }
}

TEST_CASE("global and local predicates probe the variables") {
  CHECK(MonomialOrdering::lex().is_global(3));
  CHECK(MonomialOrdering::degrevlex().is_global(3));
  CHECK(MonomialOrdering::wdegrevlex({2, 1, 1}).is_global(3));
  CHECK_FALSE(MonomialOrdering::neg_wdegrevlex({1, 1, 1}).is_global(3));
  CHECK(MonomialOrdering::neg_wdegrevlex({1, 1, 1}).is_local(3));
  CHECK_FALSE(MonomialOrdering::lex().is_local(3));
}

TEST_CASE("module orderings keep within-component comparisons consistent") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(0, 5), comp(0, 3);
  auto rand_ev = [&]() { return ev({d(rng), d(rng), d(rng)}); };
  auto top = ModuleOrdering::top(MonomialOrdering::degrevlex());
  auto pot = ModuleOrdering::pot(MonomialOrdering::lex());
  for (int i = 0; i < 300; ++i) {
    Exponents a = rand_ev(), b = rand_ev(), g = rand_ev();
    int ci = comp(rng), cj = comp(rng);
    for (const auto& mo : {top, pot}) {
      CHECK(mo.compare(a, ci, b, ci) == mo.compare(a, cj, b, cj));
      int c = mo.compare(a, ci, b, cj);
      CHECK(c == -mo.compare(b, cj, a, ci));
      CHECK(mo.compare(exp_add(a, g), ci, exp_add(b, g), cj) == c);
    }
  }
}

TEST_CASE("leading terms under a given ordering") {
  auto R = ring3();
  auto x1 = MultiPoly::variable(R, 0), x2 = MultiPoly::variable(R, 1),
       x3 = MultiPoly::variable(R, 2);
  auto drl = MonomialOrdering::degrevlex();
  // x2 - x1^2: the quadratic term leads
  MultiPoly f = x2 - x1 * x1;
  const Term& lt = f.leading_term(drl);
  CHECK(lt.exp == ev({2, 0, 0}));
  CHECK(lt.coef == FieldElem::rational(-1, 1));
  // x1x2 - x3
  MultiPoly g = x1 * x2 - x3;
  CHECK(g.leading_term(drl).exp == ev({1, 1, 0}));
  // single monomial
  MultiPoly m = MultiPoly::monomial(R, ev({2, 1, 0}), FieldElem::rational(3, 1));
  CHECK(m.leading_term(drl).exp == ev({2, 1, 0}));
  CHECK_THROWS_AS(MultiPoly::zero(R).leading_term(drl), MathError);
}

TEST_CASE("polynomial arithmetic examples") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y"});
  auto x = MultiPoly::variable(R, 0), y = MultiPoly::variable(R, 1);
  CHECK((x + y) + (x - y) == x.scaled(FieldElem::rational(2, 1)));
  CHECK((x * MultiPoly::zero(R)).is_zero());
  CHECK((x + y) * (x - y) == x * x - y * y);
  auto S = PolyRing::make(Field::rationals(), {"u", "v"});
  CHECK_THROWS_AS(x + MultiPoly::variable(S, 0), MathError);
}

TEST_CASE("canonicalization is permutation independent") {
  auto R = ring3();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(0, 4), c(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Term> terms;
    for (int i = 0; i < 8; ++i)
      terms.push_back({FieldElem::rational(c(rng), 1),
                       Exponents{d(rng), d(rng), d(rng)}});
    std::vector<Term> shuffled = terms;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(MultiPoly::from_terms(R, terms) == MultiPoly::from_terms(R, shuffled));
  }
}

TEST_CASE("homogenization and dehomogenization") {
  auto R = ring3();
  auto x1 = MultiPoly::variable(R, 0), x2 = MultiPoly::variable(R, 1);
  auto H = PolyRing::make(Field::rationals(), {"x0", "x1", "x2", "x3"});
  MultiPoly f = x2 - x1 * x1;
  MultiPoly F = f.homogenize(H, 0);
  CHECK(F.is_homogeneous());
  CHECK(F == MultiPoly::variable(H, 0) * MultiPoly::variable(H, 2) -
                 MultiPoly::variable(H, 1) * MultiPoly::variable(H, 1));
  // constants stay constant
  CHECK(MultiPoly::constant(R, 5).homogenize(H, 0) == MultiPoly::constant(H, 5));
  // round trip on random polynomials
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, 3), c(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Term> terms;
    for (int i = 0; i < 6; ++i)
      terms.push_back({FieldElem::rational(c(rng), 1),
                       Exponents{d(rng), d(rng), d(rng)}});
    MultiPoly g = MultiPoly::from_terms(R, terms);
    CHECK(g.homogenize(H, 0).dehomogenize(R, 0) == g);
  }
}

TEST_CASE("weighted degree and Taylor parts") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y"});
  auto x = MultiPoly::variable(R, 0), y = MultiPoly::variable(R, 1);
  MultiPoly f = x * x * x * y + y * y;
  CHECK(f.weighted_degree() == 4);
  MultiPoly g = y * y - x * x * x;
  CHECK(g.taylor_part(2) == y * y);
  CHECK(g.taylor_part(3) == -(x * x * x));
  CHECK(g.taylor_part(5).is_zero());
  CHECK_THROWS_AS(MultiPoly::zero(R).weighted_degree(), MathError);
  // weighted ring
  auto W = PolyRing::make(Field::rationals(), {"x", "y"}, {2, 3});
  auto wx = MultiPoly::variable(W, 0), wy = MultiPoly::variable(W, 1);
  CHECK((wx * wy).weighted_degree() == 5);
}

TEST_CASE("exponent overflow is detected") {
  auto R = PolyRing::make(Field::rationals(), {"x"});
  MultiPoly big = MultiPoly::monomial(R, Exponents{1 << 29}, FieldElem::rational(1, 1));
  CHECK_THROWS_AS(big * big * big * big, MathError);
}

TEST_CASE("free module elements stay sparse and validated") {
  auto R = ring3();
  auto x1 = MultiPoly::variable(R, 0);
  FreeModElem v(R, 3, {{2, x1}, {0, MultiPoly::zero(R)}});
  CHECK(v.components().size() == 1);
  CHECK(v.component(2) == x1);
  CHECK(v.component(0).is_zero());
  CHECK_THROWS_AS(FreeModElem(R, 2, {{5, x1}}), MathError);
  CHECK_THROWS_AS(FreeModElem(R, 2, {{1, x1}, {1, x1}}), MathError);
}
