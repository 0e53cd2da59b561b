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
#include <thread>

#include "groebner/gbasis.hpp"

using namespace groebner;

namespace {

struct Setup {
  RingPtr R = PolyRing::make(Field::rationals(), {"x", "y", "z"});
  MultiPoly x = MultiPoly::variable(R, 0);
  MultiPoly y = MultiPoly::variable(R, 1);
  MultiPoly z = MultiPoly::variable(R, 2);
  MultiPoly c(long v) const { return MultiPoly::constant(R, v); }
  MultiPoly q(long n, long d) const {
    return MultiPoly::constant(R, FieldElem::rational(n, d));
  }
};

/// Division conditions checked term by term: (1) no term of q_i * Lt(f_i)
/// divisible by Lt(f_j) for j < i, (2) no remainder term divisible by any
/// Lt(f_i).
void check_division_conditions(const MultiPoly& f,
                               const std::vector<MultiPoly>& divisors,
                               const DivisionResult& d,
                               const MonomialOrdering& ord) {
  MultiPoly acc = d.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    acc = acc + d.quotients[i] * divisors[i];
  CHECK(acc == f);  // unit is 1 in the global case
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const Term& lti = divisors[i].leading_term(ord);
    for (const auto& t : d.quotients[i].terms()) {
      Exponents prod = exp_add(t.exp, lti.exp);
      for (std::size_t j = 0; j < i; ++j)
        CHECK_FALSE(divides(divisors[j].leading_term(ord).exp, prod));
    }
  }
  for (const auto& t : d.remainder.terms())
    for (const auto& g : divisors)
      CHECK_FALSE(divides(g.leading_term(ord).exp, t.exp));
}

std::vector<MultiPoly> random_polys(const RingPtr& R, std::mt19937& rng,
                                    int count, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(1, max_terms), e(0, max_exp),
      coef(-6, 6);
  std::vector<MultiPoly> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Term> terms;
    for (int t = 0, n = nterms(rng); t < n; ++t) {
      long cv = coef(rng);
      if (cv == 0) cv = 1;
      Exponents exp;
      for (int v = 0; v < R->nvars(); ++v) exp.push_back(e(rng));
      terms.push_back({FieldElem::integer(R->field(), cv), exp});
    }
    MultiPoly f = MultiPoly::from_terms(R, terms);
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("determinate division: base cases") {
  Setup s;
  auto lex = MonomialOrdering::lex();
  // f by [f]
  MultiPoly f = s.x * s.x + s.y;
  auto d = divide_with_remainder(f, {f}, lex);
  CHECK(d.quotients[0] == s.c(1));
  CHECK(d.remainder.is_zero());
  // 1 by [x]
  auto d2 = divide_with_remainder(s.c(1), {s.x}, lex);
  CHECK(d2.quotients[0].is_zero());
  CHECK(d2.remainder == s.c(1));
  CHECK_THROWS_AS(divide_with_remainder(f, {MultiPoly::zero(s.R)}, lex), MathError);
  CHECK_THROWS_AS(
      divide_with_remainder(f, {s.x}, MonomialOrdering::neg_wdegrevlex({1, 1, 1})),
      MathError);
}

TEST_CASE("determinate division: the two-divisor worked example") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y"});
  auto x = MultiPoly::variable(R, 0), y = MultiPoly::variable(R, 1);
  auto one = MultiPoly::constant(R, 1);
  auto lex = MonomialOrdering::lex();
  MultiPoly f = x * x * y + x * y * y + y * y;
  std::vector<MultiPoly> divisors{x * y - one, y * y - one};
  auto d = divide_with_remainder(f, divisors, lex);
  CHECK(d.quotients[0] == x + y);
  CHECK(d.quotients[1] == one);
  CHECK(d.remainder == x + y + one);
  check_division_conditions(f, divisors, d, lex);
}

TEST_CASE("division identity and conditions on random instances") {
  Setup s;
  std::mt19937 rng(20260810);
  auto drl = MonomialOrdering::degrevlex();
  for (int trial = 0; trial < 40; ++trial) {
    auto divisors = random_polys(s.R, rng, 3, 4, 3);
    if (divisors.empty()) continue;
    auto fs = random_polys(s.R, rng, 1, 6, 4);
    if (fs.empty()) continue;
    auto d = divide_with_remainder(fs[0], divisors, drl);
    check_division_conditions(fs[0], divisors, d, drl);
  }
}

TEST_CASE("Buchberger: twisted cubic affine ideal") {
  Setup s;
  Ideal I(s.R, {s.y - s.x * s.x, s.z - s.x * s.y});
  auto gb = reduced_groebner_basis(I, MonomialOrdering::degrevlex());
  REQUIRE(gb.elements.size() == 3);
  CHECK(gb.elements[0] == s.x * s.x - s.y);
  CHECK(gb.elements[1] == s.x * s.y - s.z);
  CHECK(gb.elements[2] == s.y * s.y - s.x * s.z);
  CHECK(buchberger_criterion_holds(gb.elements, gb.ordering));
  // soundness: inputs reduce to zero
  for (const auto& g : I.generators())
    CHECK(normal_form(g, I, gb.ordering).is_zero());
}

TEST_CASE("Buchberger: ellipsoid/hyperboloid/plane ideal under lex") {
  Setup s;
  Ideal I(s.R, {s.x * s.x + s.y * s.y + s.c(2) * s.z * s.z - s.c(8),
                s.x * s.x - s.y * s.y - s.z * s.z + s.c(1), s.x - s.y + s.z});
  auto gb = reduced_groebner_basis(I, MonomialOrdering::lex());
  REQUIRE(gb.elements.size() == 3);
  MultiPoly z3 = s.z * s.z * s.z;
  CHECK(gb.elements[0] == s.x + s.c(3) * z3 - s.c(8) * s.z);
  CHECK(gb.elements[1] == s.y + s.c(3) * z3 - s.c(9) * s.z);
  CHECK(gb.elements[2] == s.z * z3 - s.c(3) * s.z * s.z + s.q(1, 6));
  // normal form of the squared distance: the paper's two equal pairs
  MultiPoly dist = s.x * s.x + s.y * s.y + s.z * s.z;
  CHECK(normal_form(dist, I, MonomialOrdering::lex()) ==
        s.c(8) - s.z * s.z);
}

TEST_CASE("reduce_gb prunes, normalizes and is canonical") {
  Setup s;
  auto drl = MonomialOrdering::degrevlex();
  GroebnerBasis raw;
  raw.ordering = drl;
  raw.elements = {s.x * s.x, s.x * s.x + s.y};
  auto red = reduce_gb(raw);
  REQUIRE(red.elements.size() == 2);
  CHECK(red.elements[0] == s.x * s.x);
  CHECK(red.elements[1] == s.y);
  // idempotence
  auto red2 = reduce_gb(red);
  CHECK(red2.elements == red.elements);
  // canonicity under generator shuffles and rescaling
  std::mt19937 rng(7);
  auto polys = random_polys(s.R, rng, 4, 3, 3);
  if (polys.size() >= 2) {
    Ideal I1(s.R, polys);
    std::vector<MultiPoly> shuffled = polys;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& f : shuffled) f = f.scaled(FieldElem::rational(3, 7));
    Ideal I2(s.R, shuffled);
    auto g1 = reduced_groebner_basis(I1, drl);
    auto g2 = reduced_groebner_basis(I2, drl);
    CHECK(g1.elements == g2.elements);
  }
}

TEST_CASE("Buchberger criterion holds on random generated bases") {
  Setup s;
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 12; ++trial) {
    auto polys = random_polys(s.R, rng, 3, 3, 3);
    if (polys.empty()) continue;
    Ideal I(s.R, polys);
    auto gb = buchberger(I, MonomialOrdering::degrevlex());
    CHECK(buchberger_criterion_holds(gb.elements, gb.ordering));
    // membership: random combinations reduce to zero
    auto hs = random_polys(s.R, rng, polys.size(), 2, 2);
    MultiPoly combo = MultiPoly::zero(s.R);
    for (std::size_t i = 0; i < hs.size() && i < polys.size(); ++i)
      combo = combo + hs[i] * polys[i];
    CHECK(normal_form(combo, I, gb.ordering).is_zero());
  }
}

TEST_CASE("prime-field Groebner bases work the same way") {
  auto R = PolyRing::make(Field::prime_field(32003), {"x", "y"});
  auto x = MultiPoly::variable(R, 0), y = MultiPoly::variable(R, 1);
  Ideal I(R, {x * x + y, y * y + x});
  auto gb = buchberger(I, R->default_ordering());
  CHECK(buchberger_criterion_holds(gb.elements, gb.ordering));
  CHECK(normal_form(x * x + y, I).is_zero());
}

TEST_CASE("normal form fixes standard monomials and detects membership") {
  Setup s;
  Ideal I(s.R, {s.y * s.y, s.x * s.x * s.x});
  auto drl = MonomialOrdering::degrevlex();
  auto monos = standard_monomials(I, drl);
  REQUIRE(monos.size() == 6);
  for (const auto& m : monos) {
    MultiPoly mm = MultiPoly::monomial(s.R, m, FieldElem::rational(1, 1));
    CHECK(normal_form(mm, I, drl) == mm);
  }
}

TEST_CASE("leading ideal and standard monomials") {
  Setup s;
  auto lex = MonomialOrdering::lex();
  // (y^2, x^3) has the 6 staircase monomials
  {
    auto R2 = PolyRing::make(Field::rationals(), {"x", "y"});
    auto x = MultiPoly::variable(R2, 0), y = MultiPoly::variable(R2, 1);
    Ideal I(R2, {y * y, x * x * x});
    auto monos = standard_monomials(I, R2->default_ordering());
    std::vector<Exponents> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}};
    std::sort(expected.begin(), expected.end(),
              [&](const Exponents& a, const Exponents& b) {
                return R2->default_ordering().compare(a, b) < 0;
              });
    CHECK(monos == expected);
  }
  // ellipsoid example has 4 = #points standard monomials under lex
  Ideal I(s.R, {s.x * s.x + s.y * s.y + s.c(2) * s.z * s.z - s.c(8),
                s.x * s.x - s.y * s.y - s.z * s.z + s.c(1), s.x - s.y + s.z});
  CHECK(standard_monomials(I, lex).size() == 4);
  // (x) in k[x,y]: infinitely many standard monomials
  {
    auto R2 = PolyRing::make(Field::rationals(), {"x", "y"});
    Ideal J(R2, {MultiPoly::variable(R2, 0)});
    CHECK_THROWS_AS(standard_monomials(J, R2->default_ordering()), MathError);
  }
  // leading ideal generators are the leading monomials of a minimal basis
  Ideal L = leading_ideal(I, lex);
  CHECK(L.generators().size() == 3);
}

TEST_CASE("triviality test is_one") {
  Setup s;
  CHECK(is_one(Ideal(s.R, {s.x, s.x + s.c(1)})));
  CHECK_FALSE(is_one(Ideal(s.R, {s.x})));
  auto R2 = PolyRing::make(Field::rationals(), {"x", "y"});
  auto x = MultiPoly::variable(R2, 0), y = MultiPoly::variable(R2, 1);
  auto c = [&](long v) { return MultiPoly::constant(R2, v); };
  CHECK(is_one(Ideal(R2, {x * x + y * y - c(1), x - c(3), y})));
  CHECK_FALSE(is_one(Ideal(R2, {})));
}

TEST_CASE("the GB cache tolerates concurrent readers") {
  Setup s;
  Ideal I(s.R, {s.y - s.x * s.x, s.z - s.x * s.y});
  std::vector<std::thread> threads;
  std::vector<std::size_t> sizes(8, 0);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t]() {
      auto gb = reduced_groebner_basis(I, MonomialOrdering::lex());
      sizes[t] = gb.elements.size();
    });
  for (auto& th : threads) th.join();
  for (auto n : sizes) CHECK(n == sizes[0]);
  CHECK(I.cached(MonomialOrdering::lex()).has_value());
}
