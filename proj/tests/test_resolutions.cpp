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

#include "groebner/resolutions.hpp"

using namespace groebner;

namespace {

struct S4 {
  RingPtr S = PolyRing::make(Field::rationals(), {"w", "x", "y", "z"});
  MultiPoly w = MultiPoly::variable(S, 0);
  MultiPoly x = MultiPoly::variable(S, 1);
  MultiPoly y = MultiPoly::variable(S, 2);
  MultiPoly z = MultiPoly::variable(S, 3);
  Ideal five_quadrics() const {
    return Ideal(S, {w * w - x * z, w * x - y * z, x * x - w * y, x * y - z * z,
                     y * y - w * z});
  }
};

std::multiset<int> twist_multiset(const std::vector<int>& v) {
  return std::multiset<int>(v.begin(), v.end());
}

void check_complex(const GradedFreeResolution& res) {
  for (int i = 0; i + 1 < res.length(); ++i)
    CHECK((res.differentials[i] * res.differentials[i + 1]).is_zero());
  CHECK(res.length() <= res.ring->nvars());
}

Ideal random_graded_ideal(const RingPtr& R, std::mt19937& rng) {
  std::uniform_int_distribution<int> ngens(1, 3), deg(1, 3), coef(-4, 4);
  std::vector<MultiPoly> gens;
  for (int i = 0, n = ngens(rng); i < n; ++i) {
    int d = deg(rng);
    std::vector<Term> terms;
    // up to 4 random monomials of degree d
    for (int t = 0; t < 4; ++t) {
      Exponents e(R->nvars(), 0);
      int rest = d;
      for (int v = 0; v < R->nvars() - 1; ++v) {
        std::uniform_int_distribution<int> pick(0, rest);
        e[v] = pick(rng);
        rest -= e[v];
      }
      e[R->nvars() - 1] = rest;
      long c = coef(rng);
      if (c == 0) c = 1;
      terms.push_back({FieldElem::rational(c, 1), e});
    }
    MultiPoly f = MultiPoly::from_terms(R, terms);
    if (!f.is_zero()) gens.push_back(f);
  }
  return Ideal(R, gens);
}

}  // namespace

TEST_CASE("five-quadrics Schreyer resolution reproduces the known shape") {
  S4 s;
  auto res = free_resolution(s.five_quadrics(), true);
  REQUIRE(res.ranks == std::vector<int>{1, 5, 6, 2});
  CHECK(twist_multiset(res.twists[1]) == std::multiset<int>{2, 2, 2, 2, 2});
  CHECK(twist_multiset(res.twists[2]) == std::multiset<int>{3, 3, 3, 3, 3, 4});
  CHECK(twist_multiset(res.twists[3]) == std::multiset<int>{4, 5});
  check_complex(res);

  auto minres = minimize(res);
  REQUIRE(minres.ranks == std::vector<int>{1, 5, 5, 1});
  CHECK(twist_multiset(minres.twists[2]) == std::multiset<int>{3, 3, 3, 3, 3});
  CHECK(twist_multiset(minres.twists[3]) == std::multiset<int>{5});
  check_complex(minres);
  // minimality: no unit entries anywhere
  for (const auto& m : minres.differentials)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        CHECK((m.at(i, j).is_zero() || !m.at(i, j).is_constant()));
  // idempotence
  auto again = minimize(minres);
  CHECK(again.ranks == minres.ranks);
}

TEST_CASE("Betti tables: raw versus minimal") {
  S4 s;
  auto res = free_resolution(s.five_quadrics(), true);
  BettiTable raw = betti_table(res);
  CHECK(raw.at(2, 4) == 1);  // b_{2,2}
  CHECK(raw.at(3, 4) == 1);  // b_{3,1}
  BettiTable min = minimal_betti(res);
  CHECK(min.at(0, 0) == 1);
  CHECK(min.at(1, 2) == 5);
  CHECK(min.at(2, 3) == 5);
  CHECK(min.at(3, 5) == 1);
  CHECK(min.at(2, 4) == 0);
  CHECK(min.at(3, 4) == 0);
  // minimal Betti from the raw resolution equals the table of minimize(res)
  BettiTable direct = betti_table(minimize(res));
  CHECK(min.entries == direct.entries);
}

TEST_CASE("free module inputs resolve to length zero") {
  S4 s;
  PolyMatrix id2(s.S, 2, 2);
  id2.at(0, 0) = MultiPoly::constant(s.S, 1);
  id2.at(1, 1) = MultiPoly::constant(s.S, 1);
  Subquotient freeM(id2, PolyMatrix(s.S, 2, 0));
  auto res = free_resolution(freeM, true);
  CHECK(res.length() == 0);
  CHECK(res.ranks == std::vector<int>{2});
  BettiTable b = betti_table(res);
  CHECK(b.at(0, 0) == 2);
  // a redundantly presented free module minimizes to length 0
  PolyMatrix gens(s.S, 1, 2);
  gens.at(0, 0) = MultiPoly::constant(s.S, 1);
  gens.at(0, 1) = s.w;
  Subquotient redundant(gens, PolyMatrix(s.S, 1, 0));
  auto res2 = minimize(free_resolution(redundant, true));
  CHECK(res2.length() == 0);
}

TEST_CASE("complete intersection of two quadrics: Hilbert data") {
  S4 s;
  Ideal CI(s.S, {s.w * s.w - s.y * s.y, s.x * s.x - s.z * s.z});
  auto res = minimize(free_resolution(CI, true));
  CHECK(res.ranks == std::vector<int>{1, 2, 1});
  CHECK(twist_multiset(res.twists[1]) == std::multiset<int>{2, 2});
  CHECK(twist_multiset(res.twists[2]) == std::multiset<int>{4});
  HilbertData hd = hilbert_data(res);
  REQUIRE(hd.polynomial.size() == 2);
  CHECK(hd.polynomial[0] == 0);
  CHECK(hd.polynomial[1] == 4);
  CHECK(hd.dim == 1);
  CHECK(hd.degree == 4);
  CHECK(hd.arithmetic_genus == 1);
}

TEST_CASE("five points in P^3: Hilbert function and polynomial") {
  S4 s;
  auto res = free_resolution(s.five_quadrics(), true);
  CHECK(hilbert_function(res, 0) == 1);
  CHECK(hilbert_function(res, 1) == 4);
  CHECK(hilbert_function(res, 2) == 5);
  CHECK(hilbert_function(res, 3) == 5);
  HilbertData hd = hilbert_data(res);
  REQUIRE(hd.polynomial.size() == 1);
  CHECK(hd.polynomial[0] == 5);
  CHECK(hd.dim == 0);
  CHECK(hd.degree == 5);
}

TEST_CASE("Hilbert function of the free ring is the full binomial") {
  auto R = PolyRing::make(Field::rationals(), {"a", "b", "c"});
  auto res = free_resolution(Ideal(R, {}), true);
  CHECK(hilbert_function(res, 0) == 1);
  CHECK(hilbert_function(res, 1) == 3);
  CHECK(hilbert_function(res, 4) == 15);  // C(6,2)
  CHECK(graded_dimension_by_staircase(Ideal(R, {}), 4) == 15);
}

TEST_CASE("random graded ideals: complex, length bound, Hilbert agreement") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y", "z"});
  std::mt19937 rng(8128);
  int done = 0;
  for (int trial = 0; trial < 25 && done < 10; ++trial) {
    Ideal I = random_graded_ideal(R, rng);
    if (I.is_zero_ideal()) continue;
    ++done;
    auto res = free_resolution(I, true);
    check_complex(res);
    auto minres = minimize(res);
    check_complex(minres);
    // Hilbert invariance raw vs minimal vs staircase count
    for (int d = 0; d <= 8; ++d) {
      mpz_class h = hilbert_function(res, d);
      CHECK(h == hilbert_function(minres, d));
      CHECK(h == graded_dimension_by_staircase(I, d));
    }
    // minimal Betti agrees with the minimized table
    CHECK(minimal_betti(res).entries == betti_table(minres).entries);
    // P(d) = H(d) for large d
    HilbertData hd = hilbert_data(res);
    int tmax = 0;
    for (const auto& tw : res.twists)
      for (int t : tw) tmax = std::max(tmax, t);
    for (long d = tmax; d <= tmax + 3; ++d) {
      mpq_class p = 0, power = 1;
      for (std::size_t k = 0; k < hd.polynomial.size(); ++k) {
        p += hd.polynomial[k] * power;
        power *= d;
      }
      CHECK(mpq_class(hilbert_function(res, d)) == p);
    }
  }
  REQUIRE(done >= 5);
}

TEST_CASE("graded resolutions reject inhomogeneous input") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y"});
  auto x = MultiPoly::variable(R, 0), y = MultiPoly::variable(R, 1);
  Ideal I(R, {x * x + y});
  CHECK_THROWS_AS(free_resolution(I, true), MathError);
  auto res = free_resolution(I, false);  // ungraded is fine
  CHECK(res.length() >= 1);
}
