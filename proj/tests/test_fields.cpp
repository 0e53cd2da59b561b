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

#include "groebner/fields.hpp"

using namespace groebner;

TEST_CASE("rational arithmetic is exact and canonical") {
  FieldElem a = FieldElem::rational(1, 2);
  FieldElem b = FieldElem::rational(1, 3);
  CHECK((a + b) == FieldElem::rational(5, 6));
  CHECK((a + b).to_string() == "5/6");

  // canonical form: equal values have identical representations
  CHECK(FieldElem::rational(2, 4) == FieldElem::rational(1, 2));
  CHECK(FieldElem::rational(-1, -2) == FieldElem::rational(1, 2));
  CHECK(FieldElem::rational(3, -6).to_string() == "-1/2");
  CHECK(FieldElem::rational(4, 2).to_string() == "2");
}

TEST_CASE("prime field inverse") {
  Field f7 = Field::prime_field(7);
  FieldElem three = FieldElem::integer(f7, 3);
  CHECK(three.inverse() == FieldElem::integer(f7, 5));
  CHECK((three * three.inverse()).is_one());
}

TEST_CASE("division by zero and mixed fields are errors") {
  Field f7 = Field::prime_field(7);
  CHECK_THROWS_AS(FieldElem::rational(1, 1) / FieldElem::rational(0, 1), MathError);
  CHECK_THROWS_AS(FieldElem::integer(f7, 0).inverse(), MathError);
  CHECK_THROWS_AS(FieldElem::rational(1, 1) + FieldElem::integer(f7, 1), MathError);
  CHECK_THROWS_AS(Field::prime_field(6), MathError);
  CHECK_THROWS_AS(Field::prime_field(1ull << 31), MathError);
}

TEST_CASE("field axioms hold exactly on random elements") {
  std::mt19937 rng(20260810);
  auto rand_rat = [&]() {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
    return FieldElem::rational(num(rng), den(rng));
  };
  Field f101 = Field::prime_field(101);
  auto rand_mod = [&]() {
    std::uniform_int_distribution<long> v(0, 100);
    return FieldElem::integer(f101, v(rng));
  };
  auto check_axioms = [&](auto gen, const Field& k) {
    for (int i = 0; i < 200; ++i) {
      FieldElem a = gen(), b = gen(), c = gen();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + FieldElem::zero(k) == a);
      CHECK(a * FieldElem::one(k) == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  };
  check_axioms(rand_rat, Field::rationals());
  check_axioms(rand_mod, f101);
}

TEST_CASE("Fermat: a^(p-1) = 1 in F_p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 31u}) {
    Field k = Field::prime_field(p);
    for (std::uint32_t a = 1; a < p; ++a)
      CHECK(FieldElem::integer(k, a).pow(p - 1).is_one());
  }
}

TEST_CASE("printing follows the n/d and residue conventions") {
  CHECK(FieldElem::rational(-7, 3).to_string() == "-7/3");
  CHECK(FieldElem::rational(5, 1).to_string() == "5");
  Field f13 = Field::prime_field(13);
  CHECK(FieldElem::integer(f13, -1).to_string() == "12");
}
