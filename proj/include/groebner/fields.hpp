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

#ifndef GROEBNER_FIELDS_HPP
#define GROEBNER_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "groebner/common.hpp"

namespace groebner {

/// Coefficient field descriptor: the rationals (characteristic 0) or a prime
/// field F_p with p < 2^31, so that products of residues fit in 64 bits.
struct Field {
  std::uint32_t characteristic = 0;

  static Field rationals() { return Field{0}; }

  static Field prime_field(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31) || !is_prime(p))
      throw MathError("prime field characteristic must be a prime below 2^31");
    return Field{static_cast<std::uint32_t>(p)};
  }

  bool is_rationals() const { return characteristic == 0; }

  friend bool operator==(const Field&, const Field&) = default;

  std::string to_string() const {
    return is_rationals() ? "QQ" : "Fp:" + std::to_string(characteristic);
  }

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) return false;
    return true;
  }
};

/// Immutable field element in canonical form: rationals are reduced with
/// positive denominator (GMP invariant), F_p residues lie in [0, p).
/// Equality is therefore a plain representation check.
class FieldElem {
 public:
  FieldElem() = default;  // rational zero

  static FieldElem zero(const Field& k) {
    return k.is_rationals() ? FieldElem() : modular(k.characteristic, 0);
  }
  static FieldElem one(const Field& k) { return integer(k, 1); }

  static FieldElem integer(const Field& k, long v) {
    if (k.is_rationals()) return rational(mpq_class(v));
    return modular(k.characteristic, v);
  }

  static FieldElem rational(mpq_class q) {
    q.canonicalize();
    FieldElem e;
    e.q_ = std::move(q);
    return e;
  }

  static FieldElem rational(long num, long den) {
    if (den == 0) throw MathError("division by zero");
    return rational(mpq_class(num, den));
  }

  static FieldElem modular(std::uint32_t p, long long v) {
    FieldElem e;
    e.p_ = p;
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    e.r_ = static_cast<std::uint64_t>(r);
    return e;
  }

  Field field() const { return Field{p_}; }
  bool is_rational() const { return p_ == 0; }
  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  const mpq_class& rational_value() const {
    if (p_ != 0) throw MathError("not a rational element");
    return q_;
  }
  std::uint64_t residue() const {
    if (p_ == 0) throw MathError("not a prime-field element");
    return r_;
  }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    if (a.p_ == 0) return rational(a.q_ + b.q_);
    std::uint64_t s = a.r_ + b.r_;
    if (s >= a.p_) s -= a.p_;
    return with_residue(a.p_, s);
  }

  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    if (a.p_ == 0) return rational(a.q_ - b.q_);
    std::uint64_t s = a.r_ + a.p_ - b.r_;
    if (s >= a.p_) s -= a.p_;
    return with_residue(a.p_, s);
  }

  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    if (a.p_ == 0) return rational(a.q_ * b.q_);
    return with_residue(a.p_, (a.r_ * b.r_) % a.p_);  // both < 2^31
  }

  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return a * b.inverse();
  }

  FieldElem operator-() const {
    if (p_ == 0) return rational(mpq_class(-q_));
    return with_residue(p_, r_ == 0 ? 0 : p_ - r_);
  }

  FieldElem inverse() const {
    if (is_zero()) throw MathError("division by zero");
    if (p_ == 0) return rational(mpq_class(1) / q_);
    return with_residue(p_, mod_inverse(r_, p_));
  }

  FieldElem pow(long e) const {
    FieldElem base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
    FieldElem acc = one(field());
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.p_ != b.p_) return false;
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) {
    return !(a == b);
  }

  /// "n/d" with "/1" omitted; F_p as the least nonnegative residue.
  std::string to_string() const {
    if (p_ != 0) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  /// Sign used for rendering: rationals by numerator sign, residues >= 0.
  int display_sign() const {
    if (p_ != 0) return r_ == 0 ? 0 : 1;
    return sgn(q_);
  }

 private:
  static void check_same(const FieldElem& a, const FieldElem& b) {
    if (a.p_ != b.p_) throw MathError("mixed-field operands");
  }

  static FieldElem with_residue(std::uint32_t p, std::uint64_t r) {
    FieldElem e;
    e.p_ = p;
    e.r_ = r;
    return e;
  }

  static std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p), a in (0, p)
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw MathError("residue not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
  }

  std::uint32_t p_ = 0;   // 0 = rationals
  std::uint64_t r_ = 0;   // residue when p_ > 0
  mpq_class q_;           // value when p_ == 0
};

}  // namespace groebner

#endif  // GROEBNER_FIELDS_HPP
