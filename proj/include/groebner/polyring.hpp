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

#ifndef GROEBNER_POLYRING_HPP
#define GROEBNER_POLYRING_HPP

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "groebner/fields.hpp"

namespace groebner {

using Exponents = std::vector<std::int32_t>;

inline int total_of(const Exponents& e) {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  // x^a | x^b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
    if (r[i] > (1 << 30)) throw MathError("exponent overflow");
  }
  return r;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// Ring monomial orderings. lex and degrevlex apply to any number of
/// variables; the weighted variants carry an explicit weight vector; block
/// orderings compose sub-orderings over disjoint variable index sets.
class MonomialOrdering {
 public:
  enum class Kind { lex, degrevlex, wdegrevlex, neg_wdegrevlex, block };

  static MonomialOrdering lex() { return MonomialOrdering(Kind::lex); }
  static MonomialOrdering degrevlex() { return MonomialOrdering(Kind::degrevlex); }

  static MonomialOrdering wdegrevlex(std::vector<int> w) {
    MonomialOrdering o(Kind::wdegrevlex);
    check_weights(w);
    o.weights_ = std::move(w);
    return o;
  }

  static MonomialOrdering neg_wdegrevlex(std::vector<int> w) {
    MonomialOrdering o(Kind::neg_wdegrevlex);
    check_weights(w);
    o.weights_ = std::move(w);
    return o;
  }

  /// Blocks listed leading-first; the index sets must partition 0..n-1.
  static MonomialOrdering block(
      std::vector<std::pair<MonomialOrdering, std::vector<int>>> blocks) {
    if (blocks.empty()) throw MathError("empty block ordering");
    MonomialOrdering o(Kind::block);
    o.blocks_ = std::move(blocks);
    return o;
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& weights() const { return weights_; }

  /// Three-way compare of exponent vectors: +1 when a > b.
  int compare(const Exponents& a, const Exponents& b) const {
    if (a.size() != b.size()) throw MathError("exponent length mismatch");
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::degrevlex:
        return degrev(a, b, total_of(a), total_of(b));
      case Kind::wdegrevlex: {
        require_size(a.size());
        return degrev(a, b, wdeg(a), wdeg(b));
      }
      case Kind::neg_wdegrevlex: {
        require_size(a.size());
        int da = wdeg(a), db = wdeg(b);
        if (da != db) return da < db ? 1 : -1;  // smaller degree is larger
        return degrev(a, b, da, db);
      }
      case Kind::block: {
        for (const auto& [sub, idx] : blocks_) {
          Exponents pa(idx.size()), pb(idx.size());
          for (std::size_t i = 0; i < idx.size(); ++i) {
            pa[i] = a[idx[i]];
            pb[i] = b[idx[i]];
          }
          if (int c = sub.compare(pa, pb)) return c;
        }
        return 0;
      }
    }
    return 0;
  }

  /// Global iff x_i > 1 for every variable; local iff 1 > x_i for every one.
  bool is_global(int nvars) const { return probe(nvars, +1); }
  bool is_local(int nvars) const { return probe(nvars, -1); }

  /// Serialization used as GB cache key and for display.
  std::string key() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::degrevlex: return "degrevlex";
      case Kind::wdegrevlex: return "wdegrevlex" + wkey();
      case Kind::neg_wdegrevlex: return "negwdegrevlex" + wkey();
      case Kind::block: {
        std::string s = "block[";
        for (const auto& [sub, idx] : blocks_) {
          s += sub.key() + "@(";
          for (std::size_t i = 0; i < idx.size(); ++i)
            s += (i ? "," : "") + std::to_string(idx[i]);
          s += ");";
        }
        return s + "]";
      }
    }
    return "?";
  }

  friend bool operator==(const MonomialOrdering& a, const MonomialOrdering& b) {
    return a.key() == b.key();
  }

 private:
  explicit MonomialOrdering(Kind k) : kind_(k) {}

  static void check_weights(const std::vector<int>& w) {
    if (w.empty()) throw MathError("weight vector must be nonempty");
    for (int x : w)
      if (x < 1) throw MathError("ordering weights must be >= 1");
  }

  void require_size(std::size_t n) const {
    if (weights_.size() != n)
      throw MathError("weight vector length does not match variable count");
  }

  int wdeg(const Exponents& a) const {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += long(a[i]) * weights_[i];
    return static_cast<int>(s);
  }

  std::string wkey() const {
    std::string s = "(";
    for (std::size_t i = 0; i < weights_.size(); ++i)
      s += (i ? "," : "") + std::to_string(weights_[i]);
    return s + ")";
  }

  static int degrev(const Exponents& a, const Exponents& b, int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;  // last nonzero negative
    return 0;
  }

  bool probe(int nvars, int expect) const {
    Exponents one(nvars, 0), xi(nvars, 0);
    for (int i = 0; i < nvars; ++i) {
      xi[i] = 1;
      if (compare(xi, one) != expect) return false;
      xi[i] = 0;
    }
    return true;
  }

  Kind kind_;
  std::vector<int> weights_;
  std::vector<std::pair<MonomialOrdering, std::vector<int>>> blocks_;
};

/// Orderings on free modules. Components are 0-based internally. The
/// position-over-term and term-over-position extensions treat lower
/// component indices as larger; the Schreyer ordering compares images and
/// breaks ties by the larger component index, following the usual rule for
/// induced orderings.
class ModuleOrdering {
 public:
  enum class Ext { term_over_position, position_over_term, schreyer };

  static ModuleOrdering top(MonomialOrdering base) {
    return ModuleOrdering(Ext::term_over_position, std::move(base));
  }
  static ModuleOrdering pot(MonomialOrdering base) {
    return ModuleOrdering(Ext::position_over_term, std::move(base));
  }

  /// Induced ordering on R^r for images f_1..f_r living in a module with
  /// ordering `parent`. image_exp/image_comp are the leading monomials and
  /// components of the (nonzero) images under `parent`.
  static ModuleOrdering schreyer(std::shared_ptr<const ModuleOrdering> parent,
                                 std::vector<Exponents> image_exp,
                                 std::vector<int> image_comp) {
    if (!parent || image_exp.size() != image_comp.size() || image_exp.empty())
      throw MathError("invalid Schreyer ordering data");
    ModuleOrdering o(Ext::schreyer, parent->ring_ordering());
    o.parent_ = std::move(parent);
    o.image_exp_ = std::move(image_exp);
    o.image_comp_ = std::move(image_comp);
    return o;
  }

  Ext ext() const { return ext_; }
  const MonomialOrdering& ring_ordering() const { return base_; }

  int compare(const Exponents& a, int ca, const Exponents& b, int cb) const {
    switch (ext_) {
      case Ext::term_over_position: {
        if (int c = base_.compare(a, b)) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
      }
      case Ext::position_over_term: {
        if (ca != cb) return ca < cb ? 1 : -1;
        return base_.compare(a, b);
      }
      case Ext::schreyer: {
        if (ca < 0 || cb < 0 || ca >= int(image_exp_.size()) ||
            cb >= int(image_exp_.size()))
          throw MathError("component out of range for Schreyer ordering");
        int c = parent_->compare(exp_add(a, image_exp_[ca]), image_comp_[ca],
                                 exp_add(b, image_exp_[cb]), image_comp_[cb]);
        if (c) return c;
        if (ca != cb) return ca > cb ? 1 : -1;  // larger index wins on ties
        return 0;
      }
    }
    return 0;
  }

  bool is_global(int nvars) const { return base_.is_global(nvars); }
  bool is_local(int nvars) const { return base_.is_local(nvars); }

  std::string key() const {
    switch (ext_) {
      case Ext::term_over_position: return "top(" + base_.key() + ")";
      case Ext::position_over_term: return "pot(" + base_.key() + ")";
      case Ext::schreyer: {
        std::string s = "schreyer[" + parent_->key() + ";";
        for (std::size_t i = 0; i < image_exp_.size(); ++i) {
          s += std::to_string(image_comp_[i]) + ":";
          for (auto e : image_exp_[i]) s += std::to_string(e) + ".";
          s += ";";
        }
        return s + "]";
      }
    }
    return "?";
  }

 private:
  ModuleOrdering(Ext ext, MonomialOrdering base)
      : ext_(ext), base_(std::move(base)) {}

  Ext ext_;
  MonomialOrdering base_;
  std::shared_ptr<const ModuleOrdering> parent_;
  std::vector<Exponents> image_exp_;
  std::vector<int> image_comp_;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Shared immutable polynomial ring context: coefficient field, named
/// variables, positive grading weights and the default monomial ordering
/// (degrevlex, or wdegrevlex when the weights are non-unit).
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static RingPtr make(Field field, std::vector<std::string> vars,
                      std::vector<int> weights = {},
                      std::optional<MonomialOrdering> default_ordering = {}) {
    if (vars.empty()) throw MathError("ring needs at least one variable");
    for (const auto& v : vars) {
      if (v.empty() || (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_'))
        throw MathError("invalid variable name '" + v + "'");
      for (char c : v)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw MathError("invalid variable name '" + v + "'");
    }
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j])
          throw MathError("duplicate variable name '" + vars[i] + "'");
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size())
      throw MathError("weight vector length does not match variable count");
    for (int w : weights)
      if (w < 1) throw MathError("grading weights must be >= 1");
    MonomialOrdering ord = default_ordering
        ? *default_ordering
        : (std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; })
               ? MonomialOrdering::degrevlex()
               : MonomialOrdering::wdegrevlex(weights));
    return RingPtr(new PolyRing(field, std::move(vars), std::move(weights), ord));
  }

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variable_names() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrdering& default_ordering() const { return default_ord_; }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars_[i] == name) return i;
    return -1;
  }

  int weighted_degree(const Exponents& e) const {
    long s = 0;
    for (int i = 0; i < nvars(); ++i) s += long(e[i]) * weights_[i];
    return static_cast<int>(s);
  }

  bool same_as(const PolyRing& other) const {
    return field_ == other.field_ && vars_ == other.vars_ &&
           weights_ == other.weights_;
  }

  std::string to_string() const {
    std::string s = field_.to_string() + "[";
    for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + vars_[i];
    s += "] " + default_ord_.key();
    if (!std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; })) {
      s += " weights(";
      for (int i = 0; i < nvars(); ++i)
        s += (i ? "," : "") + std::to_string(weights_[i]);
      s += ")";
    }
    return s;
  }

 private:
  PolyRing(Field field, std::vector<std::string> vars, std::vector<int> weights,
           MonomialOrdering ord)
      : field_(field),
        vars_(std::move(vars)),
        weights_(std::move(weights)),
        default_ord_(std::move(ord)) {}

  Field field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  MonomialOrdering default_ord_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw MathError("ring mismatch");
}

struct Term {
  FieldElem coef;
  Exponents exp;
};

/// Sparse multivariate polynomial in canonical form: nonzero terms strictly
/// descending under the ring's default ordering.
class MultiPoly {
 public:
  MultiPoly() = default;  // detached zero; usable only after assignment

  static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring), {}); }

  static MultiPoly constant(RingPtr ring, FieldElem c) {
    std::vector<Term> t;
    if (!c.is_zero()) t.push_back({std::move(c), Exponents(ring->nvars(), 0)});
    return MultiPoly(std::move(ring), std::move(t));
  }

  static MultiPoly constant(RingPtr ring, long v) {
    auto k = ring->field();
    return constant(std::move(ring), FieldElem::integer(k, v));
  }

  static MultiPoly variable(RingPtr ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw MathError("variable index out of range");
    Exponents e(ring->nvars(), 0);
    e[i] = 1;
    auto k = ring->field();
    return MultiPoly(std::move(ring), {{FieldElem::one(k), std::move(e)}});
  }

  static MultiPoly monomial(RingPtr ring, Exponents e, FieldElem c) {
    if (static_cast<int>(e.size()) != ring->nvars())
      throw MathError("exponent length mismatch");
    for (auto x : e)
      if (x < 0) throw MathError("negative exponent");
    std::vector<Term> t;
    if (!c.is_zero()) t.push_back({std::move(c), std::move(e)});
    return MultiPoly(std::move(ring), std::move(t));
  }

  /// Canonicalizing constructor: sorts, merges duplicates, drops zeros.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto& ord = ring->default_ordering();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.compare(a.exp, b.exp) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (t.coef.is_zero()) continue;
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coef = out.back().coef + t.coef;
        if (out.back().coef.is_zero()) out.pop_back();
      } else {
        out.push_back(std::move(t));
      }
    }
    return MultiPoly(std::move(ring), std::move(out));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_of(terms_[0].exp) == 0);
  }
  FieldElem constant_term() const {
    for (const auto& t : terms_)
      if (total_of(t.exp) == 0) return t.coef;
    return FieldElem::zero(ring_->field());
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a.ring_, b.ring_);
    return merge(a, b, false);
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a.ring_, b.ring_);
    return merge(a, b, true);
  }

  MultiPoly operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coef = -x.coef;
    return MultiPoly(ring_, std::move(t));
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a.ring_, b.ring_);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        prod.push_back({s.coef * t.coef, exp_add(s.exp, t.exp)});
    return from_terms(a.ring_, std::move(prod));
  }

  MultiPoly scaled(const FieldElem& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coef = x.coef * c;
    return MultiPoly(ring_, std::move(t));
  }

  MultiPoly times_term(const FieldElem& c, const Exponents& mono) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) {
      x.coef = x.coef * c;
      x.exp = exp_add(x.exp, mono);
    }
    return MultiPoly(ring_, std::move(t));  // order preserved: ordering is multiplicative
  }

  MultiPoly pow(int e) const {
    if (e < 0) throw MathError("negative power of a polynomial");
    MultiPoly acc = constant(ring_, 1);
    MultiPoly base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      if (e >>= 1) base = base * base;
    }
    return acc;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!a.ring_->same_as(*b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exp != b.terms_[i].exp ||
          a.terms_[i].coef != b.terms_[i].coef)
        return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Maximal term under an arbitrary ordering (linear scan; the canonical
  /// sort is only valid for the ring default).
  const Term& leading_term(const MonomialOrdering& ord) const {
    if (terms_.empty()) throw MathError("leading term of zero");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
      if (ord.compare(t.exp, best->exp) > 0) best = &t;
    return *best;
  }
  const Term& leading_term() const {
    if (terms_.empty()) throw MathError("leading term of zero");
    return terms_.front();
  }

  int weighted_degree() const {
    if (terms_.empty()) throw MathError("degree of the zero polynomial");
    int d = ring_->weighted_degree(terms_[0].exp);
    for (const auto& t : terms_)
      d = std::max(d, ring_->weighted_degree(t.exp));
    return d;
  }

  /// -1 for the zero polynomial; otherwise the weighted degree.
  int degree_or_minus_one() const {
    return terms_.empty() ? -1 : weighted_degree();
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = ring_->weighted_degree(terms_[0].exp);
    for (const auto& t : terms_)
      if (ring_->weighted_degree(t.exp) != d) return false;
    return true;
  }

  /// Terms of weighted degree exactly m (the degree-m Taylor part at 0).
  MultiPoly taylor_part(int m) const {
    std::vector<Term> t;
    for (const auto& x : terms_)
      if (ring_->weighted_degree(x.exp) == m) t.push_back(x);
    return MultiPoly(ring_, std::move(t));
  }

  MultiPoly derivative(int var) const {
    if (var < 0 || var >= ring_->nvars())
      throw MathError("variable index out of range");
    std::vector<Term> t;
    for (const auto& x : terms_) {
      if (x.exp[var] == 0) continue;
      Term n = x;
      n.coef = n.coef * FieldElem::integer(ring_->field(), x.exp[var]);
      n.exp[var] -= 1;
      if (!n.coef.is_zero()) t.push_back(std::move(n));
    }
    return from_terms(ring_, std::move(t));
  }

  /// Homogenization into `target`, whose variables are this ring's with one
  /// extra weight-1 variable inserted at `pos`.
  MultiPoly homogenize(const RingPtr& target, int pos) const {
    if (target->nvars() != ring_->nvars() + 1 || pos < 0 || pos > ring_->nvars())
      throw MathError("homogenization ring must add one variable at the stated position");
    if (target->weights()[pos] != 1)
      throw MathError("homogenizing variable must have weight 1");
    if (terms_.empty()) return zero(target);
    int d = weighted_degree();
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& x : terms_) {
      Exponents e(target->nvars());
      for (int i = 0, j = 0; i < target->nvars(); ++i)
        e[i] = (i == pos) ? d - ring_->weighted_degree(x.exp) : x.exp[j++];
      t.push_back({x.coef, std::move(e)});
    }
    return from_terms(target, std::move(t));
  }

  /// Sets the variable at `pos` to 1 and drops it, mapping into `target`.
  MultiPoly dehomogenize(const RingPtr& target, int pos) const {
    if (target->nvars() != ring_->nvars() - 1 || pos < 0 || pos >= ring_->nvars())
      throw MathError("dehomogenization ring must drop the stated variable");
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& x : terms_) {
      Exponents e(target->nvars());
      for (int i = 0, j = 0; i < ring_->nvars(); ++i)
        if (i != pos) e[j++] = x.exp[i];
      t.push_back({x.coef, std::move(e)});
    }
    return from_terms(target, std::move(t));
  }

  /// Substitutes x_i -> x_i + c_i; used to translate a point to the origin.
  MultiPoly shifted(const std::vector<FieldElem>& offset) const {
    if (static_cast<int>(offset.size()) != ring_->nvars())
      throw MathError("offset length mismatch");
    MultiPoly acc = zero(ring_);
    for (const auto& t : terms_) {
      MultiPoly term = constant(ring_, t.coef);
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (t.exp[i] == 0) continue;
        MultiPoly base = offset[i].is_zero()
            ? variable(ring_, i)
            : variable(ring_, i) + constant(ring_, offset[i]);
        term = term * base.pow(t.exp[i]);
      }
      acc = acc + term;
    }
    return acc;
  }

  FieldElem evaluate(const std::vector<FieldElem>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
      throw MathError("point length mismatch");
    FieldElem acc = FieldElem::zero(ring_->field());
    for (const auto& t : terms_) {
      FieldElem v = t.coef;
      for (int i = 0; i < ring_->nvars(); ++i)
        for (int k = 0; k < t.exp[i]; ++k) v = v * point[i];
      acc = acc + v;
    }
    return acc;
  }

  /// Substitute a constant for one variable, mapping into `target` (this
  /// ring minus that variable). Used for affine charts.
  MultiPoly substitute(const RingPtr& target, int pos, const FieldElem& value) const {
    if (target->nvars() != ring_->nvars() - 1 || pos < 0 || pos >= ring_->nvars())
      throw MathError("substitution ring must drop the stated variable");
    std::vector<Term> t;
    for (const auto& x : terms_) {
      FieldElem c = x.coef;
      for (int k = 0; k < x.exp[pos]; ++k) c = c * value;
      if (c.is_zero()) continue;
      Exponents e(target->nvars());
      for (int i = 0, j = 0; i < ring_->nvars(); ++i)
        if (i != pos) e[j++] = x.exp[i];
      t.push_back({std::move(c), std::move(e)});
    }
    return from_terms(target, std::move(t));
  }

  /// Componentwise minimum of all exponents: the monomial content.
  Exponents content_exponents() const {
    if (terms_.empty()) return Exponents(ring_->nvars(), 0);
    Exponents m = terms_[0].exp;
    for (const auto& t : terms_)
      for (int i = 0; i < ring_->nvars(); ++i) m[i] = std::min(m[i], t.exp[i]);
    return m;
  }

  MultiPoly monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().coef.inverse());
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      FieldElem c = t.coef;
      if (first) {
        if (c.display_sign() < 0) {
          os << "-";
          c = -c;
        }
      } else {
        if (c.display_sign() < 0) {
          os << " - ";
          c = -c;
        } else {
          os << " + ";
        }
      }
      first = false;
      bool has_vars = total_of(t.exp) > 0;
      if (!has_vars || !c.is_one()) {
        os << c.to_string();
        if (has_vars) os << "*";
      }
      bool firstv = true;
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (t.exp[i] == 0) continue;
        if (!firstv) os << "*";
        firstv = false;
        os << ring_->variable_names()[i];
        if (t.exp[i] > 1) os << "^" << t.exp[i];
      }
    }
    return os.str();
  }

 private:
  MultiPoly(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    const auto& ord = a.ring_->default_ordering();
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i >= a.terms_.size()) c = -1;
      else if (j >= b.terms_.size()) c = 1;
      else c = ord.compare(a.terms_[i].exp, b.terms_[j].exp);
      if (c > 0) {
        out.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coef = -t.coef;
        out.push_back(std::move(t));
      } else {
        FieldElem s = subtract ? a.terms_[i].coef - b.terms_[j].coef
                               : a.terms_[i].coef + b.terms_[j].coef;
        if (!s.is_zero()) out.push_back({std::move(s), a.terms_[i].exp});
        ++i;
        ++j;
      }
    }
    return MultiPoly(a.ring_, std::move(out));
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Element of a free module R^rank, stored as sparse (component, poly)
/// pairs with distinct components and nonzero entries.
class FreeModElem {
 public:
  FreeModElem() = default;

  FreeModElem(RingPtr ring, int rank,
              std::vector<std::pair<int, MultiPoly>> comps)
      : ring_(std::move(ring)), rank_(rank) {
    if (rank_ < 1) throw MathError("module rank must be positive");
    for (auto& [i, p] : comps) {
      if (i < 0 || i >= rank_) throw MathError("component index out of range");
      if (p.is_zero()) continue;
      check_same_ring(ring_, p.ring());
      comps_.emplace_back(i, std::move(p));
    }
    std::sort(comps_.begin(), comps_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 1; k < comps_.size(); ++k)
      if (comps_[k].first == comps_[k - 1].first)
        throw MathError("duplicate component index");
  }

  static FreeModElem zero(RingPtr ring, int rank) {
    return FreeModElem(std::move(ring), rank, {});
  }

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<std::pair<int, MultiPoly>>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  MultiPoly component(int i) const {
    for (const auto& [j, p] : comps_)
      if (j == i) return p;
    return MultiPoly::zero(ring_);
  }

  std::string to_string() const {
    if (comps_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
      if (k) s += " + ";
      s += "(" + comps_[k].second.to_string() + ")*e" +
           std::to_string(comps_[k].first + 1);
    }
    return s;
  }

 private:
  RingPtr ring_;
  int rank_ = 1;
  std::vector<std::pair<int, MultiPoly>> comps_;
};

}  // namespace groebner

#endif  // GROEBNER_POLYRING_HPP
