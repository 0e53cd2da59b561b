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

#ifndef GROEBNER_GBASIS_HPP
#define GROEBNER_GBASIS_HPP

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <tuple>

#include "groebner/polyring.hpp"

namespace groebner {

namespace detail {

/// Term of a free-module element: coefficient, monomial, component.
/// Ring elements are the rank-1 case with component 0.
struct MTerm {
  FieldElem coef;
  Exponents exp;
  int comp = 0;
};

/// Module element as a term vector, strictly descending under a fixed
/// ModuleOrdering. This is the working representation of every engine.
using VecPoly = std::vector<MTerm>;

inline VecPoly vp_canonicalize(VecPoly t, const ModuleOrdering& ord) {
  std::sort(t.begin(), t.end(), [&](const MTerm& a, const MTerm& b) {
    return ord.compare(a.exp, a.comp, b.exp, b.comp) > 0;
  });
  VecPoly out;
  out.reserve(t.size());
  for (auto& x : t) {
    if (x.coef.is_zero()) continue;
    if (!out.empty() && out.back().exp == x.exp && out.back().comp == x.comp) {
      out.back().coef = out.back().coef + x.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else {
      out.push_back(std::move(x));
    }
  }
  return out;
}

/// p -= c * x^mono * q, merging under ord.
inline VecPoly vp_submul(const VecPoly& p, const FieldElem& c,
                         const Exponents& mono, const VecPoly& q,
                         const ModuleOrdering& ord) {
  VecPoly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  MTerm shifted;
  auto qterm = [&](std::size_t k) -> const MTerm& {
    shifted.coef = -(c * q[k].coef);
    shifted.exp = exp_add(q[k].exp, mono);
    shifted.comp = q[k].comp;
    return shifted;
  };
  while (i < p.size() || j < q.size()) {
    int cv;
    if (i >= p.size()) cv = -1;
    else if (j >= q.size()) cv = 1;
    else {
      const MTerm& t = qterm(j);
      cv = ord.compare(p[i].exp, p[i].comp, t.exp, t.comp);
    }
    if (cv > 0) {
      out.push_back(p[i++]);
    } else if (cv < 0) {
      out.push_back(qterm(j++));
    } else {
      FieldElem s = p[i].coef - c * q[j].coef;
      if (!s.is_zero()) out.push_back({std::move(s), p[i].exp, p[i].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

inline VecPoly from_multipoly(const MultiPoly& f, const ModuleOrdering& ord,
                              int comp = 0) {
  VecPoly t;
  t.reserve(f.terms().size());
  for (const auto& x : f.terms()) t.push_back({x.coef, x.exp, comp});
  return vp_canonicalize(std::move(t), ord);
}

inline VecPoly from_freemod(const FreeModElem& f, const ModuleOrdering& ord) {
  VecPoly t;
  for (const auto& [i, p] : f.components())
    for (const auto& x : p.terms()) t.push_back({x.coef, x.exp, i});
  return vp_canonicalize(std::move(t), ord);
}

inline MultiPoly to_multipoly(const VecPoly& v, const RingPtr& ring) {
  std::vector<Term> t;
  t.reserve(v.size());
  for (const auto& x : v) {
    if (x.comp != 0) throw MathError("module element is not a ring element");
    t.push_back({x.coef, x.exp});
  }
  return MultiPoly::from_terms(ring, std::move(t));
}

inline FreeModElem to_freemod(const VecPoly& v, const RingPtr& ring, int rank) {
  std::vector<std::vector<Term>> per(rank);
  for (const auto& x : v) per.at(x.comp).push_back({x.coef, x.exp});
  std::vector<std::pair<int, MultiPoly>> comps;
  for (int i = 0; i < rank; ++i)
    if (!per[i].empty())
      comps.emplace_back(i, MultiPoly::from_terms(ring, std::move(per[i])));
  return FreeModElem(ring, rank, std::move(comps));
}

struct DivisionOutput {
  std::vector<std::vector<Term>> quot_terms;  // one per divisor, unsorted
  VecPoly remainder;
};

/// Determinate division with remainder (global orderings): repeatedly cancel
/// the lead of p against the first divisor whose leading term divides it,
/// else move the lead to the remainder. This realizes the unique expression
/// with the two divisibility conditions of the division theorem.
inline DivisionOutput divide_vp(const VecPoly& f,
                                const std::vector<const VecPoly*>& divisors,
                                const ModuleOrdering& ord) {
  DivisionOutput out;
  out.quot_terms.resize(divisors.size());
  VecPoly p = f;
  std::size_t guard = 0;
  while (!p.empty()) {
    if (((++guard) & 0x3ff) == 0) check_deadline("division");
    const MTerm& lead = p.front();
    bool reduced = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const VecPoly& d = *divisors[k];
      const MTerm& dl = d.front();
      if (dl.comp == lead.comp && divides(dl.exp, lead.exp)) {
        FieldElem c = lead.coef / dl.coef;
        Exponents mono = exp_sub(lead.exp, dl.exp);
        out.quot_terms[k].push_back({c, mono});
        p = vp_submul(p, c, mono, d, ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.remainder.push_back(p.front());
      p.erase(p.begin());
    }
  }
  return out;
}

/// One Buchberger test: divide x^alpha * f_i by the current basis. When the
/// remainder was nonzero it became basis element `produced` (else -1).
struct TestRecord {
  int i;
  Exponents alpha;
  std::vector<std::vector<Term>> quot_terms;
  int produced = -1;
};

struct BuchbergerResult {
  std::vector<VecPoly> basis;  // inputs first, new elements appended
  int input_count = 0;
  std::vector<TestRecord> tests;  // chronological
};

/// Minimal generators of M_i = (Lt f_1,...,Lt f_{i-1}) : Lt f_i among
/// leading terms sharing f_i's leading component.
inline std::vector<Exponents> colon_min_gens(const std::vector<VecPoly>& basis,
                                             int i) {
  std::vector<Exponents> cand;
  const MTerm& li = basis[i].front();
  for (int j = 0; j < i; ++j) {
    const MTerm& lj = basis[j].front();
    if (lj.comp != li.comp) continue;
    cand.push_back(exp_sub(exp_lcm(lj.exp, li.exp), li.exp));
  }
  std::vector<Exponents> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < cand.size() && !redundant; ++b) {
      if (a == b) continue;
      if (cand[b] == cand[a]) redundant = b < a;  // keep first duplicate
      else if (divides(cand[b], cand[a])) redundant = true;
    }
    if (!redundant) kept.push_back(cand[a]);
  }
  return kept;
}

/// Buchberger's algorithm with the colon-ideal test criterion. Pending tests
/// are processed by smallest lcm degree, then generator index. With
/// record_tests set, every test's division data is kept for syzygy
/// extraction (tests recorded against a growing basis stay valid because
/// later divisors receive zero quotients in the determinate expression).
inline BuchbergerResult buchberger_core(std::vector<VecPoly> gens,
                                        const ModuleOrdering& ord,
                                        const RingPtr& ring,
                                        bool record_tests) {
  BuchbergerResult res;
  res.basis = std::move(gens);
  res.input_count = static_cast<int>(res.basis.size());
  for (const auto& g : res.basis)
    if (g.empty()) throw MathError("zero generator");

  struct Pending {
    int deg;
    int i;
    Exponents alpha;
  };
  auto later = [&](const Pending& a, const Pending& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    if (a.i != b.i) return a.i > b.i;
    return a.alpha > b.alpha;  // deterministic tie-break
  };
  std::priority_queue<Pending, std::vector<Pending>, decltype(later)> queue(later);

  auto enqueue_tests = [&](int i) {
    for (auto& alpha : colon_min_gens(res.basis, i)) {
      int deg = ring->weighted_degree(alpha) +
                ring->weighted_degree(res.basis[i].front().exp);
      queue.push({deg, i, std::move(alpha)});
    }
  };
  for (int i = 1; i < res.input_count; ++i) enqueue_tests(i);

  while (!queue.empty()) {
    check_deadline("Buchberger");
    Pending t = queue.top();
    queue.pop();
    // dividend: x^alpha * f_i
    VecPoly dividend = res.basis[t.i];
    for (auto& x : dividend) x.exp = exp_add(x.exp, t.alpha);
    std::vector<const VecPoly*> divisors;
    divisors.reserve(res.basis.size());
    for (const auto& b : res.basis) divisors.push_back(&b);
    DivisionOutput div = divide_vp(dividend, divisors, ord);

    TestRecord rec{t.i, t.alpha, {}, -1};
    if (!div.remainder.empty()) {
      res.basis.push_back(std::move(div.remainder));
      rec.produced = static_cast<int>(res.basis.size()) - 1;
      enqueue_tests(rec.produced);
    }
    if (record_tests) {
      rec.quot_terms = std::move(div.quot_terms);
      res.tests.push_back(std::move(rec));
    }
  }
  return res;
}

/// Indices of a minimal subset: drop elements whose leading term is
/// divisible by another kept element's leading term.
inline std::vector<int> minimal_subset(const std::vector<VecPoly>& basis) {
  std::vector<bool> alive(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !alive[j]) continue;
      const MTerm& a = basis[i].front();
      const MTerm& b = basis[j].front();
      if (a.comp == b.comp && divides(a.exp, b.exp) &&
          (a.exp != b.exp || i < j))
        alive[j] = false;
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (alive[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace detail

/// Gröbner (or standard) basis of an ideal together with its ordering.
/// Leading coefficients are not normalized unless the basis is reduced.
struct GroebnerBasis {
  MonomialOrdering ordering = MonomialOrdering::degrevlex();
  std::vector<MultiPoly> elements;
  bool minimal = false;
  bool reduced = false;
};

/// Division result for both the global (unit == 1) and the local Mora case,
/// satisfying unit*f = sum quotients[i]*divisor[i] + remainder.
struct DivisionResult {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
  MultiPoly unit;
};

struct ModuleDivisionResult {
  std::vector<MultiPoly> quotients;
  FreeModElem remainder;
};

/// Ideal with generators and a per-ordering Gröbner basis cache. The cache
/// tolerates concurrent readers with a single winning writer.
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr ring, std::vector<MultiPoly> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;  // zero generators dropped
      check_same_ring(ring_, g.ring());
      gens_.push_back(std::move(g));
    }
  }

  Ideal(const Ideal& other) {
    std::lock_guard<std::mutex> lk(other.mu_);
    ring_ = other.ring_;
    gens_ = other.gens_;
    cache_ = other.cache_;
  }
  Ideal& operator=(const Ideal& other) {
    if (this == &other) return *this;
    Ideal tmp(other);
    ring_ = std::move(tmp.ring_);
    gens_ = std::move(tmp.gens_);
    std::lock_guard<std::mutex> lk(mu_);
    cache_ = std::move(tmp.cache_);
    return *this;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  std::optional<GroebnerBasis> cached(const MonomialOrdering& ord) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find(ord.key());
    if (it == cache_.end()) return std::nullopt;
    return it->second;
  }

  void store(const GroebnerBasis& gb) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find(gb.ordering.key());
    if (it == cache_.end() || (gb.reduced && !it->second.reduced))
      cache_[gb.ordering.key()] = gb;
  }

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  mutable std::mutex mu_;
  mutable std::map<std::string, GroebnerBasis> cache_;
};

/// Determinate division of f by the listed divisors under a global ordering.
inline DivisionResult divide_with_remainder(const MultiPoly& f,
                                            const std::vector<MultiPoly>& divisors,
                                            const MonomialOrdering& ord) {
  const RingPtr& R = f.ring();
  if (!ord.is_global(R->nvars()))
    throw MathError("division with remainder requires a global ordering");
  ModuleOrdering mord = ModuleOrdering::top(ord);
  std::vector<detail::VecPoly> dv;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw MathError("zero divisor");
    check_same_ring(R, d.ring());
    dv.push_back(detail::from_multipoly(d, mord));
  }
  std::vector<const detail::VecPoly*> ptrs;
  for (const auto& d : dv) ptrs.push_back(&d);
  auto out = detail::divide_vp(detail::from_multipoly(f, mord), ptrs, mord);
  DivisionResult r;
  for (auto& q : out.quot_terms)
    r.quotients.push_back(MultiPoly::from_terms(R, std::move(q)));
  r.remainder = detail::to_multipoly(out.remainder, R);
  r.unit = MultiPoly::constant(R, 1);
  return r;
}

/// Module version of determinate division.
inline ModuleDivisionResult divide_with_remainder(
    const FreeModElem& f, const std::vector<FreeModElem>& divisors,
    const ModuleOrdering& ord) {
  const RingPtr& R = f.ring();
  if (!ord.is_global(R->nvars()))
    throw MathError("division with remainder requires a global ordering");
  std::vector<detail::VecPoly> dv;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw MathError("zero divisor");
    check_same_ring(R, d.ring());
    if (d.rank() != f.rank()) throw MathError("rank mismatch");
    dv.push_back(detail::from_freemod(d, ord));
  }
  std::vector<const detail::VecPoly*> ptrs;
  for (const auto& d : dv) ptrs.push_back(&d);
  auto out = detail::divide_vp(detail::from_freemod(f, ord), ptrs, ord);
  ModuleDivisionResult r;
  for (auto& q : out.quot_terms)
    r.quotients.push_back(MultiPoly::from_terms(R, std::move(q)));
  r.remainder = detail::to_freemod(out.remainder, R, f.rank());
  return r;
}

/// Minimal Gröbner basis of I with respect to a global ordering; cached.
inline GroebnerBasis buchberger(const Ideal& I, const MonomialOrdering& ord) {
  const RingPtr& R = I.ring();
  if (!R) throw MathError("ideal has no ring");
  if (!ord.is_global(R->nvars()))
    throw MathError("Buchberger requires a global ordering");
  if (auto hit = I.cached(ord)) return *hit;

  GroebnerBasis gb;
  gb.ordering = ord;
  gb.minimal = true;
  if (!I.generators().empty()) {
    ModuleOrdering mord = ModuleOrdering::top(ord);
    std::vector<detail::VecPoly> gens;
    for (const auto& g : I.generators())
      gens.push_back(detail::from_multipoly(g, mord));
    auto res = detail::buchberger_core(std::move(gens), mord, R, false);
    for (int idx : detail::minimal_subset(res.basis))
      gb.elements.push_back(detail::to_multipoly(res.basis[idx], R));
    std::sort(gb.elements.begin(), gb.elements.end(),
              [&](const MultiPoly& a, const MultiPoly& b) {
                return ord.compare(a.leading_term(ord).exp,
                                   b.leading_term(ord).exp) > 0;
              });
  }
  I.store(gb);
  return gb;
}

/// Reduced Gröbner basis: minimal, monic, and no term of any element is
/// divisible by another element's leading term. Canonical for the ideal.
/// Inputs that only claim to generate the ideal are completed first, so the
/// result is reduced for the ideal they span.
inline GroebnerBasis reduce_gb(const GroebnerBasis& G) {
  if (G.reduced) return G;
  GroebnerBasis out;
  out.ordering = G.ordering;
  out.minimal = true;
  out.reduced = true;
  if (G.elements.empty()) return out;

  const RingPtr R = G.elements[0].ring();
  ModuleOrdering mord = ModuleOrdering::top(G.ordering);
  std::vector<detail::VecPoly> vp;
  for (const auto& e : G.elements) vp.push_back(detail::from_multipoly(e, mord));
  auto completed = detail::buchberger_core(std::move(vp), mord, R, false);
  std::vector<MultiPoly> elems;
  for (int idx : detail::minimal_subset(completed.basis))
    elems.push_back(detail::to_multipoly(completed.basis[idx], R));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (j != i) others.push_back(elems[j]);
    MultiPoly h = others.empty()
        ? elems[i]
        : divide_with_remainder(elems[i], others, G.ordering).remainder;
    out.elements.push_back(h.scaled(h.leading_term(G.ordering).coef.inverse()));
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [&](const MultiPoly& a, const MultiPoly& b) {
              return G.ordering.compare(a.leading_term(G.ordering).exp,
                                        b.leading_term(G.ordering).exp) > 0;
            });
  return out;
}

inline GroebnerBasis reduced_groebner_basis(const Ideal& I,
                                            const MonomialOrdering& ord) {
  if (auto hit = I.cached(ord); hit && hit->reduced) return *hit;
  GroebnerBasis gb = reduce_gb(buchberger(I, ord));
  I.store(gb);
  return gb;
}

/// Normal form of f modulo I: the remainder upon determinate division by a
/// Gröbner basis. Zero iff f lies in I; supported on standard monomials.
inline MultiPoly normal_form(const MultiPoly& f, const Ideal& I,
                             const MonomialOrdering& ord) {
  GroebnerBasis gb = buchberger(I, ord);
  if (gb.elements.empty()) return f;
  return divide_with_remainder(f, gb.elements, ord).remainder;
}

inline MultiPoly normal_form(const MultiPoly& f, const Ideal& I) {
  return normal_form(f, I, f.ring()->default_ordering());
}

inline bool ideal_membership(const MultiPoly& f, const Ideal& I,
                             const MonomialOrdering& ord) {
  return normal_form(f, I, ord).is_zero();
}

inline bool ideal_membership(const MultiPoly& f, const Ideal& I) {
  return ideal_membership(f, I, f.ring()->default_ordering());
}

/// V(I) is empty over the closure iff 1 lies in I (the reduced basis is {1}).
inline bool is_one(const Ideal& I) {
  if (I.generators().empty()) return false;
  GroebnerBasis gb = buchberger(I, I.ring()->default_ordering());
  for (const auto& g : gb.elements)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

/// Monomial ideal of leading terms of a minimal Gröbner basis.
inline Ideal leading_ideal(const Ideal& I, const MonomialOrdering& ord) {
  GroebnerBasis gb = buchberger(I, ord);
  std::vector<MultiPoly> lts;
  for (const auto& g : gb.elements) {
    const Term& lt = g.leading_term(ord);
    lts.push_back(MultiPoly::monomial(I.ring(), lt.exp,
                                      FieldElem::one(I.ring()->field())));
  }
  return Ideal(I.ring(), std::move(lts));
}

namespace detail {

/// All monomials outside the monomial module generated by `lt` (exponents in
/// a fixed component). Empty optional when the staircase is unbounded.
inline std::optional<std::vector<Exponents>> staircase_monomials(
    const std::vector<Exponents>& lt, int nvars) {
  for (const auto& e : lt)
    if (total_of(e) == 0) return std::vector<Exponents>{};  // unit: none
  Exponents bound(nvars, -1);
  for (const auto& e : lt) {
    int support = 0, var = -1;
    for (int i = 0; i < nvars; ++i)
      if (e[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] < 0 || e[var] < bound[var]))
      bound[var] = e[var];
  }
  for (int i = 0; i < nvars; ++i)
    if (bound[i] < 0) return std::nullopt;  // direction never blocked

  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  while (true) {
    bool inside = false;
    for (const auto& e : lt)
      if (divides(e, cur)) {
        inside = true;
        break;
      }
    if (!inside) out.push_back(cur);
    int i = 0;
    for (; i < nvars; ++i) {
      if (++cur[i] < bound[i]) break;
      cur[i] = 0;
    }
    if (i == nvars) break;
  }
  return out;
}

}  // namespace detail

/// Monomials outside Lt(I); a k-basis of the quotient ring. Throws when the
/// quotient is infinite-dimensional.
inline std::vector<Exponents> standard_monomials(const Ideal& I,
                                                 const MonomialOrdering& ord) {
  GroebnerBasis gb = buchberger(I, ord);
  std::vector<Exponents> lt;
  for (const auto& g : gb.elements) lt.push_back(g.leading_term(ord).exp);
  auto mono = detail::staircase_monomials(lt, I.ring()->nvars());
  if (!mono)
    throw MathError("infinitely many standard monomials (positive-dimensional quotient)");
  std::sort(mono->begin(), mono->end(), [&](const Exponents& a, const Exponents& b) {
    return ord.compare(a, b) < 0;
  });
  return *mono;
}

/// Asserts the Buchberger criterion on a claimed basis: for each i and each
/// minimal generator x^alpha of M_i, x^alpha*f_i reduces to zero.
inline bool buchberger_criterion_holds(const std::vector<MultiPoly>& elems,
                                       const MonomialOrdering& ord) {
  if (elems.empty()) return true;
  const RingPtr& R = elems[0].ring();
  ModuleOrdering mord = ModuleOrdering::top(ord);
  std::vector<detail::VecPoly> basis;
  for (const auto& e : elems) basis.push_back(detail::from_multipoly(e, mord));
  std::vector<const detail::VecPoly*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  for (std::size_t i = 1; i < basis.size(); ++i) {
    for (const auto& alpha : detail::colon_min_gens(basis, static_cast<int>(i))) {
      detail::VecPoly dividend = basis[i];
      for (auto& x : dividend) x.exp = exp_add(x.exp, alpha);
      if (!detail::divide_vp(dividend, ptrs, mord).remainder.empty())
        return false;
    }
  }
  return true;
}

}  // namespace groebner

#endif  // GROEBNER_GBASIS_HPP
