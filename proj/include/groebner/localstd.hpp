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

#ifndef GROEBNER_LOCALSTD_HPP
#define GROEBNER_LOCALSTD_HPP

#include "groebner/gbasis.hpp"

namespace groebner {

/// Local quotient data at the origin: a standard basis, the k-dimension of
/// O_o/I O_o (empty optional when infinite) and, when finite, the standard
/// monomials under the leading ideal.
struct LocalQuotientResult {
  std::vector<MultiPoly> standard_basis;
  std::optional<long> dimension;
  std::vector<Exponents> standard_monomials;
};

namespace detail {

inline int vp_wdeg(const VecPoly& p, const RingPtr& R) {
  int d = 0;
  for (const auto& t : p) d = std::max(d, R->weighted_degree(t.exp));
  return d;
}

inline int vp_ecart(const VecPoly& p, const RingPtr& R) {
  return vp_wdeg(p, R) - R->weighted_degree(p.front().exp);
}

struct MoraState {
  VecPoly h;                      // active part
  VecPoly unit;                   // u
  std::vector<VecPoly> quot;      // q_i
  VecPoly rem;                    // extracted remainder terms
};

/// Mora division with remainder for a local ordering, with the ecart
/// strategy: reduce by a divisor of minimal ecart, storing the current h as
/// an extra reducer first whenever the chosen ecart exceeds ecart(h). The
/// exact identity u*f = sum q_i g_i + rem + h is maintained throughout;
/// u keeps a nonzero constant term since stored reducers are only applied
/// with multipliers in the maximal ideal. With `total` set, irreducible
/// leading terms are moved to the remainder and reduction continues on the
/// tail (reducing against a stored element re-injects its remainder
/// snapshot into the active part, keeping the identity exact).
inline MoraState mora_divide_vp(const VecPoly& f, const std::vector<VecPoly>& G,
                                const ModuleOrdering& ord, const RingPtr& R,
                                bool total) {
  struct Stored {
    VecPoly poly, unit, rem;
    std::vector<VecPoly> quot;
    int ecart;
  };
  MoraState st;
  st.h = f;
  st.unit = {{FieldElem::one(R->field()), Exponents(R->nvars(), 0), 0}};
  st.quot.resize(G.size());
  std::vector<int> gecart;
  gecart.reserve(G.size());
  for (const auto& g : G) {
    if (g.empty()) throw MathError("zero divisor");
    gecart.push_back(vp_ecart(g, R));
  }
  std::vector<Stored> stored;

  std::size_t guard = 0;
  const std::size_t bound = 1u << 22;
  while (!st.h.empty()) {
    if (++guard > bound)
      throw MathError("Mora reduction exceeded the iteration bound");
    if ((guard & 0xff) == 0) check_deadline("Mora division");
    const MTerm& lead = st.h.front();
    int he = vp_ecart(st.h, R);

    int best = -1, best_ecart = 0;
    bool best_stored = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      const MTerm& dl = G[k].front();
      if (dl.comp == lead.comp && divides(dl.exp, lead.exp) &&
          (best < 0 || gecart[k] < best_ecart)) {
        best = static_cast<int>(k);
        best_ecart = gecart[k];
      }
    }
    for (std::size_t k = 0; k < stored.size(); ++k) {
      const MTerm& dl = stored[k].poly.front();
      if (dl.comp == lead.comp && divides(dl.exp, lead.exp) &&
          (best < 0 || stored[k].ecart < best_ecart)) {
        best = static_cast<int>(k);
        best_ecart = stored[k].ecart;
        best_stored = true;
      }
    }

    if (best < 0) {
      if (!total) break;  // weak normal form: stop at irreducible lead
      st.rem.push_back(st.h.front());
      st.h.erase(st.h.begin());
      continue;
    }
    if (best_ecart > he)
      stored.push_back({st.h, st.unit, st.rem, st.quot, he});

    if (!best_stored) {
      const VecPoly& g = G[best];
      FieldElem c = lead.coef / g.front().coef;
      Exponents mono = exp_sub(lead.exp, g.front().exp);
      st.h = vp_submul(st.h, c, mono, g, ord);
      st.quot[best].push_back({c, mono, 0});
    } else {
      const Stored& s = stored[best];
      FieldElem c = lead.coef / s.poly.front().coef;
      Exponents mono = exp_sub(lead.exp, s.poly.front().exp);
      st.h = vp_submul(st.h, c, mono, s.poly, ord);
      st.h = vp_submul(st.h, c, mono, s.rem, ord);
      st.unit = vp_submul(st.unit, c, mono, s.unit, ord);
      for (std::size_t i = 0; i < G.size(); ++i)
        if (!s.quot[i].empty())
          st.quot[i] = vp_submul(st.quot[i], c, mono, s.quot[i], ord);
    }
  }
  // remainder = extracted terms plus (for weak form) the irreducible rest
  for (const auto& t : st.h) st.rem.push_back(t);
  st.h.clear();
  st.rem = vp_canonicalize(std::move(st.rem), ord);
  return st;
}

}  // namespace detail

/// Mora division with remainder: u*f = sum quotients[i]*divisors[i] + h with
/// a unit u (nonzero constant term) and no term of h divisible by any
/// leading term of the divisors.
inline DivisionResult mora_normal_form(const MultiPoly& f,
                                       const std::vector<MultiPoly>& divisors,
                                       const MonomialOrdering& ord) {
  const RingPtr& R = f.ring();
  if (!ord.is_local(R->nvars()))
    throw MathError("Mora division requires a local ordering");
  ModuleOrdering mord = ModuleOrdering::top(ord);
  std::vector<detail::VecPoly> G;
  for (const auto& d : divisors) {
    check_same_ring(R, d.ring());
    G.push_back(detail::from_multipoly(d, mord));
  }
  auto st = detail::mora_divide_vp(detail::from_multipoly(f, mord), G, mord, R, true);
  DivisionResult out;
  for (auto& q : st.quot) {
    std::vector<Term> terms;
    for (auto& t : q) terms.push_back({t.coef, t.exp});
    out.quotients.push_back(MultiPoly::from_terms(R, std::move(terms)));
  }
  out.remainder = detail::to_multipoly(st.rem, R);
  out.unit = detail::to_multipoly(st.unit, R);
  if (out.unit.constant_term().is_zero())
    throw MathError("internal: Mora unit lost its constant term");
  return out;
}

/// Default local ordering for the built-in local invariants.
inline MonomialOrdering local_ordering(const RingPtr& R) {
  return MonomialOrdering::neg_wdegrevlex(R->weights());
}

/// Standard basis of I with respect to a local ordering: Buchberger's loop
/// with Mora weak normal form as the reducer. Every accepted element
/// strictly enlarges the leading ideal, so the loop terminates.
inline std::vector<MultiPoly> standard_basis(const Ideal& I,
                                             const MonomialOrdering& ord) {
  const RingPtr& R = I.ring();
  if (!ord.is_local(R->nvars()))
    throw MathError("standard basis requires a local ordering");
  if (I.generators().empty()) return {};
  ModuleOrdering mord = ModuleOrdering::top(ord);
  std::vector<detail::VecPoly> basis;
  for (const auto& g : I.generators())
    basis.push_back(detail::from_multipoly(g, mord));

  struct Pair {
    int deg, i, j;
  };
  auto later = [](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> pairs(later);
  auto push_pairs = [&](int m) {
    for (int i = 0; i < m; ++i) {
      if (basis[i].front().comp != basis[m].front().comp) continue;
      Exponents l = exp_lcm(basis[i].front().exp, basis[m].front().exp);
      pairs.push({R->weighted_degree(l), i, m});
    }
  };
  for (int m = 1; m < static_cast<int>(basis.size()); ++m) push_pairs(m);

  while (!pairs.empty()) {
    check_deadline("standard basis");
    Pair p = pairs.top();
    pairs.pop();
    const detail::VecPoly& f = basis[p.i];
    const detail::VecPoly& g = basis[p.j];
    Exponents l = exp_lcm(f.front().exp, g.front().exp);
    detail::VecPoly s = detail::vp_submul(
        detail::VecPoly{}, -(FieldElem::one(R->field()) / f.front().coef),
        exp_sub(l, f.front().exp), f, mord);
    s = detail::vp_submul(s, FieldElem::one(R->field()) / g.front().coef,
                          exp_sub(l, g.front().exp), g, mord);
    auto st = detail::mora_divide_vp(s, basis, mord, R, false);
    if (!st.rem.empty()) {
      basis.push_back(st.rem);
      push_pairs(static_cast<int>(basis.size()) - 1);
    }
  }

  std::vector<MultiPoly> out;
  for (int idx : detail::minimal_subset(basis))
    out.push_back(detail::to_multipoly(basis[idx], R));
  return out;
}

/// dim_k O_o/(I O_o) via the standard monomials of the local leading ideal.
inline LocalQuotientResult local_dim(const Ideal& I) {
  const RingPtr& R = I.ring();
  MonomialOrdering ord = local_ordering(R);
  LocalQuotientResult out;
  out.standard_basis = standard_basis(I, ord);
  std::vector<Exponents> lt;
  for (const auto& g : out.standard_basis)
    lt.push_back(g.leading_term(ord).exp);
  auto mono = detail::staircase_monomials(lt, R->nvars());
  if (!mono) return out;  // infinite-dimensional quotient
  out.dimension = static_cast<long>(mono->size());
  out.standard_monomials = std::move(*mono);
  return out;
}

/// Translate a polynomial so that `p` moves to the origin.
inline MultiPoly translate_to_origin(const MultiPoly& f,
                                     const std::vector<FieldElem>& p) {
  return f.shifted(p);
}

/// Intersection multiplicity i(C,D;p) of the plane curves f, g at a point
/// with coordinates in k: dim_k O_o/(f,g) after translating p to the origin.
/// Empty optional means infinite (the curves share a branch through p).
inline std::optional<long> intersection_multiplicity(
    const MultiPoly& f, const MultiPoly& g, const std::vector<FieldElem>& p) {
  const RingPtr& R = f.ring();
  check_same_ring(R, g.ring());
  if (R->nvars() != 2)
    throw MathError("intersection multiplicity is defined for plane curves");
  if (f.is_constant() || g.is_constant())
    throw MathError("intersection multiplicity needs non-constant curves");
  Exponents cf = f.content_exponents(), cg = g.content_exponents();
  for (int i = 0; i < R->nvars(); ++i)
    if (cf[i] > 0 && cg[i] > 0)
      throw MathError("curves share a common factor");
  MultiPoly ft = translate_to_origin(f, p);
  MultiPoly gt = translate_to_origin(g, p);
  return local_dim(Ideal(R, {ft, gt})).dimension;
}

struct CurveMultiplicity {
  int multiplicity = 0;
  MultiPoly tangent_cone;
  bool ordinary = false;
};

namespace detail {

/// Square-freeness of a univariate polynomial: gcd(u, u') is constant.
inline bool univariate_squarefree(const MultiPoly& u, int var) {
  MultiPoly a = u, b = u.derivative(var);
  if (b.is_zero()) return u.is_constant();  // positive characteristic edge
  // Euclidean algorithm on the single variable `var`
  auto deg = [&](const MultiPoly& p) {
    int d = -1;
    for (const auto& t : p.terms()) d = std::max(d, int(t.exp[var]));
    return d;
  };
  while (!b.is_zero()) {
    // remainder of a modulo b w.r.t. var (coefficients in k)
    MultiPoly r = a;
    while (!r.is_zero() && deg(r) >= deg(b)) {
      // leading univariate coefficients
      int dr = deg(r), db = deg(b);
      MultiPoly lr = MultiPoly::zero(r.ring()), lb = MultiPoly::zero(r.ring());
      for (const auto& t : r.terms())
        if (int(t.exp[var]) == dr) {
          Exponents e = t.exp;
          e[var] = 0;
          lr = lr + MultiPoly::monomial(r.ring(), e, t.coef);
        }
      for (const auto& t : b.terms())
        if (int(t.exp[var]) == db) {
          Exponents e = t.exp;
          e[var] = 0;
          lb = lb + MultiPoly::monomial(r.ring(), e, t.coef);
        }
      Exponents shift(r.ring()->nvars(), 0);
      shift[var] = dr - db;
      r = r * lb - b * lr.times_term(FieldElem::one(r.ring()->field()), shift);
    }
    a = b;
    b = r;
  }
  return a.is_constant();
}

}  // namespace detail

/// Multiplicity of the curve f = 0 at p: the least m with a nonzero degree-m
/// Taylor part after translation. The point is ordinary when m >= 2 and the
/// tangent cone (a binary form) is square-free; the x- and y-axis factors
/// are split off before the univariate derivative test.
inline CurveMultiplicity curve_multiplicity(const MultiPoly& f,
                                            const std::vector<FieldElem>& p) {
  const RingPtr& R = f.ring();
  if (f.is_zero()) throw MathError("zero polynomial has no multiplicity");
  if (R->nvars() != 2) throw MathError("curve multiplicity expects 2 variables");
  MultiPoly ft = translate_to_origin(f, p);
  int d = ft.weighted_degree();  // m = 0 when the point misses the curve
  CurveMultiplicity out;
  out.tangent_cone = MultiPoly::zero(R);
  for (int m = 0; m <= d; ++m) {
    MultiPoly part = ft.taylor_part(m);
    if (!part.is_zero()) {
      out.multiplicity = m;
      out.tangent_cone = part;
      break;
    }
  }
  if (out.multiplicity < 2) return out;  // smooth points are never "ordinary"
  // split off x^a y^b and test the remaining binary form via x := t, y := 1
  Exponents content = out.tangent_cone.content_exponents();
  if (content[0] > 1 || content[1] > 1) return out;  // repeated axis tangent
  std::vector<Term> rest;
  for (const auto& t : out.tangent_cone.terms())
    rest.push_back({t.coef, exp_sub(t.exp, content)});
  MultiPoly h = MultiPoly::from_terms(R, std::move(rest));
  std::vector<Term> dehom;
  for (const auto& t : h.terms()) {
    Exponents e = t.exp;
    e[1] = 0;
    dehom.push_back({t.coef, e});
  }
  MultiPoly u = MultiPoly::from_terms(R, std::move(dehom));
  out.ordinary = detail::univariate_squarefree(u, 0);
  return out;
}

/// Milnor and Tjurina numbers of f at p: local dimensions of the Jacobian
/// ideal and of the Jacobian ideal plus (f). Empty optional = infinite
/// (non-isolated singularity).
struct MilnorTjurina {
  std::optional<long> milnor;
  std::optional<long> tjurina;
};

inline MilnorTjurina milnor_tjurina(const MultiPoly& f,
                                    const std::vector<FieldElem>& p) {
  const RingPtr& R = f.ring();
  if (f.is_zero()) throw MathError("zero polynomial");
  if (R->nvars() < 2 || R->nvars() > 3)
    throw MathError("Milnor/Tjurina numbers expect 2 or 3 variables");
  MultiPoly ft = translate_to_origin(f, p);
  std::vector<MultiPoly> jac;
  for (int i = 0; i < R->nvars(); ++i) jac.push_back(ft.derivative(i));
  MilnorTjurina out;
  out.milnor = local_dim(Ideal(R, jac)).dimension;
  jac.push_back(ft);
  out.tjurina = local_dim(Ideal(R, jac)).dimension;
  return out;
}

}  // namespace groebner

#endif  // GROEBNER_LOCALSTD_HPP
