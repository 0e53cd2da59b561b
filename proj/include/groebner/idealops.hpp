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

#ifndef GROEBNER_IDEALOPS_HPP
#define GROEBNER_IDEALOPS_HPP

#include <set>

#include "groebner/modsyz.hpp"

namespace groebner {

/// Ideal equality via canonical reduced Gröbner bases.
inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  const auto& ord = I.ring()->default_ordering();
  GroebnerBasis a = reduced_groebner_basis(I, ord);
  GroebnerBasis b = reduced_groebner_basis(J, ord);
  if (a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    if (a.elements[i] != b.elements[i]) return false;
  return true;
}

/// I cap J via the syzygies of the 2 x (r+s+1) matrix
///   [ 1  f_1..f_r  0....0 ]
///   [ 1  0.....0  g_1..g_s ] :
/// the first row of a syzygy matrix generates the intersection.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  const RingPtr& R = I.ring();
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(R, {});
  std::vector<FreeModElem> cols;
  MultiPoly one = MultiPoly::constant(R, 1);
  cols.push_back(FreeModElem(R, 2, {{0, one}, {1, one}}));
  for (const auto& f : I.generators())
    cols.push_back(FreeModElem(R, 2, {{0, f}}));
  for (const auto& g : J.generators())
    cols.push_back(FreeModElem(R, 2, {{1, g}}));
  PolyMatrix syz = syzygies_on_generators(cols);
  std::vector<MultiPoly> gens;
  for (int j = 0; j < syz.cols(); ++j)
    if (!syz.at(0, j).is_zero()) gens.push_back(syz.at(0, j));
  return Ideal(R, std::move(gens));
}

/// Exact division f / g (remainder must vanish).
inline MultiPoly exact_quotient(const MultiPoly& f, const MultiPoly& g) {
  DivisionResult d =
      divide_with_remainder(f, {g}, f.ring()->default_ordering());
  if (!d.remainder.is_zero())
    throw MathError("inexact polynomial division");
  return d.quotients[0];
}

/// Colon ideal I : J through the principal decomposition
/// I : (g_1,...,g_s) = intersection of (1/g_i)(I cap (g_i)).
inline Ideal colon(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  const RingPtr& R = I.ring();
  if (J.is_zero_ideal()) throw MathError("colon by the zero ideal");
  bool first = true;
  Ideal acc(R, {});
  for (const auto& g : J.generators()) {
    Ideal part = intersect(I, Ideal(R, {g}));
    std::vector<MultiPoly> divided;
    for (const auto& h : part.generators())
      divided.push_back(exact_quotient(h, g));
    Ideal Q(R, std::move(divided));
    acc = first ? Q : intersect(acc, Q);
    first = false;
  }
  return acc;
}

/// Saturation I : J^infty by iterating colon until stable. Returns the
/// stable ideal and the number of strict growth steps m, so I : J^m already
/// equals the saturation.
inline std::pair<Ideal, int> saturate(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  if (J.is_zero_ideal()) throw MathError("saturation by the zero ideal");
  int maxdeg = 1;
  for (const auto& f : I.generators()) maxdeg = std::max(maxdeg, f.weighted_degree());
  for (const auto& g : J.generators()) maxdeg = std::max(maxdeg, g.weighted_degree());
  int bound = std::max<int>(
      8, 1 + maxdeg * static_cast<int>(I.generators().size() + J.generators().size()));
  Ideal cur = I;
  for (int m = 0; m <= bound; ++m) {
    check_deadline("saturation");
    Ideal next = colon(cur, J);
    if (ideal_equal(next, cur)) return {cur, m};
    cur = std::move(next);
  }
  throw MathError("saturation failed to stabilize (internal bound exceeded)");
}

/// Block elimination ordering: a leading degrevlex block on the eliminated
/// variables, then degrevlex on the rest.
inline MonomialOrdering elimination_ordering(const std::vector<int>& eliminate_vars,
                                             int nvars) {
  std::set<int> elim(eliminate_vars.begin(), eliminate_vars.end());
  std::vector<int> rest;
  for (int i = 0; i < nvars; ++i)
    if (!elim.count(i)) rest.push_back(i);
  return MonomialOrdering::block(
      {{MonomialOrdering::degrevlex(), {elim.begin(), elim.end()}},
       {MonomialOrdering::degrevlex(), rest}});
}

/// Generators of I cap k[remaining variables]: elements of a block-ordering
/// Gröbner basis whose terms avoid the eliminated variables.
inline Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
  const RingPtr& R = I.ring();
  std::set<int> elim(vars.begin(), vars.end());
  for (int v : elim)
    if (v < 0 || v >= R->nvars()) throw MathError("variable index out of range");
  if (elim.empty()) return I;
  if (static_cast<int>(elim.size()) == R->nvars())
    throw MathError("cannot eliminate every variable");
  GroebnerBasis gb = buchberger(I, elimination_ordering(vars, R->nvars()));
  std::vector<MultiPoly> kept;
  for (const auto& g : gb.elements) {
    bool uses_elim = false;
    for (const auto& t : g.terms())
      for (int v : elim) uses_elim = uses_elim || t.exp[v] > 0;
    if (!uses_elim) kept.push_back(g);
  }
  return Ideal(R, std::move(kept));
}

/// Krull dimension of V(I), reduced to the monomial case dim V(Lt(I)):
/// the maximum size of a variable subset on which no minimal generator of
/// the leading ideal is fully supported. dim V((1)) = -1, dim V((0)) = n.
inline int affine_dim(const Ideal& I) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  if (I.is_zero_ideal()) return n;
  if (n > 30) throw MathError("dimension search limited to 30 variables");
  GroebnerBasis gb = buchberger(I, R->default_ordering());
  std::vector<std::uint32_t> support;
  for (const auto& g : gb.elements) {
    const Term& lt = g.leading_term(gb.ordering);
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (lt.exp[i] > 0) mask |= 1u << i;
    if (mask == 0) return -1;  // unit ideal
    support.push_back(mask);
  }
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t m : support)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

/// Ring with one extra weight-1 variable inserted at `pos`.
inline RingPtr extended_ring(const RingPtr& R, const std::string& var, int pos) {
  std::vector<std::string> names = R->variable_names();
  std::vector<int> weights = R->weights();
  names.insert(names.begin() + pos, var);
  weights.insert(weights.begin() + pos, 1);
  return PolyRing::make(R->field(), std::move(names), std::move(weights));
}

inline std::string fresh_variable_name(const RingPtr& R) {
  for (const std::string& cand : {"x0", "h", "t0"})
    if (R->var_index(cand) < 0) return cand;
  for (int k = 0;; ++k) {
    std::string cand = "h" + std::to_string(k);
    if (R->var_index(cand) < 0) return cand;
  }
}

/// Projective closure: homogenize every element of a degree-refining
/// Gröbner basis of I with a new first variable. The result is saturated
/// with respect to the homogenizing variable by construction.
inline Ideal projective_closure(const Ideal& I, const RingPtr& target,
                                int pos = 0) {
  GroebnerBasis gb = buchberger(I, I.ring()->default_ordering());
  std::vector<MultiPoly> gens;
  for (const auto& g : gb.elements) gens.push_back(g.homogenize(target, pos));
  return Ideal(target, std::move(gens));
}

inline Ideal projective_closure(const Ideal& I) {
  RingPtr target = extended_ring(I.ring(), fresh_variable_name(I.ring()), 0);
  return projective_closure(I, target, 0);
}

}  // namespace groebner

#endif  // GROEBNER_IDEALOPS_HPP
