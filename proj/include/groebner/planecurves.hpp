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

#ifndef GROEBNER_PLANECURVES_HPP
#define GROEBNER_PLANECURVES_HPP

#include "groebner/idealops.hpp"
#include "groebner/linalg.hpp"
#include "groebner/localstd.hpp"

namespace groebner {

/// Projective point with coordinates in k, normalized so that the first
/// nonzero coordinate is 1.
struct ProjPoint {
  std::vector<FieldElem> coords;

  ProjPoint() = default;
  explicit ProjPoint(std::vector<FieldElem> c) : coords(std::move(c)) {
    int pivot = -1;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) throw MathError("projective point needs a nonzero coordinate");
    FieldElem inv = coords[pivot].inverse();
    for (auto& c : coords) c = c * inv;
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.coords == b.coords;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i)
      s += (i ? ":" : "") + coords[i].to_string();
    return s;
  }
};

/// Singular point of a plane curve as supplied by the caller; verified
/// against curve_multiplicity before use.
struct SingularPoint {
  ProjPoint point;
  int multiplicity = 2;
  bool ordinary = true;
};

/// Divisor on a plane curve: distinct points with nonzero multiplicities,
/// supported away from the singular locus.
using Divisor = std::vector<std::pair<ProjPoint, int>>;

namespace detail {

struct Chart {
  RingPtr ring;                     // 2-variable chart ring
  int var = 2;                      // chart variable index in the 3-var ring
  std::vector<FieldElem> center;   // affine coordinates of the point
};

/// Affine chart containing a projective point: the last nonzero coordinate
/// is scaled to 1 and dropped.
inline Chart chart_at(const RingPtr& R3, const ProjPoint& p) {
  if (R3->nvars() != 3) throw MathError("expected a 3-variable ring");
  if (p.coords.size() != 3) throw MathError("expected a projective plane point");
  int c = -1;
  for (int i = 2; i >= 0; --i)
    if (!p.coords[i].is_zero()) {
      c = i;
      break;
    }
  FieldElem inv = p.coords[c].inverse();
  Chart out;
  out.var = c;
  std::vector<std::string> names;
  for (int i = 0; i < 3; ++i)
    if (i != c) names.push_back(R3->variable_names()[i]);
  out.ring = PolyRing::make(R3->field(), names);
  for (int i = 0; i < 3; ++i)
    if (i != c) out.center.push_back(p.coords[i] * inv);
  return out;
}

inline MultiPoly to_chart(const MultiPoly& F, const Chart& ch) {
  return F.substitute(ch.ring, ch.var, FieldElem::one(F.ring()->field()));
}

/// All monomials of weighted degree e, descending in the ring ordering.
inline std::vector<Exponents> monomials_of_degree(const RingPtr& R, int e) {
  std::vector<Exponents> out;
  Exponents cur(R->nvars(), 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == R->nvars() - 1) {
      if (remaining % R->weights()[var] != 0) return;
      cur[var] = remaining / R->weights()[var];
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int k = 0; k * R->weights()[var] <= remaining; ++k) {
      cur[var] = k;
      rec(var + 1, remaining - k * R->weights()[var]);
    }
    cur[var] = 0;
  };
  if (e >= 0) rec(0, e);
  std::sort(out.begin(), out.end(), [&](const Exponents& a, const Exponents& b) {
    return R->default_ordering().compare(a, b) > 0;
  });
  return out;
}

/// Echelonized basis of the degree-e part of a homogeneous ideal, as forms.
/// Deterministic: monomial columns descending, reduced row echelon rows.
inline std::vector<MultiPoly> graded_piece_basis(const Ideal& I, int e) {
  const RingPtr& R = I.ring();
  std::vector<Exponents> cols = monomials_of_degree(R, e);
  std::map<Exponents, int> col_of;
  for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);
  std::vector<linalg::Row> rows;
  for (const auto& g : I.generators()) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw MathError("graded piece of a non-homogeneous ideal");
    int dg = g.weighted_degree();
    if (dg > e) continue;
    for (const auto& m : monomials_of_degree(R, e - dg)) {
      MultiPoly prod = g.times_term(FieldElem::one(R->field()), m);
      linalg::Row row(cols.size(), FieldElem::zero(R->field()));
      for (const auto& t : prod.terms()) row[col_of.at(t.exp)] = t.coef;
      rows.push_back(std::move(row));
    }
  }
  linalg::rref(rows);
  std::vector<MultiPoly> out;
  for (const auto& row : rows) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!row[j].is_zero()) terms.push_back({row[j], cols[j]});
    out.push_back(MultiPoly::from_terms(R, std::move(terms)));
  }
  return out;
}

/// Ideal of a projective point: the two independent linear forms
/// x_j p_i - x_i p_j for a pivot coordinate p_i != 0.
inline Ideal point_ideal(const RingPtr& R3, const ProjPoint& p) {
  int pivot = -1;
  for (int i = 0; i < 3; ++i)
    if (!p.coords[i].is_zero()) {
      pivot = i;
      break;
    }
  std::vector<MultiPoly> gens;
  for (int j = 0; j < 3; ++j) {
    if (j == pivot) continue;
    MultiPoly form = MultiPoly::variable(R3, j).scaled(p.coords[pivot]) -
                     MultiPoly::variable(R3, pivot).scaled(p.coords[j]);
    gens.push_back(std::move(form));
  }
  return Ideal(R3, std::move(gens));
}

inline Ideal ideal_power(const Ideal& I, int k) {
  const RingPtr& R = I.ring();
  if (k <= 0) return Ideal(R, {MultiPoly::constant(R, 1)});
  std::vector<MultiPoly> cur = I.generators();
  std::vector<MultiPoly> acc = cur;
  for (int i = 1; i < k; ++i) {
    std::vector<MultiPoly> next;
    for (const auto& a : acc)
      for (const auto& b : cur) next.push_back(a * b);
    acc = std::move(next);
  }
  return Ideal(R, std::move(acc));
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<MultiPoly> gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<MultiPoly> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace detail

/// Multiplicity data of a projective plane curve at a point, computed in an
/// affine chart through the point.
inline CurveMultiplicity projective_curve_multiplicity(const MultiPoly& F,
                                                       const ProjPoint& p) {
  detail::Chart ch = detail::chart_at(F.ring(), p);
  return curve_multiplicity(detail::to_chart(F, ch), ch.center);
}

/// Intersection multiplicity of two projective plane curves at a point.
inline std::optional<long> projective_intersection_multiplicity(
    const MultiPoly& F, const MultiPoly& G, const ProjPoint& p) {
  detail::Chart ch = detail::chart_at(F.ring(), p);
  return intersection_multiplicity(detail::to_chart(F, ch),
                                   detail::to_chart(G, ch), ch.center);
}

/// Dual curve of V(F): eliminate the incidence variables from
/// (F, u - s dF/dx, v - s dF/dy, w - s dF/dz), after saturating away the
/// locus where the gradient vanishes. Returns the defining polynomial in a
/// fresh 3-variable dual ring (monomial content removed, not factored).
inline MultiPoly dual_curve(const MultiPoly& F) {
  const RingPtr& R3 = F.ring();
  if (R3->nvars() != 3) throw MathError("dual curve expects 3 variables");
  if (!F.is_homogeneous() || F.is_zero())
    throw MathError("dual curve expects a homogeneous polynomial");
  if (F.weighted_degree() < 2)
    throw MathError("dual curve expects degree at least 2");

  auto pick = [&](std::vector<std::string> cands) {
    for (const auto& c : cands)
      if (R3->var_index(c) < 0) return c;
    for (int k = 0;; ++k) {
      std::string c = cands[0] + std::to_string(k);
      if (R3->var_index(c) < 0) return c;
    }
  };
  std::string sn = pick({"s", "s0"});
  std::vector<std::string> dual_names = {pick({"u", "u0"}), pick({"v", "v0"}),
                                         pick({"w", "w0"})};
  std::vector<std::string> big_names = R3->variable_names();
  big_names.push_back(sn);
  for (const auto& n : dual_names) big_names.push_back(n);
  RingPtr big = PolyRing::make(R3->field(), big_names);

  auto lift = [&](const MultiPoly& f) {
    std::vector<Term> t;
    for (const auto& x : f.terms()) {
      Exponents e(big->nvars(), 0);
      for (int i = 0; i < 3; ++i) e[i] = x.exp[i];
      t.push_back({x.coef, std::move(e)});
    }
    return MultiPoly::from_terms(big, std::move(t));
  };

  MultiPoly s = MultiPoly::variable(big, 3);
  std::vector<MultiPoly> jac_big;
  std::vector<MultiPoly> gens{lift(F)};
  for (int i = 0; i < 3; ++i) {
    MultiPoly di = lift(F.derivative(i));
    jac_big.push_back(di);
    gens.push_back(MultiPoly::variable(big, 4 + i) - s * di);
  }
  Ideal J(big, std::move(gens));
  Ideal sat = saturate(J, Ideal(big, jac_big)).first;
  Ideal elim = eliminate(sat, {0, 1, 2, 3});

  RingPtr dual_ring = PolyRing::make(R3->field(), dual_names);
  std::vector<MultiPoly> down;
  for (const auto& g : reduced_groebner_basis(elim, big->default_ordering()).elements) {
    std::vector<Term> t;
    for (const auto& x : g.terms()) {
      Exponents e(3, 0);
      for (int i = 0; i < 3; ++i) e[i] = x.exp[4 + i];
      t.push_back({x.coef, std::move(e)});
    }
    down.push_back(MultiPoly::from_terms(dual_ring, std::move(t)));
  }
  if (down.size() != 1)
    throw MathError("dual curve elimination did not yield a principal ideal");
  MultiPoly gen = down[0];
  Exponents content = gen.content_exponents();
  if (total_of(content) > 0) {
    std::vector<Term> t;
    for (const auto& x : gen.terms())
      t.push_back({x.coef, exp_sub(x.exp, content)});
    gen = MultiPoly::from_terms(dual_ring, std::move(t));
  }
  return gen.monic();
}

/// Plücker invariants of an irreducible degree-d plane curve whose only
/// singularities (and whose dual's) are delta nodes and kappa cusps.
struct PlueckerReport {
  long long genus = 0;
  long long dual_degree = 0;
  long long flexes = 0;
  long long bitangents = 0;
  bool hypotheses_ok = true;  // false when an invariant comes out negative
  bool dual_consistent = true;
};

inline PlueckerReport pluecker(long long d, long long delta, long long kappa) {
  if (d < 2 || delta < 0 || kappa < 0)
    throw MathError("pluecker expects d >= 2 and nonnegative delta, kappa");
  PlueckerReport r;
  r.genus = (d - 1) * (d - 2) / 2 - delta - kappa;
  r.dual_degree = d * (d - 1) - 2 * delta - 3 * kappa;
  r.flexes = 3 * d * (d - 2) - 6 * delta - 8 * kappa;
  r.bitangents = d * (d - 2) * (d - 3) * (d + 3) / 2 -
                 (4 * d * d - 4 * d - 20) * delta -
                 (6 * d * d - 6 * d - 27) * kappa +
                 (2 * delta + 3 * kappa) * (2 * delta + 3 * kappa);
  r.hypotheses_ok = r.genus >= 0 && r.dual_degree >= 0 && r.flexes >= 0 &&
                    r.bitangents >= 0;
  // dual-side identities with (delta, kappa) -> (bitangents, flexes)
  long long dd = r.dual_degree;
  r.dual_consistent =
      r.genus == (dd - 1) * (dd - 2) / 2 - r.bitangents - r.flexes &&
      d == dd * (dd - 1) - 2 * r.bitangents - 3 * r.flexes &&
      kappa == 3 * dd * (dd - 2) - 6 * r.bitangents - 8 * r.flexes;
  return r;
}

/// Geometric genus of a degree-d plane curve with the given delta
/// invariants: (d-1)(d-2)/2 - sum deltas. May be negative; flagged.
struct GenusResult {
  long long genus = 0;
  bool negative = false;
};

inline GenusResult plane_genus(long long d, const std::vector<long long>& deltas) {
  if (d < 1) throw MathError("plane_genus expects d >= 1");
  long long g = (d - 1) * (d - 2) / 2;
  for (long long x : deltas) {
    if (x < 0) throw MathError("delta invariants must be nonnegative");
    g -= x;
  }
  return {g, g < 0};
}

/// Verifies a declared singular point: it lies on the curve and has the
/// stated multiplicity with square-free tangent cone.
inline void verify_ordinary_singularity(const MultiPoly& F, const SingularPoint& s) {
  if (F.evaluate(s.point.coords).is_zero() == false)
    throw MathError("declared singular point does not lie on the curve");
  CurveMultiplicity cm = projective_curve_multiplicity(F, s.point);
  if (cm.multiplicity != s.multiplicity)
    throw MathError("declared multiplicity " + std::to_string(s.multiplicity) +
                    " does not match computed " + std::to_string(cm.multiplicity));
  if (!cm.ordinary)
    throw MathError("singular point at " + s.point.to_string() +
                    " is not ordinary (tangent cone is not square-free)");
}

/// Adjoint ideal of a curve with only ordinary singularities:
/// the intersection of I(p_i)^{r_i - 1} + (F) over the declared points.
/// Smooth curves get the unit ideal.
inline Ideal ordinary_adjoint_ideal(const MultiPoly& F,
                                    const std::vector<SingularPoint>& sing) {
  const RingPtr& R3 = F.ring();
  if (R3->nvars() != 3 || !F.is_homogeneous() || F.is_zero())
    throw MathError("adjoint ideal expects a homogeneous plane curve");
  if (sing.empty()) return Ideal(R3, {MultiPoly::constant(R3, 1)});
  bool first = true;
  Ideal acc(R3, {});
  for (const auto& s : sing) {
    verify_ordinary_singularity(F, s);
    Ideal cond = detail::ideal_sum(
        detail::ideal_power(detail::point_ideal(R3, s.point), s.multiplicity - 1),
        Ideal(R3, {F}));
    acc = first ? cond : intersect(acc, cond);
    first = false;
  }
  return acc;
}

/// Riemann-Roch space L(D) on the normalization of an irreducible plane
/// curve with only ordinary singularities. Returns l(D), the common
/// denominator form h, the numerator forms, and the degree e used.
struct RiemannRochSpace {
  long ell = 0;
  int e = 0;
  MultiPoly denominator;
  std::vector<MultiPoly> numerators;
};

inline RiemannRochSpace riemann_roch_space(const MultiPoly& F, const Divisor& D,
                                           const std::vector<SingularPoint>& sing) {
  const RingPtr& R3 = F.ring();
  if (R3->nvars() != 3 || !F.is_homogeneous() || F.is_zero())
    throw MathError("Riemann-Roch expects a homogeneous plane curve");
  Ideal unit(R3, {MultiPoly::constant(R3, 1)});
  for (std::size_t i = 0; i < D.size(); ++i) {
    if (D[i].second == 0) throw MathError("divisor multiplicities must be nonzero");
    if (!F.evaluate(D[i].first.coords).is_zero())
      throw MathError("divisor point " + D[i].first.to_string() +
                      " does not lie on the curve");
    for (std::size_t j = i + 1; j < D.size(); ++j)
      if (D[i].first == D[j].first) throw MathError("divisor points must be distinct");
    for (const auto& s : sing)
      if (D[i].first == s.point)
        throw MathError("divisor support must avoid the singular locus");
  }

  // Step 1: I(D1), I(D2)
  Ideal ID1 = unit, ID2 = unit;
  bool have1 = false, have2 = false;
  for (const auto& [p, n] : D) {
    int k = n > 0 ? n : -n;
    Ideal cond = detail::ideal_sum(
        detail::ideal_power(detail::point_ideal(R3, p), k), Ideal(R3, {F}));
    if (n > 0) {
      ID1 = have1 ? intersect(ID1, cond) : cond;
      have1 = true;
    } else {
      ID2 = have2 ? intersect(ID2, cond) : cond;
      have2 = true;
    }
  }
  // Steps 2-4: adjoint ideal (declared points verified there) and I.
  Ideal Jadj = ordinary_adjoint_ideal(F, sing);
  Ideal I = intersect(ID1, Jadj);

  // Step 5: smallest e with I_e strictly larger than (f)_e; h = first
  // echelon form outside (f)_e.
  const int degF = F.weighted_degree();
  Ideal fI(R3, {F});
  int e = 0;
  MultiPoly h = MultiPoly::zero(R3);
  for (int cand = 1; cand <= degF + 40; ++cand) {
    auto basis = detail::graded_piece_basis(I, cand);
    long fdim = cand >= degF
        ? static_cast<long>(detail::monomials_of_degree(R3, cand - degF).size())
        : 0;
    if (static_cast<long>(basis.size()) > fdim) {
      for (const auto& b : basis) {
        bool in_f = cand >= degF &&
            divide_with_remainder(b, {F}, R3->default_ordering()).remainder.is_zero();
        if (!in_f) {
          h = b;
          break;
        }
      }
      e = cand;
      break;
    }
  }
  if (h.is_zero()) throw MathError("no admissible form found (step 5 failed)");

  // Step 6: residual ideal I' = (f,h) : I
  Ideal Iprime = colon(Ideal(R3, {F, h}), I);

  // Step 7: branch on V(I' + I(D2)) = empty (projectively: the saturation
  // w.r.t. the irrelevant ideal is the unit ideal).
  Ideal J = unit;
  Ideal irrelevant(R3, {MultiPoly::variable(R3, 0), MultiPoly::variable(R3, 1),
                        MultiPoly::variable(R3, 2)});
  if (!have2) {
    J = Iprime;
  } else {
    Ideal together = detail::ideal_sum(Iprime, ID2);
    bool empty = is_one(saturate(together, irrelevant).first);
    if (empty)
      J = intersect(Iprime, ID2);
    else
      J = saturate(detail::ideal_sum(detail::ideal_product(Iprime, ID2),
                                     Ideal(R3, {F})),
                   irrelevant).first;
  }

  // Steps 8-9: l = dim J_e/(f)_e with echelon representatives.
  auto jbasis = detail::graded_piece_basis(J, e);
  std::vector<Exponents> cols = detail::monomials_of_degree(R3, e);
  std::map<Exponents, int> col_of;
  for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);
  std::vector<linalg::Row> frows;
  if (e >= degF) {
    for (const auto& m : detail::monomials_of_degree(R3, e - degF)) {
      MultiPoly prod = F.times_term(FieldElem::one(R3->field()), m);
      linalg::Row row(cols.size(), FieldElem::zero(R3->field()));
      for (const auto& t : prod.terms()) row[col_of.at(t.exp)] = t.coef;
      frows.push_back(std::move(row));
    }
  }
  linalg::rref(frows);
  std::vector<linalg::Row> reduced;
  for (const auto& b : jbasis) {
    linalg::Row row(cols.size(), FieldElem::zero(R3->field()));
    for (const auto& t : b.terms()) row[col_of.at(t.exp)] = t.coef;
    // reduce modulo the (f)_e span
    for (const auto& fr : frows) {
      int pivot = -1;
      for (std::size_t c = 0; c < fr.size(); ++c)
        if (!fr[c].is_zero()) {
          pivot = static_cast<int>(c);
          break;
        }
      if (pivot >= 0 && !row[pivot].is_zero()) {
        FieldElem fmul = row[pivot];
        for (std::size_t c = 0; c < fr.size(); ++c)
          row[c] = row[c] - fmul * fr[c];
      }
    }
    reduced.push_back(std::move(row));
  }
  linalg::rref(reduced);
  RiemannRochSpace out;
  out.e = e;
  out.denominator = h;
  for (const auto& row : reduced) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!row[j].is_zero()) terms.push_back({row[j], cols[j]});
    if (!terms.empty())
      out.numerators.push_back(MultiPoly::from_terms(R3, std::move(terms)));
  }
  out.ell = static_cast<long>(out.numerators.size());
  return out;
}

/// Bézout certification: checks deg F * deg G against the sum of computed
/// local intersection multiplicities at the listed points plus the caller's
/// residual count.
struct BezoutReport {
  long long deg_f = 0, deg_g = 0;
  std::vector<long> multiplicities;  // computed at the listed points
  std::vector<long> claimed;
  long long residual = 0;
  long long total = 0;
  bool claims_match = true;
  bool certified = false;
};

inline BezoutReport bezout_certify(const MultiPoly& F, const MultiPoly& G,
                                   const std::vector<std::pair<ProjPoint, long>>& points,
                                   long long residual) {
  const RingPtr& R3 = F.ring();
  check_same_ring(R3, G.ring());
  if (R3->nvars() != 3 || !F.is_homogeneous() || !G.is_homogeneous())
    throw MathError("Bezout expects homogeneous plane curves");
  if (affine_dim(Ideal(R3, {F, G})) > 1)
    throw MathError("curves share a common component");
  BezoutReport r;
  r.deg_f = F.weighted_degree();
  r.deg_g = G.weighted_degree();
  r.residual = residual;
  r.total = residual;
  for (const auto& [p, claimed] : points) {
    auto m = projective_intersection_multiplicity(F, G, p);
    if (!m) throw MathError("infinite intersection multiplicity at " + p.to_string());
    r.multiplicities.push_back(*m);
    r.claimed.push_back(claimed);
    r.claims_match = r.claims_match && *m == claimed;
    r.total += *m;
  }
  r.certified = r.claims_match && r.total == r.deg_f * r.deg_g;
  return r;
}

}  // namespace groebner

#endif  // GROEBNER_PLANECURVES_HPP
