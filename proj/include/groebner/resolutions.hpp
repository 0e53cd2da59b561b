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

#ifndef GROEBNER_RESOLUTIONS_HPP
#define GROEBNER_RESOLUTIONS_HPP

#include <functional>
#include <map>

#include "groebner/idealops.hpp"
#include "groebner/linalg.hpp"

namespace groebner {

/// Chain of free modules F_0 <- F_1 <- ... <- F_c resolving a module M
/// (the cokernel of differentials[0]). twists[i] lists the generator
/// degrees of F_i = (+)_j S(-j); empty in the ungraded case.
struct GradedFreeResolution {
  RingPtr ring;
  bool graded = false;
  std::vector<std::vector<int>> twists;    // per module, when graded
  std::vector<int> ranks;                  // per module (always)
  std::vector<PolyMatrix> differentials;   // differentials[i]: F_{i+1} -> F_i

  int length() const { return static_cast<int>(differentials.size()); }
};

/// beta_{ij} with the display convention b_{ij} = beta_{i,i+j}.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (i, j) -> beta_{ij}

  long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

/// Hilbert polynomial data of a graded quotient: P_M, its degree r (the
/// projective dimension of V), the degree d = r! * leading coefficient and
/// the arithmetic genus (-1)^r (P(0) - 1).
struct HilbertData {
  std::vector<mpq_class> polynomial;  // coefficients, constant first
  int dim = -1;                       // -1 when P == 0 (empty locus)
  mpz_class degree = 0;
  mpz_class arithmetic_genus = 0;
};

namespace detail {

/// Sorting rule for Schreyer iterations: leading component ascending, then
/// monomial degree ascending, then degrevlex-descending monomials.
inline void schreyer_sort(std::vector<VecPoly>& gb, const RingPtr& ring) {
  MonomialOrdering drl = MonomialOrdering::degrevlex();
  std::stable_sort(gb.begin(), gb.end(), [&](const VecPoly& a, const VecPoly& b) {
    const MTerm& x = a.front();
    const MTerm& y = b.front();
    if (x.comp != y.comp) return x.comp < y.comp;
    int dx = ring->weighted_degree(x.exp), dy = ring->weighted_degree(y.exp);
    if (dx != dy) return dx < dy;
    return drl.compare(x.exp, y.exp) > 0;
  });
}

inline PolyMatrix columns_to_matrix(const std::vector<VecPoly>& cols, int rows,
                                    const RingPtr& ring) {
  PolyMatrix m(ring, rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::vector<Term>> per(rows);
    for (const auto& t : cols[j]) per.at(t.comp).push_back({t.coef, t.exp});
    for (int i = 0; i < rows; ++i)
      if (!per[i].empty())
        m.at(i, static_cast<int>(j)) = MultiPoly::from_terms(ring, std::move(per[i]));
  }
  return m;
}

}  // namespace detail

/// Schreyer resolution of the submodule generated by `gens` inside R^rank
/// with generator twists `ambient_twists`: compute a Gröbner basis, sort it
/// by the component/degree/degrevlex rule, emit the Buchberger test
/// syzygies as the next stage's (already Gröbner) generators, iterate.
/// Terminates after at most n stages. The returned resolution's F_0 is the
/// ambient free module.
inline GradedFreeResolution schreyer_resolution(
    const std::vector<FreeModElem>& gens, int rank,
    std::vector<int> ambient_twists, bool graded, const RingPtr& R) {
  GradedFreeResolution res;
  res.ring = R;
  res.graded = graded;
  res.ranks.push_back(rank);
  if (graded) {
    if (static_cast<int>(ambient_twists.size()) != rank)
      throw MathError("ambient twist vector has wrong length");
    res.twists.push_back(ambient_twists);
  }
  if (gens.empty()) return res;

  auto ord = default_module_ordering(R);
  std::vector<detail::VecPoly> vp;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (graded) {
      int d = -1;
      for (const auto& [i, p] : g.components()) {
        if (!p.is_homogeneous())
          throw MathError("graded resolution requires homogeneous input");
        int dd = p.weighted_degree() + ambient_twists[i];
        if (d >= 0 && dd != d)
          throw MathError("graded resolution requires homogeneous input");
        d = dd;
      }
    }
    vp.push_back(detail::from_freemod(g, *ord));
  }
  if (vp.empty()) return res;

  // Stage 1 runs Buchberger; later stages are Gröbner by Schreyer's
  // corollary and only need the test syzygies.
  auto first = detail::buchberger_core(std::move(vp), *ord, R, false);
  std::vector<detail::VecPoly> gb;
  for (int idx : detail::minimal_subset(first.basis))
    gb.push_back(first.basis[idx]);

  int prev_rank = rank;
  std::vector<int> prev_twists = std::move(ambient_twists);
  while (!gb.empty()) {
    check_deadline("free resolution");
    detail::schreyer_sort(gb, R);
    res.differentials.push_back(detail::columns_to_matrix(gb, prev_rank, R));
    std::vector<int> twists;
    if (graded) {
      for (const auto& g : gb) {
        int comp = g.front().comp;
        twists.push_back(R->weighted_degree(g.front().exp) + prev_twists[comp]);
      }
      res.differentials.back().set_twists(prev_twists, twists);
      res.twists.push_back(twists);
    }
    res.ranks.push_back(static_cast<int>(gb.size()));
    if (res.length() > R->nvars())
      throw MathError("resolution exceeded the syzygy-theorem length bound");

    auto induced = detail::schreyer_ordering(gb, ord);
    gb = detail::test_syzygies(gb, *ord, induced, R);
    ord = induced;
    prev_rank = res.ranks.back();
    prev_twists = graded ? res.twists.back() : std::vector<int>{};
  }
  return res;
}

/// Free resolution of the quotient R/I (F_0 = R).
inline GradedFreeResolution free_resolution(const Ideal& I, bool graded = true) {
  const RingPtr& R = I.ring();
  if (graded)
    for (const auto& g : I.generators())
      if (!g.is_homogeneous())
        throw MathError("graded resolution requires homogeneous input");
  std::vector<FreeModElem> gens;
  for (const auto& g : I.generators())
    gens.push_back(FreeModElem(R, 1, {{0, g}}));
  return schreyer_resolution(gens, 1, {0}, graded, R);
}

/// Free resolution of a subquotient: F_0 has one generator per column of A,
/// and the first differential is the presentation matrix.
inline GradedFreeResolution free_resolution(const Subquotient& M, bool graded = true) {
  const RingPtr& R = M.generators.ring();
  const int a = M.generators.cols();
  if (a == 0) {
    GradedFreeResolution res;
    res.ring = R;
    res.graded = graded;
    res.ranks.push_back(0);
    if (graded) res.twists.push_back({});
    return res;
  }
  std::vector<int> twists;
  if (graded) {
    for (int j = 0; j < a; ++j) {
      int d = 0;
      bool seen = false;
      for (int i = 0; i < M.ambient_rank; ++i) {
        const MultiPoly& e = M.generators.at(i, j);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous())
          throw MathError("graded resolution requires homogeneous input");
        if (seen && e.weighted_degree() != d)
          throw MathError("graded resolution requires homogeneous input");
        d = e.weighted_degree();
        seen = true;
      }
      twists.push_back(d);
    }
  }
  PolyMatrix pres = presentation(M);
  return schreyer_resolution(pres.columns(), a, twists, graded, R);
}

/// Gaussian elimination on the complex: repeatedly pivot out a unit entry
/// (a nonzero constant) of some differential, replacing the block D by
/// D - c u^{-1} b and dropping the pivot row/column pair; neighbors only
/// lose the corresponding column/row. Homology is unchanged and the result
/// has no unit entries (i.e. it is minimal).
inline GradedFreeResolution minimize(GradedFreeResolution res) {
  if (!res.graded) throw MathError("minimize requires a graded resolution");
  auto find_unit = [&](const PolyMatrix& m, int& pr, int& pc) {
    for (int j = 0; j < m.cols(); ++j)      // leftmost column first,
      for (int i = 0; i < m.rows(); ++i)    // then topmost row
        if (!m.at(i, j).is_zero() && m.at(i, j).is_constant()) {
          pr = i;
          pc = j;
          return true;
        }
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int d = 0; d < res.length(); ++d) {
      int pr, pc;
      if (!find_unit(res.differentials[d], pr, pc)) continue;
      changed = true;
      check_deadline("minimization");
      PolyMatrix& M = res.differentials[d];
      FieldElem uinv = M.at(pr, pc).constant_term().inverse();

      PolyMatrix next(res.ring, M.rows() - 1, M.cols() - 1);
      for (int i = 0, ii = 0; i < M.rows(); ++i) {
        if (i == pr) continue;
        for (int j = 0, jj = 0; j < M.cols(); ++j) {
          if (j == pc) continue;
          MultiPoly v = M.at(i, j);
          if (!M.at(i, pc).is_zero() && !M.at(pr, j).is_zero())
            v = v - M.at(i, pc).scaled(uinv) * M.at(pr, j);
          next.at(ii, jj) = std::move(v);
          ++jj;
        }
        ++ii;
      }

      std::vector<int> row_tw = res.twists[d];
      std::vector<int> col_tw = res.twists[d + 1];
      row_tw.erase(row_tw.begin() + pr);
      col_tw.erase(col_tw.begin() + pc);
      next.set_twists(row_tw, col_tw);
      res.differentials[d] = std::move(next);
      res.twists[d] = row_tw;
      res.twists[d + 1] = col_tw;
      res.ranks[d] -= 1;
      res.ranks[d + 1] -= 1;

      if (d > 0) {  // drop column pr of the previous differential
        PolyMatrix& P = res.differentials[d - 1];
        PolyMatrix np(res.ring, P.rows(), P.cols() - 1);
        for (int i = 0; i < P.rows(); ++i)
          for (int j = 0, jj = 0; j < P.cols(); ++j) {
            if (j == pr) continue;
            np.at(i, jj++) = P.at(i, j);
          }
        np.set_twists(res.twists[d - 1], res.twists[d]);
        P = std::move(np);
      }
      if (d + 1 < res.length()) {  // drop row pc of the next differential
        PolyMatrix& N = res.differentials[d + 1];
        PolyMatrix nn(res.ring, N.rows() - 1, N.cols());
        for (int i = 0, ii = 0; i < N.rows(); ++i) {
          if (i == pc) continue;
          for (int j = 0; j < N.cols(); ++j) nn.at(ii, j) = N.at(i, j);
          ++ii;
        }
        nn.set_twists(res.twists[d + 1], res.twists[d + 2]);
        N = std::move(nn);
      }
      break;  // rescan from the first differential
    }
  }
  while (res.length() > 0 && res.ranks.back() == 0) {
    res.differentials.pop_back();
    res.ranks.pop_back();
    if (res.graded) res.twists.pop_back();
  }
  return res;
}

/// Betti numbers read off a graded resolution's twists.
inline BettiTable betti_table(const GradedFreeResolution& res) {
  if (!res.graded) throw MathError("Betti table requires a graded resolution");
  BettiTable b;
  for (std::size_t i = 0; i < res.twists.size(); ++i)
    for (int j : res.twists[i]) b.entries[{static_cast<int>(i), j}] += 1;
  return b;
}

/// Minimal Betti numbers from a possibly non-minimal resolution, via the
/// dimensions of Tor: beta_{ij} = dim H_i(F (x) k)_j. The degree-j strand of
/// F (x) k keeps the constant parts of entries between equal twists.
inline BettiTable minimal_betti(const GradedFreeResolution& res) {
  if (!res.graded) throw MathError("minimal Betti requires a graded resolution");
  const Field k = res.ring->field();
  // strand_rank[i][j]: rank of the degree-j constant strand of differentials[i]
  auto strand_rank = [&](int d, int j) -> int {
    const PolyMatrix& m = res.differentials[d];
    std::vector<int> rows, cols;
    for (int i = 0; i < m.rows(); ++i)
      if (res.twists[d][i] == j) rows.push_back(i);
    for (int c = 0; c < m.cols(); ++c)
      if (res.twists[d + 1][c] == j) cols.push_back(c);
    if (rows.empty() || cols.empty()) return 0;
    std::vector<linalg::Row> mat(rows.size(), linalg::Row(cols.size(), FieldElem::zero(k)));
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) {
        const MultiPoly& e = m.at(rows[a], cols[b]);
        if (!e.is_zero() && e.is_constant()) mat[a][b] = e.constant_term();
      }
    return linalg::rank(std::move(mat));
  };
  BettiTable out;
  for (std::size_t i = 0; i < res.twists.size(); ++i) {
    std::map<int, long> counts;
    for (int j : res.twists[i]) counts[j] += 1;
    for (auto& [j, c] : counts) {
      long beta = c;
      if (i > 0) beta -= strand_rank(static_cast<int>(i) - 1, j);
      if (static_cast<int>(i) < res.length()) beta -= strand_rank(static_cast<int>(i), j);
      if (beta < 0) throw MathError("internal: negative Betti number");
      if (beta > 0) out.entries[{static_cast<int>(i), j}] = beta;
    }
  }
  return out;
}

namespace detail {

/// Combinatorial binomial C(m, k): zero when m < k or m < 0.
inline mpz_class binom(long m, int k) {
  if (m < k || m < 0) return 0;
  mpz_class num = 1;
  for (int i = 0; i < k; ++i) num *= mpz_class(m - i);
  mpz_class den = 1;
  for (int i = 2; i <= k; ++i) den *= i;
  return num / den;
}

}  // namespace detail

/// Hilbert function of the resolved module at degree d via the alternating
/// binomial formula H(d) = sum_i (-1)^i sum_j beta_{ij} C(d + n - j, n)
/// with n = (number of variables) - 1 and combinatorial binomials.
inline mpz_class hilbert_function(const GradedFreeResolution& res, long d) {
  if (!res.graded) throw MathError("Hilbert function requires a graded resolution");
  const int n = res.ring->nvars() - 1;
  mpz_class h = 0;
  int sign = 1;
  for (const auto& tw : res.twists) {
    for (int j : tw) h += sign * detail::binom(d - j + n, n);
    sign = -sign;
  }
  return h;
}

/// Hilbert polynomial and derived invariants. The binomials are read as
/// polynomials (1/n!) prod_{l=1..n} (t + l - j), which agree with the
/// function for d >> 0.
inline HilbertData hilbert_data(const GradedFreeResolution& res) {
  if (!res.graded) throw MathError("Hilbert data requires a graded resolution");
  const int n = res.ring->nvars() - 1;
  std::vector<mpq_class> P(static_cast<std::size_t>(n) + 1, mpq_class(0));
  mpz_class nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  int sign = 1;
  for (const auto& tw : res.twists) {
    for (int j : tw) {
      // prod_{l=1..n} (t + l - j)
      std::vector<mpq_class> prod{mpq_class(1)};
      for (int l = 1; l <= n; ++l) {
        std::vector<mpq_class> next(prod.size() + 1, mpq_class(0));
        for (std::size_t a = 0; a < prod.size(); ++a) {
          next[a] += prod[a] * (l - j);
          next[a + 1] += prod[a];
        }
        prod = std::move(next);
      }
      for (std::size_t a = 0; a < prod.size(); ++a)
        P[a] += sign * prod[a] / mpq_class(nfact);
    }
    sign = -sign;
  }
  while (!P.empty() && P.back() == 0) P.pop_back();
  HilbertData out;
  out.polynomial = P;
  if (P.empty()) return out;  // empty vanishing locus: dim -1 by convention
  out.dim = static_cast<int>(P.size()) - 1;
  mpz_class rfact = 1;
  for (int i = 2; i <= out.dim; ++i) rfact *= i;
  mpq_class lead = P.back() * rfact;
  if (lead.get_den() != 1)
    throw MathError("internal: non-integral Hilbert degree");
  out.degree = lead.get_num();
  mpq_class at0 = P[0];
  mpq_class genus = (out.dim % 2 == 0 ? 1 : -1) * (at0 - 1);
  if (genus.get_den() != 1)
    throw MathError("internal: non-integral arithmetic genus");
  out.arithmetic_genus = genus.get_num();
  return out;
}

/// Direct count of degree-d standard monomials of Lt(I): the dimension of
/// (R/I)_d. Used as the independent cross-check for the binomial formula.
inline long graded_dimension_by_staircase(const Ideal& I, int d) {
  const RingPtr& R = I.ring();
  std::vector<Exponents> lt;
  if (!I.is_zero_ideal()) {
    GroebnerBasis gb = buchberger(I, R->default_ordering());
    for (const auto& g : gb.elements) lt.push_back(g.leading_term(gb.ordering).exp);
  }
  const int n = R->nvars();
  long count = 0;
  Exponents cur(n, 0);
  // enumerate exponent vectors of weighted degree d
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n - 1) {
      if (remaining % R->weights()[var] != 0) return;
      cur[var] = remaining / R->weights()[var];
      for (const auto& e : lt)
        if (divides(e, cur)) {
          cur[var] = 0;
          return;
        }
      ++count;
      cur[var] = 0;
      return;
    }
    for (int k = 0; k * R->weights()[var] <= remaining; ++k) {
      cur[var] = k;
      rec(var + 1, remaining - k * R->weights()[var]);
    }
    cur[var] = 0;
  };
  if (d >= 0) rec(0, d);
  return count;
}

}  // namespace groebner

#endif  // GROEBNER_RESOLUTIONS_HPP
