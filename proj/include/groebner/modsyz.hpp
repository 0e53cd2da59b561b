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

#ifndef GROEBNER_MODSYZ_HPP
#define GROEBNER_MODSYZ_HPP

#include "groebner/gbasis.hpp"

namespace groebner {

/// Dense matrix of polynomials. Columns are module elements (the internal
/// convention is column vectors acted on from the left; the session I/O
/// layer transposes where its row convention requires it). Optional twist
/// vectors make the matrix graded: entry (i,j) is zero or homogeneous of
/// degree col_twists[j] - row_twists[i].
class PolyMatrix {
 public:
  PolyMatrix() = default;

  PolyMatrix(RingPtr ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * cols, MultiPoly::zero(ring_)) {
    if (rows < 0 || cols < 0) throw MathError("negative matrix size");
  }

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const MultiPoly& at(int i, int j) const { return entries_[index(i, j)]; }
  MultiPoly& at(int i, int j) { return entries_[index(i, j)]; }

  const std::vector<int>& row_twists() const { return row_twists_; }
  const std::vector<int>& col_twists() const { return col_twists_; }

  void set_twists(std::vector<int> row_twists, std::vector<int> col_twists) {
    if (static_cast<int>(row_twists.size()) != rows_ ||
        static_cast<int>(col_twists.size()) != cols_)
      throw MathError("twist vector length mismatch");
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const MultiPoly& e = at(i, j);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous() ||
            e.weighted_degree() != col_twists[j] - row_twists[i])
          throw MathError("matrix entry is not homogeneous of the twist-implied degree");
      }
    row_twists_ = std::move(row_twists);
    col_twists_ = std::move(col_twists);
  }

  bool is_graded() const { return !row_twists_.empty() || rows_ == 0; }

  FreeModElem column(int j) const {
    std::vector<std::pair<int, MultiPoly>> comps;
    for (int i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) comps.emplace_back(i, at(i, j));
    return FreeModElem(ring_, std::max(rows_, 1), std::move(comps));
  }

  std::vector<FreeModElem> columns() const {
    std::vector<FreeModElem> out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  static PolyMatrix from_columns(const RingPtr& ring, int rows,
                                 const std::vector<FreeModElem>& cols) {
    PolyMatrix m(ring, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
      if (cols[j].rank() != std::max(rows, 1) && !(rows == 0 && cols.empty()))
        throw MathError("column rank mismatch");
      for (const auto& [i, p] : cols[j].components()) m.at(i, j) = p;
    }
    return m;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_ring(a.ring_, b.ring_);
    if (a.cols_ != b.rows_) throw MathError("matrix dimension mismatch");
    PolyMatrix c(a.ring_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        MultiPoly s = MultiPoly::zero(a.ring_);
        for (int k = 0; k < a.cols_; ++k) {
          if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
          s = s + a.at(i, k) * b.at(k, j);
        }
        c.at(i, j) = std::move(s);
      }
    return c;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  PolyMatrix submatrix(int row0, int nrows, int col0, int ncols) const {
    PolyMatrix m(ring_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) m.at(i, j) = at(row0 + i, col0 + j);
    return m;
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw MathError("matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<MultiPoly> entries_;
  std::vector<int> row_twists_, col_twists_;
};

/// Gröbner basis of a submodule of a free module, carrying its ordering.
struct ModuleGB {
  std::shared_ptr<const ModuleOrdering> ordering;
  int rank = 1;
  std::vector<FreeModElem> elements;
};

/// subquo(A, B) = (im A + im B)/im B inside the ambient free module R^s.
struct Subquotient {
  int ambient_rank = 1;
  PolyMatrix generators;  // s x a
  PolyMatrix relations;   // s x b

  Subquotient(PolyMatrix gens, PolyMatrix rels)
      : ambient_rank(gens.rows()), generators(std::move(gens)),
        relations(std::move(rels)) {
    if (relations.cols() > 0 && relations.rows() != generators.rows())
      throw MathError("generator and relation matrices need equal ambient rank");
  }
};

/// Minimal Gröbner basis of the submodule generated by `gens` under a global
/// module ordering.
inline ModuleGB module_buchberger(const std::vector<FreeModElem>& gens,
                                  std::shared_ptr<const ModuleOrdering> ord) {
  if (gens.empty()) throw MathError("module Buchberger needs generators");
  const RingPtr& R = gens[0].ring();
  if (!ord->is_global(R->nvars()))
    throw MathError("module Buchberger requires a global ordering");
  int rank = gens[0].rank();
  std::vector<detail::VecPoly> vp;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw MathError("rank mismatch");
    if (g.is_zero()) throw MathError("zero generator");
    vp.push_back(detail::from_freemod(g, *ord));
  }
  auto res = detail::buchberger_core(std::move(vp), *ord, R, false);
  ModuleGB out;
  out.ordering = std::move(ord);
  out.rank = rank;
  for (int idx : detail::minimal_subset(res.basis))
    out.elements.push_back(detail::to_freemod(res.basis[idx], R, rank));
  return out;
}

namespace detail {

inline std::shared_ptr<const ModuleOrdering> schreyer_ordering(
    const std::vector<VecPoly>& images,
    std::shared_ptr<const ModuleOrdering> parent) {
  std::vector<Exponents> exps;
  std::vector<int> comps;
  for (const auto& f : images) {
    if (f.empty()) throw MathError("Schreyer ordering needs nonzero images");
    exps.push_back(f.front().exp);
    comps.push_back(f.front().comp);
  }
  return std::make_shared<const ModuleOrdering>(ModuleOrdering::schreyer(
      std::move(parent), std::move(exps), std::move(comps)));
}

/// Buchberger test syzygies of a Gröbner basis: for each i and each minimal
/// generator x^alpha of M_i, the division x^alpha f_i = sum g_j f_j with
/// remainder zero yields the syzygy x^alpha e_i - sum g_j e_j, whose leading
/// term under the induced ordering is x^alpha e_i. Errors if a remainder is
/// nonzero (the input was not a Gröbner basis).
inline std::vector<VecPoly> test_syzygies(
    const std::vector<VecPoly>& basis, const ModuleOrdering& ord,
    const std::shared_ptr<const ModuleOrdering>& induced, const RingPtr& ring) {
  std::vector<const VecPoly*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  std::vector<VecPoly> out;
  for (std::size_t i = 1; i < basis.size(); ++i) {
    for (const auto& alpha : colon_min_gens(basis, static_cast<int>(i))) {
      check_deadline("syzygy extraction");
      VecPoly dividend = basis[i];
      for (auto& x : dividend) x.exp = exp_add(x.exp, alpha);
      DivisionOutput d = divide_vp(dividend, ptrs, ord);
      if (!d.remainder.empty())
        throw MathError("input is not a Groebner basis (criterion failed)");
      VecPoly syz;
      syz.push_back({FieldElem::one(ring->field()), alpha, static_cast<int>(i)});
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& t : d.quot_terms[j])
          syz.push_back({-t.coef, t.exp, static_cast<int>(j)});
      out.push_back(vp_canonicalize(std::move(syz), *induced));
    }
  }
  return out;
}

}  // namespace detail

/// Schreyer's corollary: the Buchberger test syzygies of a Gröbner basis G
/// in F form a Gröbner basis of the kernel of R^r -> F, e_i -> g_i, with
/// respect to the induced ordering.
inline ModuleGB schreyer_syzygies(const ModuleGB& G) {
  if (G.elements.empty()) throw MathError("empty basis");
  const RingPtr& R = G.elements[0].ring();
  std::vector<detail::VecPoly> basis;
  for (const auto& g : G.elements)
    basis.push_back(detail::from_freemod(g, *G.ordering));
  auto induced = detail::schreyer_ordering(basis, G.ordering);
  auto syz = detail::test_syzygies(basis, *G.ordering, induced, R);
  ModuleGB out;
  out.ordering = induced;
  out.rank = static_cast<int>(G.elements.size());
  for (const auto& s : syz)
    out.elements.push_back(detail::to_freemod(s, R, out.rank));
  return out;
}

/// Rank-1 convenience: test syzygies of an ideal's Gröbner basis.
inline ModuleGB schreyer_syzygies(const GroebnerBasis& G, const RingPtr& ring) {
  ModuleGB mg;
  mg.ordering = std::make_shared<const ModuleOrdering>(
      ModuleOrdering::top(G.ordering));
  mg.rank = 1;
  for (const auto& g : G.elements)
    mg.elements.push_back(FreeModElem(ring, 1, {{0, g}}));
  return schreyer_syzygies(mg);
}

/// Syzygies on arbitrary generators: extend to a Gröbner basis while
/// recording every Buchberger test, sort the test syzygies so that the ones
/// which produced new basis elements come first, and cancel the new rows
/// through the unit upper-triangular block:  psi = B - A C^{-1} D.
/// Columns of the result generate ker(R^r -> F, e_i -> f_i). Zero input
/// generators contribute unit syzygy columns.
inline PolyMatrix syzygies_on_generators(
    const std::vector<FreeModElem>& gens,
    std::shared_ptr<const ModuleOrdering> ord) {
  if (gens.empty()) throw MathError("no generators");
  const RingPtr& R = gens[0].ring();
  if (!ord->is_global(R->nvars()))
    throw MathError("syzygy computation requires a global ordering");
  const int r = static_cast<int>(gens.size());
  int rank = gens[0].rank();

  std::vector<int> zero_pos;
  std::vector<detail::VecPoly> vp;
  std::vector<int> orig_of;  // engine index -> original index
  for (int i = 0; i < r; ++i) {
    if (gens[i].rank() != rank) throw MathError("rank mismatch");
    if (gens[i].is_zero()) {
      zero_pos.push_back(i);
    } else {
      vp.push_back(detail::from_freemod(gens[i], *ord));
      orig_of.push_back(i);
    }
  }

  std::vector<std::vector<MultiPoly>> syz_cols;  // length r each
  if (!vp.empty()) {
    auto res = detail::buchberger_core(std::move(vp), *ord, R, true);
    const int nr = static_cast<int>(res.basis.size());      // r' total
    const int nin = res.input_count;                        // nonzero inputs
    const int nnew = nr - nin;

    // Assemble psi' columns over R^{r'}: producers first, in production
    // order (unit triangular new-row block), then the reducing tests.
    std::vector<std::vector<MultiPoly>> producers, others;
    for (const auto& t : res.tests) {
      std::vector<MultiPoly> col(nr, MultiPoly::zero(R));
      col[t.i] = MultiPoly::monomial(R, t.alpha, FieldElem::one(R->field()));
      for (std::size_t j = 0; j < t.quot_terms.size(); ++j) {
        if (t.quot_terms[j].empty()) continue;
        auto q = MultiPoly::from_terms(R, t.quot_terms[j]);
        col[j] = col[j] - q;
      }
      if (t.produced >= 0) {
        col[t.produced] = col[t.produced] - MultiPoly::constant(R, 1);
        // negate so the diagonal of C becomes +1
        for (auto& e : col) e = -e;
        producers.push_back(std::move(col));
      } else {
        others.push_back(std::move(col));
      }
    }
    if (static_cast<int>(producers.size()) != nnew)
      throw MathError("internal: producer count mismatch");

    // C (nnew x nnew, unit upper triangular) and D (nnew x t) are the
    // new-element rows; A and B the original rows. Solve C X = D by back
    // substitution, then psi = B - A X.
    auto lower = [&](const std::vector<MultiPoly>& col, int k) -> const MultiPoly& {
      return col[nin + k];
    };
    const int t = static_cast<int>(others.size());
    std::vector<std::vector<MultiPoly>> X(
        t, std::vector<MultiPoly>(nnew, MultiPoly::zero(R)));
    for (int c = 0; c < t; ++c) {
      for (int k = nnew - 1; k >= 0; --k) {
        MultiPoly v = lower(others[c], k);
        for (int j = k + 1; j < nnew; ++j) {
          if (lower(producers[j], k).is_zero() || X[c][j].is_zero()) continue;
          v = v - lower(producers[j], k) * X[c][j];
        }
        X[c][k] = std::move(v);
      }
    }
    for (int c = 0; c < t; ++c) {
      std::vector<MultiPoly> col(r, MultiPoly::zero(R));
      for (int i = 0; i < nin; ++i) {
        MultiPoly v = others[c][i];
        for (int k = 0; k < nnew; ++k) {
          if (producers[k][i].is_zero() || X[c][k].is_zero()) continue;
          v = v - producers[k][i] * X[c][k];
        }
        col[orig_of[i]] = std::move(v);
      }
      bool nonzero = false;
      for (const auto& e : col) nonzero = nonzero || !e.is_zero();
      if (nonzero) syz_cols.push_back(std::move(col));
    }
  }
  for (int i : zero_pos) {
    std::vector<MultiPoly> col(r, MultiPoly::zero(R));
    col[i] = MultiPoly::constant(R, 1);
    syz_cols.push_back(std::move(col));
  }

  PolyMatrix psi(R, r, static_cast<int>(syz_cols.size()));
  for (int j = 0; j < psi.cols(); ++j)
    for (int i = 0; i < r; ++i) psi.at(i, j) = syz_cols[j][i];
  return psi;
}

inline std::shared_ptr<const ModuleOrdering> default_module_ordering(
    const RingPtr& ring) {
  return std::make_shared<const ModuleOrdering>(
      ModuleOrdering::top(ring->default_ordering()));
}

inline PolyMatrix syzygies_on_generators(const std::vector<FreeModElem>& gens) {
  if (gens.empty()) throw MathError("no generators");
  return syzygies_on_generators(gens, default_module_ordering(gens[0].ring()));
}

/// Syzygies of ring elements (rank-1 case).
inline PolyMatrix syzygies_on_generators(const std::vector<MultiPoly>& gens) {
  if (gens.empty()) throw MathError("no generators");
  const RingPtr& R = gens[0].ring();
  std::vector<FreeModElem> v;
  for (const auto& g : gens) v.push_back(FreeModElem(R, 1, {{0, g}}));
  return syzygies_on_generators(v);
}

inline PolyMatrix concat_columns(const PolyMatrix& a, const PolyMatrix& b) {
  check_same_ring(a.ring(), b.ring());
  if (a.rows() != b.rows()) throw MathError("row count mismatch");
  PolyMatrix m(a.ring(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

/// Presentation of a subquotient: the A-block rows of the syzygies of (A|B)
/// present M = subquo(A,B) as coker.
inline PolyMatrix presentation(const Subquotient& M) {
  const RingPtr& R = M.generators.ring();
  PolyMatrix ab = M.relations.cols() > 0
      ? concat_columns(M.generators, M.relations)
      : M.generators;
  if (ab.cols() == 0) return PolyMatrix(R, 0, 0);
  PolyMatrix syz = syzygies_on_generators(ab.columns());
  return syz.submatrix(0, M.generators.cols(), 0, syz.cols());
}

/// Kernel of a map between finitely presented modules, given the lift
/// phi0 : R^{r0} -> R^{s0} of the map on generators, the presentation psi of
/// the target and the presentation phiM of the source. Returns generators of
/// the kernel (columns, in source generator coordinates) and a presentation
/// matrix of the kernel module.
struct KernelResult {
  PolyMatrix generators;    // r0 x t0
  PolyMatrix presentation;  // t0 x t1
};

inline KernelResult kernel(const PolyMatrix& phi0, const PolyMatrix& psi,
                           const PolyMatrix& phiM) {
  const RingPtr& R = phi0.ring();
  if (psi.cols() > 0 && psi.rows() != phi0.rows())
    throw MathError("target presentation has wrong ambient rank");
  if (phiM.cols() > 0 && phiM.rows() != phi0.cols())
    throw MathError("source presentation has wrong ambient rank");
  const int r0 = phi0.cols();

  // Step 1: syzygies of (phi0 | psi); the top block A maps onto the
  // preimage of im(psi), i.e. generators of ker in M's coordinates.
  PolyMatrix step1 = psi.cols() > 0 ? concat_columns(phi0, psi) : phi0;
  PolyMatrix syz1 = syzygies_on_generators(step1.columns());
  PolyMatrix A = syz1.submatrix(0, r0, 0, syz1.cols());

  // Step 2: syzygies of (A | phiM); the top block C presents ker.
  PolyMatrix step2 = phiM.cols() > 0 ? concat_columns(A, phiM) : A;
  KernelResult out{A, PolyMatrix(R, A.cols(), 0)};
  if (step2.cols() > 0) {
    PolyMatrix syz2 = syzygies_on_generators(step2.columns());
    out.presentation = syz2.submatrix(0, A.cols(), 0, syz2.cols());
  }
  return out;
}

}  // namespace groebner

#endif  // GROEBNER_MODSYZ_HPP
