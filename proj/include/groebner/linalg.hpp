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

#ifndef GROEBNER_LINALG_HPP
#define GROEBNER_LINALG_HPP

#include <vector>

#include "groebner/fields.hpp"

namespace groebner {
namespace linalg {

using Row = std::vector<FieldElem>;

/// In-place reduced row echelon form; returns the pivot column per row kept.
/// Exact Gaussian elimination, first-nonzero pivoting (deterministic).
inline std::vector<int> rref(std::vector<Row>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t ncols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    FieldElem inv = m[row][col].inverse();
    for (auto& e : m[row]) e = e * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      FieldElem f = m[r][col];
      for (std::size_t c = 0; c < ncols; ++c)
        m[r][c] = m[r][c] - f * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);  // drop zero rows
  return pivots;
}

inline int rank(std::vector<Row> m) { return static_cast<int>(rref(m).size()); }

}  // namespace linalg
}  // namespace groebner

#endif  // GROEBNER_LINALG_HPP
