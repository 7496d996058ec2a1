/* Copyright (C) 2026 arrsheaf developers
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "arrsheaf/linalg.hpp"

namespace arrsheaf {

std::optional<AffineSolution> solve_affine(std::vector<std::vector<Rational>> rows,
                                           std::vector<Rational> rhs, int n) {
  const int nr = static_cast<int>(rows.size());
  // reduced row echelon form on [rows | rhs]
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < nr; ++col) {
    int p = -1;
    for (int i = row; i < nr; ++i)
      if (!rows[i][col].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(rows[p], rows[row]);
    std::swap(rhs[p], rhs[row]);
    const Rational inv = Rational(1) / rows[row][col];
    for (int j = col; j < n; ++j) rows[row][j] *= inv;
    rhs[row] *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == row || rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col];
      for (int j = col; j < n; ++j) rows[i][j] -= f * rows[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < nr; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;

  AffineSolution sol;
  sol.point.assign(n, Rational(0));
  for (int i = 0; i < row; ++i) sol.point[pivot_col[i]] = rhs[i];
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[c] = Rational(1);
    for (int i = 0; i < row; ++i) v[pivot_col[i]] = -rows[i][c];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

int rank_rational(const std::vector<std::vector<Rational>>& rows) {
  return rank_exact<Rational>(rows);
}

}  // namespace arrsheaf
