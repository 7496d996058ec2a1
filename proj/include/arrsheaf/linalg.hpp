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
#pragma once

#include <optional>
#include <vector>

#include "arrsheaf/rational.hpp"

namespace arrsheaf {

/// Rank by fraction-free (Bareiss) elimination with column pivot skipping.
/// Works over any exact field value type providing +,-,*,/ and is_zero().
/// Deterministic: the first non-zero entry in each column is the pivot.
template <class F>
int rank_exact(std::vector<std::vector<F>> a) {
  const int nr = static_cast<int>(a.size());
  const int nc = nr ? static_cast<int>(a[0].size()) : 0;
  int row = 0;
  F prev{};
  bool have_prev = false;
  for (int col = 0; col < nc && row < nr; ++col) {
    int p = -1;
    for (int i = row; i < nr; ++i)
      if (!is_zero(a[i][col])) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    for (int i = row + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j) {
        F num = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        a[i][j] = have_prev ? num / prev : num;
      }
      a[i][col] = F{};
    }
    prev = a[row][col];
    have_prev = true;
    ++row;
  }
  return row;
}

/// Point plus direction basis of the solution set of rows * x = rhs.
struct AffineSolution {
  std::vector<Rational> point;
  std::vector<std::vector<Rational>> kernel;  // basis of the homogeneous part
  int dim() const { return static_cast<int>(kernel.size()); }
};

/// Solves an affine system over Q in n unknowns; nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(std::vector<std::vector<Rational>> rows,
                                           std::vector<Rational> rhs, int n);

int rank_rational(const std::vector<std::vector<Rational>>& rows);

}  // namespace arrsheaf
