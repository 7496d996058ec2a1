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

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "arrsheaf/arrangement.hpp"
#include "arrsheaf/intpoly.hpp"
#include "arrsheaf/localsys.hpp"
#include "arrsheaf/workspace.hpp"

namespace arrsheaf {

enum class Provenance { combinatorial, oracle, user, unknown };
const char* provenance_name(Provenance p);

/// A local cohomology dimension together with where it came from.
struct LocalDim {
  std::optional<long long> value;
  Provenance prov = Provenance::unknown;
  std::string rule;  // which strategy produced the value

  bool determined() const { return value.has_value(); }
  static LocalDim of(long long v, Provenance p, std::string rule);
  static LocalDim none();
};

/// Strategy knobs for the dimension engine. The rule order itself is fixed:
/// vanishing -> decomposition -> W(W)-circ -> Delta^2 -> oracle -> user.
struct StrategyOptions {
  bool allow_oracle = true;
  std::optional<int> beta3_override;
};

/// dim H^w(U_W, L_W) for a central essential arrangement in C^w, w <= 3.
/// The optional user_value is consulted only after every other rule fails.
LocalDim local_top_dim(const Arrangement& aw, const LocalSystem& lw, Workspace& ws,
                       const StrategyOptions& opt = {},
                       std::optional<long long> user_value = std::nullopt);

/// chi(F)/r = -2r + 3 + sum_j (m_j - 1) over the 1-dimensional edges.
/// Pre: central essential in C^3.
long long chiF_over_r(const Arrangement& a, Workspace& ws);

/// Number of 1-dimensional edges of multiplicity exactly 3.
long long n3_count(const Arrangement& a, Workspace& ws);

/// The mod-3 Aomoto invariant: dim_{F_3} H^1 of A^0 -> A^1 -> A^2 of the
/// Orlik-Solomon algebra over F_3, differential = multiplication by the sum
/// of the generators. Pre: central essential in C^3, multiplicities <= 3.
int beta3(const Arrangement& a, Workspace& ws);

/// Milnor-fiber package for triple-point cones.
struct MilnorData {
  long long chi_over_r = 0;
  long long n3 = 0;
  int beta3 = 0;
  Provenance beta3_prov = Provenance::combinatorial;
  FactoredPoly delta0, delta1, delta2;
};

/// Delta^0 = t-1, Delta^1 = (t-1)^{r-1} (t^2+t+1)^{beta3},
/// Delta^2 = (t-1)^{r-2} (t^r-1)^{C(r-2,2)-n3} (t^2+t+1)^{beta3}.
/// Pre: central essential in C^3, all multiplicities in {2, 3}.
MilnorData delta_polynomials(const Arrangement& a, Workspace& ws,
                             std::optional<int> beta3_override = std::nullopt);

/// (dim H^1(F)_s, dim H^2(F)_s) for the eigenvalue exp(2*pi*i*s), s != 0:
/// root multiplicities in Delta^1, Delta^2 when multiplicities are <= 3,
/// otherwise the deconed oracle (zero when s*r is not an integer).
std::pair<LocalDim, LocalDim> eigenspace_dims(const Arrangement& a, const Rational& s,
                                              Workspace& ws, const StrategyOptions& opt = {});

/// dim H^3(U, L) of the full complement of a central arrangement in C^3
/// (essentialized internally; zero when the rank is below 3).
LocalDim complement_h3(const Arrangement& a, const LocalSystem& l, Workspace& ws,
                       const StrategyOptions& opt = {});

}  // namespace arrsheaf
