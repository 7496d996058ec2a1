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
#include <vector>

#include "arrsheaf/localcohom.hpp"

namespace arrsheaf {

/// One summand dim H^w(U_W, L_W) . [IC(Wbar, L^W)] of the lower bound.
struct Factor {
  int edge_id;
  LocalSystem induced;  // the system L^W on the traced arrangement A^W
  long long multiplicity;
};

/// One deletion-restriction step of the exact-length recursion.
struct RecursionStep {
  int depth;
  std::string context;  // which sub-arrangement the step applies to
  int deleted_index;
  long long len_deleted;
  long long len_restricted;
  std::optional<long long> difference;  // h3(U') + h2(U'') - h3(U) when computable
};

struct LengthReport {
  long long lower = 0;
  long long upper = 0;
  std::optional<long long> exact;
  bool partial = false;    // some local dimension stayed undetermined
  long long gap_bound = 0; // #(trivial monodromies), the jump-loci gap bound
  std::vector<Factor> factors;                    // valid when the bound is an equality
  std::vector<std::pair<int, LocalDim>> edge_dims;
  std::vector<RecursionStep> trace;

  json to_json(const EdgePoset& poset) const;
};

struct LengthOptions {
  StrategyOptions strategy;
  std::map<int, long long> user_dims;  // by edge id of the input poset
  bool exhaustive = false;  // cross-check every deletion order in the recursion
};

/// The edge-sum lower bound with the factor list. Pre: essential.
LengthReport lower_bound(const Arrangement& a, const LocalSystem& l, Workspace& ws,
                         const LengthOptions& opt = {});

/// Length of the constant-sheaf direct image: sum of |mu| over all edges.
/// Also the universal upper bound over all rank-one systems. Pre: essential.
long long constant_length(const Arrangement& a, Workspace& ws);

/// Length-one test: no dense edge has monodromy product 1. Pre: central.
bool is_length_one(const Arrangement& a, const LocalSystem& l, Workspace& ws);

struct LengthTwoResult {
  bool is_two = false;
  std::optional<int> witness;    // the unique resonating dense edge
  std::vector<Factor> factors;   // [IC(C^n, L), IC(Wbar, L^W)] when is_two
};

/// Length-two test with witness. Pre: essential.
LengthTwoResult is_length_two(const Arrangement& a, const LocalSystem& l, Workspace& ws);

/// 1 + |chi(P(U_W))|. Pre: L lies in W(W) and outside every other dense
/// resonance set (checked; PreconditionError otherwise).
long long length_Wcirc(const Arrangement& a, const LocalSystem& l, int edge_id, Workspace& ws);

/// Exact length in ambient dimension <= 3: direct summation when every
/// monodromy is non-trivial, deletion-restriction recursion otherwise.
/// Pre: essential, n <= 3, torsion L.
LengthReport exact_length(const Arrangement& a, const LocalSystem& l, Workspace& ws,
                          const LengthOptions& opt = {});

}  // namespace arrsheaf
