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

#include <string>
#include <vector>

#include "arrsheaf/length.hpp"

namespace arrsheaf {

/// Non-negative conormal multiplicities indexed by poset edge id.
struct CharCycle {
  std::vector<long long> mult;

  long long at(int edge_id) const { return mult[edge_id]; }
  bool operator==(const CharCycle& o) const { return mult == o.mult; }
  json to_json(const EdgePoset& poset) const;
};

/// Intersection-cohomology Betti numbers in the ordinary indexing
/// IH^0..IH^n, plus chi of the shifted IC complex. The alternating sum
/// satisfies sum_k (-1)^k IH^k = (-1)^n euler.
struct IHBetti {
  std::vector<long long> dims;
  long long euler = 0;
  json to_json() const;
};

/// CC(Rj_* L[n]) = CC(Rj_* C_U[n]): multiplicity |mu(W)| on every conormal.
/// Pre: essential, n <= 3.
CharCycle cc_pushforward(const Arrangement& a, Workspace& ws);

/// CC(j_!*(L[2])) for an essential line arrangement. Pre: n == 2.
CharCycle cc_ic_dim2(const Arrangement& a, const LocalSystem& l, Workspace& ws);

/// IH^*(C^2, L): IH^1 is h^1 of the complement of the sub-arrangement
/// carrying the non-trivial monodromies; IH^2 closes the Euler identity.
IHBetti ih_dim2(const Arrangement& a, const LocalSystem& l, Workspace& ws);

/// CC(j_!*(L_s[3])) for equal monodromy s != 0 on a central essential cone.
CharCycle cc_ic_dim3_equal(const Arrangement& a, const Rational& s, Workspace& ws,
                           const StrategyOptions& opt = {});

IHBetti ih_dim3_equal(const Arrangement& a, const Rational& s, Workspace& ws,
                      const StrategyOptions& opt = {});

/// The pushforward cycle reassembled from its intersection-complex pieces
/// (the additivity identity in the equal-monodromy regime).
CharCycle assemble_pushforward_dim3_equal(const Arrangement& a, const Rational& s,
                                          Workspace& ws, const StrategyOptions& opt = {});

/// Same reassembly for line arrangements, for arbitrary torsion systems.
CharCycle assemble_pushforward_dim2(const Arrangement& a, const LocalSystem& l, Workspace& ws);

/// Dual-route comparison of the triple-point formulas: the verbatim
/// four-case table against the characteristic-cycle route driven by the
/// Delta polynomials, with disagreements flagged rather than resolved.
struct PsQuantity {
  std::string name;
  long long verbatim;
  long long route;
  bool agree() const { return verbatim == route; }
};

struct PsReport {
  int case_id = 0;  // 1: s^r!=1,s^3!=1; 2: s^r=1,s^3!=1; 3: s^r!=1,s^3=1; 4: both
  long long r = 0, n3 = 0;
  int beta3 = 0;
  std::vector<PsQuantity> quantities;  // cc_origin, chi_ic, ih1, ih2, length
  std::vector<std::string> flags;
  json to_json() const;
};

/// Pre: central essential in C^3, multiplicities <= 3, equal monodromy s != 0.
PsReport ps_report(const Arrangement& a, const Rational& s, Workspace& ws,
                   const StrategyOptions& opt = {});

}  // namespace arrsheaf
