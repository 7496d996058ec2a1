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
#include <string>
#include <vector>

#include "arrsheaf/arrangement.hpp"
#include "arrsheaf/rational.hpp"

namespace arrsheaf {

/// Rank-one local system with torsion monodromies t_i = exp(2*pi*i*a_i),
/// stored as the exponent tuple with every a_i canonicalized to [0, 1).
class LocalSystem {
 public:
  LocalSystem() = default;
  explicit LocalSystem(std::vector<Rational> exponents);
  static LocalSystem equal_monodromy(const Rational& s, int r);
  /// Parses "0,1/2,1/2"; throws ParseError on malformed entries.
  static LocalSystem parse_list(const std::string& csv);
  static LocalSystem from_json(const json& j);

  int r() const { return static_cast<int>(a_.size()); }
  const Rational& a(int i) const { return a_[i]; }
  const std::vector<Rational>& exponents() const { return a_; }

  bool all_zero() const;
  /// The common exponent when all entries coincide.
  std::optional<Rational> equal_value() const;

  std::string key() const { return join_rationals(a_); }
  json to_json() const;

 private:
  std::vector<Rational> a_;
};

struct EdgeProductResult {
  Rational sum_mod1;  // sum of exponents over the support, reduced mod 1
  bool is_one;        // true iff the monodromy product around the edge is 1
};

/// Pre: the edge is not the ambient space.
EdgeProductResult edge_product(const EdgePoset& poset, const LocalSystem& l, int edge_id);

/// Sub-tuple of exponents over a support set, in ascending index order
/// (the hyperplane order of the localized arrangement A_W).
LocalSystem restrict_edge(const LocalSystem& l, const std::vector<int>& support);

/// Induced system on a traced arrangement A^W: one exponent per restricted
/// hyperplane, the sum over its trace set, mod 1.
LocalSystem induce_edge(const LocalSystem& l, const Restriction& restriction);

/// Membership of L in the resonance set W(W): the restricted system lies in
/// the top jump locus of U_W. For a dense edge this is the product test; a
/// non-dense edge defers to the dense factor edges of the decomposition.
bool in_W(const Arrangement& a, const EdgePoset& poset, const LocalSystem& l, int edge_id);

/// W(W) minus the resonance sets of every other dense edge.
bool in_W_circ(const Arrangement& a, const EdgePoset& poset, const LocalSystem& l, int edge_id);

}  // namespace arrsheaf
