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
#include "arrsheaf/localsys.hpp"

#include <sstream>

#include "arrsheaf/errors.hpp"

namespace arrsheaf {

LocalSystem::LocalSystem(std::vector<Rational> exponents) : a_(std::move(exponents)) {
  for (auto& x : a_) x = x.mod1();
}

LocalSystem LocalSystem::equal_monodromy(const Rational& s, int r) {
  return LocalSystem(std::vector<Rational>(r, s));
}

LocalSystem LocalSystem::parse_list(const std::string& csv) {
  std::vector<Rational> xs;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) xs.push_back(Rational::parse(token));
  if (xs.empty()) throw ParseError("empty local-system list");
  return LocalSystem(std::move(xs));
}

LocalSystem LocalSystem::from_json(const json& j) {
  if (!j.is_array()) throw ParseError("local system must be a JSON array");
  std::vector<Rational> xs;
  for (const auto& v : j) xs.push_back(rational_from_json(v));
  if (xs.empty()) throw ParseError("empty local-system array");
  return LocalSystem(std::move(xs));
}

bool LocalSystem::all_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Rational> LocalSystem::equal_value() const {
  if (a_.empty()) return std::nullopt;
  for (const auto& x : a_)
    if (x != a_[0]) return std::nullopt;
  return a_[0];
}

json LocalSystem::to_json() const {
  json out = json::array();
  for (const auto& x : a_) out.push_back(x.str());
  return out;
}

EdgeProductResult edge_product(const EdgePoset& poset, const LocalSystem& l, int edge_id) {
  if (edge_id == poset.ambient_id())
    throw PreconditionError("edge_product is undefined for the ambient edge");
  Rational sum(0);
  for (int i : poset.edge(edge_id).support) sum += l.a(i);
  const Rational reduced = sum.mod1();
  return EdgeProductResult{reduced, reduced.is_zero()};
}

LocalSystem restrict_edge(const LocalSystem& l, const std::vector<int>& support) {
  std::vector<Rational> xs;
  xs.reserve(support.size());
  for (int i : support) xs.push_back(l.a(i));
  return LocalSystem(std::move(xs));
}

LocalSystem induce_edge(const LocalSystem& l, const Restriction& restriction) {
  std::vector<Rational> xs;
  xs.reserve(restriction.trace.size());
  for (const auto& group : restriction.trace) {
    Rational sum(0);
    for (int j : group) sum += l.a(j);
    xs.push_back(sum.mod1());
  }
  return LocalSystem(std::move(xs));
}

bool in_W(const Arrangement& a, const EdgePoset& poset, const LocalSystem& l, int edge_id) {
  if (edge_id == poset.ambient_id()) return true;
  if (poset.is_dense(edge_id)) return edge_product(poset, l, edge_id).is_one;
  // U_W splits as a product over the matroid factors of A_W; each factor is
  // a dense edge whose support is the factor index set.
  const Localization loc = localize(a, poset.edge(edge_id));
  for (const auto& comp : decompose(loc.closed)) {
    Rational sum(0);
    for (int local : comp) sum += l.a(loc.support[local]);
    if (!sum.mod1().is_zero()) return false;
  }
  return true;
}

bool in_W_circ(const Arrangement& a, const EdgePoset& poset, const LocalSystem& l, int edge_id) {
  if (!in_W(a, poset, l, edge_id)) return false;
  for (int d : poset.dense_edges()) {
    if (d == edge_id) continue;
    if (edge_product(poset, l, d).is_one) return false;
  }
  return true;
}

}  // namespace arrsheaf
