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

#include "arrsheaf/arrangement.hpp"

namespace arrsheaf::testing {

inline Arrangement make(int n, const std::vector<std::vector<std::string>>& rows) {
  std::vector<Hyperplane> hs;
  for (const auto& r : rows) {
    Hyperplane h;
    for (int k = 0; k < n; ++k) h.normal.push_back(Rational::parse(r[k]));
    h.c0 = Rational::parse(r[n]);
    hs.push_back(std::move(h));
  }
  return Arrangement::from_forms(n, std::move(hs));
}

// {x, y, z}
inline Arrangement boolean3() {
  return make(3, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}});
}

// essentialized braid {x, y, z, x-y, x-z, y-z}
inline Arrangement braid() {
  return make(3, {{"1", "0", "0", "0"},
                  {"0", "1", "0", "0"},
                  {"0", "0", "1", "0"},
                  {"1", "-1", "0", "0"},
                  {"1", "0", "-1", "0"},
                  {"0", "1", "-1", "0"}});
}

// {z, x-z, x+z, y-z, y+z}
inline Arrangement cone5() {
  return make(3, {{"0", "0", "1", "0"},
                  {"1", "0", "-1", "0"},
                  {"1", "0", "1", "0"},
                  {"0", "1", "-1", "0"},
                  {"0", "1", "1", "0"}});
}

// {x-z, x+z, y-z, y+z}
inline Arrangement cone4() {
  return make(3, {{"1", "0", "-1", "0"},
                  {"1", "0", "1", "0"},
                  {"0", "1", "-1", "0"},
                  {"0", "1", "1", "0"}});
}

// cone over four generic lines: no triple points
inline Arrangement cone4_generic() {
  return make(3, {{"1", "0", "0", "0"},
                  {"0", "1", "0", "0"},
                  {"0", "0", "1", "0"},
                  {"1", "1", "1", "0"}});
}

// braid plus a generic plane through the origin: r = 7, n3 = 4, 3 does not divide r
inline Arrangement cone7() {
  auto rows = std::vector<std::vector<std::string>>{{"1", "0", "0", "0"},
                                                    {"0", "1", "0", "0"},
                                                    {"0", "0", "1", "0"},
                                                    {"1", "-1", "0", "0"},
                                                    {"1", "0", "-1", "0"},
                                                    {"0", "1", "-1", "0"},
                                                    {"1", "2", "4", "0"}};
  return make(3, rows);
}

// line arrangements in C^2
inline Arrangement one_line() { return make(2, {{"1", "0", "0"}}); }
inline Arrangement two_crossing() { return make(2, {{"1", "0", "0"}, {"0", "1", "0"}}); }
inline Arrangement two_parallel() { return make(2, {{"1", "0", "0"}, {"1", "0", "-1"}}); }
inline Arrangement three_generic() {
  return make(2, {{"1", "0", "0"}, {"0", "1", "0"}, {"1", "1", "-1"}});
}
inline Arrangement three_concurrent() {
  return make(2, {{"1", "0", "0"}, {"0", "1", "0"}, {"1", "-1", "0"}});
}
inline Arrangement central_lines(int m) {
  // x, y, x - k y for k = 1 .. m-2
  std::vector<std::vector<std::string>> rows = {{"1", "0", "0"}, {"0", "1", "0"}};
  for (int k = 1; k <= m - 2; ++k) rows.push_back({"1", "-" + std::to_string(k), "0"});
  return make(2, rows);
}
inline Arrangement grid22() {
  return make(2, {{"1", "0", "0"}, {"1", "0", "-1"}, {"0", "1", "0"}, {"0", "1", "-1"}});
}

}  // namespace arrsheaf::testing
