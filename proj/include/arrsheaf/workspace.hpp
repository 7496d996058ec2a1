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

#include <array>
#include <map>
#include <memory>
#include <string>

#include "arrsheaf/arrangement.hpp"
#include "arrsheaf/localsys.hpp"

namespace arrsheaf {

/// Per-execution memoization context. Everything cached here is a pure
/// function of its key, so results are value-identical with or without the
/// cache; one workspace is confined to one execution context.
class Workspace {
 public:
  std::shared_ptr<const EdgePoset> poset(const Arrangement& a);

  /// Cached twisted Betti numbers of a real affine line arrangement.
  std::array<long long, 3> betti(const Arrangement& a, const LocalSystem& l);

 private:
  std::map<std::string, std::shared_ptr<const EdgePoset>> posets_;
  std::map<std::string, std::shared_ptr<const Arrangement>> keepalive_;
  std::map<std::string, std::array<long long, 3>> betti_;
};

}  // namespace arrsheaf
