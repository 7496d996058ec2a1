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
#include "arrsheaf/workspace.hpp"

#include "arrsheaf/salvetti.hpp"

namespace arrsheaf {

std::shared_ptr<const EdgePoset> Workspace::poset(const Arrangement& a) {
  const std::string k = a.key();
  auto it = posets_.find(k);
  if (it != posets_.end()) return it->second;
  auto keep = std::make_shared<const Arrangement>(a);
  keepalive_[k] = keep;
  auto p = std::make_shared<const EdgePoset>(*keep);
  posets_[k] = p;
  return p;
}

std::array<long long, 3> Workspace::betti(const Arrangement& a, const LocalSystem& l) {
  const std::string k = a.key() + "@" + l.key();
  auto it = betti_.find(k);
  if (it != betti_.end()) return it->second;
  const auto b = twisted_betti(a, l);
  betti_[k] = b;
  return b;
}

}  // namespace arrsheaf
