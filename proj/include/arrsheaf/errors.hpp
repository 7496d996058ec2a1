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

#include <stdexcept>
#include <string>

namespace arrsheaf {

/// Malformed input: files, rationals, tuples of the wrong length.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its contract (non-essential input to a
/// length computation, non-central input to a characteristic-cycle formula).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact polynomial division was requested but the divisor does not divide.
struct NonDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A requested value could not be determined with the allowed strategies.
struct UndeterminedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace arrsheaf
