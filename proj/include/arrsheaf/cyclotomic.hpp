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

#include "arrsheaf/rational.hpp"

namespace arrsheaf {

int euler_phi(int m);

/// Element of the m-th cyclotomic field Q(zeta_m), stored in the power basis
/// 1, zeta, ..., zeta^{phi(m)-1}. Arithmetic reduces modulo Phi_m, so the
/// representation is a field and equality with zero is a coordinate test.
class CycloElement {
 public:
  CycloElement() : m_(1), c_(1, Rational(0)) {}

  static CycloElement zero(int m = 1);
  static CycloElement one(int m = 1);
  static CycloElement from_rational(const Rational& x, int m = 1);
  /// exp(2*pi*i*a); the conductor is the denominator of a reduced mod 1.
  static CycloElement root_of_unity(const Rational& a);

  int conductor() const { return m_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  /// Embeds into the cyclotomic field of conductor big (m | big).
  CycloElement lifted(int big) const;

  CycloElement operator-() const;
  CycloElement operator+(const CycloElement& o) const;
  CycloElement operator-(const CycloElement& o) const;
  CycloElement operator*(const CycloElement& o) const;
  CycloElement operator/(const CycloElement& o) const;
  bool operator==(const CycloElement& o) const;
  bool operator!=(const CycloElement& o) const { return !(*this == o); }

  CycloElement inverse() const;
  CycloElement pow(long k) const;

  std::string str() const;

 private:
  CycloElement(int m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  static std::vector<Rational> reduce(int m, std::vector<Rational> raw);

  int m_;
  std::vector<Rational> c_;  // size phi(m_)
};

inline bool is_zero(const CycloElement& x) { return x.is_zero(); }

}  // namespace arrsheaf
