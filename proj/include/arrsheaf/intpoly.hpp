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
#include <utility>
#include <vector>

#include "arrsheaf/rational.hpp"

namespace arrsheaf {

/// Integer-coefficient polynomial, coefficients stored lowest degree first.
/// The zero polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial constant(long c);
  static IntPolynomial monomial(long c, int k);
  /// t^k - 1.
  static IntPolynomial x_pow_minus_one(int k);
  /// The m-th cyclotomic polynomial Phi_m (cached).
  static IntPolynomial cyclotomic(int m);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial pow(int k) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  /// Exact division over the integers; throws NonDivisible otherwise.
  IntPolynomial divide_exact(const IntPolynomial& q) const;

  Int eval_int(const Int& x) const;
  Rational eval(const Rational& x) const;

  /// Multiplicity of exp(2*pi*i*a) as a root, computed by repeated exact
  /// division by the cyclotomic polynomial of the reduced denominator of a.
  int root_of_unity_multiplicity(const Rational& a) const;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Int> c_;
};

/// A polynomial kept as a product of factors with multiplicities, so reports
/// can show the structured form while identities are checked on the expansion.
struct FactoredPoly {
  std::vector<std::pair<IntPolynomial, int>> factors;

  void push(const IntPolynomial& base, int exponent);
  IntPolynomial expand() const;
  int root_of_unity_multiplicity(const Rational& a) const;
  std::string str(const std::string& var = "t") const;
};

}  // namespace arrsheaf
