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
#include "arrsheaf/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "arrsheaf/errors.hpp"

namespace arrsheaf {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(long c) {
  return IntPolynomial(std::vector<Int>{Int(c)});
}

IntPolynomial IntPolynomial::monomial(long c, int k) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(int k) {
  std::vector<Int> v(k + 1, Int(0));
  v[0] = -1;
  v[k] = 1;
  return IntPolynomial(std::move(v));
}

Int IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
  return c_[k];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(int k) const {
  IntPolynomial result = constant(1);
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& q) const {
  if (q.is_zero()) throw NonDivisible("division by the zero polynomial");
  std::vector<Int> rem = c_;
  const int dq = q.degree();
  std::vector<Int> quot;
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= 0 && sgn(rem[dr]) == 0) --dr;
  if (dr >= dq) quot.assign(dr - dq + 1, Int(0));
  while (dr >= dq) {
    Int lead = rem[dr];
    Int factor, check;
    mpz_tdiv_qr(factor.get_mpz_t(), check.get_mpz_t(), lead.get_mpz_t(),
                q.c_[dq].get_mpz_t());
    if (sgn(check) != 0) throw NonDivisible("polynomial division is not exact");
    quot[dr - dq] = factor;
    for (int j = 0; j <= dq; ++j) rem[dr - dq + j] -= factor * q.c_[j];
    while (dr >= 0 && sgn(rem[dr]) == 0) --dr;
  }
  if (dr >= 0) throw NonDivisible("polynomial division leaves a remainder");
  return IntPolynomial(std::move(quot));
}

Int IntPolynomial::eval_int(const Int& x) const {
  Int acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::cyclotomic(int m) {
  if (m < 1) throw std::domain_error("cyclotomic polynomial needs m >= 1");
  static std::map<int, IntPolynomial> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, filled in ascending order.
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0 || cache.count(d)) continue;
    IntPolynomial p = x_pow_minus_one(d);
    for (int e = 1; e < d; ++e)
      if (d % e == 0) p = p.divide_exact(cache.at(e));
    cache[d] = p;
  }
  return cache.at(m);
}

int IntPolynomial::root_of_unity_multiplicity(const Rational& a) const {
  if (is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
  const Rational s = a.mod1();
  const int m = static_cast<int>(to_longlong(s.den()));
  const IntPolynomial phi = cyclotomic(m);
  IntPolynomial p = *this;
  int mult = 0;
  for (;;) {
    try {
      p = p.divide_exact(phi);
    } catch (const NonDivisible&) {
      return mult;
    }
    ++mult;
  }
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& a = c_[k];
    if (sgn(a) == 0) continue;
    if (!first) os << (sgn(a) > 0 ? "+" : "-");
    else if (sgn(a) < 0) os << "-";
    Int mag = abs(a);
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

void FactoredPoly::push(const IntPolynomial& base, int exponent) {
  if (exponent > 0) factors.emplace_back(base, exponent);
}

IntPolynomial FactoredPoly::expand() const {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& [base, e] : factors) p = p * base.pow(e);
  return p;
}

int FactoredPoly::root_of_unity_multiplicity(const Rational& a) const {
  int total = 0;
  for (const auto& [base, e] : factors) total += e * base.root_of_unity_multiplicity(a);
  return total;
}

std::string FactoredPoly::str(const std::string& var) const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "*";
    os << "(" << factors[i].first.str(var) << ")";
    if (factors[i].second != 1) os << "^" << factors[i].second;
  }
  return os.str();
}

}  // namespace arrsheaf
