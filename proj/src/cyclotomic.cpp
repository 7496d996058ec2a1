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
#include "arrsheaf/cyclotomic.hpp"

#include <numeric>
#include <sstream>

#include "arrsheaf/errors.hpp"
#include "arrsheaf/intpoly.hpp"

namespace arrsheaf {

int euler_phi(int m) {
  int result = m, k = m;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace {

using QPoly = std::vector<Rational>;  // lowest degree first, not normalized

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly qp_from_int(const IntPolynomial& p) {
  QPoly q;
  q.reserve(p.coeffs().size());
  for (const Int& c : p.coeffs()) q.emplace_back(c);
  return q;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qp_trim(r);
  return r;
}

// Remainder of a modulo b (b trimmed, non-empty); also fills the quotient.
QPoly qp_divmod(QPoly a, const QPoly& b, QPoly* quot) {
  qp_trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  if (quot) quot->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int da = static_cast<int>(a.size()) - 1;
    Rational f = a.back() / b.back();
    if (quot) (*quot)[da - db] = f;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= f * b[j];
    qp_trim(a);
    if (a.empty()) break;
  }
  if (quot) qp_trim(*quot);
  return a;
}

}  // namespace

std::vector<Rational> CycloElement::reduce(int m, std::vector<Rational> raw) {
  const int deg = euler_phi(m);
  QPoly phi = qp_from_int(IntPolynomial::cyclotomic(m));
  QPoly rem = qp_divmod(std::move(raw), phi, nullptr);
  rem.resize(deg, Rational(0));
  return rem;
}

CycloElement CycloElement::zero(int m) { return CycloElement(m, std::vector<Rational>(euler_phi(m), Rational(0))); }

CycloElement CycloElement::one(int m) { return from_rational(Rational(1), m); }

CycloElement CycloElement::from_rational(const Rational& x, int m) {
  std::vector<Rational> c(euler_phi(m), Rational(0));
  c[0] = x;
  return CycloElement(m, std::move(c));
}

CycloElement CycloElement::root_of_unity(const Rational& a) {
  const Rational s = a.mod1();
  const int m = static_cast<int>(to_longlong(s.den()));
  const int p = static_cast<int>(to_longlong(s.num()));
  std::vector<Rational> raw(p + 1, Rational(0));
  raw[p] = Rational(1);
  return CycloElement(m, reduce(m, std::move(raw)));
}

bool CycloElement::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycloElement::is_one() const {
  if (c_.empty() || c_[0] != Rational(1)) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

CycloElement CycloElement::lifted(int big) const {
  if (big == m_) return *this;
  if (big % m_ != 0) throw std::domain_error("conductor is not a multiple");
  const int stride = big / m_;
  std::vector<Rational> raw((c_.size() - 1) * stride + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) raw[k * stride] = c_[k];
  return CycloElement(big, reduce(big, std::move(raw)));
}

CycloElement CycloElement::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return CycloElement(m_, std::move(c));
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
  const int m = std::lcm(m_, o.m_);
  CycloElement a = lifted(m), b = o.lifted(m);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
  const int m = std::lcm(m_, o.m_);
  CycloElement a = lifted(m), b = o.lifted(m);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
  const int m = std::lcm(m_, o.m_);
  CycloElement a = lifted(m), b = o.lifted(m);
  QPoly prod = qp_mul(a.c_, b.c_);
  return CycloElement(m, reduce(m, std::move(prod)));
}

CycloElement CycloElement::operator/(const CycloElement& o) const { return *this * o.inverse(); }

bool CycloElement::operator==(const CycloElement& o) const {
  const int m = std::lcm(m_, o.m_);
  return lifted(m).c_ == o.lifted(m).c_;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
  // extended Euclid in Q[x] against Phi_m, which is irreducible over Q
  QPoly r0 = qp_from_int(IntPolynomial::cyclotomic(m_));
  QPoly r1 = c_;
  qp_trim(r1);
  QPoly s0{}, s1{Rational(1)};  // coefficients of *this in the Bezout identity
  while (!r1.empty()) {
    QPoly q;
    QPoly r2 = qp_divmod(r0, r1, &q);
    QPoly qs1 = qp_mul(q, s1);
    QPoly s2 = s0;
    s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
    for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    qp_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd = nonzero constant; inverse = s0 / r0
  if (r0.size() != 1) throw std::logic_error("cyclotomic gcd is not a unit");
  for (auto& x : s0) x /= r0[0];
  return CycloElement(m_, reduce(m_, std::move(s0)));
}

CycloElement CycloElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloElement acc = one(m_);
  CycloElement base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string CycloElement::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i].str();
  }
  os << "]@" << m_;
  return os.str();
}

}  // namespace arrsheaf
