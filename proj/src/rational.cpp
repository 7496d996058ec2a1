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
#include "arrsheaf/rational.hpp"

#include <cctype>
#include <sstream>

#include "arrsheaf/errors.hpp"

namespace arrsheaf {

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw ParseError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::mod1() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return *this - Rational(q);
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Rational Rational::parse(const std::string& raw) {
  const std::string s = strip(raw);
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s)) throw ParseError("malformed rational '" + raw + "'");
    return Rational(Int(s));
  }
  const std::string p = strip(s.substr(0, slash));
  const std::string q = strip(s.substr(slash + 1));
  if (!valid_integer_token(p) || !valid_integer_token(q))
    throw ParseError("malformed rational '" + raw + "'");
  Int den(q);
  if (sgn(den) == 0) throw ParseError("malformed rational '" + raw + "': zero denominator");
  return Rational(Int(p), den);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long long to_longlong(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in a machine word");
  return static_cast<long long>(z.get_si());
}

std::string join_rationals(const std::vector<Rational>& xs, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i].str();
  }
  return os.str();
}

}  // namespace arrsheaf
