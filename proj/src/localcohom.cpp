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
#include "arrsheaf/localcohom.hpp"

#include <algorithm>

#include "arrsheaf/errors.hpp"
#include "arrsheaf/salvetti.hpp"

namespace arrsheaf {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::combinatorial: return "combinatorial";
    case Provenance::oracle: return "oracle";
    case Provenance::user: return "user";
    case Provenance::unknown: return "unknown";
  }
  return "unknown";
}

LocalDim LocalDim::of(long long v, Provenance p, std::string rule) {
  return LocalDim{v, p, std::move(rule)};
}

LocalDim LocalDim::none() { return LocalDim{std::nullopt, Provenance::unknown, "unknown"}; }

namespace {

Rational exponent_sum(const LocalSystem& l) {
  Rational sum(0);
  for (const auto& x : l.exponents()) sum += x;
  return sum.mod1();
}

long long binom2(long long k) { return k >= 2 ? k * (k - 1) / 2 : 0; }

int max_line_multiplicity(const EdgePoset& poset) {
  int mx = 0;
  for (int id : poset.ids_of_codim(2)) mx = std::max(mx, poset.edge(id).multiplicity());
  return mx;
}

}  // namespace

LocalDim local_top_dim(const Arrangement& aw, const LocalSystem& lw, Workspace& ws,
                       const StrategyOptions& opt, std::optional<long long> user_value) {
  const int w = aw.n();
  if (w < 1 || w > 3) throw PreconditionError("local dimensions are implemented for w <= 3");
  if (!aw.central() || !aw.essential())
    throw PreconditionError("local_top_dim needs a central essential arrangement");
  if (lw.r() != aw.r()) throw ParseError("local system length does not match the arrangement");

  if (w == 1) {
    // U_W is C^*, so only the trivial monodromy has cohomology on top
    return LocalDim::of(lw.a(0).is_zero() ? 1 : 0, Provenance::combinatorial, "w1");
  }

  if (w == 2) {
    const long long m = aw.r();
    if (!exponent_sum(lw).is_zero())
      return LocalDim::of(0, Provenance::combinatorial, "w2-vanishing");
    if (lw.all_zero()) return LocalDim::of(m - 1, Provenance::combinatorial, "w2-constant");
    return LocalDim::of(m - 2, Provenance::combinatorial, "w2-resonant");
  }

  // w == 3
  if (!exponent_sum(lw).is_zero())
    return LocalDim::of(0, Provenance::combinatorial, "vanishing");

  const auto comps = decompose(aw);
  if (comps.size() > 1) {
    // Kuenneth over the matroid factors
    long long product = 1;
    for (const auto& comp : comps) {
      std::vector<Hyperplane> forms;
      std::vector<Rational> exps;
      for (int i : comp) {
        forms.push_back(aw.h(i));
        exps.push_back(lw.a(i));
      }
      const Arrangement factor =
          essentialize(Arrangement::from_forms(aw.n(), std::move(forms)));
      const LocalDim fd =
          local_top_dim(factor, LocalSystem(std::move(exps)), ws, opt, std::nullopt);
      if (!fd.determined()) return LocalDim::none();
      product *= *fd.value;
      if (product == 0) break;
    }
    return LocalDim::of(product, Provenance::combinatorial, "kunneth");
  }

  const auto poset = ws.poset(aw);
  const auto origin_ids = poset->ids_of_codim(3);
  if (origin_ids.size() != 1) throw std::logic_error("central essential C^3 needs one origin");
  const int origin = origin_ids.front();

  if (in_W_circ(aw, *poset, lw, origin)) {
    const long long chi = poset->proj_euler_char(origin);
    return LocalDim::of(chi < 0 ? -chi : chi, Provenance::combinatorial, "W-circ");
  }

  const auto s = lw.equal_value();
  if (s && !s->is_zero() && max_line_multiplicity(*poset) <= 3) {
    const MilnorData md = delta_polynomials(aw, ws, opt.beta3_override);
    const long long h2 = md.delta2.root_of_unity_multiplicity(*s);
    return LocalDim::of(h2, Provenance::combinatorial, "delta2");
  }

  if (opt.allow_oracle) {
    // rational input is always a real cone; decone and run the Salvetti oracle
    const long long h3 = complement_cohomology(aw, lw, 3, 0, &ws);
    return LocalDim::of(h3, Provenance::oracle, "oracle");
  }

  if (user_value) return LocalDim::of(*user_value, Provenance::user, "user");
  return LocalDim::none();
}

long long chiF_over_r(const Arrangement& a, Workspace& ws) {
  if (a.n() != 3 || !a.central() || !a.essential())
    throw PreconditionError("chi(F)/r needs a central essential arrangement in C^3");
  const auto poset = ws.poset(a);
  long long sum = 0;
  for (int id : poset->ids_of_codim(2)) sum += poset->edge(id).multiplicity() - 1;
  return -2 * a.r() + 3 + sum;
}

long long n3_count(const Arrangement& a, Workspace& ws) {
  const auto poset = ws.poset(a);
  long long n3 = 0;
  for (int id : poset->ids_of_codim(2))
    if (poset->edge(id).multiplicity() == 3) ++n3;
  return n3;
}

int beta3(const Arrangement& a, Workspace& ws) {
  if (a.n() != 3 || !a.central() || !a.essential())
    throw PreconditionError("beta3 needs a central essential arrangement in C^3");
  const auto poset = ws.poset(a);
  if (max_line_multiplicity(*poset) > 3)
    throw PreconditionError("beta3 is implemented for multiplicities at most 3");
  const int r = a.r();

  // Degree-2 Orlik-Solomon basis over F_3: for each rank-2 flat X with
  // minimal element i0, the monomials e_{i0} e_j, j in X \ {i0}. A pair
  // (a,b) with a > min of its flat straightens via e_a e_b = e_{i0} e_b - e_{i0} e_a.
  const auto lines = poset->ids_of_codim(2);
  std::map<std::pair<int, int>, int> flat_of_pair;  // (i<j) -> line id
  std::map<std::pair<int, int>, int> basis_index;   // (line id, j) -> column
  int dim2 = 0;
  for (int id : lines) {
    const auto& sup = poset->edge(id).support;
    for (std::size_t x = 0; x < sup.size(); ++x)
      for (std::size_t y = x + 1; y < sup.size(); ++y) flat_of_pair[{sup[x], sup[y]}] = id;
    for (std::size_t y = 1; y < sup.size(); ++y) basis_index[{id, sup[y]}] = dim2++;
  }

  // matrix of multiplication by omega = sum e_i from A^1 to A^2, over F_3
  std::vector<std::vector<int>> m(dim2, std::vector<int>(r, 0));
  auto add = [&](int row, int col, int v) { m[row][col] = ((m[row][col] + v) % 3 + 3) % 3; };
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) {
      if (i == j) continue;
      const int aa = std::min(i, j), bb = std::max(i, j);
      const int sign = (i < j) ? 1 : -1;  // e_i e_j = sign * e_aa e_bb
      const int flat = flat_of_pair.at({aa, bb});
      const int i0 = poset->edge(flat).support.front();
      if (aa == i0) {
        add(basis_index.at({flat, bb}), j, sign);
      } else {
        add(basis_index.at({flat, bb}), j, sign);
        add(basis_index.at({flat, aa}), j, -sign);
      }
    }
  }

  // rank over F_3
  int rank = 0;
  int row = 0;
  for (int col = 0; col < r && row < dim2; ++col) {
    int p = -1;
    for (int i = row; i < dim2; ++i)
      if (m[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    const int inv = (m[row][col] == 1) ? 1 : 2;  // inverses mod 3
    for (int j = 0; j < r; ++j) m[row][j] = (m[row][j] * inv) % 3;
    for (int i = 0; i < dim2; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const int f = m[i][col];
      for (int j = 0; j < r; ++j) m[i][j] = ((m[i][j] - f * m[row][j]) % 3 + 3) % 3;
    }
    ++row;
    ++rank;
  }
  // ker has dimension r - rank; the image of A^0 is the line spanned by omega
  return r - rank - 1;
}

MilnorData delta_polynomials(const Arrangement& a, Workspace& ws,
                             std::optional<int> beta3_override) {
  if (a.n() != 3 || !a.central() || !a.essential())
    throw PreconditionError("Delta polynomials need a central essential arrangement in C^3");
  const auto poset = ws.poset(a);
  if (max_line_multiplicity(*poset) > 3)
    throw PreconditionError("Delta polynomials are implemented for multiplicities at most 3");
  MilnorData md;
  md.chi_over_r = chiF_over_r(a, ws);
  md.n3 = n3_count(a, ws);
  const long long r = a.r();
  if (md.chi_over_r != binom2(r - 2) - md.n3)
    throw std::logic_error("chi(F)/r does not match C(r-2,2) - n3");
  if (md.chi_over_r < 0) throw std::logic_error("negative chi(F)/r for a triple-point cone");
  if (beta3_override) {
    md.beta3 = *beta3_override;
    md.beta3_prov = Provenance::user;
  } else {
    md.beta3 = beta3(a, ws);
    md.beta3_prov = Provenance::combinatorial;
  }

  const IntPolynomial tm1 = IntPolynomial::x_pow_minus_one(1);
  const IntPolynomial trm1 = IntPolynomial::x_pow_minus_one(static_cast<int>(r));
  const IntPolynomial phi3 = IntPolynomial::cyclotomic(3);

  md.delta0.push(tm1, 1);
  md.delta1.push(tm1, static_cast<int>(r - 1));
  md.delta1.push(phi3, md.beta3);
  md.delta2.push(tm1, static_cast<int>(r - 2));
  md.delta2.push(trm1, static_cast<int>(md.chi_over_r));
  md.delta2.push(phi3, md.beta3);

  // Delta^0 Delta^2 = Delta^1 (t^r - 1)^{chi(F)/r}
  const IntPolynomial lhs = md.delta0.expand() * md.delta2.expand();
  const IntPolynomial rhs = md.delta1.expand() * trm1.pow(static_cast<int>(md.chi_over_r));
  if (lhs != rhs) throw std::logic_error("Delta identity failed");
  return md;
}

std::pair<LocalDim, LocalDim> eigenspace_dims(const Arrangement& a, const Rational& s,
                                              Workspace& ws, const StrategyOptions& opt) {
  if (s.mod1().is_zero()) throw PreconditionError("eigenspace_dims needs s != 0 mod 1");
  if (a.n() != 3 || !a.central() || !a.essential())
    throw PreconditionError("eigenspace_dims needs a central essential arrangement in C^3");
  const auto poset = ws.poset(a);
  if (max_line_multiplicity(*poset) <= 3) {
    const MilnorData md = delta_polynomials(a, ws, opt.beta3_override);
    return {LocalDim::of(md.delta1.root_of_unity_multiplicity(s), Provenance::combinatorial,
                         "delta1"),
            LocalDim::of(md.delta2.root_of_unity_multiplicity(s), Provenance::combinatorial,
                         "delta2")};
  }
  // the monodromy has order r, so eigenvalues outside mu_r cannot occur
  if (!(s * Rational(a.r())).mod1().is_zero())
    return {LocalDim::of(0, Provenance::combinatorial, "order"),
            LocalDim::of(0, Provenance::combinatorial, "order")};
  if (!opt.allow_oracle) return {LocalDim::none(), LocalDim::none()};
  const LocalSystem ls = LocalSystem::equal_monodromy(s, a.r());
  const long long h1 = coned_cohomology(a, ls, 1, 0, &ws);
  const long long h2 = coned_cohomology(a, ls, 2, 0, &ws);
  return {LocalDim::of(h1, Provenance::oracle, "oracle"),
          LocalDim::of(h2, Provenance::oracle, "oracle")};
}

LocalDim complement_h3(const Arrangement& a, const LocalSystem& l, Workspace& ws,
                       const StrategyOptions& opt) {
  if (!a.central()) throw PreconditionError("complement_h3 needs a central arrangement");
  const Arrangement ess = essentialize(a);
  if (ess.n() < 3) return LocalDim::of(0, Provenance::combinatorial, "rank");
  if (ess.n() > 3) throw PreconditionError("complement_h3 works in C^3");
  return local_top_dim(ess, l, ws, opt);
}

}  // namespace arrsheaf
