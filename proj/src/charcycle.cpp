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
#include "arrsheaf/charcycle.hpp"

#include <algorithm>

#include "arrsheaf/errors.hpp"
#include "arrsheaf/salvetti.hpp"

namespace arrsheaf {

namespace {

long long abs_ll(long long v) { return v < 0 ? -v : v; }

long long binom2(long long k) { return k >= 2 ? k * (k - 1) / 2 : 0; }

bool is_integer_multiple(const Rational& s, long long k) {
  return (s * Rational(k)).mod1().is_zero();
}

// delta_j(s) and delta'_j(s) for a 1-dimensional edge of multiplicity m.
long long delta_j(const Rational& s, long long m) {
  return is_integer_multiple(s, m) ? 1 : m - 1;
}
long long delta_prime_j(const Rational& s, long long m, long long r) {
  return (is_integer_multiple(s, r) && is_integer_multiple(s, m)) ? m - 2 : 0;
}

void require_central_essential_3(const Arrangement& a, const char* who) {
  if (a.n() != 3 || !a.central() || !a.essential())
    throw PreconditionError(std::string(who) + " needs a central essential arrangement in C^3");
}

}  // namespace

json CharCycle::to_json(const EdgePoset& poset) const {
  json cycle = json::array();
  for (int id = 0; id < poset.size(); ++id) {
    if (mult[id] == 0) continue;
    cycle.push_back(json{{"edge", id},
                         {"dim", poset.edge(id).dim},
                         {"support", poset.edge(id).support},
                         {"mult", mult[id]}});
  }
  return json{{"cycle", cycle}};
}

json IHBetti::to_json() const {
  return json{{"ih", dims}, {"euler", euler}};
}

CharCycle cc_pushforward(const Arrangement& a, Workspace& ws) {
  if (!a.essential()) throw PreconditionError("cc_pushforward needs an essential arrangement");
  if (a.n() > 3) throw PreconditionError("characteristic cycles are implemented for n <= 3");
  const auto poset = ws.poset(a);
  CharCycle cc;
  cc.mult.resize(poset->size());
  for (int id = 0; id < poset->size(); ++id) cc.mult[id] = abs_ll(poset->mobius(id));
  return cc;
}

CharCycle cc_ic_dim2(const Arrangement& a, const LocalSystem& l, Workspace& ws) {
  if (a.n() != 2 || !a.essential())
    throw PreconditionError("cc_ic_dim2 needs an essential line arrangement");
  if (l.r() != a.r()) throw ParseError("local system length does not match the arrangement");
  const auto poset = ws.poset(a);
  CharCycle cc;
  cc.mult.assign(poset->size(), 0);
  cc.mult[poset->ambient_id()] = 1;
  for (int id : poset->ids_of_codim(1)) {
    const int i = poset->edge(id).support.front();
    if (!l.a(i).is_zero()) cc.mult[id] = 1;
  }
  for (int id : poset->ids_of_codim(2)) {
    const auto& sup = poset->edge(id).support;
    const long long m = static_cast<long long>(sup.size());
    long long zero_count = 0;
    Rational sum(0);
    for (int k : sup) {
      if (l.a(k).is_zero()) ++zero_count;
      sum += l.a(k);
    }
    long long gamma;
    if (zero_count == m) gamma = 0;
    else if (!sum.mod1().is_zero()) gamma = m - 1 - zero_count;
    else gamma = 1;
    cc.mult[id] = gamma;
  }
  return cc;
}

IHBetti ih_dim2(const Arrangement& a, const LocalSystem& l, Workspace& ws) {
  const CharCycle cc = cc_ic_dim2(a, l, ws);
  const auto poset = ws.poset(a);
  long long nontrivial = 0;
  for (int i = 0; i < a.r(); ++i)
    if (!l.a(i).is_zero()) ++nontrivial;
  long long gamma_sum = 0;
  for (int id : poset->ids_of_codim(2)) gamma_sum += cc.at(id);
  const long long chi = 1 - nontrivial + gamma_sum;

  IHBetti ih;
  ih.euler = chi;
  if (l.all_zero()) {
    ih.dims = {1, 0, 0};
    return ih;
  }
  // IH^1(C^2, L) = H^1(U(B), L(B)) for the sub-arrangement B carrying the
  // non-trivial monodromies; the oracle evaluates it on the real picture.
  std::vector<Hyperplane> forms;
  std::vector<Rational> exps;
  for (int i = 0; i < a.r(); ++i) {
    if (l.a(i).is_zero()) continue;
    forms.push_back(a.h(i));
    exps.push_back(l.a(i));
  }
  const Arrangement b = Arrangement::from_forms(2, std::move(forms));
  const long long ih1 = ws.betti(b, LocalSystem(std::move(exps)))[1];
  // chi = IH^0 - IH^1 + IH^2 with IH^0 = 0 for a non-constant system
  ih.dims = {0, ih1, chi + ih1};
  return ih;
}

CharCycle cc_ic_dim3_equal(const Arrangement& a, const Rational& s_in, Workspace& ws,
                           const StrategyOptions& opt) {
  require_central_essential_3(a, "cc_ic_dim3_equal");
  const Rational s = s_in.mod1();
  if (s.is_zero()) throw PreconditionError("cc_ic_dim3_equal needs s != 1 (use the constant formula)");
  const auto poset = ws.poset(a);
  const long long r = a.r();
  const auto [h1d, h2d] = eigenspace_dims(a, s, ws, opt);
  if (!h2d.determined()) throw UndeterminedError("dim H^2(F)_s is undetermined");
  const long long h2 = *h2d.value;

  CharCycle cc;
  cc.mult.assign(poset->size(), 0);
  cc.mult[poset->ambient_id()] = 1;
  for (int id : poset->ids_of_codim(1)) cc.mult[id] = 1;
  long long delta_sum = 0, delta_prime_sum = 0;
  for (int id : poset->ids_of_codim(2)) {
    const long long m = poset->edge(id).multiplicity();
    const long long d = delta_j(s, m);
    delta_sum += d;
    delta_prime_sum += delta_prime_j(s, m, r);
    cc.mult[id] = d;
  }
  const auto origin = poset->ids_of_codim(3);
  cc.mult[origin.front()] = delta_sum + delta_prime_sum - r + 1 - h2;
  if (cc.mult[origin.front()] < 0) throw std::logic_error("negative conormal multiplicity");
  return cc;
}

IHBetti ih_dim3_equal(const Arrangement& a, const Rational& s_in, Workspace& ws,
                      const StrategyOptions& opt) {
  require_central_essential_3(a, "ih_dim3_equal");
  const Rational s = s_in.mod1();
  if (s.is_zero()) throw PreconditionError("ih_dim3_equal needs s != 1");
  const auto poset = ws.poset(a);
  const long long r = a.r();
  const auto [h1d, h2d] = eigenspace_dims(a, s, ws, opt);
  if (!h1d.determined() || !h2d.determined())
    throw UndeterminedError("Milnor eigenspace dimensions are undetermined");
  const long long h1 = *h1d.value, h2 = *h2d.value;
  long long delta_prime_sum = 0;
  for (int id : poset->ids_of_codim(2))
    delta_prime_sum += delta_prime_j(s, poset->edge(id).multiplicity(), r);
  IHBetti ih;
  ih.dims = {0, h1, h2 + h1 - delta_prime_sum, 0};
  ih.euler = delta_prime_sum - h2;
  return ih;
}

CharCycle assemble_pushforward_dim3_equal(const Arrangement& a, const Rational& s_in,
                                          Workspace& ws, const StrategyOptions& opt) {
  const Rational s = s_in.mod1();
  CharCycle cc = cc_ic_dim3_equal(a, s, ws, opt);
  const auto poset = ws.poset(a);
  const long long r = a.r();
  const int origin = poset->ids_of_codim(3).front();
  for (int id : poset->ids_of_codim(2)) {
    const long long m = poset->edge(id).multiplicity();
    // h^2(U_Lambda, L_Lambda) for m equal monodromies s
    long long h2_line = 0;
    if (is_integer_multiple(s, m)) h2_line = s.is_zero() ? m - 1 : m - 2;
    cc.mult[id] += h2_line;
    // CC(IC(Lambda, L^Lambda)) = T_Lambda (+ T_0 when s^{r-m} != 1)
    if (!is_integer_multiple(s, r - m)) cc.mult[origin] += h2_line;
  }
  const LocalSystem ls = LocalSystem::equal_monodromy(s, a.r());
  const LocalDim h3 = complement_h3(a, ls, ws, opt);
  if (!h3.determined()) throw UndeterminedError("h^3(U, L_s) is undetermined");
  cc.mult[origin] += *h3.value;
  return cc;
}

CharCycle assemble_pushforward_dim2(const Arrangement& a, const LocalSystem& l, Workspace& ws) {
  CharCycle cc = cc_ic_dim2(a, l, ws);
  const auto poset = ws.poset(a);
  for (int id : poset->ids_of_codim(1)) {
    const int i = poset->edge(id).support.front();
    if (!l.a(i).is_zero()) continue;
    // CC(IC(H_i, .)) = T_H + sum of T_p over points of H_i whose local
    // monodromy product is non-trivial
    cc.mult[id] += 1;
    for (int pid : poset->ids_of_codim(2)) {
      if (!poset->leq(pid, id)) continue;
      Rational sum(0);
      for (int k : poset->edge(pid).support) sum += l.a(k);
      if (!sum.mod1().is_zero()) cc.mult[pid] += 1;
    }
  }
  for (int pid : poset->ids_of_codim(2)) {
    const auto& sup = poset->edge(pid).support;
    const long long m = static_cast<long long>(sup.size());
    Rational sum(0);
    bool all_zero = true;
    for (int k : sup) {
      sum += l.a(k);
      if (!l.a(k).is_zero()) all_zero = false;
    }
    long long h2 = 0;
    if (sum.mod1().is_zero()) h2 = all_zero ? m - 1 : m - 2;
    cc.mult[pid] += h2;
  }
  return cc;
}

PsReport ps_report(const Arrangement& a, const Rational& s_in, Workspace& ws,
                   const StrategyOptions& opt) {
  require_central_essential_3(a, "ps_report");
  const Rational s = s_in.mod1();
  if (s.is_zero()) throw PreconditionError("ps_report needs an equal monodromy s != 0");
  const auto poset = ws.poset(a);
  for (int id : poset->ids_of_codim(2))
    if (poset->edge(id).multiplicity() > 3)
      throw PreconditionError("ps_report needs multiplicities at most 3");

  PsReport rep;
  rep.r = a.r();
  rep.n3 = n3_count(a, ws);
  const MilnorData md = delta_polynomials(a, ws, opt.beta3_override);
  rep.beta3 = md.beta3;
  const bool sr = is_integer_multiple(s, rep.r);
  const bool s3 = is_integer_multiple(s, 3);
  rep.case_id = sr ? (s3 ? 4 : 2) : (s3 ? 3 : 1);

  // verbatim four-case table
  long long origin_verbatim = 0, chi_verbatim = 0, ih1_verbatim = 0, ih2_verbatim = 0,
            len_verbatim = 0;
  switch (rep.case_id) {
    case 1:
      origin_verbatim = binom2(rep.r - 1) - rep.n3;
      chi_verbatim = 0;
      ih1_verbatim = 0;
      ih2_verbatim = 0;
      len_verbatim = 1;
      break;
    case 2:
      origin_verbatim = rep.r - 2;
      chi_verbatim = rep.n3 - binom2(rep.r - 1);
      ih1_verbatim = 0;
      ih2_verbatim = binom2(rep.r - 1) - rep.n3;
      len_verbatim = 1 + binom2(rep.r - 2) - rep.n3;
      break;
    case 3:
      origin_verbatim = binom2(rep.r - 1) - 2 * rep.n3;
      chi_verbatim = 0;
      ih1_verbatim = 0;
      ih2_verbatim = 0;
      len_verbatim = 1 + rep.n3;
      break;
    case 4:
      origin_verbatim = rep.r - 2 - rep.beta3;
      chi_verbatim = 2 * rep.n3 - rep.beta3 - binom2(rep.r - 1);
      ih1_verbatim = rep.beta3;
      ih2_verbatim = 2 * rep.beta3 + binom2(rep.r - 1) - 2 * rep.n3;
      len_verbatim = 1 + binom2(rep.r - 2) + rep.beta3;
      break;
  }

  // route values: the characteristic-cycle formulas with Delta^2 eigenspaces
  const CharCycle cc = cc_ic_dim3_equal(a, s, ws, opt);
  const IHBetti ih = ih_dim3_equal(a, s, ws, opt);
  const int origin = poset->ids_of_codim(3).front();
  const LengthReport lr = exact_length(a, LocalSystem::equal_monodromy(s, a.r()), ws,
                                       LengthOptions{opt, {}, false});

  rep.quantities.push_back({"cc_origin", origin_verbatim, cc.at(origin)});
  rep.quantities.push_back({"chi_ic", chi_verbatim, ih.euler});
  rep.quantities.push_back({"ih1", ih1_verbatim, ih.dims[1]});
  rep.quantities.push_back({"ih2", ih2_verbatim, ih.dims[2]});
  rep.quantities.push_back({"length", len_verbatim, lr.exact.value_or(-1)});

  for (const auto& q : rep.quantities) {
    if (!q.agree())
      rep.flags.push_back("case " + std::to_string(rep.case_id) + ": " + q.name +
                          " printed " + std::to_string(q.verbatim) +
                          " but the characteristic-cycle route gives " +
                          std::to_string(q.route) +
                          " (the C(r-1,2) / C(r-2,2) binomial discrepancy)");
  }
  return rep;
}

json PsReport::to_json() const {
  json qs = json::array();
  for (const auto& q : quantities)
    qs.push_back(json{{"name", q.name},
                      {"verbatim", q.verbatim},
                      {"route", q.route},
                      {"agree", q.agree()}});
  return json{{"case", case_id}, {"r", r},         {"n3", n3},
              {"beta3", beta3},  {"quantities", qs}, {"flags", flags}};
}

}  // namespace arrsheaf
