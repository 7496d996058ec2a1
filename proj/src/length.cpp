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
#include "arrsheaf/length.hpp"

#include <algorithm>
#include <sstream>

#include "arrsheaf/errors.hpp"
#include "arrsheaf/salvetti.hpp"

namespace arrsheaf {

json LengthReport::to_json(const EdgePoset& poset) const {
  json jfactors = json::array();
  for (const auto& f : factors) {
    jfactors.push_back(json{{"edge", f.edge_id},
                            {"support", poset.edge(f.edge_id).support},
                            {"dim", poset.edge(f.edge_id).dim},
                            {"induced", f.induced.to_json()},
                            {"multiplicity", f.multiplicity}});
  }
  json jdims = json::array();
  for (const auto& [id, ld] : edge_dims) {
    json entry{{"edge", id},
               {"codim", poset.codim(id)},
               {"provenance", provenance_name(ld.prov)},
               {"rule", ld.rule}};
    if (ld.value) entry["value"] = *ld.value;
    else entry["value"] = nullptr;
    jdims.push_back(entry);
  }
  json jtrace = json::array();
  for (const auto& s : trace) {
    json entry{{"depth", s.depth},
               {"context", s.context},
               {"deleted", s.deleted_index},
               {"len_deleted", s.len_deleted},
               {"len_restricted", s.len_restricted}};
    if (s.difference) entry["difference"] = *s.difference;
    else entry["difference"] = nullptr;
    jtrace.push_back(entry);
  }
  json out{{"lower", lower}, {"upper", upper},   {"partial", partial},
           {"gap_bound", gap_bound}, {"factors", jfactors}, {"edge_dims", jdims},
           {"trace", jtrace}};
  if (exact) out["exact"] = *exact;
  else out["exact"] = nullptr;
  return out;
}

namespace {

long long abs_ll(long long v) { return v < 0 ? -v : v; }

std::vector<int> zero_indices(const LocalSystem& l) {
  std::vector<int> out;
  for (int i = 0; i < l.r(); ++i)
    if (l.a(i).is_zero()) out.push_back(i);
  return out;
}

struct ExactResult {
  std::optional<long long> exact;
  long long lower = 0;   // valid lower bound even when exact is unknown
  long long upper = 0;
  std::vector<RecursionStep> trace;
};

std::string context_of(const Arrangement& a) {
  std::ostringstream os;
  os << "r=" << a.r() << ",n=" << a.n();
  return os.str();
}

// Core recursion; accepts any arrangement and essentializes as needed.
// Lengths are invariant under essentialization since the complement only
// gains a trivial affine factor.
ExactResult exact_core(const Arrangement& input, const LocalSystem& l, Workspace& ws,
                       const LengthOptions& opt, int depth) {
  const Arrangement a = input.essential() ? input : essentialize(input);
  if (a.n() > 3) throw PreconditionError("exact lengths are implemented for n <= 3");

  const auto zeros = zero_indices(l);
  if (a.n() <= 2 || zeros.empty()) {
    // n <= 2: the bound is an equality for every rank-one system.
    // n == 3 with all monodromies non-trivial: equality as well.
    LengthOptions sub = opt;
    if (depth > 0) sub.user_dims.clear();  // user dims refer to the top-level poset
    const LengthReport lb = lower_bound(a, l, ws, sub);
    ExactResult out;
    out.lower = lb.lower;
    if (!lb.partial) {
      out.exact = lb.lower;
      out.upper = lb.lower;
    } else {
      out.upper = lb.upper;
    }
    return out;
  }

  std::optional<ExactResult> chosen;
  const std::vector<int> picks =
      opt.exhaustive ? zeros : std::vector<int>{zeros.front()};
  for (int pick : picks) {
    TripleDecomposition t = triple(a, pick);
    std::vector<Rational> rest;
    for (int j = 0; j < a.r(); ++j)
      if (j != pick) rest.push_back(l.a(j));
    const LocalSystem l_deleted(std::move(rest));
    const LocalSystem l_restricted = induce_edge(l, t.restricted);

    ExactResult left = exact_core(t.deleted, l_deleted, ws, opt, depth + 1);
    ExactResult right = exact_core(t.restricted.arr, l_restricted, ws, opt, depth + 1);

    ExactResult res;
    res.lower = left.lower + right.lower;
    res.upper = left.upper + right.upper;
    if (left.exact && right.exact) res.exact = *left.exact + *right.exact;

    RecursionStep step;
    step.depth = depth;
    step.context = context_of(a);
    step.deleted_index = pick;
    step.len_deleted = left.exact.value_or(-1);
    step.len_restricted = right.exact.value_or(-1);
    // Grothendieck-group difference h^3(U') + h^2(U'') - h^3(U): the
    // multiplicity of the extra skyscraper factor. Needs a central cone to
    // evaluate the two h^3 terms through the projective picture.
    if (a.central()) {
      const LocalDim h3 = complement_h3(a, l, ws, opt.strategy);
      const LocalDim h3p = complement_h3(t.deleted, l_deleted, ws, opt.strategy);
      if (h3.determined() && h3p.determined()) {
        const long long h2pp = ws.betti(t.restricted.arr, l_restricted)[2];
        step.difference = *h3p.value + h2pp - *h3.value;
      }
    }
    res.trace.push_back(step);
    res.trace.insert(res.trace.end(), left.trace.begin(), left.trace.end());
    res.trace.insert(res.trace.end(), right.trace.begin(), right.trace.end());

    if (chosen && chosen->exact && res.exact && *chosen->exact != *res.exact)
      throw std::logic_error("deletion orders disagree on the exact length");
    if (!chosen) chosen = std::move(res);
  }
  return *chosen;
}

}  // namespace

LengthReport lower_bound(const Arrangement& a, const LocalSystem& l, Workspace& ws,
                         const LengthOptions& opt) {
  if (!a.essential())
    throw PreconditionError("length operations need an essential arrangement"
                            " (apply essentialize first)");
  if (l.r() != a.r()) throw ParseError("local system length does not match the arrangement");
  const auto poset = ws.poset(a);
  LengthReport rep;
  long long unknown_cap = 0;
  for (const Edge& e : poset->edges()) {
    const int w = poset->codim(e.id);
    LocalDim ld;
    if (e.id == poset->ambient_id()) {
      ld = LocalDim::of(1, Provenance::combinatorial, "ambient");
    } else if (w <= 3) {
      const Localization loc = localize(a, e);
      const LocalSystem lw = restrict_edge(l, loc.support);
      std::optional<long long> user;
      if (auto it = opt.user_dims.find(e.id); it != opt.user_dims.end()) user = it->second;
      ld = local_top_dim(loc.closed, lw, ws, opt.strategy, user);
    } else {
      auto it = opt.user_dims.find(e.id);
      ld = (it != opt.user_dims.end())
               ? LocalDim::of(it->second, Provenance::user, "user")
               : LocalDim::none();
    }
    rep.edge_dims.emplace_back(e.id, ld);
    if (!ld.determined()) {
      rep.partial = true;
      unknown_cap += abs_ll(poset->mobius(e.id));  // twisted dims are at most |mu|
      continue;
    }
    rep.lower += *ld.value;
    if (*ld.value > 0) {
      Factor f;
      f.edge_id = e.id;
      f.multiplicity = *ld.value;
      if (e.id == poset->ambient_id()) {
        f.induced = l;
      } else if (e.dim > 0) {
        f.induced = induce_edge(l, localize(a, e).traced);
      }
      rep.factors.push_back(std::move(f));
    }
  }
  rep.gap_bound = static_cast<long long>(zero_indices(l).size());
  rep.upper = rep.lower + unknown_cap;
  return rep;
}

long long constant_length(const Arrangement& a, Workspace& ws) {
  if (!a.essential())
    throw PreconditionError("constant_length needs an essential arrangement");
  const auto poset = ws.poset(a);
  long long sum = 0;
  for (const Edge& e : poset->edges()) sum += abs_ll(poset->mobius(e.id));
  return sum;
}

bool is_length_one(const Arrangement& a, const LocalSystem& l, Workspace& ws) {
  if (!a.central()) throw PreconditionError("the length-one test needs a central arrangement");
  if (l.r() != a.r()) throw ParseError("local system length does not match the arrangement");
  const auto poset = ws.poset(a);
  for (int d : poset->dense_edges())
    if (edge_product(*poset, l, d).is_one) return false;
  return true;
}

LengthTwoResult is_length_two(const Arrangement& a, const LocalSystem& l, Workspace& ws) {
  if (!a.essential()) throw PreconditionError("the length-two test needs an essential arrangement");
  if (l.r() != a.r()) throw ParseError("local system length does not match the arrangement");
  const auto poset = ws.poset(a);
  LengthTwoResult out;
  std::vector<int> resonant;
  for (int d : poset->dense_edges())
    if (edge_product(*poset, l, d).is_one) resonant.push_back(d);
  if (resonant.size() != 1) return out;
  const int w = resonant.front();
  if (abs_ll(poset->proj_euler_char(w)) != 1) return out;
  out.is_two = true;
  out.witness = w;
  Factor open_factor;
  open_factor.edge_id = poset->ambient_id();
  open_factor.induced = l;
  open_factor.multiplicity = 1;
  Factor ic_factor;
  ic_factor.edge_id = w;
  if (poset->edge(w).dim > 0) ic_factor.induced = induce_edge(l, localize(a, poset->edge(w)).traced);
  ic_factor.multiplicity = 1;
  out.factors = {std::move(open_factor), std::move(ic_factor)};
  return out;
}

long long length_Wcirc(const Arrangement& a, const LocalSystem& l, int edge_id, Workspace& ws) {
  const auto poset = ws.poset(a);
  if (!in_W_circ(a, *poset, l, edge_id))
    throw PreconditionError("the system does not lie in W(W)-circ for this edge");
  if (edge_id == poset->ambient_id()) return 1;
  return 1 + abs_ll(poset->proj_euler_char(edge_id));
}

LengthReport exact_length(const Arrangement& a, const LocalSystem& l, Workspace& ws,
                          const LengthOptions& opt) {
  LengthReport rep = lower_bound(a, l, ws, opt);
  const ExactResult res = exact_core(a, l, ws, opt, 0);
  rep.trace = res.trace;
  if (res.exact) {
    rep.exact = *res.exact;
    rep.upper = *res.exact;
    rep.partial = false;
  } else {
    rep.partial = true;
    // Soundness: the jump-loci gap bound caps the length by the FULL edge
    // sum plus the number of trivial monodromies; with undetermined edges
    // the full sum is only known up to |mu| caps, which res.upper carries.
    const long long cap = constant_length(a, ws);
    long long upper = std::min(cap, res.upper);
    if (a.n() == 3 && a.central())
      upper = std::min(upper, lower_bound(a, l, ws, opt).upper + rep.gap_bound);
    rep.lower = std::max(rep.lower, res.lower);
    rep.upper = std::max(upper, rep.lower);
  }
  return rep;
}

}  // namespace arrsheaf
