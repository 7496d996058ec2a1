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
#include "arrsheaf/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "arrsheaf/errors.hpp"

namespace arrsheaf {

Rational rational_from_json(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  throw ParseError("expected a rational string or integer, got: " + v.dump());
}

Rational Hyperplane::eval(const std::vector<Rational>& x) const {
  Rational acc = c0;
  for (std::size_t k = 0; k < normal.size(); ++k) acc += normal[k] * x[k];
  return acc;
}

std::string Hyperplane::str() const {
  std::ostringstream os;
  os << "[" << join_rationals(normal) << " | " << c0.str() << "]";
  return os.str();
}

namespace {

// Projective normalization of (normal, c0): scaled so the first non-zero
// entry is 1. Proportional forms collide after this.
std::vector<Rational> projective_key(const Hyperplane& h) {
  std::vector<Rational> full = h.normal;
  full.push_back(h.c0);
  for (const Rational& x : full) {
    if (x.is_zero()) continue;
    const Rational inv = Rational(1) / x;
    for (Rational& y : full) y *= inv;
    return full;
  }
  return full;  // all zero; caller rejects
}

bool normal_is_zero(const Hyperplane& h) {
  return std::all_of(h.normal.begin(), h.normal.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

Arrangement Arrangement::from_forms(int n, std::vector<Hyperplane> hs) {
  if (n < 0) throw ParseError("ambient dimension must be non-negative");
  Arrangement a;
  a.n_ = n;
  for (auto& h : hs) {
    if (static_cast<int>(h.normal.size()) != n)
      throw ParseError("hyperplane coefficient count does not match dimension");
    if (normal_is_zero(h)) throw ParseError("form has zero linear part: " + h.str());
  }
  std::set<std::vector<Rational>> seen;
  for (const auto& h : hs) {
    auto key = projective_key(h);
    if (!seen.insert(key).second)
      throw ParseError("proportional forms define the same hyperplane: " + h.str());
  }
  a.hs_ = std::move(hs);

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& h : a.hs_) {
    rows.push_back(h.normal);
    rhs.push_back(-h.c0);
  }
  a.rank_ = rank_rational(rows);
  a.essential_ = (a.rank_ == n);
  auto sol = solve_affine(rows, rhs, n);
  a.central_ = sol.has_value();
  if (sol) a.center_ = sol->point;
  return a;
}

Arrangement Arrangement::parse(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("hyperplanes"))
    throw ParseError("arrangement file must contain \"n\" and \"hyperplanes\"");
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1) throw ParseError("ambient dimension must be at least 1");
  if (!j["hyperplanes"].is_array() || j["hyperplanes"].empty())
    throw ParseError("\"hyperplanes\" must be a non-empty array");
  std::vector<Hyperplane> hs;
  for (const auto& row : j["hyperplanes"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n + 1)
      throw ParseError("each hyperplane needs n coefficients plus a constant term");
    Hyperplane h;
    for (int k = 0; k < n; ++k) h.normal.push_back(rational_from_json(row[k]));
    h.c0 = rational_from_json(row[n]);
    hs.push_back(std::move(h));
  }
  return from_forms(n, std::move(hs));
}

Arrangement Arrangement::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open arrangement file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return parse(j);
}

std::string Arrangement::key() const {
  std::ostringstream os;
  os << n_ << "#";
  for (const auto& h : hs_) os << join_rationals(h.normal) << "|" << h.c0.str() << ";";
  return os.str();
}

json Arrangement::to_json() const {
  json rows = json::array();
  for (const auto& h : hs_) {
    json row = json::array();
    for (const auto& c : h.normal) row.push_back(c.str());
    row.push_back(h.c0.str());
    rows.push_back(row);
  }
  return json{{"n", n_}, {"hyperplanes", rows}};
}

// ---------------------------------------------------------------------------
// Edge poset

namespace {

struct Subspace {
  std::vector<Rational> point;
  std::vector<std::vector<Rational>> dirs;
};

// Intersection of the hyperplanes indexed by support; nullopt when empty.
std::optional<Subspace> intersect(const Arrangement& a, const std::vector<int>& support) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (int i : support) {
    rows.push_back(a.h(i).normal);
    rhs.push_back(-a.h(i).c0);
  }
  auto sol = solve_affine(rows, rhs, a.n());
  if (!sol) return std::nullopt;
  return Subspace{sol->point, sol->kernel};
}

// All hyperplanes containing the subspace.
std::vector<int> closed_support(const Arrangement& a, const Subspace& s) {
  std::vector<int> out;
  for (int j = 0; j < a.r(); ++j) {
    if (!a.h(j).eval(s.point).is_zero()) continue;
    bool contains = true;
    for (const auto& d : s.dirs) {
      Rational acc(0);
      for (int k = 0; k < a.n(); ++k) acc += a.h(j).normal[k] * d[k];
      if (!acc.is_zero()) { contains = false; break; }
    }
    if (contains) out.push_back(j);
  }
  return out;
}

}  // namespace

EdgePoset::EdgePoset(const Arrangement& a) : a_(&a) {
  // breadth-first intersection closure starting from the ambient space
  std::set<std::vector<int>> known;
  std::queue<std::vector<int>> work;
  std::map<std::vector<int>, Subspace> geometry;

  const Subspace ambient{std::vector<Rational>(a.n(), Rational(0)), [&] {
                           std::vector<std::vector<Rational>> id;
                           for (int k = 0; k < a.n(); ++k) {
                             std::vector<Rational> e(a.n(), Rational(0));
                             e[k] = Rational(1);
                             id.push_back(std::move(e));
                           }
                           return id;
                         }()};
  known.insert({});
  geometry[{}] = ambient;
  work.push({});

  while (!work.empty()) {
    const std::vector<int> cur = work.front();
    work.pop();
    for (int i = 0; i < a.r(); ++i) {
      if (std::binary_search(cur.begin(), cur.end(), i)) continue;
      std::vector<int> trial = cur;
      trial.insert(std::lower_bound(trial.begin(), trial.end(), i), i);
      auto sub = intersect(a, trial);
      if (!sub) continue;
      std::vector<int> closure = closed_support(a, *sub);
      if (known.insert(closure).second) {
        geometry[closure] = *sub;
        work.push(closure);
      }
    }
  }

  for (const auto& [support, sub] : geometry) {
    Edge e;
    e.support = support;
    e.point = sub.point;
    e.dirs = sub.dirs;
    e.dim = static_cast<int>(sub.dirs.size());
    edges_.push_back(std::move(e));
  }
  std::sort(edges_.begin(), edges_.end(), [&](const Edge& x, const Edge& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    return x.support < y.support;
  });
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) edges_[id].id = id;
  ambient_ = 0;  // the unique edge of full dimension and empty support

  // Moebius recursion down the poset: mu(ambient) = 1 and for W below,
  // mu(W) = -sum over edges X strictly containing W of mu(X).
  mobius_.assign(edges_.size(), 0);
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    if (id == ambient_) {
      mobius_[id] = 1;
      continue;
    }
    long long acc = 0;
    for (int x = 0; x < static_cast<int>(edges_.size()); ++x) {
      if (x == id) continue;
      if (std::includes(edges_[id].support.begin(), edges_[id].support.end(),
                        edges_[x].support.begin(), edges_[x].support.end()))
        acc += mobius_[x];
    }
    mobius_[id] = -acc;
  }

  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    if (id == ambient_) continue;
    if (proj_euler_char(id) != 0) dense_.push_back(id);
  }
}

bool EdgePoset::leq(int inner, int outer) const {
  return std::includes(edges_[inner].support.begin(), edges_[inner].support.end(),
                       edges_[outer].support.begin(), edges_[outer].support.end());
}

std::vector<int> EdgePoset::ids_of_codim(int w) const {
  std::vector<int> out;
  for (const Edge& e : edges_)
    if (a_->n() - e.dim == w) out.push_back(e.id);
  return out;
}

std::optional<int> EdgePoset::find_by_support(std::vector<int> s) const {
  std::sort(s.begin(), s.end());
  for (const Edge& e : edges_)
    if (e.support == s) return e.id;
  return std::nullopt;
}

IntPolynomial EdgePoset::poincare() const {
  std::vector<Int> c(a_->n() + 1, Int(0));
  for (const Edge& e : edges_) {
    const long long v = mobius_[e.id];
    c[codim(e.id)] += static_cast<long>(v < 0 ? -v : v);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial EdgePoset::poincare_interval(int w_id) const {
  std::vector<Int> c(codim(w_id) + 1, Int(0));
  for (const Edge& e : edges_) {
    if (!leq(w_id, e.id)) continue;
    const long long v = mobius_[e.id];
    c[codim(e.id)] += static_cast<long>(v < 0 ? -v : v);
  }
  return IntPolynomial(std::move(c));
}

long long EdgePoset::proj_euler_char(int w_id) const {
  if (w_id == ambient_) throw PreconditionError("proj_euler_char needs a proper edge");
  const IntPolynomial pi = poincare_interval(w_id);
  const IntPolynomial reduced = pi.divide_exact(IntPolynomial({std::vector<Int>{1, 1}}));
  return to_longlong(reduced.eval_int(Int(-1)));
}

bool EdgePoset::is_dense(int id) const {
  return std::binary_search(dense_.begin(), dense_.end(), id);
}

json EdgePoset::to_json() const {
  json edges = json::array();
  for (const Edge& e : edges_) {
    edges.push_back(json{{"id", e.id},
                         {"dim", e.dim},
                         {"support", e.support},
                         {"mobius", mobius_[e.id]},
                         {"dense", is_dense(e.id)}});
  }
  json pc = json::array();
  const IntPolynomial pi = poincare();
  for (const Int& c : pi.coeffs()) pc.push_back(to_longlong(c));
  return json{{"n", a_->n()},        {"r", a_->r()},
              {"central", a_->central()}, {"essential", a_->essential()},
              {"poincare", pc},      {"edges", edges},
              {"dense", dense_}};
}

// ---------------------------------------------------------------------------
// Matroid decomposition

namespace {

int rank_of_subset(const Arrangement& a, const std::vector<int>& s) {
  std::vector<std::vector<Rational>> rows;
  for (int i : s) rows.push_back(a.h(i).normal);
  return rank_rational(rows);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<std::vector<int>> decompose(const Arrangement& a) {
  if (!a.central()) throw PreconditionError("decompose needs a central arrangement");
  const int r = a.r();
  UnionFind uf(r);
  const int maxk = std::min(r, a.rank() + 1);
  // two indices are matroid-connected iff they lie on a common circuit
  std::vector<int> subset;
  std::function<void(int, int)> enumerate = [&](int start, int remaining) {
    if (remaining == 0) {
      const int k = static_cast<int>(subset.size());
      if (rank_of_subset(a, subset) != k - 1) return;  // not dependent of corank 1
      for (int drop = 0; drop < k; ++drop) {
        std::vector<int> sub;
        for (int t = 0; t < k; ++t)
          if (t != drop) sub.push_back(subset[t]);
        if (rank_of_subset(a, sub) != k - 1) return;  // a proper subset is dependent
      }
      for (int t = 1; t < k; ++t) uf.unite(subset[0], subset[t]);
      return;
    }
    for (int i = start; i <= r - remaining; ++i) {
      subset.push_back(i);
      enumerate(i + 1, remaining - 1);
      subset.pop_back();
    }
  };
  for (int k = 2; k <= maxk; ++k) enumerate(0, k);

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < r; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

// ---------------------------------------------------------------------------
// Restriction, triple, localization, essentialization

namespace {

// Arrangement traced on the subspace point + span(dirs) by the hyperplanes
// listed in outside, with coincident traces merged.
Restriction restrict_to_subspace(const Arrangement& a, const std::vector<int>& outside,
                                 const std::vector<Rational>& point,
                                 const std::vector<std::vector<Rational>>& dirs) {
  const int d = static_cast<int>(dirs.size());
  std::vector<Hyperplane> forms;
  std::vector<std::vector<int>> trace;
  std::map<std::vector<Rational>, int> seen;
  for (int j : outside) {
    Hyperplane g;
    g.normal.resize(d);
    bool zero = true;
    for (int k = 0; k < d; ++k) {
      Rational acc(0);
      for (int t = 0; t < a.n(); ++t) acc += a.h(j).normal[t] * dirs[k][t];
      g.normal[k] = acc;
      if (!acc.is_zero()) zero = false;
    }
    g.c0 = a.h(j).eval(point);
    if (zero) continue;  // parallel to the subspace: empty trace
    auto key = projective_key(g);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen[key] = static_cast<int>(forms.size());
      forms.push_back(std::move(g));
      trace.push_back({j});
    } else {
      trace[it->second].push_back(j);
    }
  }
  Restriction out;
  out.arr = Arrangement::from_forms(d, std::move(forms));
  out.trace = std::move(trace);
  return out;
}

}  // namespace

TripleDecomposition triple(const Arrangement& a, int i) {
  if (a.r() < 2) throw PreconditionError("triple needs at least two hyperplanes");
  if (i < 0 || i >= a.r()) throw PreconditionError("hyperplane index out of range");
  TripleDecomposition out;
  out.removed = i;
  std::vector<Hyperplane> rest;
  std::vector<int> outside;
  for (int j = 0; j < a.r(); ++j) {
    if (j == i) continue;
    rest.push_back(a.h(j));
    outside.push_back(j);
  }
  out.deleted = Arrangement::from_forms(a.n(), std::move(rest));
  auto sub = solve_affine({a.h(i).normal}, {-a.h(i).c0}, a.n());
  if (!sub) throw std::logic_error("hyperplane with empty zero set");
  out.restricted = restrict_to_subspace(a, outside, sub->point, sub->kernel);
  return out;
}

Localization localize(const Arrangement& a, const Edge& w) {
  Localization out;
  out.support = w.support;

  // A_W: the containing forms in coordinates on C^n / W. The complement
  // basis extends the direction space of W by unit vectors.
  std::vector<std::vector<Rational>> span = w.dirs;
  std::vector<std::vector<Rational>> complement;
  for (int k = 0; k < a.n(); ++k) {
    std::vector<Rational> e(a.n(), Rational(0));
    e[k] = Rational(1);
    span.push_back(e);
    if (rank_rational(span) == static_cast<int>(span.size())) {
      complement.push_back(std::move(e));
    } else {
      span.pop_back();
    }
  }
  const int w_codim = static_cast<int>(complement.size());
  std::vector<Hyperplane> forms;
  for (int i : w.support) {
    Hyperplane g;
    g.normal.resize(w_codim);
    for (int k = 0; k < w_codim; ++k) {
      Rational acc(0);
      for (int t = 0; t < a.n(); ++t) acc += a.h(i).normal[t] * complement[k][t];
      g.normal[k] = acc;
    }
    g.c0 = Rational(0);  // every containing hyperplane passes through W
    forms.push_back(std::move(g));
  }
  out.closed = Arrangement::from_forms(w_codim, std::move(forms));

  // A^W: traces of the remaining hyperplanes on W itself.
  std::vector<int> outside;
  for (int j = 0; j < a.r(); ++j)
    if (!std::binary_search(w.support.begin(), w.support.end(), j)) outside.push_back(j);
  if (w.dim > 0) {
    out.traced = restrict_to_subspace(a, outside, w.point, w.dirs);
  } else {
    out.traced.arr = Arrangement::from_forms(0, {});
  }
  return out;
}

Arrangement essentialize(const Arrangement& a) {
  if (a.essential()) return a;
  // common null directions of all normals
  std::vector<std::vector<Rational>> rows;
  for (const auto& h : a.hyperplanes()) rows.push_back(h.normal);
  auto hom = solve_affine(rows, std::vector<Rational>(rows.size(), Rational(0)), a.n());
  const auto& kernel = hom->kernel;
  // complement coordinates as in localize
  std::vector<std::vector<Rational>> span = kernel;
  std::vector<std::vector<Rational>> complement;
  for (int k = 0; k < a.n(); ++k) {
    std::vector<Rational> e(a.n(), Rational(0));
    e[k] = Rational(1);
    span.push_back(e);
    if (rank_rational(span) == static_cast<int>(span.size())) {
      complement.push_back(std::move(e));
    } else {
      span.pop_back();
    }
  }
  const int d = static_cast<int>(complement.size());
  std::vector<Hyperplane> forms;
  for (const auto& h : a.hyperplanes()) {
    Hyperplane g;
    g.normal.resize(d);
    for (int k = 0; k < d; ++k) {
      Rational acc(0);
      for (int t = 0; t < a.n(); ++t) acc += h.normal[t] * complement[k][t];
      g.normal[k] = acc;
    }
    g.c0 = h.c0;
    forms.push_back(std::move(g));
  }
  return Arrangement::from_forms(d, std::move(forms));
}

}  // namespace arrsheaf
