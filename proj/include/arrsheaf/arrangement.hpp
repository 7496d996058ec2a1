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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "arrsheaf/intpoly.hpp"
#include "arrsheaf/linalg.hpp"
#include "arrsheaf/rational.hpp"

namespace arrsheaf {

using json = nlohmann::json;

/// Accepts "p/q" strings or plain JSON integers.
Rational rational_from_json(const json& v);

/// Affine-linear form normal . x + c0; the hyperplane is its zero set.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational c0;

  Rational eval(const std::vector<Rational>& x) const;
  std::string str() const;
};

/// Finite set of mutually distinct affine hyperplanes in C^n with the
/// central/essential flags computed on construction.
class Arrangement {
 public:
  /// Validates: n >= 1 for files, no zero normals, no proportional pairs.
  static Arrangement from_forms(int n, std::vector<Hyperplane> hs);
  static Arrangement parse(const json& j);
  static Arrangement load(const std::string& path);

  int n() const { return n_; }
  int r() const { return static_cast<int>(hs_.size()); }
  const Hyperplane& h(int i) const { return hs_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hs_; }

  bool central() const { return central_; }
  bool essential() const { return essential_; }
  /// Rank of the normal vectors (= n iff essential).
  int rank() const { return rank_; }
  /// A point of the center when the arrangement is central.
  const std::optional<std::vector<Rational>>& center_point() const { return center_; }

  /// Canonical key for memoization.
  std::string key() const;
  json to_json() const;

  Arrangement() = default;  // the empty arrangement in C^0

 private:
  int n_ = 0;
  std::vector<Hyperplane> hs_;
  bool central_ = false;
  bool essential_ = false;
  int rank_ = 0;
  std::optional<std::vector<Rational>> center_;
};

/// An edge (flat) of the arrangement: the ambient space or a non-empty
/// intersection of hyperplanes. The support is closed: exactly the set of
/// hyperplane indices containing the edge.
struct Edge {
  int id = -1;
  std::vector<int> support;  // ascending
  int dim = 0;
  std::vector<Rational> point;              // a rational point on the edge
  std::vector<std::vector<Rational>> dirs;  // basis of the direction space

  int multiplicity() const { return static_cast<int>(support.size()); }
};

/// The poset of all edges ordered by reverse inclusion of supports, with
/// the Moebius function mu(C^n, W) and the derived lattice invariants.
class EdgePoset {
 public:
  explicit EdgePoset(const Arrangement& a);

  const Arrangement& arrangement() const { return *a_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int ambient_id() const { return ambient_; }
  int codim(int id) const { return a_->n() - edges_[id].dim; }
  long long mobius(int id) const { return mobius_[id]; }

  /// True iff edge(inner) is contained in edge(outer).
  bool leq(int inner, int outer) const;
  std::vector<int> ids_of_codim(int w) const;
  std::optional<int> find_by_support(std::vector<int> closed_support) const;

  /// Poincare polynomial of the whole arrangement.
  IntPolynomial poincare() const;
  /// Poincare polynomial of the interval [C^n, W], i.e. of the localized
  /// central arrangement A_W.
  IntPolynomial poincare_interval(int w_id) const;
  /// Euler characteristic of the projectivized local complement P(U_W):
  /// pi(A_W, t) = (1+t) pi'(t), returns pi'(-1). Pre: W is not the ambient edge.
  long long proj_euler_char(int w_id) const;

  const std::vector<int>& dense_edges() const { return dense_; }
  bool is_dense(int id) const;

  json to_json() const;

 private:
  const Arrangement* a_;
  std::vector<Edge> edges_;
  std::vector<long long> mobius_;
  std::vector<int> dense_;
  int ambient_ = -1;
};

/// Matroid-connected components of the normal-vector matroid: the finest
/// partition of indices realizing the arrangement as a product.
/// Pre: the arrangement is central. Singleton result <=> indecomposable.
std::vector<std::vector<int>> decompose(const Arrangement& a);

/// Arrangement traced on a subspace by the hyperplanes not containing it,
/// with coincident traces merged; trace[k] lists the parent indices whose
/// intersection with the subspace is hyperplane k.
struct Restriction {
  Arrangement arr;
  std::vector<std::vector<int>> trace;
};

/// Deletion-restriction triple (A, A', A'').
struct TripleDecomposition {
  int removed = -1;
  Arrangement deleted;
  Restriction restricted;
};

/// Pre: r >= 2. The restricted arrangement lives inside the removed
/// hyperplane, in dimension n-1.
TripleDecomposition triple(const Arrangement& a, int i);

/// Localization data at an edge: A_W (central essential, in C^codim) and
/// A^W (traced on W, empty when dim W = 0).
struct Localization {
  Arrangement closed;        // A_W
  std::vector<int> support;  // parent hyperplane order of A_W (ascending)
  Restriction traced;        // A^W
};

Localization localize(const Arrangement& a, const Edge& w);

/// Quotient by the common direction space of all normals. Hyperplanes keep
/// their indices; the result is essential of the same rank.
Arrangement essentialize(const Arrangement& a);

}  // namespace arrsheaf
