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

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "arrsheaf/arrangement.hpp"
#include "arrsheaf/cyclotomic.hpp"
#include "arrsheaf/localsys.hpp"

namespace arrsheaf {

class Workspace;

/// The regular cell decomposition of R^2 induced by a real affine line
/// arrangement: chambers, 1-faces and vertices, each carried as a sign
/// vector over the defining forms (0 on lines containing the face).
struct FaceStructure {
  struct Vertex {
    std::vector<Rational> pt;
    std::vector<int> lines;  // lines through the vertex, ascending
    std::vector<int> signs;  // sign of f_k at the vertex (0 on through-lines)
  };
  struct Seg {
    int line;                     // the line carrying this 1-face
    int v_neg = -1, v_pos = -1;   // endpoint vertex toward -dir / +dir, -1 if unbounded
    std::vector<int> signs;       // 0 at the own line
  };
  struct Chamber {
    std::vector<int> signs;  // all entries +-1
  };

  std::vector<Vertex> vertices;
  std::vector<Seg> segs;
  std::vector<Chamber> chambers;
  std::vector<std::vector<Rational>> line_dir;  // chosen direction per line
  std::map<std::vector<int>, int> chamber_index;
  // (vertex, line) -> segment extending from the vertex toward -dir / +dir
  std::map<std::pair<int, int>, std::pair<int, int>> star;

  int chamber_of(const std::vector<int>& signs) const;
};

/// Exact sign-vector enumeration of the induced subdivision of R^2.
/// Pre: n == 2, at least one line; coefficients are rational (real).
FaceStructure face_structure(const Arrangement& a);

/// Twisted cochain complex on the Salvetti complex of the arrangement.
///
/// Cells: 0-cells are chambers; 1-cells are pairs (1-face, adjacent chamber);
/// 2-cells are pairs (vertex, adjacent chamber). The 1-cell [e, D] runs from
/// the chamber vertex w(D) to w(D^op); the 2-cell [V, C] is glued along the
/// two minimal galleries around V from C to the antipodal chamber.
///
/// Weights: crossing line i from its positive side carries t_i, from the
/// negative side 1; gallery steps accumulate prefix products. Consecutive
/// differentials compose to zero, and the two traversals of a line compose
/// to the meridian monodromy t_i.
struct TwistedComplex {
  int n_cells[3] = {0, 0, 0};
  // boundary matrices d1: C1 -> C0 and d2: C2 -> C1, rows indexed by targets
  std::vector<std::vector<CycloElement>> d1, d2;
};

/// Builds the complex with monodromy weights exp(2*pi*i*a_i) for the given
/// exponents (callers pass the dual exponents to read off cohomology).
TwistedComplex twisted_complex(const FaceStructure& fs, const std::vector<Rational>& exps);

/// Cohomology ranks (b0, b1, b2) of the complement of the complexified
/// arrangement with coefficients in the rank-one system L.
/// Pre: n == 2, real (rational) input, torsion L of matching length.
std::array<long long, 3> twisted_betti(const Arrangement& a, const LocalSystem& l);

/// The affine 2-arrangement seen in the chart f_k = 1 of a central essential
/// 3-arrangement; kept[j] records the parent index of line j.
Arrangement decone(const Arrangement& a, int k, std::vector<int>* kept = nullptr);

/// h^q(P(U), L~) of the projectivized complement of a central essential
/// 3-arrangement, through the deconed affine picture.
/// Pre: sum of exponents integral (the system descends); q in {0, 1, 2}.
long long coned_cohomology(const Arrangement& a, const LocalSystem& l, int q,
                           int decone_index = 0, Workspace* ws = nullptr);

/// h^q(U, L) of the complement itself, derived from the product structure
/// U = C* x P(U): zero without descent, otherwise h^q(P) + h^{q-1}(P).
long long complement_cohomology(const Arrangement& a, const LocalSystem& l, int q,
                                int decone_index = 0, Workspace* ws = nullptr);

}  // namespace arrsheaf
