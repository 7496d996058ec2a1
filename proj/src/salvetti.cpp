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
#include "arrsheaf/salvetti.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "arrsheaf/errors.hpp"
#include "arrsheaf/linalg.hpp"
#include "arrsheaf/workspace.hpp"

namespace arrsheaf {

int FaceStructure::chamber_of(const std::vector<int>& signs) const {
  auto it = chamber_index.find(signs);
  if (it == chamber_index.end()) throw std::logic_error("sign vector is not a chamber");
  return it->second;
}

namespace {

using Vec2 = std::array<Rational, 2>;

Rational cross(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

// 0 for the half-plane y > 0 (including the positive x-axis), 1 otherwise;
// used for the exact counterclockwise circular order starting at angle 0.
int angular_half(const Vec2& v) {
  const int sy = v[1].sign();
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return v[0].sign() > 0 ? 0 : 1;
}

bool angle_less(const Vec2& u, const Vec2& v) {
  const int hu = angular_half(u), hv = angular_half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v).sign() > 0;
}

// Feasibility over R^2 of a system of strict inequalities a x + b y + c > 0,
// by Fourier-Motzkin elimination of x and then of y. Exact.
bool strict_system_feasible(const std::vector<std::array<Rational, 3>>& ineqs) {
  // eliminate x: rows with a > 0 give lower bounds on x, a < 0 upper bounds
  std::vector<std::array<Rational, 2>> lower, upper, pure;  // (b, c) pairs
  for (const auto& q : ineqs) {
    if (q[0].sign() > 0) {
      lower.push_back({-(q[1] / q[0]), -(q[2] / q[0])});  // x > b y + c
    } else if (q[0].sign() < 0) {
      upper.push_back({-(q[1] / q[0]), -(q[2] / q[0])});  // x < b y + c
    } else {
      pure.push_back({q[1], q[2]});  // b y + c > 0
    }
  }
  std::vector<std::array<Rational, 2>> one_var = pure;
  for (const auto& lo : lower)
    for (const auto& up : upper)
      one_var.push_back({up[0] - lo[0], up[1] - lo[1]});  // lower < upper
  // eliminate y from b y + c > 0
  bool has_lo = false, has_up = false;
  Rational best_lo(0), best_up(0);
  for (const auto& q : one_var) {
    if (q[0].sign() > 0) {
      const Rational bound = -(q[1] / q[0]);
      if (!has_lo || bound > best_lo) best_lo = bound;
      has_lo = true;
    } else if (q[0].sign() < 0) {
      const Rational bound = -(q[1] / q[0]);
      if (!has_up || bound < best_up) best_up = bound;
      has_up = true;
    } else {
      if (q[1].sign() <= 0) return false;
    }
  }
  if (has_lo && has_up) return best_lo < best_up;
  return true;
}

int sign_at(const Hyperplane& h, const std::vector<Rational>& p) { return h.eval(p).sign(); }

}  // namespace

FaceStructure face_structure(const Arrangement& a) {
  if (a.n() != 2) throw PreconditionError("face structure needs a line arrangement in C^2");
  if (a.r() < 1) throw PreconditionError("face structure needs at least one line");
  FaceStructure fs;
  const int r = a.r();

  // chosen direction of each line: the kernel vector of the normal
  for (int i = 0; i < r; ++i) {
    const auto& nrm = a.h(i).normal;
    fs.line_dir.push_back({-nrm[1], nrm[0]});
  }

  // vertices: pairwise intersections, deduplicated
  std::map<std::vector<Rational>, int> vertex_index;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      auto sol = solve_affine({a.h(i).normal, a.h(j).normal}, {-a.h(i).c0, -a.h(j).c0}, 2);
      if (!sol || sol->dim() != 0) continue;  // parallel (or equal, excluded)
      if (vertex_index.count(sol->point)) continue;
      vertex_index[sol->point] = static_cast<int>(fs.vertices.size());
      FaceStructure::Vertex v;
      v.pt = sol->point;
      for (int k = 0; k < r; ++k) {
        const int s = sign_at(a.h(k), v.pt);
        v.signs.push_back(s);
        if (s == 0) v.lines.push_back(k);
      }
      fs.vertices.push_back(std::move(v));
    }
  }

  // 1-faces: each line cut at its vertices, ordered along the chosen direction
  for (int i = 0; i < r; ++i) {
    auto on_line = solve_affine({a.h(i).normal}, {-a.h(i).c0}, 2);
    const std::vector<Rational> base = on_line->point;
    const std::vector<Rational>& dvec = fs.line_dir[i];
    // parameter of a point p on the line: lambda with p = base + lambda * d
    auto param = [&](const std::vector<Rational>& p) {
      const Rational dx = p[0] - base[0], dy = p[1] - base[1];
      if (!dvec[0].is_zero()) return dx / dvec[0];
      return dy / dvec[1];
    };
    std::vector<std::pair<Rational, int>> stops;
    for (std::size_t v = 0; v < fs.vertices.size(); ++v)
      if (std::binary_search(fs.vertices[v].lines.begin(), fs.vertices[v].lines.end(), i))
        stops.emplace_back(param(fs.vertices[v].pt), static_cast<int>(v));
    std::sort(stops.begin(), stops.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    auto push_seg = [&](int v_neg, int v_pos, const Rational& t_interior) {
      FaceStructure::Seg s;
      s.line = i;
      s.v_neg = v_neg;
      s.v_pos = v_pos;
      std::vector<Rational> p = {base[0] + t_interior * dvec[0], base[1] + t_interior * dvec[1]};
      for (int k = 0; k < r; ++k) s.signs.push_back(sign_at(a.h(k), p));
      const int seg_id = static_cast<int>(fs.segs.size());
      if (v_neg >= 0) fs.star[{v_neg, i}].second = seg_id;  // extends toward +dir
      if (v_pos >= 0) fs.star[{v_pos, i}].first = seg_id;   // extends toward -dir
      fs.segs.push_back(std::move(s));
    };

    if (stops.empty()) {
      push_seg(-1, -1, Rational(0));
    } else {
      push_seg(-1, stops.front().second, stops.front().first - Rational(1));
      for (std::size_t t = 0; t + 1 < stops.size(); ++t)
        push_seg(stops[t].second, stops[t + 1].second,
                 (stops[t].first + stops[t + 1].first) / Rational(2));
      push_seg(stops.back().second, -1, stops.back().first + Rational(1));
    }
  }

  // chambers: feasible full sign vectors
  std::vector<int> signs(r, 1);
  std::function<void(int)> sweep = [&](int k) {
    if (k == r) {
      std::vector<std::array<Rational, 3>> ineqs;
      for (int i = 0; i < r; ++i) {
        const Rational s(signs[i]);
        ineqs.push_back({s * a.h(i).normal[0], s * a.h(i).normal[1], s * a.h(i).c0});
      }
      if (strict_system_feasible(ineqs)) {
        fs.chamber_index[signs] = static_cast<int>(fs.chambers.size());
        fs.chambers.push_back({signs});
      }
      return;
    }
    signs[k] = 1;
    sweep(k + 1);
    signs[k] = -1;
    sweep(k + 1);
  };
  sweep(0);
  return fs;
}

// ---------------------------------------------------------------------------
// Twisted complex

namespace {

struct Cells {
  // 1-cells: (segment, from-chamber); 2-cells: (vertex, sector start chamber)
  std::vector<std::pair<int, int>> one_cells;  // (seg, chamber)
  std::map<std::pair<int, int>, int> one_index;
};

// The two chambers adjacent to a segment: signs with the 0 entry set to +-1.
std::pair<int, int> seg_sides(const FaceStructure& fs, int seg) {
  std::vector<int> plus = fs.segs[seg].signs, minus = fs.segs[seg].signs;
  plus[fs.segs[seg].line] = 1;
  minus[fs.segs[seg].line] = -1;
  return {fs.chamber_of(plus), fs.chamber_of(minus)};
}

}  // namespace

TwistedComplex twisted_complex(const FaceStructure& fs, const std::vector<Rational>& exps) {
  int conductor = 1;
  for (const auto& e : exps)
    conductor = std::lcm(conductor, static_cast<int>(to_longlong(e.mod1().den())));
  std::vector<CycloElement> t;
  for (const auto& e : exps) t.push_back(CycloElement::root_of_unity(e).lifted(conductor));
  const CycloElement one = CycloElement::one(conductor);

  Cells cells;
  for (int s = 0; s < static_cast<int>(fs.segs.size()); ++s) {
    const auto [cp, cm] = seg_sides(fs, s);
    cells.one_index[{s, cp}] = static_cast<int>(cells.one_cells.size());
    cells.one_cells.emplace_back(s, cp);
    cells.one_index[{s, cm}] = static_cast<int>(cells.one_cells.size());
    cells.one_cells.emplace_back(s, cm);
  }

  TwistedComplex tc;
  tc.n_cells[0] = static_cast<int>(fs.chambers.size());
  tc.n_cells[1] = static_cast<int>(cells.one_cells.size());

  // d1: the 1-cell [e, D] maps to t_i^{[D on + side]} [D^op] - [D]
  tc.d1.assign(tc.n_cells[0], std::vector<CycloElement>());
  for (auto& row : tc.d1) row.assign(tc.n_cells[1], CycloElement::zero(conductor));
  for (int c = 0; c < tc.n_cells[1]; ++c) {
    const auto [seg, from] = cells.one_cells[c];
    const int line = fs.segs[seg].line;
    std::vector<int> op = fs.chambers[from].signs;
    op[line] = -op[line];
    const int to = fs.chamber_of(op);
    const bool from_plus = fs.chambers[from].signs[line] > 0;
    tc.d1[to][c] = tc.d1[to][c] + (from_plus ? t[line] : one);
    tc.d1[from][c] = tc.d1[from][c] - one;
  }

  // 2-cells and d2
  struct TwoCell {
    int vertex;
    int start_sector;
  };
  std::vector<TwoCell> two_cells;
  std::vector<std::vector<std::pair<int, CycloElement>>> columns;

  for (int vi = 0; vi < static_cast<int>(fs.vertices.size()); ++vi) {
    const auto& V = fs.vertices[vi];
    const int m = static_cast<int>(V.lines.size());
    // rays at V in counterclockwise order
    struct Ray {
      Vec2 dir;
      int line;
      int orient;  // +1: the chosen line direction, -1: opposite
    };
    std::vector<Ray> rays;
    for (int line : V.lines) {
      const Vec2 d = {fs.line_dir[line][0], fs.line_dir[line][1]};
      rays.push_back({d, line, +1});
      rays.push_back({{-d[0], -d[1]}, line, -1});
    }
    std::sort(rays.begin(), rays.end(),
              [](const Ray& x, const Ray& y) { return angle_less(x.dir, y.dir); });
    const int nrays = 2 * m;

    // sector k lies between rays k and k+1; its chamber fills the local signs
    std::vector<int> sector_chamber(nrays);
    for (int k = 0; k < nrays; ++k) {
      const Vec2& u = rays[k].dir;
      const Vec2& w = rays[(k + 1) % nrays].dir;
      const Vec2 mid = {u[0] + w[0], u[1] + w[1]};
      std::vector<int> signs = V.signs;
      for (int line : V.lines) {
        // sign of f_line just off V in direction mid is sign(normal . mid);
        // line_dir was chosen as (-b, a) for normal (a, b)
        const auto& d = fs.line_dir[line];
        const Rational v = d[1] * mid[0] - d[0] * mid[1];
        signs[line] = v.sign();
        if (signs[line] == 0) throw std::logic_error("sector direction lies on a ray");
      }
      sector_chamber[k] = fs.chamber_of(signs);
    }

    auto seg_toward = [&](int line, int orient) {
      const auto it = fs.star.find({vi, line});
      if (it == fs.star.end()) throw std::logic_error("missing star segment");
      return orient > 0 ? it->second.second : it->second.first;
    };

    for (int start = 0; start < nrays; ++start) {
      std::vector<std::pair<int, CycloElement>> column;
      // counterclockwise gallery: crosses rays start+1 .. start+m
      CycloElement weight = one;
      for (int step = 0; step < m; ++step) {
        const int ray_ix = (start + 1 + step) % nrays;
        const int sector = (start + step) % nrays;
        const int from = sector_chamber[sector];
        const int seg = seg_toward(rays[ray_ix].line, rays[ray_ix].orient);
        column.emplace_back(cells.one_index.at({seg, from}), weight);
        if (fs.chambers[from].signs[rays[ray_ix].line] > 0)
          weight = weight * t[rays[ray_ix].line];
      }
      // clockwise gallery: crosses rays start, start-1, .. start-m+1
      weight = one;
      for (int step = 0; step < m; ++step) {
        const int ray_ix = (start - step + nrays) % nrays;
        const int sector = (start - step + nrays) % nrays;
        const int from = sector_chamber[sector];
        const int seg = seg_toward(rays[ray_ix].line, rays[ray_ix].orient);
        column.emplace_back(cells.one_index.at({seg, from}), -weight);
        if (fs.chambers[from].signs[rays[ray_ix].line] > 0)
          weight = weight * t[rays[ray_ix].line];
      }
      two_cells.push_back({vi, start});
      columns.push_back(std::move(column));
    }
  }

  tc.n_cells[2] = static_cast<int>(two_cells.size());
  tc.d2.assign(tc.n_cells[1], std::vector<CycloElement>());
  for (auto& row : tc.d2) row.assign(tc.n_cells[2], CycloElement::zero(conductor));
  for (int c = 0; c < tc.n_cells[2]; ++c)
    for (const auto& [row, val] : columns[c]) tc.d2[row][c] = tc.d2[row][c] + val;

  return tc;
}

std::array<long long, 3> twisted_betti(const Arrangement& a, const LocalSystem& l) {
  if (a.n() != 2) throw PreconditionError("the oracle works on line arrangements in C^2");
  if (l.r() != a.r()) throw ParseError("local system length does not match the arrangement");
  const FaceStructure fs = face_structure(a);
  // cohomology of L_t equals homology of the chain complex with dual weights
  std::vector<Rational> dual;
  for (const auto& e : l.exponents()) dual.push_back((-e).mod1());
  const TwistedComplex tc = twisted_complex(fs, dual);
  const long long r1 = rank_exact(tc.d1);
  const long long r2 = rank_exact(tc.d2);
  return {tc.n_cells[0] - r1, tc.n_cells[1] - r1 - r2, tc.n_cells[2] - r2};
}

// ---------------------------------------------------------------------------
// Deconing

Arrangement decone(const Arrangement& a, int k, std::vector<int>* kept) {
  if (a.n() != 3) throw PreconditionError("deconing is implemented for C^3");
  if (!a.central() || !a.essential())
    throw PreconditionError("deconing needs a central essential arrangement");
  if (k < 0 || k >= a.r()) throw PreconditionError("decone index out of range");
  auto chart = solve_affine({a.h(k).normal}, {Rational(1) - a.h(k).c0}, 3);
  if (!chart) throw std::logic_error("no chart point with f_k = 1");
  const auto& base = chart->point;
  const auto& dirs = chart->kernel;  // two directions spanning ker(normal_k)
  std::vector<Hyperplane> lines;
  if (kept) kept->clear();
  for (int j = 0; j < a.r(); ++j) {
    if (j == k) continue;
    Hyperplane g;
    g.normal.resize(2);
    for (int t = 0; t < 2; ++t) {
      Rational acc(0);
      for (int s = 0; s < 3; ++s) acc += a.h(j).normal[s] * dirs[t][s];
      g.normal[t] = acc;
    }
    g.c0 = a.h(j).eval(base);
    lines.push_back(std::move(g));
    if (kept) kept->push_back(j);
  }
  return Arrangement::from_forms(2, std::move(lines));
}

long long coned_cohomology(const Arrangement& a, const LocalSystem& l, int q,
                           int decone_index, Workspace* ws) {
  if (q < 0 || q > 2) throw PreconditionError("projective cohomology degree must be 0..2");
  if (l.r() != a.r()) throw ParseError("local system length does not match the arrangement");
  Rational total(0);
  for (const auto& e : l.exponents()) total += e;
  if (!total.mod1().is_zero())
    throw PreconditionError("the system does not descend to the projective complement");
  std::vector<int> kept;
  const Arrangement da = decone(a, decone_index, &kept);
  std::vector<Rational> exps;
  for (int j : kept) exps.push_back(l.a(j));
  const LocalSystem dl(std::move(exps));
  const auto b = ws ? ws->betti(da, dl) : twisted_betti(da, dl);
  return b[q];
}

long long complement_cohomology(const Arrangement& a, const LocalSystem& l, int q,
                                int decone_index, Workspace* ws) {
  Rational total(0);
  for (const auto& e : l.exponents()) total += e;
  if (!total.mod1().is_zero()) return 0;  // no descent along the C* factor
  long long out = 0;
  if (q <= 2) out += coned_cohomology(a, l, q, decone_index, ws);
  if (q - 1 >= 0 && q - 1 <= 2) out += coned_cohomology(a, l, q - 1, decone_index, ws);
  return out;
}

}  // namespace arrsheaf
