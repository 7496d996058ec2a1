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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arrsheaf/errors.hpp"
#include "arrsheaf/workspace.hpp"
#include "helpers.hpp"

using namespace arrsheaf;
using namespace arrsheaf::testing;

TEST_CASE("exponents are canonicalized into [0,1)") {
  const LocalSystem l = LocalSystem::parse_list("-1/3,7/3,2");
  CHECK(l.a(0).str() == "2/3");
  CHECK(l.a(1).str() == "1/3");
  CHECK(l.a(2).is_zero());
  CHECK_THROWS_AS(LocalSystem::parse_list("1/0"), ParseError);
}

TEST_CASE("edge products") {
  Workspace ws;
  const Arrangement b = boolean3();
  const auto p = ws.poset(b);
  const LocalSystem half_half_zero = LocalSystem::parse_list("1/2,1/2,0");
  const int line_xy = *p->find_by_support({0, 1});
  CHECK(edge_product(*p, half_half_zero, line_xy).is_one);

  const LocalSystem thirds = LocalSystem::parse_list("1/3,1/3,1/3");
  const int origin = p->ids_of_codim(3).front();
  CHECK(edge_product(*p, thirds, origin).is_one);

  const auto brp = ws.poset(braid());
  const LocalSystem bthirds = LocalSystem::equal_monodromy(Rational::parse("1/3"), 6);
  for (int id : brp->ids_of_codim(2))
    if (brp->edge(id).multiplicity() == 3)
      CHECK(edge_product(*brp, bthirds, id).is_one);

  CHECK_THROWS_AS(edge_product(*p, thirds, p->ambient_id()), PreconditionError);
}

TEST_CASE("restriction and induction") {
  Workspace ws;
  const Arrangement b = boolean3();
  const auto p = ws.poset(b);
  const LocalSystem l = LocalSystem::parse_list("1/2,1/3,0");
  const Edge& line = p->edge(*p->find_by_support({0, 1}));
  CHECK(restrict_edge(l, line.support).exponents() ==
        std::vector<Rational>{Rational::parse("1/2"), Rational::parse("1/3")});
  CHECK(restrict_edge(l, {}).r() == 0);  // the ambient edge gives the empty tuple

  // 5-plane cone, traces merge on z = 0 and exponents add mod 1
  const Arrangement c5 = cone5();
  const TripleDecomposition t = triple(c5, 0);
  const LocalSystem l5 = LocalSystem::parse_list("0,1/2,1/2,1/2,1/2");
  const LocalSystem induced = induce_edge(l5, t.restricted);
  CHECK(induced.r() == 2);
  CHECK(induced.a(0).is_zero());
  CHECK(induced.a(1).is_zero());

  // braid triple line: the induced system on the line has exponent 3s = 0
  const Arrangement br = braid();
  const auto brp = ws.poset(br);
  const Edge& diag = brp->edge(*brp->find_by_support({3, 4, 5}));
  const LocalSystem bl = LocalSystem::equal_monodromy(Rational::parse("1/3"), 6);
  const Localization loc = localize(br, diag);
  const LocalSystem li = induce_edge(bl, loc.traced);
  for (int i = 0; i < li.r(); ++i) CHECK(li.a(i).is_zero());
}

TEST_CASE("additivity of edge products under the trace map") {
  Workspace ws;
  const Arrangement c5 = cone5();
  const auto p = ws.poset(c5);
  const LocalSystem l = LocalSystem::parse_list("1/3,1/6,1/2,2/3,5/6");
  for (const Edge& e : p->edges()) {
    if (e.dim != 1) continue;
    const Localization loc = localize(c5, e);
    const LocalSystem ind = induce_edge(l, loc.traced);
    for (std::size_t k = 0; k < loc.traced.trace.size(); ++k) {
      Rational sum(0);
      for (int j : loc.traced.trace[k]) sum += l.a(j);
      CHECK(ind.a(static_cast<int>(k)) == sum.mod1());
    }
  }
}

TEST_CASE("resonance membership") {
  Workspace ws;
  const Arrangement b = boolean3();
  const auto p = ws.poset(b);
  const LocalSystem halves = LocalSystem::parse_list("1/2,1/2,1/2");
  const int h1 = *p->find_by_support({0});
  CHECK_FALSE(in_W(b, *p, halves, h1));
  CHECK(in_W(b, *p, halves, p->ambient_id()));

  // Boolean origin is decomposable: membership needs every factor to resonate
  const int origin = p->ids_of_codim(3).front();
  CHECK_FALSE(in_W(b, *p, halves, origin));
  CHECK(in_W(b, *p, LocalSystem::parse_list("0,0,0"), origin));

  // 4-plane cone, all exponents 1/2: the origin resonates alone
  const Arrangement c4 = cone4();
  const auto c4p = ws.poset(c4);
  const LocalSystem c4l = LocalSystem::parse_list("1/2,1/2,1/2,1/2");
  const int c4o = c4p->ids_of_codim(3).front();
  CHECK(in_W_circ(c4, *c4p, c4l, c4o));

  // braid, all 1/3: the origin resonates but so do the triple lines
  const Arrangement br = braid();
  const auto brp = ws.poset(br);
  const LocalSystem thirds = LocalSystem::equal_monodromy(Rational::parse("1/3"), 6);
  const int bro = brp->ids_of_codim(3).front();
  CHECK(in_W(br, *brp, thirds, bro));
  CHECK_FALSE(in_W_circ(br, *brp, thirds, bro));
}

TEST_CASE("W-circ membership forces nonresonance of the induced pair") {
  // when L lies in W(W)-circ for a dense edge W, the induced system on A^W
  // satisfies the length-one criterion: no dense edge of A^W resonates
  Workspace ws;
  const Arrangement c5 = cone5();
  const auto p = ws.poset(c5);
  const LocalSystem l = LocalSystem::parse_list("1/2,1/4,1/4,1/3,2/3");
  for (int d : p->dense_edges()) {
    if (!in_W_circ(c5, *p, l, d)) continue;
    const Edge& e = p->edge(d);
    if (e.dim == 0) continue;
    const Localization loc = localize(c5, e);
    const LocalSystem ind = induce_edge(l, loc.traced);
    const auto tp = ws.poset(loc.traced.arr);
    for (int dd : tp->dense_edges()) CHECK_FALSE(edge_product(*tp, ind, dd).is_one);
  }
}

TEST_CASE("dense resonance sets partition consistently") {
  // for every tested system, at most one dense edge can satisfy the
  // exclusive condition, and in_W(C^n) always holds
  Workspace ws;
  const Arrangement br = braid();
  const auto p = ws.poset(br);
  const std::vector<LocalSystem> systems = {
      LocalSystem::parse_list("1/2,1/2,1/2,1/2,1/2,1/2"),
      LocalSystem::parse_list("1/3,2/3,1/3,2/3,1/3,2/3"),
      LocalSystem::parse_list("1/5,1/5,1/5,1/5,1/5,1/5"),
      LocalSystem::parse_list("0,1/2,1/3,1/4,1/5,1/6")};
  for (const auto& l : systems) {
    CHECK(in_W(br, *p, l, p->ambient_id()));
    int exclusive = 0;
    for (int d : p->dense_edges())
      if (in_W_circ(br, *p, l, d)) ++exclusive;
    CHECK(exclusive <= 1);
  }
}
