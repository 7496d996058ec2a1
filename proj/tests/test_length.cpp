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

#include <random>

#include "arrsheaf/errors.hpp"
#include "arrsheaf/length.hpp"
#include "arrsheaf/salvetti.hpp"
#include "helpers.hpp"

using namespace arrsheaf;
using namespace arrsheaf::testing;

namespace {

LocalSystem random_system(int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Rational> xs;
  for (int i = 0; i < r; ++i) {
    const int q = den(rng);
    std::uniform_int_distribution<int> num(0, q - 1);
    xs.push_back(Rational(Int(num(rng)), Int(q)));
  }
  return LocalSystem(std::move(xs));
}

}  // namespace

TEST_CASE("constant-sheaf lengths") {
  Workspace ws;
  CHECK(constant_length(boolean3(), ws) == 8);
  CHECK(constant_length(braid(), ws) == 24);
  CHECK(constant_length(make(1, {{"1", "0"}}), ws) == 2);
}

TEST_CASE("lower bounds") {
  Workspace ws;
  const LengthReport b1 = lower_bound(boolean3(), LocalSystem::parse_list("1/3,1/3,1/3"), ws);
  CHECK(b1.lower == 1);
  CHECK(b1.factors.size() == 1);

  const LengthReport b2 =
      lower_bound(cone5(), LocalSystem::parse_list("0,1/2,1/2,1/2,1/2"), ws);
  CHECK(b2.lower == 5);

  const LengthReport b3 = lower_bound(boolean3(), LocalSystem::parse_list("0,0,0"), ws);
  CHECK(b3.lower == 8);

  CHECK_THROWS_AS(lower_bound(two_parallel(), LocalSystem::parse_list("0,0"), ws),
                  PreconditionError);
}

TEST_CASE("length-one criterion") {
  Workspace ws;
  CHECK(is_length_one(boolean3(), LocalSystem::parse_list("1/2,1/2,1/2"), ws));
  CHECK_FALSE(
      is_length_one(braid(), LocalSystem::equal_monodromy(Rational::parse("1/3"), 6), ws));
  CHECK_FALSE(is_length_one(boolean3(), LocalSystem::parse_list("0,1/2,1/2"), ws));
  CHECK_THROWS_AS(is_length_one(three_generic(), LocalSystem::parse_list("1/2,1/2,1/2"), ws),
                  PreconditionError);
}

TEST_CASE("length-two criterion") {
  Workspace ws;
  const Arrangement c4 = cone4();
  const auto c4p = ws.poset(c4);
  const LengthTwoResult a = is_length_two(c4, LocalSystem::parse_list("1/2,1/2,1/2,1/2"), ws);
  CHECK(a.is_two);
  REQUIRE(a.witness.has_value());
  CHECK(c4p->edge(*a.witness).dim == 0);
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].edge_id == c4p->ambient_id());
  CHECK(a.factors[1].edge_id == *a.witness);

  const Arrangement b = boolean3();
  const auto bp = ws.poset(b);
  const LengthTwoResult c = is_length_two(b, LocalSystem::parse_list("0,1/2,1/2"), ws);
  CHECK(c.is_two);
  REQUIRE(c.witness.has_value());
  CHECK(bp->edge(*c.witness).support == std::vector<int>{0});

  CHECK_FALSE(
      is_length_two(braid(), LocalSystem::equal_monodromy(Rational::parse("1/3"), 6), ws)
          .is_two);
}

TEST_CASE("length over an exclusively resonant edge") {
  Workspace ws;
  const Arrangement c4 = cone4();
  const auto c4p = ws.poset(c4);
  const int origin = c4p->ids_of_codim(3).front();
  CHECK(length_Wcirc(c4, LocalSystem::parse_list("1/2,1/2,1/2,1/2"), origin, ws) == 2);

  const Arrangement b = boolean3();
  const auto bp = ws.poset(b);
  const int h1 = *bp->find_by_support({0});
  CHECK(length_Wcirc(b, LocalSystem::parse_list("0,1/2,1/2"), h1, ws) == 2);
  CHECK_THROWS_AS(length_Wcirc(b, LocalSystem::parse_list("1/2,1/2,1/2"), h1, ws),
                  PreconditionError);
}

TEST_CASE("exact lengths: worked examples") {
  Workspace ws;
  const LengthReport c5 =
      exact_length(cone5(), LocalSystem::parse_list("0,1/2,1/2,1/2,1/2"), ws);
  CHECK(c5.lower == 5);
  REQUIRE(c5.exact.has_value());
  CHECK(*c5.exact == 6);
  REQUIRE(c5.trace.size() == 1);
  CHECK(c5.trace.front().len_deleted == 2);
  CHECK(c5.trace.front().len_restricted == 4);
  REQUIRE(c5.trace.front().difference.has_value());
  CHECK(*c5.trace.front().difference == 1);

  const LengthReport br =
      exact_length(braid(), LocalSystem::equal_monodromy(Rational::parse("1/3"), 6), ws);
  CHECK(*br.exact == 8);

  const LengthReport lines =
      exact_length(three_concurrent(), LocalSystem::parse_list("1/3,1/3,1/3"), ws);
  CHECK(*lines.exact == 2);
}

TEST_CASE("exact equals one or two exactly when the criteria fire") {
  Workspace ws;
  std::mt19937 rng(11);
  for (const Arrangement& a : {boolean3(), cone4(), cone5()}) {
    for (int trial = 0; trial < 25; ++trial) {
      const LocalSystem l = random_system(a.r(), rng);
      const LengthReport rep = exact_length(a, l, ws);
      REQUIRE(rep.exact.has_value());
      CHECK((*rep.exact == 1) == is_length_one(a, l, ws));
      CHECK((*rep.exact == 2) == is_length_two(a, l, ws).is_two);
    }
  }
}

TEST_CASE("dimension two: the bound is an equality") {
  Workspace ws;
  std::mt19937 rng(12);
  for (const Arrangement& a : {three_generic(), three_concurrent(), central_lines(4), grid22()}) {
    for (int trial = 0; trial < 15; ++trial) {
      const LocalSystem l = random_system(a.r(), rng);
      const LengthReport rep = exact_length(a, l, ws);
      REQUIRE(rep.exact.has_value());
      CHECK(*rep.exact == rep.lower);
    }
  }
}

TEST_CASE("deletion-restriction consistency at a trivial monodromy") {
  Workspace ws;
  std::mt19937 rng(13);
  for (const Arrangement& a : {boolean3(), cone5(), braid()}) {
    for (int trial = 0; trial < 10; ++trial) {
      LocalSystem l = random_system(a.r(), rng);
      // force one trivial coordinate
      std::vector<Rational> xs = l.exponents();
      xs[trial % a.r()] = Rational(0);
      l = LocalSystem(xs);
      const int i = trial % a.r();
      const LengthReport whole = exact_length(a, l, ws);
      const TripleDecomposition t = triple(a, i);
      std::vector<Rational> rest;
      for (int j = 0; j < a.r(); ++j)
        if (j != i) rest.push_back(l.a(j));
      const Arrangement deleted = essentialize(t.deleted);
      const LengthReport left = exact_length(deleted, LocalSystem(rest), ws);
      const LengthReport right =
          exact_length(t.restricted.arr, induce_edge(l, t.restricted), ws);
      REQUIRE(whole.exact.has_value());
      CHECK(*whole.exact == *left.exact + *right.exact);
    }
  }
}

TEST_CASE("the exhaustive mode agrees across deletion orders") {
  Workspace ws;
  LengthOptions opt;
  opt.exhaustive = true;
  const LengthReport rep =
      exact_length(cone5(), LocalSystem::parse_list("0,0,1/2,1/2,0"), ws, opt);
  REQUIRE(rep.exact.has_value());
  const LengthReport plain =
      exact_length(cone5(), LocalSystem::parse_list("0,0,1/2,1/2,0"), ws);
  CHECK(*rep.exact == *plain.exact);
}

TEST_CASE("bounds sandwich and the gap") {
  Workspace ws;
  std::mt19937 rng(14);
  for (const Arrangement& a : {boolean3(), braid(), cone5(), cone4(), cone7()}) {
    const long long cap = constant_length(a, ws);
    for (int trial = 0; trial < 12; ++trial) {
      const LocalSystem l = random_system(a.r(), rng);
      const LengthReport rep = exact_length(a, l, ws);
      REQUIRE(rep.exact.has_value());
      CHECK(rep.lower <= *rep.exact);
      CHECK(*rep.exact <= cap);
      if (!l.all_zero()) CHECK(*rep.exact < cap);
      // jump-loci gap bound on central essential cones
      CHECK(*rep.exact - rep.lower <= rep.gap_bound);
    }
    const LengthReport constant =
        exact_length(a, LocalSystem(std::vector<Rational>(a.r(), Rational(0))), ws);
    CHECK(*constant.exact == cap);
  }
}

TEST_CASE("difference terms vanish for non-constant induced systems") {
  Workspace ws;
  std::mt19937 rng(15);
  for (const Arrangement& a : {cone5(), braid()}) {
    for (int trial = 0; trial < 10; ++trial) {
      LocalSystem l = random_system(a.r(), rng);
      std::vector<Rational> xs = l.exponents();
      xs[0] = Rational(0);
      l = LocalSystem(xs);
      const LengthReport rep = exact_length(a, l, ws);
      if (rep.trace.empty()) continue;
      const RecursionStep& step = rep.trace.front();
      if (!step.difference) continue;
      CHECK(*step.difference >= 0);
      CHECK(*step.difference <= 1);
      // recompute the induced system of the first step
      const TripleDecomposition t = triple(a, step.deleted_index);
      const LocalSystem induced = induce_edge(l, t.restricted);
      if (!induced.all_zero()) CHECK(*step.difference == 0);
    }
  }
}

TEST_CASE("interval reports without the oracle") {
  Workspace ws;
  LengthOptions opt;
  opt.strategy.allow_oracle = false;
  // all monodromies non-trivial, total product trivial, one triple line
  // resonating, monodromies unequal: only the oracle can settle the origin
  const LocalSystem l = LocalSystem::parse_list("1/2,1/4,1/2,1/4,1/4,1/4");
  const LengthReport rep = exact_length(braid(), l, ws, opt);
  CHECK(rep.partial);
  CHECK_FALSE(rep.exact.has_value());
  CHECK(rep.lower <= rep.upper);

  const LengthReport full = exact_length(braid(), l, ws);
  REQUIRE(full.exact.has_value());
  CHECK(rep.lower <= *full.exact);
  CHECK(*full.exact <= rep.upper);

  // a user-supplied dimension at the origin stands in for the oracle
  const auto poset = ws.poset(braid());
  const int origin = poset->ids_of_codim(3).front();
  long long oracle_value = 0;
  for (const auto& [id, ld] : full.edge_dims)
    if (id == origin) oracle_value = *ld.value;
  LengthOptions with_user = opt;
  with_user.user_dims[origin] = oracle_value;
  const LengthReport rep2 = exact_length(braid(), l, ws, with_user);
  REQUIRE(rep2.exact.has_value());
  CHECK(*rep2.exact == *full.exact);
  bool saw_user = false;
  for (const auto& [id, ld] : rep2.edge_dims) saw_user = saw_user || ld.prov == Provenance::user;
  CHECK(saw_user);
}

TEST_CASE("length over the ambient edge under global nonresonance") {
  Workspace ws;
  const Arrangement b = boolean3();
  const auto p = ws.poset(b);
  // nonresonant everywhere: the ambient edge carries the whole length
  CHECK(length_Wcirc(b, LocalSystem::parse_list("1/2,1/2,1/2"), p->ambient_id(), ws) == 1);
}

TEST_CASE("generic arrangements: the bound is an equality") {
  Workspace ws;
  // four generic planes in C^3 (no common point, triple intersections only)
  const Arrangement gen = make(3, {{"1", "0", "0", "0"},
                                   {"0", "1", "0", "0"},
                                   {"0", "0", "1", "0"},
                                   {"1", "1", "1", "-1"}});
  REQUIRE(gen.essential());
  REQUIRE_FALSE(gen.central());
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const LocalSystem l = random_system(4, rng);
    const LengthReport rep = exact_length(gen, l, ws);
    REQUIRE(rep.exact.has_value());
    CHECK(*rep.exact == rep.lower);
  }
}

TEST_CASE("dimension four: partial lower bounds") {
  Workspace ws;
  // Boolean in C^4: every edge below codimension 4 is combinatorial, the
  // origin stays undetermined and the report is flagged partial
  const Arrangement b4 = make(4, {{"1", "0", "0", "0", "0"},
                                  {"0", "1", "0", "0", "0"},
                                  {"0", "0", "1", "0", "0"},
                                  {"0", "0", "0", "1", "0"}});
  const LengthReport rep = lower_bound(b4, LocalSystem::parse_list("0,0,0,0"), ws);
  CHECK(rep.partial);
  CHECK(rep.lower == 15);
  CHECK(rep.upper == 16);
  CHECK(constant_length(b4, ws) == 16);
  CHECK_THROWS_AS(exact_length(b4, LocalSystem::parse_list("0,0,0,0"), ws),
                  PreconditionError);
}

TEST_CASE("n = 1 lengths") {
  Workspace ws;
  const Arrangement pts = make(1, {{"1", "0"}, {"1", "-1"}, {"1", "-2"}});
  CHECK(*exact_length(pts, LocalSystem::parse_list("0,1/2,0"), ws).exact == 3);
  CHECK(*exact_length(pts, LocalSystem::parse_list("1/3,1/2,1/5"), ws).exact == 1);
}
