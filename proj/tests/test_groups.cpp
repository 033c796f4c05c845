/*
   Copyright 2026 The exccover Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <set>

#include "groups.hpp"

using namespace exccover;

namespace {

PermGroup gen(std::uint32_t deg, std::vector<std::string> cycles) {
  std::vector<Perm> g;
  for (auto& c : cycles) g.push_back(Perm::parse_cycles(deg, c));
  return PermGroup::generate(deg, g);
}

// Orbits straight from the element list.
std::set<std::set<std::uint32_t>> brute_orbits(const PermGroup& g, Action action) {
  const std::uint32_t d = g.degree(), n = action == Action::Points ? d : d * d;
  std::set<std::set<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < n; ++s) {
    std::set<std::uint32_t> o;
    for (const auto& p : g.elements())
      o.insert(action == Action::Points ? p(s) : p(s / d) * d + p(s % d));
    out.insert(o);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (!composition_convention_self_test()) return 1;
  doctest::Context ctx(argc, argv);
  return ctx.run();
}

TEST_CASE("perm basics") {
  const Perm s = Perm::parse_cycles(4, "(0 1 2)");
  CHECK(s(0) == 1);
  CHECK(s(2) == 0);
  CHECK(s.cycle_type() == CycleType{1, 3});
  CHECK(s.order() == 3);
  CHECK((s * s.inverse()).is_identity());
  CHECK(s.to_cycles() == "(0 1 2)");
  CHECK(Perm::parse_cycles(3, "()").is_identity());
  CHECK(Perm::parse_cycles(5, "(0 1)(2 3)").fixed_points() == 1);
  CHECK_THROWS_AS(Perm({0, 0}), Error);
  try {
    (void)Perm::parse_cycles(3, "(0 1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(Perm::parse_cycles(3, "(0 3)"), ParseError);
  CHECK_THROWS_AS(Perm::parse_cycles(3, "(0 1)(1 2)"), ParseError);
  CHECK(composition_convention_self_test());
}

TEST_CASE("closure and orbits") {
  CHECK(PermGroup::symmetric(4).order() == 24);
  CHECK(gen(5, {"(0 1 2 3 4)", "(1 2 4 3)"}).order() == 20);
  Config small;
  small.group_cap = 100;
  CHECK_THROWS_AS(PermGroup::symmetric(5, small), Error);
  CHECK(orbits(gen(2, {"(0 1)"}), Action::Points).size() == 1);
  auto o = orbits(gen(4, {"(0 1)(2 3)"}), Action::Points);
  CHECK(o == std::vector<std::vector<std::uint32_t>>{{0, 1}, {2, 3}});
  CHECK(orbits(PermGroup::symmetric(3), Action::OrderedPairs).size() == 2);
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (const auto& g : subgroup_catalog(n))
      for (Action a : {Action::Points, Action::OrderedPairs}) {
        std::set<std::set<std::uint32_t>> got;
        for (auto& orb : orbits(g, a)) got.insert(std::set<std::uint32_t>(orb.begin(), orb.end()));
        CHECK(got == brute_orbits(g, a));
      }
}

TEST_CASE("subgroup catalog") {
  const std::vector<std::size_t> counts{1, 2, 6, 30, 156};
  for (std::uint32_t n = 1; n <= 5; ++n) {
    auto cat = subgroup_catalog(n);
    CHECK(cat.size() == counts[n - 1]);
    std::uint64_t sym = 1;
    for (std::uint32_t i = 2; i <= n; ++i) sym *= i;
    for (const auto& g : cat) CHECK(sym % g.order() == 0);
  }
}

TEST_CASE("fixed point identity examples") {
  const PermGroup s3 = PermGroup::symmetric(3), a3 = gen(3, {"(0 1 2)"});
  const Perm t = Perm::parse_cycles(3, "(0 1)");
  auto spec = CosetSpec::make(s3, a3, t);
  auto pts = fixed_point_identity(spec, Action::Points);
  CHECK(pts.lhs == 1);
  CHECK(pts.rhs == Rational(1));
  auto pairs = fixed_point_identity(spec, Action::OrderedPairs);
  CHECK(pairs.lhs == 1);
  CHECK(pairs.rhs == Rational(1));
  const PermGroup c4 = gen(4, {"(0 1 2 3)"});
  auto r = fixed_point_identity(CosetSpec::make(c4, c4, Perm::identity(4)), Action::Points);
  CHECK(r.lhs == 1);
  CHECK(r.rhs == Rational(1));
  CHECK_THROWS_AS(CosetSpec::make(s3, a3, Perm::identity(3)), Error);
  try {
    (void)CosetSpec::make(s3, gen(3, {"(0 1)"}), t);
    FAIL("expected NotSubgroup");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSubgroup);
  }
}

TEST_CASE("exceptionality conditions examples") {
  const PermGroup agl = gen(5, {"(0 1 2 3 4)", "(1 2 4 3)"});
  const PermGroup c5 = gen(5, {"(0 1 2 3 4)"});
  // x -> 2x has order 4 modulo translations.
  auto c = exceptionality_conditions(CosetSpec::make(agl, c5, Perm::parse_cycles(5, "(1 2 4 3)")));
  CHECK(c.diagonal_only);
  CHECK(c.unique_fixed);
  CHECK(c.at_most_one);
  CHECK(c.at_least_one);
  CHECK(c.agree());
  CHECK(c.qualifying == 10);  // x -> cx + d with c in {2, 3}
  const PermGroup c3 = gen(3, {"(0 1 2)"});
  auto c2 = exceptionality_conditions(CosetSpec::make(c3, c3, Perm::identity(3)));
  CHECK_FALSE(c2.diagonal_only);
  CHECK_FALSE(c2.unique_fixed);
  CHECK_FALSE(c2.at_most_one);
  CHECK_FALSE(c2.at_least_one);
  auto c3s = exceptionality_conditions(
      CosetSpec::make(PermGroup::symmetric(3), c3, Perm::parse_cycles(3, "(0 1)")));
  CHECK(c3s.unique_fixed);
  CHECK(c3s.agree());
  const PermGroup v = gen(4, {"(0 1)(2 3)"});
  try {
    (void)exceptionality_conditions(CosetSpec::make(v, v, Perm::identity(4)));
    FAIL("expected NotTransitive");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTransitive);
  }
}

TEST_CASE("common orbit count") {
  const PermGroup d = gen(3, {"(0 1)"});
  CHECK(common_orbit_count(d, PermGroup::trivial(3)) == 1);
  CHECK(common_orbit_count(d, d) == 2);
  CHECK(common_orbit_count(gen(4, {"(0 1)(2 3)"}), PermGroup::trivial(4)) == 0);
  try {
    (void)common_orbit_count(d, gen(3, {"(1 2)"}));
    FAIL("expected NotSubgroup");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSubgroup);
  }
}

TEST_CASE("cycle type histogram") {
  const PermGroup c3 = gen(3, {"(0 1 2)"});
  auto h = cycle_type_histogram(CosetSpec::make(c3, c3, Perm::identity(3)));
  CHECK(h == std::map<CycleType, Rational>{{{1, 1, 1}, Rational(1, 3)}, {{3}, Rational(2, 3)}});
  const PermGroup c2 = gen(2, {"(0 1)"});
  auto h2 = cycle_type_histogram(CosetSpec::make(c2, c2, Perm::identity(2)));
  CHECK(h2 == std::map<CycleType, Rational>{{{1, 1}, Rational(1, 2)}, {{2}, Rational(1, 2)}});
  auto h3 = cycle_type_histogram(
      CosetSpec::make(PermGroup::symmetric(3), c3, Perm::parse_cycles(3, "(0 1)")));
  CHECK(h3 == std::map<CycleType, Rational>{{{1, 2}, Rational(1)}});
}

TEST_CASE("lemmas hold on every cyclic-quotient chain in S_n, n <= 4") {
  std::size_t triples = 0;
  for (std::uint32_t n = 1; n <= 4; ++n) {
    auto cat = subgroup_catalog(n);
    for (const auto& a : cat)
      for (const auto& g : cat) {
        if (!g.is_normal_in(a)) continue;
        std::set<Perm> seen;
        for (const auto& x : a.elements()) {
          if (quotient_order(g, x) != a.order() / g.order()) continue;
          auto spec = CosetSpec::make(a, g, x);
          if (!seen.insert(spec.coset().front()).second) continue;
          ++triples;
          CHECK(fixed_point_identity(spec, Action::Points).holds());
          CHECK(fixed_point_identity(spec, Action::OrderedPairs).holds());
          Rational mass(0);
          for (auto& [t, fr] : cycle_type_histogram(spec)) mass += fr;
          CHECK(mass == Rational(1));
          if (g.is_transitive()) CHECK(exceptionality_conditions(spec).agree());
        }
      }
  }
  CHECK(triples > 0);
}
