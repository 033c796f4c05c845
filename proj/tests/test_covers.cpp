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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "covers.hpp"

using namespace exccover;

namespace {

UPoly up(const Field& f, std::vector<std::int64_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return UPoly(f, v);
}

RationalMap quintic(std::uint64_t q, std::int64_t b, std::int64_t c) {
  Field f = Field::of_order(q);
  return RationalMap::make(up(f, {0, -b, 0, 0, 0, 1}), up(f, {-c, 0, 0, 0, 1}));
}

// Brute-force branch set: t is a branch point iff p - t r (or r at infinity)
// acquires a repeated root, or infinity is a multiple preimage.
std::set<ProjPoint> branch_oracle(const RationalMap& f, unsigned m) {
  Field big = Field::make(f.field().characteristic(), f.field().degree() * m);
  MapOverField g(f, big);
  std::set<ProjPoint> out;
  for (Elem t : big.elements()) {
    UPoly h = g.num() - g.den().scaled(t);
    if (!gcd(h, h.derivative()).is_one()) out.insert(ProjPoint::finite(t));
  }
  const UPoly& r = g.den();
  if (g.num().degree() - r.degree() > 1 ||
      (r.degree() > 0 && !gcd(r, r.derivative()).is_one()))
    out.insert(ProjPoint::infinity());
  return out;
}

std::optional<RationalMap> random_map(const Field& f, int dp, int dr, std::mt19937_64& rng) {
  auto rnd = [&](int d) {
    std::vector<Elem> v(d + 1);
    for (auto& e : v) e = Elem{static_cast<std::uint32_t>(rng() % f.order())};
    if (v.back().code == 0) v.back() = f.one();
    return UPoly(f, v);
  };
  try {
    return RationalMap::make(rnd(dp), rnd(dr));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("rational map construction") {
  Field f5 = Field::make(5, 1);
  CHECK_THROWS_AS(RationalMap::make(up(f5, {2}), up(f5, {1})), Error);
  try {
    (void)RationalMap::make(up(f5, {-1, 0, 1}), up(f5, {1, 1}));
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidArgument);
  }
  try {
    (void)RationalMap::make(up(f5, {0, 0, 0, 0, 0, 1}), up(f5, {1}));
    FAIL("expected NotSeparable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSeparable);
  }
  // (x + 1)/(x + 2) - normalized with shift f(inf) = 1.
  RationalMap m = RationalMap::make(up(f5, {1, 1}), up(f5, {2, 1}));
  CHECK(m.normalization().applied);
  CHECK(m.normalization().shift == f5.one());
  CHECK(m.num().degree() > m.den().degree());
  CHECK(RationalMap::make(up(f5, {0, 0, 1}), up(f5, {1})).monomial_degree() == 2u);
  CHECK_FALSE(RationalMap::make(up(f5, {1, 0, 1}), up(f5, {1})).monomial_degree());
}

TEST_CASE("eval_map on the degree-5 example over F_17") {
  RationalMap f = quintic(17, 10, 3);
  CHECK_FALSE(f.normalization().applied);
  CHECK(eval_map(f, ProjPoint::finite(f.field().zero()), f.field()) ==
        ProjPoint::finite(f.field().zero()));
  CHECK(eval_map(f, ProjPoint::infinity(), f.field()) == ProjPoint::infinity());
  for (Elem x : f.field().elements())
    CHECK_FALSE(eval_map(f, ProjPoint::finite(x), f.field()).infinite);
  // Evaluation after embedding agrees with evaluation in the base.
  Field f289 = Field::make(17, 2);
  Embedding e(f.field(), f289);
  for (Elem x : f.field().elements()) {
    ProjPoint a = eval_map(f, ProjPoint::finite(x), f.field());
    ProjPoint b = eval_map(f, ProjPoint::finite(e(x)), f289);
    CHECK(b == ProjPoint::finite(e(a.x)));
  }
}

TEST_CASE("audits of the degree-5 examples and x^2") {
  CHECK(audit_rational_map(quintic(17, 10, 3), 1).bijective);
  CHECK(audit_rational_map(quintic(29, 13, 4), 1).bijective);
  Field f5 = Field::make(5, 1);
  RationalMap sq = RationalMap::make(up(f5, {0, 0, 1}), up(f5, {1}));
  PointAudit a = audit_rational_map(sq, 1);
  CHECK_FALSE(a.injective);
  CHECK_FALSE(a.surjective);
  CHECK(a.fiber_sizes == std::vector<std::uint32_t>{1, 2, 0, 0, 2, 1});
  CHECK(a.total_points() == 6);
  PointAudit b = audit_rational_map(sq, 1, {}, {true});
  CHECK_FALSE(b.injective);
  Field f7 = Field::make(7, 1);
  RationalMap cube7 = RationalMap::make(up(f7, {0, 0, 0, 1}), up(f7, {1}));
  CHECK_FALSE(audit_rational_map(cube7, 1).bijective);
  Field f5b = Field::make(5, 1);
  RationalMap cube5 = RationalMap::make(up(f5b, {0, 0, 0, 1}), up(f5b, {1}));
  CHECK(audit_rational_map(cube5, 1).bijective);
  CHECK_FALSE(audit_rational_map(cube5, 2).bijective);
  Config small;
  small.enum_cap = 100;
  try {
    (void)audit_rational_map(cube5, 3, small);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}

TEST_CASE("ramified rational points") {
  Field f5 = Field::make(5, 1);
  BranchData b = ramified_rational_points(RationalMap::make(up(f5, {0, 0, 1}), up(f5, {1})), 1);
  CHECK(b.points == std::vector<ProjPoint>{ProjPoint::finite(f5.zero()), ProjPoint::infinity()});
  CHECK(b.bound == 2);
  Field f7 = Field::make(7, 1);
  CHECK(ramified_rational_points(RationalMap::make(up(f7, {0, 0, 0, 1}), up(f7, {1})), 1).points ==
        std::vector<ProjPoint>{ProjPoint::finite(f7.zero()), ProjPoint::infinity()});
  BranchData e = ramified_rational_points(quintic(17, 10, 3), 1);
  CHECK(e.points.size() <= 8);
  CHECK(e.bound == 8);
}

TEST_CASE("branch points agree with the repeated-root oracle") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11}) {
    Field f = Field::of_order(q);
    for (int trial = 0; trial < 25; ++trial) {
      int dp = 1 + static_cast<int>(rng() % 4);
      int dr = static_cast<int>(rng() % 4);
      auto m = random_map(f, dp, dr, rng);
      if (!m) continue;
      for (unsigned ext : {1u, 2u}) {
        std::set<ProjPoint> want = branch_oracle(*m, ext);
        auto got = ramified_rational_points(*m, ext).points;
        CHECK(std::set<ProjPoint>(got.begin(), got.end()) == want);
      }
    }
  }
}

TEST_CASE("fiber sums and census mass") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9, 13}) {
    Field f = Field::of_order(q);
    for (int trial = 0; trial < 15; ++trial) {
      auto m = random_map(f, 1 + static_cast<int>(rng() % 5), static_cast<int>(rng() % 4), rng);
      if (!m) continue;
      for (unsigned ext : {1u, 2u}) {
        PointAudit a = audit_rational_map(*m, ext);
        const std::uint64_t pts = a.base_order + 1;
        CHECK(a.total_points() == pts);
        CHECK(a.bijective == (a.injective && a.surjective));
        Census c = splitting_census(*m, ext);
        std::uint64_t mass = 0;
        for (auto& [type, cnt] : c.histogram) {
          mass += cnt;
          unsigned deg = 0;
          for (unsigned d : type) deg += d;
          CHECK(deg == m->degree());
          // Degree-1 places of the fiber are exactly its rational points.
          CHECK(std::is_sorted(type.begin(), type.end()));
        }
        CHECK(mass == c.non_branch_points);
        CHECK(mass + c.branch_points.size() == pts);
        // At a non-branch point the split count equals the fiber size.
        if (c.branch_points.empty()) {
          std::map<std::uint32_t, std::uint64_t> ones;
          for (auto& [type, cnt] : c.histogram)
            ones[static_cast<std::uint32_t>(std::count(type.begin(), type.end(), 1u))] += cnt;
          CHECK(ones == a.fiber_histogram());
        }
      }
    }
  }
}

TEST_CASE("splitting census examples") {
  Field f5 = Field::make(5, 1);
  RationalMap sq = RationalMap::make(up(f5, {0, 0, 1}), up(f5, {1}));
  Census c = splitting_census(sq, 1);
  CHECK(c.histogram == std::map<SplittingType, std::uint64_t>{{{1, 1}, 2}, {{2}, 2}});
  CHECK(c.branch_points.size() == 2);
  Census c2 = splitting_census(sq, 2);
  // F_25^* is cyclic of order 24: exactly half of it is square.
  CHECK(c2.histogram == std::map<SplittingType, std::uint64_t>{{{1, 1}, 12}, {{2}, 12}});
  CHECK(c2.non_branch_points == 24);
  Field f7 = Field::make(7, 1);
  Census c3 = splitting_census(RationalMap::make(up(f7, {0, 0, 0, 1}), up(f7, {1})), 1);
  CHECK(c3.histogram == std::map<SplittingType, std::uint64_t>{{{1, 1, 1}, 2}, {{3}, 4}});
  CHECK(c3.branch_points ==
        std::vector<ProjPoint>{ProjPoint::finite(f7.zero()), ProjPoint::infinity()});
}

TEST_CASE("superelliptic genus") {
  Field f13 = Field::make(13, 1);
  auto c = SuperellipticCover::nonvanishing_family(f13, 3, f13.from_int(8), f13.one());
  CHECK(superelliptic_genus(c) == 10);
  CHECK(superelliptic_infinity(c).totally_ramified);
  Field f7 = Field::make(7, 1);
  CHECK(superelliptic_genus(SuperellipticCover::make(2, f7.one(), up(f7, {0, -1, 0, 1}))) == 1);
  CHECK(superelliptic_genus(SuperellipticCover::make(2, f7.one(), up(f7, {1, 2, 0, 0, 0, 1}))) == 2);
  CHECK(superelliptic_genus(SuperellipticCover::make(2, f7.one(), up(f7, {1, 0, 0, 0, 1}))) == 1);
  try {
    (void)superelliptic_genus(SuperellipticCover::make(7, f7.one(), up(f7, {1, 1})));
    FAIL("expected WildCase");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WildCase);
  }
  // Family formula (n - 1)(q - 3)/2 for every admissible (q, n) up to 31.
  for (std::uint64_t q = 3; q <= 31; q += 2) {
    if (q == 15 || q == 21) continue;
    Field f = Field::of_order(q);
    for (unsigned n = 2; n <= (q - 1) / 2; ++n) {
      if (((q - 1) / 2) % n) continue;
      auto cc = SuperellipticCover::nonvanishing_family(f, n, f.one(), f.one());
      CHECK(superelliptic_genus(cc) == (n - 1) * (q - 3) / 2);
    }
  }
}

TEST_CASE("superelliptic audits of the nonvanishing family") {
  Field f13 = Field::make(13, 1);
  const Elem a = f13.from_int(8);
  auto c1 = SuperellipticCover::nonvanishing_family(f13, 3, a, f13.one());
  CHECK(c1.h().eval(f13.zero()) == f13.from_int(5));
  CHECK(c1.h().eval(a) == f13.from_int(8));
  PointAudit a1 = audit_superelliptic(c1, 1);
  CHECK(a1.surjective);
  CHECK_FALSE(a1.injective);
  auto c2 = SuperellipticCover::nonvanishing_family(f13, 3, a, f13.from_int(2));
  PointAudit a2 = audit_superelliptic(c2, 1);
  CHECK(a2.injective);
  CHECK_FALSE(a2.surjective);
  for (Elem x : f13.elements()) {
    if (x.code == 0 || x == a) continue;
    CHECK(a1.fiber_sizes[x.code] == 1);
    CHECK(a2.fiber_sizes[x.code] == 1);
  }
  CHECK(a1.fiber_sizes[0] == 3);
  CHECK(a1.fiber_sizes[a.code] == 3);
  CHECK(a2.fiber_sizes[0] == 0);
  CHECK(a2.fiber_sizes[a.code] == 0);
  CHECK(a1.fiber_at(ProjPoint::infinity()) == 1);
  // Preconditions of the builder.
  CHECK_THROWS_AS(SuperellipticCover::nonvanishing_family(f13, 4, a, f13.one()), Error);
  CHECK_THROWS_AS(SuperellipticCover::nonvanishing_family(f13, 3, f13.from_int(2), f13.one()),
                  Error);
}

TEST_CASE("superelliptic point counts respect the Weil bound") {
  for (std::uint64_t q : {5, 7, 9, 11, 13}) {
    Field f = Field::of_order(q);
    for (unsigned n = 2; n <= 4; ++n) {
      if (n % f.characteristic() == 0) continue;
      for (int d = 1; d <= 4; ++d) {
        std::vector<Elem> v(d + 1, f.zero());
        v[0] = f.one();
        v[d] = f.one();
        if (d == 1) v[0] = f.zero();
        UPoly h(f, v);
        if (!gcd(h, h.derivative()).is_one()) continue;
        auto c = SuperellipticCover::make(n, f.one(), h);
        const double g = superelliptic_genus(c);
        for (unsigned m = 1; m <= 2; ++m) {
          PointAudit a = audit_superelliptic(c, m);
          const double qm = static_cast<double>(a.base_order);
          CHECK(std::abs(static_cast<double>(a.total_points()) - (qm + 1)) <=
                2 * g * std::sqrt(qm) + 1e-9);
        }
      }
    }
  }
}
