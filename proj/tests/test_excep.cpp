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

#include <numeric>
#include <random>

#include "excep.hpp"
#include "oracles.hpp"

using namespace exccover;
using oracle::bpoly_from_rows;

namespace {

UPoly up(const Field& f, std::vector<std::int64_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return UPoly(f, v);
}

RationalMap monomial(const Field& f, unsigned n) {
  return RationalMap::make(UPoly::monomial(f, f.one(), n), UPoly::constant(f, f.one()));
}

struct Mobius {
  Elem a, b, c, d;
};

UPoly power(const UPoly& u, unsigned e) {
  UPoly r = UPoly::constant(u.field(), u.field().one());
  for (unsigned i = 0; i < e; ++i) r = r * u;
  return r;
}

// f o mu (pre-composition) followed by nu o (post-composition).
RationalMap twist(const RationalMap& f, const Mobius& mu, const Mobius& nu) {
  const Field& k = f.field();
  const unsigned n = f.degree();
  const UPoly lin1(k, {mu.b, mu.a}), lin2(k, {mu.d, mu.c});
  auto homog = [&](const UPoly& g) {
    UPoly acc(k);
    for (int i = 0; i <= g.degree(); ++i)
      acc = acc + (power(lin1, i) * power(lin2, n - i)).scaled(g[i]);
    return acc;
  };
  const UPoly p = homog(f.num()), r = homog(f.den());
  return RationalMap::make(p.scaled(nu.a) + r.scaled(nu.b), p.scaled(nu.c) + r.scaled(nu.d));
}

Mobius random_mobius(const Field& k, std::mt19937_64& rng) {
  for (;;) {
    Mobius m{k.at(rng() % k.order()), k.at(rng() % k.order()), k.at(rng() % k.order()),
             k.at(rng() % k.order())};
    if (k.sub(k.mul(m.a, m.d), k.mul(m.b, m.c)).code != 0) return m;
  }
}

std::vector<Elem> nonsquares(const Field& k) {
  std::vector<Elem> out;
  for (Elem e : k.elements())
    if (e.code != 0 && nth_power_solution_count(k, e, 2) == 0) out.push_back(e);
  return out;
}

std::vector<Elem> fourth_roots(const Field& k) {
  std::vector<Elem> out;
  for (Elem e : k.elements())
    if (k.mul(e, e) == k.neg(k.one())) out.push_back(e);
  return out;
}

}  // namespace

TEST_CASE("fiber product polynomial") {
  Field f5 = Field::make(5, 1);
  CHECK(fiber_product_poly(monomial(f5, 2)) == bpoly_from_rows(f5, {{0, 1}, {1}}));
  Field f7 = Field::make(7, 1);
  CHECK(fiber_product_poly(monomial(f7, 3)) == bpoly_from_rows(f7, {{0, 0, 1}, {0, 1}, {1}}));
  Field f13 = Field::make(13, 1);
  RationalMap e3 = isogeny_quintic_map(f13, f13.from_int(5), f13.from_int(2));
  CHECK(e3.num() == up(f13, {0, -8, 0, 0, 0, 1}));
  BPoly phi = fiber_product_poly(e3);
  CHECK(phi.deg_x() == 4);
  CHECK(phi.deg_y() == 4);
  const BPoly x = BPoly::from_x(UPoly::x(f13)), y = BPoly::from_y(UPoly::x(f13));
  CHECK(phi * (x - y) == BPoly::from_x(e3.num()) * BPoly::from_y(e3.den()) -
                             BPoly::from_y(e3.num()) * BPoly::from_x(e3.den()));
  CHECK_THROWS_AS(isogeny_quintic_map(f13, f13.from_int(2), f13.from_int(2)), Error);
  CHECK_THROWS_AS(isogeny_quintic_map(f13, f13.from_int(5), f13.from_int(4)), Error);
}

TEST_CASE("fiber product degree and symmetry") {
  std::mt19937_64 rng(3);
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13}) {
    Field k = Field::of_order(q);
    for (int t = 0; t < 20; ++t) {
      std::vector<Elem> pn(2 + rng() % 4), rn(1 + rng() % 3);
      for (auto& e : pn) e = k.at(rng() % q);
      for (auto& e : rn) e = k.at(rng() % q);
      pn.back() = k.one();
      std::optional<RationalMap> f;
      try {
        f = RationalMap::make(UPoly(k, pn), UPoly(k, rn));
      } catch (const Error&) {
        continue;
      }
      BPoly phi = fiber_product_poly(*f);
      CHECK(phi.deg_x() == static_cast<int>(f->degree()) - 1);
      CHECK(phi.deg_y() == static_cast<int>(f->degree()) - 1);
      BPoly tr = phi.transposed();
      CHECK((tr == phi || tr == phi.scaled(k.neg(k.one()))));
    }
  }
}

TEST_CASE("decide_exceptional examples") {
  Field f5 = Field::make(5, 1);
  ExceptionalityReport r1 = decide_exceptional(monomial(f5, 3));
  CHECK(r1.exceptional);
  CHECK(r1.component_definition_lcm == 2);
  REQUIRE(r1.factors.size() == 1);
  CHECK(r1.factors[0].definition_degree == 2);
  CHECK(r1.factors[0].affine_points == 1u);
  Field f7 = Field::make(7, 1);
  ExceptionalityReport r2 = decide_exceptional(monomial(f7, 3));
  CHECK_FALSE(r2.exceptional);
  CHECK(r2.factors.size() == 2);
  for (auto& c : r2.factors) CHECK(c.absolutely_irreducible);
  Field f17 = Field::make(17, 1);
  CHECK_FALSE(decide_exceptional(quintic_map(f17, f17.from_int(10), f17.from_int(3))).exceptional);
  Field f29 = Field::make(29, 1);
  CHECK_FALSE(decide_exceptional(quintic_map(f29, f29.from_int(13), f29.from_int(4))).exceptional);
  Field f13 = Field::make(13, 1);
  ExceptionalityReport r3 =
      decide_exceptional(isogeny_quintic_map(f13, f13.from_int(5), f13.from_int(2)));
  CHECK(r3.exceptional);
  CHECK(r3.component_definition_lcm > 1);
  for (auto& c : r3.factors) CHECK_FALSE(c.diagonal);
  // Factors multiply back to phi up to a unit.
  BPoly prod = bpoly_from_rows(f13, {{1}});
  for (auto& c : r3.factors)
    for (unsigned i = 0; i < c.multiplicity; ++i) prod = prod * c.factor;
  CHECK(prod == r3.phi.normalized());
  // Degree-1 maps have no nondiagonal part.
  ExceptionalityReport r4 = decide_exceptional(monomial(f5, 1));
  CHECK(r4.exceptional);
  CHECK(r4.factors.empty());
}

TEST_CASE("intersection property") {
  Field f5 = Field::make(5, 1);
  CHECK(validate_intersection_property(decide_exceptional(monomial(f5, 2))).empty());
  Field f7 = Field::make(7, 1);
  CHECK(validate_intersection_property(decide_exceptional(monomial(f7, 3))).empty());
  Field f17 = Field::make(17, 1);
  auto quintic17 = decide_exceptional(quintic_map(f17, f17.from_int(10), f17.from_int(3)));
  CHECK(validate_intersection_property(quintic17).empty());
  std::mt19937_64 rng(19);
  for (std::uint64_t q : {3, 5, 7, 9, 11}) {
    Field k = Field::of_order(q);
    for (int t = 0; t < 15; ++t) {
      std::vector<Elem> pn(3 + rng() % 3), rn(1 + rng() % 3);
      for (auto& e : pn) e = k.at(rng() % q);
      for (auto& e : rn) e = k.at(rng() % q);
      pn.back() = k.one();
      try {
        auto rep = decide_exceptional(RationalMap::make(UPoly(k, pn), UPoly(k, rn)));
        CHECK(validate_intersection_property(rep).empty());
      } catch (const Error& e) {
        CHECK((e.code() == Errc::InvalidArgument || e.code() == Errc::NotSeparable));
      }
    }
  }
}

TEST_CASE("diagonal bound") {
  Field f17 = Field::make(17, 1);
  RationalMap e2 = quintic_map(f17, f17.from_int(10), f17.from_int(3));
  auto rep = decide_exceptional(e2);
  CHECK(validate_diagonal_bound(rep, audit_rational_map(e2, 1)).empty());
  Field f5 = Field::make(5, 1);
  auto r5 = decide_exceptional(monomial(f5, 3));
  CHECK(validate_diagonal_bound(r5, audit_rational_map(monomial(f5, 3), 1)).empty());
  CHECK(r5.factors[0].projective_points <= 4u);
  try {
    (void)validate_diagonal_bound(decide_exceptional(monomial(f5, 2)),
                                  audit_rational_map(monomial(f5, 2), 1));
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
  for (std::uint64_t q : {13, 17, 29}) {
    Field k = Field::of_order(q);
    for (Elem i : fourth_roots(k))
      for (Elem b : nonsquares(k)) {
        if (b.code > 8) break;
        RationalMap f = isogeny_quintic_map(k, i, b);
        auto r = decide_exceptional(f);
        CHECK(r.exceptional);
        PointAudit a = audit_rational_map(f, 1);
        REQUIRE(a.injective);
        CHECK(validate_diagonal_bound(r, a).empty());
      }
  }
}

TEST_CASE("verdict is stable under coordinate changes") {
  std::mt19937_64 rng(23);
  std::vector<RationalMap> maps;
  Field f5 = Field::make(5, 1), f7 = Field::make(7, 1), f13 = Field::make(13, 1),
        f17 = Field::make(17, 1);
  maps.push_back(monomial(f5, 3));
  maps.push_back(monomial(f7, 3));
  maps.push_back(quintic_map(f17, f17.from_int(10), f17.from_int(3)));
  maps.push_back(isogeny_quintic_map(f13, f13.from_int(5), f13.from_int(2)));
  for (const auto& f : maps) {
    auto base = decide_exceptional(f);
    for (int t = 0; t < 4; ++t) {
      RationalMap g = twist(f, random_mobius(f.field(), rng), random_mobius(f.field(), rng));
      CHECK(g.degree() == f.degree());
      auto rep = decide_exceptional(g);
      CHECK(rep.exceptional == base.exceptional);
      CHECK(rep.component_definition_lcm == base.component_definition_lcm);
    }
  }
}

TEST_CASE("monomial law") {
  for (std::uint64_t q = 2; q <= 31; ++q) {
    std::uint64_t p;
    try {
      p = prime_power_decompose(q).first;
    } catch (const Error&) {
      continue;
    }
    Field k = Field::of_order(q);
    for (unsigned n = 2; n <= 7; ++n) {
      if (n % p == 0) continue;
      bool coprime_some_m = false;
      std::uint64_t qm = 1;
      for (unsigned m = 1; m <= 6; ++m) {
        qm *= q;
        if (std::gcd<std::uint64_t>(n, qm - 1) == 1) coprime_some_m = true;
      }
      INFO("q=" << q << " n=" << n);
      CHECK(decide_exceptional(monomial(k, n)).exceptional == coprime_some_m);
    }
  }
}

TEST_CASE("exceptional maps are bijective for m coprime to k") {
  struct Case {
    std::uint64_t q;
    unsigned n;
  };
  for (Case c : {Case{5, 3}, Case{11, 3}, Case{8, 3}, Case{4, 5}, Case{7, 5}, Case{9, 7}}) {
    Field k = Field::of_order(c.q);
    auto rep = decide_exceptional(monomial(k, c.n));
    REQUIRE(rep.exceptional);
    for (unsigned m = 1; m <= 3; ++m)
      if (std::gcd(m, rep.component_definition_lcm) == 1)
        CHECK(audit_rational_map(monomial(k, c.n), m).bijective);
  }
}

TEST_CASE("non-exceptional above the injectivity threshold is not injective") {
  std::mt19937_64 rng(29);
  struct Case {
    std::uint64_t q;
    int deg;
  };
  // sqrt(q) > 2n^2: q > 64 for n = 2, q > 324 for n = 3.
  for (Case c : {Case{67, 2}, Case{101, 2}, Case{331, 3}}) {
    Field k = Field::of_order(c.q);
    int tested = 0;
    while (tested < 6) {
      std::vector<Elem> pn(c.deg + 1), rn(1 + rng() % c.deg);
      for (auto& e : pn) e = k.at(rng() % c.q);
      for (auto& e : rn) e = k.at(rng() % c.q);
      pn.back() = k.one();
      std::optional<RationalMap> f;
      try {
        f = RationalMap::make(UPoly(k, pn), UPoly(k, rn));
      } catch (const Error&) {
        continue;
      }
      if (f->degree() != static_cast<unsigned>(c.deg)) continue;
      if (decide_exceptional(*f).exceptional) continue;
      CHECK_FALSE(audit_rational_map(*f, 1).injective);
      ++tested;
    }
  }
}
