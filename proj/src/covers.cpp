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

#include "covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace exccover {

RationalMap::RationalMap(UPoly n, UPoly d, UPoly in_n, UPoly in_d, Normalization norm)
    : num_(std::move(n)),
      den_(std::move(d)),
      in_num_(std::move(in_n)),
      in_den_(std::move(in_d)),
      crit_(num_.derivative() * den_ - num_ * den_.derivative()),
      norm_(norm) {}

RationalMap RationalMap::make(const UPoly& num, const UPoly& den) {
  require_same_field(num.field(), den.field());
  if (den.is_zero()) throw Error(Errc::InvalidArgument, "denominator is zero");
  if (std::max(num.degree(), den.degree()) < 1)
    throw Error(Errc::InvalidArgument, "map must have degree at least 1");
  if (!gcd(num, den).is_one())
    throw Error(Errc::InvalidArgument, "numerator and denominator share a factor");
  if ((num.derivative() * den - num * den.derivative()).is_zero())
    throw Error(Errc::NotSeparable, "map is inseparable (p'r - pr' = 0)");
  const Field& k = num.field();
  if (num.degree() > den.degree()) return RationalMap(num, den, num, den, {});
  // f(inf) = y0 is finite; post-compose with y -> 1/(y - y0).
  Elem y0 = num.degree() == den.degree() ? k.div(num.lead(), den.lead()) : k.zero();
  UPoly new_den = num - den.scaled(y0);
  return RationalMap(den, new_den, num, den, {true, y0});
}

std::optional<unsigned> RationalMap::monomial_degree() const {
  if (den_.degree() != 0) return std::nullopt;
  const auto& c = num_.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i].code != 0) return std::nullopt;
  return static_cast<unsigned>(num_.degree());
}

MapOverField::MapOverField(const RationalMap& f, const Field& target, const Config& cfg)
    : num_(target), den_(target) {
  Embedding emb(f.field(), target, cfg);
  num_ = f.num().mapped(emb);
  den_ = f.den().mapped(emb);
}

ProjPoint MapOverField::operator()(const ProjPoint& p) const {
  if (p.infinite) return ProjPoint::infinity();
  const Field& k = num_.field();
  Elem d = den_.eval(p.x);
  if (d.code == 0) return ProjPoint::infinity();
  return ProjPoint::finite(k.div(num_.eval(p.x), d));
}

ProjPoint eval_map(const RationalMap& f, const ProjPoint& p, const Field& target,
                   const Config& cfg) {
  return MapOverField(f, target, cfg)(p);
}

std::uint64_t PointAudit::total_points() const {
  return std::accumulate(fiber_sizes.begin(), fiber_sizes.end(), std::uint64_t{0});
}

std::map<std::uint32_t, std::uint64_t> PointAudit::fiber_histogram() const {
  std::map<std::uint32_t, std::uint64_t> h;
  for (auto s : fiber_sizes) ++h[s];
  return h;
}

Field extension_for_audit(const Field& base, unsigned m, const Config& cfg) {
  if (m < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t qm = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (qm > cfg.enum_cap / base.order())
      throw Error(Errc::CapExceeded, "q^m exceeds the enumeration cap");
    qm *= base.order();
  }
  if (qm > cfg.enum_cap) throw Error(Errc::CapExceeded, "q^m exceeds the enumeration cap");
  return Field::make(base.characteristic(), base.degree() * m, cfg);
}

namespace {

void finalize_verdicts(PointAudit& a) {
  std::set<std::uint64_t> skip;
  if (a.exclude_branch_fibers)
    for (const auto& b : a.branch_points) skip.insert(b.infinite ? a.base_order : b.x.code);
  a.injective = a.surjective = true;
  for (std::uint64_t i = 0; i < a.fiber_sizes.size(); ++i) {
    if (skip.count(i)) continue;
    if (a.fiber_sizes[i] > 1) a.injective = false;
    if (a.fiber_sizes[i] < 1) a.surjective = false;
  }
  a.bijective = a.injective && a.surjective;
}

}  // namespace

BranchData ramified_rational_points(const RationalMap& f, unsigned m, const Config& cfg) {
  const Field big = extension_for_audit(f.field(), m, cfg);
  const MapOverField g(f, big, cfg);
  const Embedding emb(f.field(), big, cfg);
  const UPoly w = f.critical().mapped(emb);
  std::set<ProjPoint> pts;
  if (f.num().degree() - f.den().degree() > 1) pts.insert(ProjPoint::infinity());
  // Each irreducible factor of w is a closed point xi of the source; its image
  // f(xi) is rational over F_{q^m} iff p/r reduces to a constant mod w.
  for (const auto& fc : factor_univariate(w, cfg).factors) {
    const UPoly& pi = fc.poly;
    const UPoly r = g.den() % pi;
    if (r.is_zero()) {
      pts.insert(ProjPoint::infinity());
      continue;
    }
    const UPoly t = (g.num() * ext_gcd(r, pi).s) % pi;
    if (t.degree() <= 0) pts.insert(ProjPoint::finite(t[0]));
  }
  BranchData out;
  out.m = m;
  out.points.assign(pts.begin(), pts.end());
  out.bound = 2 * static_cast<std::uint64_t>(f.degree()) - 2;
  return out;
}

PointAudit audit_rational_map(const RationalMap& f, unsigned m, const Config& cfg,
                              AuditOptions opts) {
  const Field big = extension_for_audit(f.field(), m, cfg);
  const MapOverField g(f, big, cfg);
  PointAudit a;
  a.m = m;
  a.base_order = big.order();
  a.fiber_sizes.assign(big.order() + 1, 0);
  for (Elem x : big.elements()) {
    ProjPoint y = g(ProjPoint::finite(x));
    ++a.fiber_sizes[y.infinite ? a.base_order : y.x.code];
  }
  ++a.fiber_sizes[a.base_order];  // infinity maps to infinity
  a.branch_points = ramified_rational_points(f, m, cfg).points;
  a.exclude_branch_fibers = opts.exclude_branch_fibers;
  finalize_verdicts(a);
  return a;
}

Census splitting_census(const RationalMap& f, unsigned m, const Config& cfg) {
  const Field big = extension_for_audit(f.field(), m, cfg);
  const MapOverField g(f, big, cfg);
  Census c;
  c.m = m;
  c.branch_points = ramified_rational_points(f, m, cfg).points;
  std::set<std::uint64_t> branch;
  for (const auto& b : c.branch_points) branch.insert(b.infinite ? big.order() : b.x.code);
  for (Elem t : big.elements()) {
    if (branch.count(t.code)) continue;
    ++c.histogram[factor_degrees(g.num() - g.den().scaled(t))];
    ++c.non_branch_points;
  }
  if (!branch.count(big.order())) {
    SplittingType s = g.den().degree() > 0 ? factor_degrees(g.den()) : SplittingType{};
    s.push_back(static_cast<unsigned>(g.num().degree() - g.den().degree()));
    std::sort(s.begin(), s.end());
    ++c.histogram[s];
    ++c.non_branch_points;
  }
  return c;
}

SuperellipticCover SuperellipticCover::make(unsigned n, Elem gamma, const UPoly& h) {
  if (n < 2) throw Error(Errc::InvalidArgument, "exponent n must be >= 2");
  if (gamma.code == 0) throw Error(Errc::InvalidArgument, "gamma must be nonzero");
  if (h.degree() < 1) throw Error(Errc::InvalidArgument, "h must have positive degree");
  const UPoly dh = h.derivative();
  if (dh.is_zero() || !gcd(h, dh).is_one())
    throw Error(Errc::InvalidArgument, "h must be squarefree");
  return SuperellipticCover(n, gamma, h, std::nullopt);
}

SuperellipticCover SuperellipticCover::nonvanishing_family(const Field& fq, unsigned n, Elem a,
                                                           Elem gamma) {
  const std::uint64_t q = fq.order();
  if (q % 2 == 0) throw Error(Errc::PreconditionFailed, "q must be odd");
  if (n < 2 || ((q - 1) / 2) % n != 0)
    throw Error(Errc::PreconditionFailed, "n must be >= 2 and divide (q-1)/2");
  if (a.code == 0 || nth_power_solution_count(fq, a, n) == 0)
    throw Error(Errc::PreconditionFailed, "a must be a nonzero n-th power");
  if (gamma.code == 0) throw Error(Errc::PreconditionFailed, "gamma must be nonzero");
  UPoly h = UPoly::constant(fq, fq.one());
  for (Elem t : fq.elements()) {
    if (t.code == 0 || t == a) continue;
    h = h * UPoly(fq, {fq.neg(t), fq.one()});
  }
  SuperellipticCover c = make(n, gamma, h);
  c.a_ = a;
  return c;
}

unsigned superelliptic_genus(const SuperellipticCover& c) {
  const unsigned p = c.field().characteristic();
  if (c.n() % p == 0) throw Error(Errc::WildCase, "characteristic divides n");
  const long n = c.n();
  const long d = c.h().degree();
  const long s = d;  // squarefree: distinct roots over the closure
  const long g = std::gcd(n, d);
  const long two_g_minus_2 = -2 * n + s * (n - 1) + (n - g);
  return static_cast<unsigned>((two_g_minus_2 + 2) / 2);
}

InfinityData superelliptic_infinity(const SuperellipticCover& c) {
  const unsigned g = std::gcd(c.n(), static_cast<unsigned>(c.h().degree()));
  return {g, c.n() / g, g == 1};
}

PointAudit audit_superelliptic(const SuperellipticCover& c, unsigned m, const Config& cfg,
                               AuditOptions opts) {
  if (c.n() % c.field().characteristic() == 0)
    throw Error(Errc::WildCase, "characteristic divides n");
  const Field big = extension_for_audit(c.field(), m, cfg);
  const Embedding emb(c.field(), big, cfg);
  const UPoly h = c.h().mapped(emb);
  const Elem gamma = emb(c.gamma());
  PointAudit a;
  a.m = m;
  a.base_order = big.order();
  a.fiber_sizes.assign(big.order() + 1, 0);
  for (Elem x : big.elements()) {
    Elem hx = h.eval(x);
    a.fiber_sizes[x.code] =
        static_cast<std::uint32_t>(nth_power_solution_count(big, big.mul(gamma, hx), c.n()));
    if (hx.code == 0) a.branch_points.push_back(ProjPoint::finite(x));
  }
  // Over u = 1/x = 0 the model is Y^n = u^e * w(u) with w(0) = gamma * lc(h);
  // its rational places correspond to gcd(n, deg h)-th roots of w(0).
  const InfinityData inf = superelliptic_infinity(c);
  a.fiber_sizes[a.base_order] = static_cast<std::uint32_t>(
      nth_power_solution_count(big, big.mul(gamma, h.lead()), inf.places));
  if (inf.ramification_index > 1) a.branch_points.push_back(ProjPoint::infinity());
  a.exclude_branch_fibers = opts.exclude_branch_fibers;
  finalize_verdicts(a);
  return a;
}

}  // namespace exccover
