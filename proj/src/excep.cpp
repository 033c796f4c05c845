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

#include "excep.hpp"

#include <numeric>

namespace exccover {

RationalMap quintic_map(const Field& fq, Elem a, Elem b) {
  const Elem z = fq.zero(), o = fq.one();
  return RationalMap::make(UPoly(fq, {z, fq.neg(a), z, z, z, o}),
                           UPoly(fq, {fq.neg(b), z, z, z, o}));
}

RationalMap isogeny_quintic_map(const Field& fq, Elem i, Elem b) {
  if (fq.characteristic() == 2) throw Error(Errc::PreconditionFailed, "q must be odd");
  if (fq.mul(i, i) != fq.neg(fq.one()))
    throw Error(Errc::PreconditionFailed, "i must be a primitive fourth root of unity");
  if (b.code == 0 || nth_power_solution_count(fq, b, 2) != 0)
    throw Error(Errc::PreconditionFailed, "b must be a nonsquare");
  const Elem c = fq.mul(b, fq.sub(fq.mul(fq.from_int(4), i), fq.from_int(3)));
  return quintic_map(fq, c, b);
}

BPoly fiber_product_poly(const RationalMap& f) {
  if (f.critical().is_zero()) throw Error(Errc::NotSeparable, "map is inseparable");
  const BPoly px = BPoly::from_x(f.num()), py = BPoly::from_y(f.num());
  const BPoly rx = BPoly::from_x(f.den()), ry = BPoly::from_y(f.den());
  const Field& k = f.field();
  const BPoly diag = BPoly::from_x(UPoly::x(k)) - BPoly::from_y(UPoly::x(k));
  auto q = exact_div(px * ry - py * rx, diag);
  if (!q) throw Error(Errc::PreconditionFailed, "x - y does not divide the fiber product");
  return *q;
}

Elem eval_biprojective(const BPoly& g, const ProjPoint& x, const ProjPoint& y) {
  if (!x.infinite && !y.infinite) return g.eval(x.x, y.x);
  const int dx = g.deg_x(), dy = g.deg_y();
  if (x.infinite && y.infinite) return g.coeff(dx, dy);
  if (x.infinite) return g.x_coeffs()[dx].eval(y.x);  // coefficient of x^dx, in y
  return g.y_coeffs()[dy].eval(x.x);
}

bool is_ramified_at(const RationalMap& f, const ProjPoint& x) {
  if (x.infinite) return f.num().degree() - f.den().degree() > 1;
  return f.critical().eval(x.x).code == 0;
}

namespace {

std::uint64_t checked_square_points(std::uint64_t q, const Config& cfg) {
  const std::uint64_t n = (q + 1) * (q + 1);
  if (n > cfg.enum_cap) throw Error(Errc::CapExceeded, "(q+1)^2 exceeds the enumeration cap");
  return n;
}

std::vector<ProjPoint> projective_line(const Field& k) {
  std::vector<ProjPoint> out;
  for (Elem e : k.elements()) out.push_back(ProjPoint::finite(e));
  out.push_back(ProjPoint::infinity());
  return out;
}

}  // namespace

ExceptionalityReport decide_exceptional(const RationalMap& f, const Config& cfg) {
  BPoly phi = fiber_product_poly(f);
  ExceptionalityReport rep{f, phi, {}, true, 1};
  if (phi.total_degree() <= 0) return rep;
  const Field& k = f.field();
  const BFactorization cert = factor_bivariate(phi, cfg);
  const BPoly diag =
      (BPoly::from_x(UPoly::x(k)) - BPoly::from_y(UPoly::x(k))).normalized();
  const bool count = (k.order() + 1) * (k.order() + 1) <= cfg.enum_cap;
  const auto line = projective_line(k);
  for (const auto& fc : cert.factors) {
    ComponentReport cr{fc.poly, fc.multiplicity, 1, true, false, std::nullopt, std::nullopt};
    cr.definition_degree = geometric_components(fc.poly, cfg).at(0).components;
    cr.absolutely_irreducible = cr.definition_degree == 1;
    cr.diagonal = fc.poly.normalized() == diag;
    if (count) {
      std::uint64_t aff = 0, proj = 0;
      for (const auto& x : line)
        for (const auto& y : line)
          if (eval_biprojective(fc.poly, x, y).code == 0) {
            ++proj;
            if (!x.infinite && !y.infinite) ++aff;
          }
      cr.affine_points = aff;
      cr.projective_points = proj;
    }
    if (cr.absolutely_irreducible) rep.exceptional = false;
    rep.component_definition_lcm = std::lcm(rep.component_definition_lcm, cr.definition_degree);
    rep.factors.push_back(std::move(cr));
  }
  return rep;
}

std::vector<IntersectionViolation> validate_intersection_property(
    const ExceptionalityReport& report, const Config& cfg) {
  const Field& k = report.map.field();
  checked_square_points(k.order(), cfg);
  std::vector<IntersectionViolation> out;
  const auto line = projective_line(k);
  for (const auto& x : line)
    for (const auto& y : line) {
      IntersectionViolation v{x, y, {}, x == y};
      for (std::size_t i = 0; i < report.factors.size(); ++i)
        if (eval_biprojective(report.factors[i].factor, x, y).code == 0) v.factors.push_back(i);
      const std::size_t hits = v.factors.size() + (v.on_diagonal ? 1 : 0);
      if (hits < 2) continue;
      if (!is_ramified_at(report.map, x) || !is_ramified_at(report.map, y))
        out.push_back(std::move(v));
    }
  return out;
}

std::vector<DiagonalBoundViolation> validate_diagonal_bound(const ExceptionalityReport& report,
                                                            const PointAudit& audit,
                                                            const Config& cfg) {
  if (audit.m != 1 || !audit.injective || audit.exclude_branch_fibers)
    throw Error(Errc::PreconditionFailed, "diagonal bound needs an injective m = 1 audit");
  const Field& k = report.map.field();
  checked_square_points(k.order(), cfg);
  const std::uint64_t bound = 2 * std::uint64_t{report.map.degree()} - 2;
  const auto line = projective_line(k);
  std::vector<DiagonalBoundViolation> out;
  for (std::size_t i = 0; i < report.factors.size(); ++i) {
    std::uint64_t pts = 0;
    for (const auto& x : line)
      for (const auto& y : line)
        if (eval_biprojective(report.factors[i].factor, x, y).code == 0) ++pts;
    if (pts > bound) out.push_back({i, pts, bound});
  }
  return out;
}

}  // namespace exccover
