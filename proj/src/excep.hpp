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

#ifndef EXCCOVER_EXCEP_HPP
#define EXCCOVER_EXCEP_HPP

#include <optional>
#include <vector>

#include "covers.hpp"

namespace exccover {

/// (x^5 - a x) / (x^4 - b).
RationalMap quintic_map(const Field& fq, Elem a, Elem b);
/// (x^5 - b(4i - 3) x) / (x^4 - b) for i a primitive fourth root of unity
/// and b a nonsquare; throws PreconditionFailed otherwise.
RationalMap isogeny_quintic_map(const Field& fq, Elem i, Elem b);

/// (p(x) r(y) - p(y) r(x)) / (x - y).
BPoly fiber_product_poly(const RationalMap& f);

struct ComponentReport {
  BPoly factor;
  unsigned multiplicity = 1;
  unsigned definition_degree = 1;  // c
  bool absolutely_irreducible = true;
  bool diagonal = false;  // factor is a multiple of x - y
  std::optional<std::uint64_t> affine_points;
  std::optional<std::uint64_t> projective_points;  // in P^1 x P^1
};

struct ExceptionalityReport {
  RationalMap map;
  BPoly phi;
  std::vector<ComponentReport> factors;
  bool exceptional = false;
  unsigned component_definition_lcm = 1;
};

ExceptionalityReport decide_exceptional(const RationalMap& f, const Config& cfg = {});

/// Value of f's bihomogenization at a point of P^1 x P^1.
Elem eval_biprojective(const BPoly& g, const ProjPoint& x, const ProjPoint& y);
/// f is ramified at the source point x (over the field of x's code).
bool is_ramified_at(const RationalMap& f, const ProjPoint& x);

struct IntersectionViolation {
  ProjPoint x, y;
  std::vector<std::size_t> factors;  // indices into report.factors
  bool on_diagonal = false;
};

std::vector<IntersectionViolation> validate_intersection_property(
    const ExceptionalityReport& report, const Config& cfg = {});

struct DiagonalBoundViolation {
  std::size_t factor = 0;
  std::uint64_t points = 0;
  std::uint64_t bound = 0;
};

/// Throws PreconditionFailed unless `audit` is an injective m = 1 audit.
std::vector<DiagonalBoundViolation> validate_diagonal_bound(const ExceptionalityReport& report,
                                                            const PointAudit& audit,
                                                            const Config& cfg = {});

}  // namespace exccover

#endif
