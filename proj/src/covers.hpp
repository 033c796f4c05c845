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

#ifndef EXCCOVER_COVERS_HPP
#define EXCCOVER_COVERS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factor.hpp"

namespace exccover {

/// A point of P^1 over some field: finite x, or infinity.
struct ProjPoint {
  bool infinite = false;
  Elem x{};

  static ProjPoint infinity() { return {true, Elem{}}; }
  static ProjPoint finite(Elem e) { return {false, e}; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.x == b.x);
  }
  /// Finite points by code, then infinity.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.infinite != b.infinite) return b.infinite;
    return !a.infinite && a.x < b.x;
  }
};

/// Separable rational self-map p/r of P^1 over F_q in lowest terms, stored
/// in normalized form deg p > deg r so that infinity maps to infinity.
class RationalMap {
 public:
  struct Normalization {
    bool applied = false;
    Elem shift{};  // when applied: post-composed with y -> 1/(y - shift)
  };

  /// Throws InvalidArgument (constant or not coprime) or NotSeparable.
  static RationalMap make(const UPoly& num, const UPoly& den);

  const Field& field() const noexcept { return num_.field(); }
  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }
  const UPoly& input_num() const noexcept { return in_num_; }
  const UPoly& input_den() const noexcept { return in_den_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(num_.degree()); }
  const Normalization& normalization() const noexcept { return norm_; }
  /// p' r - p r'; vanishes exactly at the finite ramification points.
  const UPoly& critical() const noexcept { return crit_; }
  /// n when the map is c * x^n (den constant).
  std::optional<unsigned> monomial_degree() const;

 private:
  RationalMap(UPoly n, UPoly d, UPoly in_n, UPoly in_d, Normalization norm);
  UPoly num_, den_, in_num_, in_den_, crit_;
  Normalization norm_;
};

/// The map's coefficients embedded in an extension, ready for evaluation.
class MapOverField {
 public:
  MapOverField(const RationalMap& f, const Field& target, const Config& cfg = {});
  const Field& field() const noexcept { return num_.field(); }
  ProjPoint operator()(const ProjPoint& p) const;
  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }

 private:
  UPoly num_, den_;
};

ProjPoint eval_map(const RationalMap& f, const ProjPoint& p, const Field& target,
                   const Config& cfg = {});

struct AuditOptions {
  /// Judge injectivity/surjectivity only over non-branch base points.
  bool exclude_branch_fibers = false;
};

struct PointAudit {
  unsigned m = 1;
  std::uint64_t base_order = 0;  // q^m; base points are q^m + 1
  /// Fiber size per base point: index = element code, last = infinity.
  std::vector<std::uint32_t> fiber_sizes;
  std::vector<ProjPoint> branch_points;
  bool exclude_branch_fibers = false;
  bool injective = false;
  bool surjective = false;
  bool bijective = false;

  std::uint64_t total_points() const;
  std::map<std::uint32_t, std::uint64_t> fiber_histogram() const;
  std::uint32_t fiber_at(const ProjPoint& p) const {
    return fiber_sizes[p.infinite ? base_order : p.x.code];
  }
};

/// F_{q^m} for a base field F_q, subject to the field and enumeration caps.
Field extension_for_audit(const Field& base, unsigned m, const Config& cfg);

struct BranchData {
  unsigned m = 1;
  std::vector<ProjPoint> points;  // branch points in P^1(F_{q^m}), sorted
  std::uint64_t bound = 0;        // 2 g_X + 2n - 2 with g_X = 0
};

BranchData ramified_rational_points(const RationalMap& f, unsigned m, const Config& cfg = {});

PointAudit audit_rational_map(const RationalMap& f, unsigned m, const Config& cfg = {},
                              AuditOptions opts = {});

using SplittingType = std::vector<unsigned>;  // residue degrees, ascending

struct Census {
  unsigned m = 1;
  std::map<SplittingType, std::uint64_t> histogram;
  std::vector<ProjPoint> branch_points;
  std::uint64_t non_branch_points = 0;
};

Census splitting_census(const RationalMap& f, unsigned m, const Config& cfg = {});

/// y^n = gamma * h(x) over F_q, with its projection to the x-line.
class SuperellipticCover {
 public:
  /// Throws InvalidArgument unless n >= 2, gamma != 0, h squarefree of
  /// positive degree.
  static SuperellipticCover make(unsigned n, Elem gamma, const UPoly& h);
  /// h(x) = prod_{t in F_q^*, t != a} (x - t); requires q odd, n | (q-1)/2,
  /// a a nonzero n-th power, gamma != 0.
  static SuperellipticCover nonvanishing_family(const Field& fq, unsigned n, Elem a, Elem gamma);

  const Field& field() const noexcept { return h_.field(); }
  unsigned n() const noexcept { return n_; }
  Elem gamma() const noexcept { return gamma_; }
  const UPoly& h() const noexcept { return h_; }
  std::optional<Elem> marked_point() const noexcept { return a_; }

 private:
  SuperellipticCover(unsigned n, Elem gamma, UPoly h, std::optional<Elem> a)
      : n_(n), gamma_(gamma), h_(std::move(h)), a_(a) {}
  unsigned n_;
  Elem gamma_;
  UPoly h_;
  std::optional<Elem> a_;
};

/// Riemann-Hurwitz genus of the smooth model; WildCase if char | n.
unsigned superelliptic_genus(const SuperellipticCover& c);

struct InfinityData {
  unsigned places = 0;           // gcd(n, deg h)
  unsigned ramification_index = 0;  // n / places
  bool totally_ramified = false;
};
InfinityData superelliptic_infinity(const SuperellipticCover& c);

PointAudit audit_superelliptic(const SuperellipticCover& c, unsigned m, const Config& cfg = {},
                               AuditOptions opts = {});

}  // namespace exccover

#endif
