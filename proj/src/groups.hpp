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

#ifndef EXCCOVER_GROUPS_HPP
#define EXCCOVER_GROUPS_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "error.hpp"

namespace exccover {

using Rational = boost::rational<std::int64_t>;

/// Permutation of {0, ..., deg-1}; (s * t)(i) = s(t(i)).
class Perm {
 public:
  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::uint32_t deg);
  /// Cycle notation, 0-based: "(0 1)(2 3)"; "()" is the identity.
  static Perm parse_cycles(std::uint32_t deg, std::string_view text);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return img_.at(i); }
  const std::vector<std::uint32_t>& images() const noexcept { return img_; }
  Perm inverse() const;
  bool is_identity() const noexcept;
  std::uint32_t fixed_points() const noexcept;
  /// Cycle lengths, ascending, fixed points included.
  std::vector<std::uint32_t> cycle_type() const;
  std::uint64_t order() const;
  std::string to_cycles() const;

  friend Perm operator*(const Perm& s, const Perm& t);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> img_;
};

/// Checks the composition convention on a fixed pair of generators.
bool composition_convention_self_test();

class PermGroup {
 public:
  /// Closure of the generators; throws CapExceeded past cfg.group_cap
  /// elements, InvalidArgument on degree mismatch.
  static PermGroup generate(std::uint32_t deg, const std::vector<Perm>& gens,
                            const Config& cfg = {});
  static PermGroup symmetric(std::uint32_t deg, const Config& cfg = {});
  static PermGroup trivial(std::uint32_t deg);

  std::uint32_t degree() const noexcept { return deg_; }
  const std::vector<Perm>& generators() const noexcept { return gens_; }
  /// All elements, sorted.
  const std::vector<Perm>& elements() const noexcept { return elems_; }
  std::uint64_t order() const noexcept { return elems_.size(); }
  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_normal_in(const PermGroup& other) const;
  bool is_transitive() const;
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.deg_ == b.deg_ && a.elems_ == b.elems_;
  }

 private:
  PermGroup(std::uint32_t deg, std::vector<Perm> gens, std::vector<Perm> elems)
      : deg_(deg), gens_(std::move(gens)), elems_(std::move(elems)) {}
  std::uint32_t deg_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
};

enum class Action { Points, OrderedPairs };

/// Orbits, each sorted, ordered by smallest member. Ordered pairs (i, j)
/// are encoded as i * deg + j.
std::vector<std::vector<std::uint32_t>> orbits(const PermGroup& g, Action action);

/// A with a normal subgroup G and a coset aG generating the cyclic A/G.
class CosetSpec {
 public:
  /// Throws NotSubgroup (G not a normal subgroup of A, or a not in A) or
  /// InvalidOrder (aG does not generate A/G).
  static CosetSpec make(PermGroup ambient, PermGroup normal, Perm rep);

  const PermGroup& ambient() const noexcept { return a_; }
  const PermGroup& normal() const noexcept { return g_; }
  const Perm& rep() const noexcept { return rep_; }
  std::uint64_t index() const noexcept { return a_.order() / g_.order(); }
  /// The elements of aG, sorted.
  std::vector<Perm> coset() const;

 private:
  CosetSpec(PermGroup a, PermGroup g, Perm rep)
      : a_(std::move(a)), g_(std::move(g)), rep_(std::move(rep)) {}
  PermGroup a_, g_;
  Perm rep_;
};

/// Order of pG in A/G: least j > 0 with p^j in G.
std::uint64_t quotient_order(const PermGroup& normal, const Perm& p);

struct FixedPointIdentity {
  std::uint64_t lhs = 0;  // A-orbits that are single G-orbits
  Rational rhs;           // mean number of fixed points over aG
  bool holds() const { return Rational(static_cast<std::int64_t>(lhs)) == rhs; }
};

FixedPointIdentity fixed_point_identity(const CosetSpec& spec, Action action);

struct ExceptionalityConditions {
  bool diagonal_only = false;  // (1)
  bool unique_fixed = false;   // (2)
  bool at_most_one = false;    // (3)
  bool at_least_one = false;   // (4)
  std::uint64_t qualifying = 0;  // elements a' with <a'G> = A/G
  bool agree() const {
    return diagonal_only == unique_fixed && unique_fixed == at_most_one &&
           at_most_one == at_least_one;
  }
};

/// Throws NotTransitive unless G is transitive on points.
ExceptionalityConditions exceptionality_conditions(const CosetSpec& spec);

/// D-orbits that are single I-orbits; throws NotSubgroup unless I <= D.
std::uint64_t common_orbit_count(const PermGroup& d, const PermGroup& i);

using CycleType = std::vector<std::uint32_t>;
std::map<CycleType, Rational> cycle_type_histogram(const CosetSpec& spec);

/// Every subgroup of S_n (n <= 5), ordered by size then elements.
std::vector<PermGroup> subgroup_catalog(std::uint32_t n, const Config& cfg = {});

}  // namespace exccover

#endif
