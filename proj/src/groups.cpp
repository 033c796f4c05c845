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

#include "groups.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>

namespace exccover {

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v])
      throw Error(Errc::InvalidArgument, "images do not form a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(std::uint32_t deg) {
  std::vector<std::uint32_t> v(deg);
  std::iota(v.begin(), v.end(), 0u);
  return Perm(std::move(v));
}

Perm Perm::parse_cycles(std::uint32_t deg, std::string_view text) {
  std::vector<std::uint32_t> img(deg);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(deg, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError(Errc::ParseError, i, "empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(Errc::ParseError, i, "expected '('");
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw ParseError(Errc::ParseError, i, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw ParseError(Errc::ParseError, i, "expected digit");
      const std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v >= deg) throw ParseError(Errc::ParseError, start, "point out of range");
        ++i;
      }
      if (used[v]) throw ParseError(Errc::ParseError, start, "point repeated");
      used[v] = true;
      cyc.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t j = 0; j < cyc.size(); ++j) img[cyc[j]] = cyc[(j + 1) % cyc.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> v(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) v[img_[i]] = i;
  return Perm(std::move(v));
}

bool Perm::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::uint32_t Perm::fixed_points() const noexcept {
  std::uint32_t n = 0;
  for (std::uint32_t i = 0; i < img_.size(); ++i) n += img_[i] == i;
  return n;
}

std::vector<std::uint32_t> Perm::cycle_type() const {
  std::vector<std::uint32_t> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (auto c : cycle_type()) o = std::lcm(o, std::uint64_t{c});
  return o;
}

std::string Perm::to_cycles() const {
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += '(';
    for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (j != i) s += ' ';
      s += std::to_string(j);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& s, const Perm& t) {
  if (s.degree() != t.degree()) throw Error(Errc::InvalidArgument, "permutation degrees differ");
  std::vector<std::uint32_t> v(s.degree());
  for (std::uint32_t i = 0; i < v.size(); ++i) v[i] = s.img_[t.img_[i]];
  return Perm(std::move(v));
}

bool composition_convention_self_test() {
  const Perm s = Perm::parse_cycles(3, "(0 1)");
  const Perm t = Perm::parse_cycles(3, "(1 2)");
  const Perm st = s * t;  // 1 -> 2 -> 2, 2 -> 1 -> 0
  return st(0) == 1 && st(1) == 2 && st(2) == 0 && st == Perm::parse_cycles(3, "(0 1 2)");
}

PermGroup PermGroup::generate(std::uint32_t deg, const std::vector<Perm>& gens,
                              const Config& cfg) {
  for (const auto& g : gens)
    if (g.degree() != deg) throw Error(Errc::InvalidArgument, "generator degree mismatch");
  std::set<Perm> seen{Perm::identity(deg)};
  std::deque<Perm> queue{Perm::identity(deg)};
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Perm y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > cfg.group_cap)
          throw Error(Errc::CapExceeded, "group order exceeds the cap");
        queue.push_back(std::move(y));
      }
    }
  }
  return PermGroup(deg, gens, std::vector<Perm>(seen.begin(), seen.end()));
}

PermGroup PermGroup::symmetric(std::uint32_t deg, const Config& cfg) {
  std::vector<Perm> gens;
  if (deg >= 2) {
    std::vector<std::uint32_t> cyc(deg);
    for (std::uint32_t i = 0; i < deg; ++i) cyc[i] = (i + 1) % deg;
    gens.push_back(Perm::parse_cycles(deg, "(0 1)"));
    gens.push_back(Perm(cyc));
  }
  return generate(deg, gens, cfg);
}

PermGroup PermGroup::trivial(std::uint32_t deg) {
  return PermGroup(deg, {}, {Perm::identity(deg)});
}

bool PermGroup::contains(const Perm& p) const {
  return p.degree() == deg_ && std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (deg_ != other.deg_ || other.order() % order() != 0) return false;
  return std::all_of(elems_.begin(), elems_.end(),
                     [&](const Perm& p) { return other.contains(p); });
}

bool PermGroup::is_normal_in(const PermGroup& other) const {
  if (!is_subgroup_of(other)) return false;
  for (const auto& a : other.generators()) {
    const Perm ai = a.inverse();
    for (const auto& g : gens_)
      if (!contains(a * g * ai)) return false;
  }
  return true;
}

bool PermGroup::is_transitive() const { return orbits(*this, Action::Points).size() <= 1; }

namespace {

std::uint32_t act(const Perm& p, std::uint32_t x, Action action, std::uint32_t deg) {
  if (action == Action::Points) return p(x);
  return p(x / deg) * deg + p(x % deg);
}

std::uint32_t set_size(std::uint32_t deg, Action action) {
  return action == Action::Points ? deg : deg * deg;
}

std::uint64_t fixed_count(const Perm& p, Action action) {
  const std::uint64_t f = p.fixed_points();
  return action == Action::Points ? f : f * f;
}

// Orbit label per point.
std::vector<std::uint32_t> orbit_labels(const PermGroup& g, Action action) {
  const std::uint32_t deg = g.degree(), n = set_size(deg, action);
  std::vector<std::uint32_t> label(n, UINT32_MAX);
  std::vector<Perm> gens = g.generators();
  if (gens.empty()) gens = g.elements();
  std::uint32_t next = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (label[s] != UINT32_MAX) continue;
    std::vector<std::uint32_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (const auto& p : gens) {
        std::uint32_t y = act(p, x, action, deg);
        if (label[y] == UINT32_MAX) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<std::uint32_t>> group_by_label(const std::vector<std::uint32_t>& label) {
  std::uint32_t k = 0;
  for (auto l : label) k = std::max(k, l + 1);
  std::vector<std::vector<std::uint32_t>> out(k);
  for (std::uint32_t s = 0; s < label.size(); ++s) out[label[s]].push_back(s);
  return out;
}

// Number of `outer`-orbits that are also single `inner`-orbits.
std::uint64_t common_orbits(const PermGroup& outer, const PermGroup& inner, Action action) {
  const auto lo = orbit_labels(outer, action), li = orbit_labels(inner, action);
  std::uint64_t n = 0;
  for (const auto& orb : group_by_label(lo)) {
    const std::uint32_t l = li[orb.front()];
    if (std::all_of(orb.begin(), orb.end(), [&](std::uint32_t s) { return li[s] == l; })) ++n;
  }
  return n;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> orbits(const PermGroup& g, Action action) {
  return group_by_label(orbit_labels(g, action));
}

std::uint64_t quotient_order(const PermGroup& normal, const Perm& p) {
  Perm x = p;
  std::uint64_t j = 1;
  while (!normal.contains(x)) {
    x = x * p;
    ++j;
  }
  return j;
}

CosetSpec CosetSpec::make(PermGroup ambient, PermGroup normal, Perm rep) {
  if (!normal.is_normal_in(ambient))
    throw Error(Errc::NotSubgroup, "G is not a normal subgroup of A");
  if (!ambient.contains(rep)) throw Error(Errc::NotSubgroup, "coset representative not in A");
  if (quotient_order(normal, rep) != ambient.order() / normal.order())
    throw Error(Errc::InvalidOrder, "aG does not generate A/G");
  return CosetSpec(std::move(ambient), std::move(normal), std::move(rep));
}

std::vector<Perm> CosetSpec::coset() const {
  std::vector<Perm> out;
  out.reserve(g_.order());
  for (const auto& g : g_.elements()) out.push_back(rep_ * g);
  std::sort(out.begin(), out.end());
  return out;
}

FixedPointIdentity fixed_point_identity(const CosetSpec& spec, Action action) {
  FixedPointIdentity r;
  r.lhs = common_orbits(spec.ambient(), spec.normal(), action);
  std::int64_t sum = 0;
  for (const auto& a : spec.coset()) sum += static_cast<std::int64_t>(fixed_count(a, action));
  r.rhs = Rational(sum, static_cast<std::int64_t>(spec.normal().order()));
  return r;
}

ExceptionalityConditions exceptionality_conditions(const CosetSpec& spec) {
  if (!spec.normal().is_transitive())
    throw Error(Errc::NotTransitive, "G is not transitive on points");
  const PermGroup& a = spec.ambient();
  const std::uint32_t deg = a.degree();
  ExceptionalityConditions c;
  // (1): the diagonal orbit {(i, i)} is the only common orbit on pairs.
  const auto la = orbit_labels(a, Action::OrderedPairs);
  const auto lg = orbit_labels(spec.normal(), Action::OrderedPairs);
  bool only = true;
  for (const auto& orb : group_by_label(la)) {
    const std::uint32_t l = lg[orb.front()];
    const bool common =
        std::all_of(orb.begin(), orb.end(), [&](std::uint32_t s) { return lg[s] == l; });
    const bool diag = orb.front() / deg == orb.front() % deg;
    if (common != diag) only = false;
  }
  c.diagonal_only = only;
  c.unique_fixed = c.at_most_one = c.at_least_one = true;
  const std::uint64_t k = spec.index();
  for (const auto& x : a.elements()) {
    if (quotient_order(spec.normal(), x) != k) continue;
    ++c.qualifying;
    const auto f = x.fixed_points();
    if (f != 1) c.unique_fixed = false;
    if (f > 1) c.at_most_one = false;
    if (f < 1) c.at_least_one = false;
  }
  return c;
}

std::uint64_t common_orbit_count(const PermGroup& d, const PermGroup& i) {
  if (!i.is_subgroup_of(d)) throw Error(Errc::NotSubgroup, "I is not a subgroup of D");
  return common_orbits(d, i, Action::Points);
}

std::map<CycleType, Rational> cycle_type_histogram(const CosetSpec& spec) {
  std::map<CycleType, std::int64_t> counts;
  for (const auto& a : spec.coset()) ++counts[a.cycle_type()];
  std::map<CycleType, Rational> out;
  const auto total = static_cast<std::int64_t>(spec.normal().order());
  for (const auto& [t, n] : counts) out[t] = Rational(n, total);
  return out;
}

std::vector<PermGroup> subgroup_catalog(std::uint32_t n, const Config& cfg) {
  if (n < 1 || n > 5) throw Error(Errc::InvalidArgument, "catalog covers 1 <= n <= 5");
  const PermGroup sym = PermGroup::symmetric(n, cfg);
  const auto& el = sym.elements();
  const std::size_t N = el.size();
  auto index = [&](const Perm& p) {
    return static_cast<std::size_t>(std::lower_bound(el.begin(), el.end(), p) - el.begin());
  };
  std::vector<std::vector<std::uint8_t>> mul(N, std::vector<std::uint8_t>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) mul[i][j] = static_cast<std::uint8_t>(index(el[i] * el[j]));
  using Bits = std::array<std::uint64_t, 2>;
  auto has = [](const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; };
  auto closure = [&](const std::vector<std::size_t>& gens) {
    Bits b{0, 0};
    std::vector<std::size_t> list{index(Perm::identity(n))};
    b[list[0] / 64] |= std::uint64_t{1} << (list[0] % 64);
    for (std::size_t at = 0; at < list.size(); ++at)
      for (auto g : gens) {
        std::size_t y = mul[g][list[at]];
        if (!has(b, y)) {
          b[y / 64] |= std::uint64_t{1} << (y % 64);
          list.push_back(y);
        }
      }
    return b;
  };
  // Cyclic subgroups, one generator each.
  std::map<Bits, std::vector<std::size_t>> found;
  std::vector<std::size_t> cyclic_gens;
  for (std::size_t i = 0; i < N; ++i) {
    Bits b = closure({i});
    if (found.emplace(b, std::vector<std::size_t>{i}).second) cyclic_gens.push_back(i);
  }
  std::deque<Bits> work;
  for (const auto& [b, g] : found) work.push_back(b);
  while (!work.empty()) {
    Bits h = work.front();
    work.pop_front();
    const std::vector<std::size_t> hg = found.at(h);
    for (auto c : cyclic_gens) {
      if (has(h, c)) continue;
      std::vector<std::size_t> g = hg;
      g.push_back(c);
      Bits j = closure(g);
      if (found.emplace(j, g).second) work.push_back(j);
    }
  }
  std::vector<PermGroup> out;
  for (const auto& [b, g] : found) {
    std::vector<Perm> gens;
    for (auto i : g) gens.push_back(el[i]);
    out.push_back(PermGroup::generate(n, gens, cfg));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& x, const PermGroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return out;
}

}  // namespace exccover
