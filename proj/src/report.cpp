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

#include "report.hpp"

#include <numeric>

#include "bounds.hpp"
#include "excep.hpp"
#include "group_spec.hpp"
#include "poly_io.hpp"

namespace exccover {

namespace {

Json envelope(const std::string& command, Json inputs, Json results, const Config& cfg) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["version"] = kVersion;
  j["seed"] = std::to_string(cfg.seed);
  return j;
}

Json field_json(const Field& k) {
  return {{"p", k.characteristic()},
          {"k", k.degree()},
          {"q", std::to_string(k.order())},
          {"modulus", k.degree() > 1 ? Json(k.modulus()) : Json(nullptr)}};
}

Json elem_json(const Field& k, Elem e) { return k.coeffs(e); }

Json point_json(const Field& k, const ProjPoint& p) {
  if (p.infinite) return "inf";
  return elem_json(k, p.x);
}

Json points_json(const Field& k, const std::vector<ProjPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(point_json(k, p));
  return a;
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string big(const BigInt& v) { return v.str(); }

Json histogram_json(const std::map<std::uint32_t, std::uint64_t>& h) {
  Json a = Json::array();
  for (const auto& [size, count] : h) a.push_back({{"fiber_size", size}, {"count", count}});
  return a;
}

std::uint64_t power_checked(std::uint64_t q, unsigned m) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (v > UINT64_MAX / q) return UINT64_MAX;
    v *= q;
  }
  return v;
}

std::vector<unsigned> resolve_ms(const std::vector<unsigned>& requested, std::uint64_t q,
                                 const Config& cfg, std::vector<unsigned> fallback) {
  if (!requested.empty()) {
    for (unsigned m : requested)
      if (m < 1) throw Error(Errc::InvalidArgument, "extension degree m must be >= 1");
    return requested;
  }
  std::vector<unsigned> out;
  for (unsigned m : fallback)
    if (power_checked(q, m) <= cfg.enum_cap) out.push_back(m);
  if (out.empty()) throw Error(Errc::CapExceeded, "q exceeds the enumeration cap");
  return out;
}

Json audit_json(const Field& base, const PointAudit& a, const Config& cfg) {
  const Field big_field = extension_for_audit(base, a.m, cfg);
  return {{"m", a.m},
          {"base_points", std::to_string(a.base_order + 1)},
          {"total_points", std::to_string(a.total_points())},
          {"injective", a.injective},
          {"surjective", a.surjective},
          {"bijective", a.bijective},
          {"exclude_branch_fibers", a.exclude_branch_fibers},
          {"fiber_histogram", histogram_json(a.fiber_histogram())},
          {"branch_points", points_json(big_field, a.branch_points)}};
}

Json cycle_hist_json(const std::map<CycleType, Rational>& h) {
  Json a = Json::array();
  for (const auto& [t, f] : h) a.push_back({{"type", t}, {"frequency", rational_text(f)}});
  return a;
}

Json census_json(const Census& c, const Field& big_field,
                 const std::optional<std::map<CycleType, Rational>>& prediction,
                 const std::string& prediction_source) {
  Json hist = Json::array();
  std::map<CycleType, Rational> freq;
  for (const auto& [t, n] : c.histogram) {
    const Rational fr(static_cast<std::int64_t>(n), static_cast<std::int64_t>(c.non_branch_points));
    CycleType key(t.begin(), t.end());
    freq[key] = fr;
    hist.push_back({{"type", t}, {"count", n}, {"frequency", rational_text(fr)}});
  }
  Json j{{"m", c.m},
         {"histogram", hist},
         {"non_branch_points", c.non_branch_points},
         {"branch_points", points_json(big_field, c.branch_points)}};
  if (prediction) {
    std::map<CycleType, std::pair<Rational, Rational>> both;
    for (const auto& [t, f] : freq) both[t].first = f;
    for (const auto& [t, f] : *prediction) both[t].second = f;
    Rational tv(0);
    Json cmp = Json::array();
    for (const auto& [t, fg] : both) {
      const Rational d = fg.first - fg.second;
      tv += d < Rational(0) ? -d : d;
      cmp.push_back({{"type", t},
                     {"observed", rational_text(fg.first)},
                     {"predicted", rational_text(fg.second)}});
    }
    tv /= 2;
    j["prediction"] = {{"source", prediction_source},
                       {"comparison", cmp},
                       {"total_variation", rational_text(tv)},
                       {"exact_match", tv == Rational(0)}};
  } else {
    j["prediction"] = nullptr;
  }
  return j;
}

Json component_json(const Field& k, const ComponentReport& c) {
  auto opt = [](const std::optional<std::uint64_t>& v) {
    return v ? Json(std::to_string(*v)) : Json(nullptr);
  };
  (void)k;
  return {{"multiplicity", c.multiplicity},
          {"definition_degree", c.definition_degree},
          {"absolutely_irreducible", c.absolutely_irreducible},
          {"diagonal", c.diagonal},
          {"bidegree", {c.factor.deg_x(), c.factor.deg_y()}},
          {"affine_points", opt(c.affine_points)},
          {"projective_points", opt(c.projective_points)}};
}

std::string bpoly_text(const BPoly& f) {
  // Sum of c * x^i * y^j, descending lex (x first).
  const Field& k = f.field();
  std::string out;
  for (int i = f.deg_x(); i >= 0; --i)
    for (int j = f.deg_y(); j >= 0; --j) {
      Elem c = f.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (c.code == 0) continue;
      std::string coef = format_element(k, c);
      if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
      std::string mono;
      if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j > 0) mono += std::string(mono.empty() ? "" : "*") + (j == 1 ? "y" : "y^" + std::to_string(j));
      std::string term = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
      if (!out.empty()) out += " + ";
      out += term;
    }
  return out.empty() ? "0" : out;
}

Json thresholds_json(const Threshold& t) {
  return {{"bound", big(t.bound)},
          {"strict", t.strict},
          {"min_q", big(t.min_q)},
          {"min_prime_power", big(t.min_prime_power)}};
}

Json map_json(const RationalMap& f) {
  const Field& k = f.field();
  return {{"input_num", format_poly(f.input_num())},
          {"input_den", format_poly(f.input_den())},
          {"num", format_poly(f.num())},
          {"den", format_poly(f.den())},
          {"degree", f.degree()},
          {"normalization",
           {{"applied", f.normalization().applied},
            {"shift", f.normalization().applied ? elem_json(k, f.normalization().shift)
                                                : Json(nullptr)}}},
          {"critical", format_poly(f.critical())}};
}

std::optional<std::map<CycleType, Rational>> monomial_prediction(const RationalMap& f,
                                                                 unsigned m, std::string& src,
                                                                 const Config& cfg) {
  auto n = f.monomial_degree();
  if (!n || *n < 2) return std::nullopt;
  const Field& k = f.field();
  if (*n % k.characteristic() == 0) return std::nullopt;
  const std::uint64_t qm = power_checked(k.order(), m);
  if (qm == UINT64_MAX || (qm - 1) % *n != 0) return std::nullopt;
  std::vector<std::uint32_t> cyc(*n);
  for (unsigned i = 0; i < *n; ++i) cyc[i] = (i + 1) % *n;
  PermGroup c = PermGroup::generate(*n, {Perm(cyc)}, cfg);
  src = "cyclic C_" + std::to_string(*n) + " (regular), trivial Frobenius coset";
  return cycle_type_histogram(CosetSpec::make(c, c, Perm::identity(*n)));
}

struct ParsedGroups {
  PermGroup a, g;
  Perm rep;
  std::optional<PermGroup> d, i;
};

ParsedGroups build_groups(const std::string& text, const Config& cfg) {
  GroupSpecFile s = parse_group_spec(text);
  ParsedGroups out{PermGroup::generate(s.degree, s.a_gens, cfg),
                   PermGroup::generate(s.degree, s.g_gens, cfg), s.rep, std::nullopt,
                   std::nullopt};
  if (s.d_gens) {
    out.d = PermGroup::generate(s.degree, *s.d_gens, cfg);
    out.i = PermGroup::generate(s.degree, s.i_gens.value_or(std::vector<Perm>{}), cfg);
  } else if (s.i_gens) {
    throw Error(Errc::InvalidArgument, "[I] given without [D]");
  }
  return out;
}

Perm perm_power(const Perm& p, unsigned e) {
  Perm r = Perm::identity(p.degree());
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace

std::string dump_report(const Json& j) { return j.dump(2); }

Json analyze_report(const AnalyzeRequest& req, const Config& cfg) {
  const Field k = Field::of_order(req.q, cfg);
  const RationalMap f = RationalMap::make(parse_poly(req.num, k), parse_poly(req.den, k));
  const auto ms = resolve_ms(req.m, req.q, cfg, {1, 2, 3});
  Json inputs{{"field", field_json(k)},
              {"num", req.num},
              {"den", req.den},
              {"m", ms},
              {"group_spec", req.group_spec ? Json(*req.group_spec) : Json(nullptr)},
              {"exclude_branch_fibers", req.exclude_branch_fibers}};

  const ExceptionalityReport exc = decide_exceptional(f, cfg);
  Json comps = Json::array();
  for (const auto& c : exc.factors) {
    Json cj = component_json(k, c);
    cj["factor"] = bpoly_text(c.factor);
    comps.push_back(cj);
  }
  Json res;
  res["map"] = map_json(f);
  res["exceptionality"] = {{"exceptional", exc.exceptional},
                           {"component_definition_lcm", exc.component_definition_lcm},
                           {"phi", bpoly_text(exc.phi)},
                           {"factors", comps}};

  std::optional<ParsedGroups> groups;
  if (req.group_spec) {
    groups = build_groups(*req.group_spec, cfg);
    if (groups->a.degree() != f.degree())
      throw Error(Errc::PreconditionFailed, "group degree differs from the map degree");
  }

  Json audits = Json::array(), censuses = Json::array(), branch = Json::array();
  std::optional<PointAudit> audit1;
  bool exc_bij = true;
  for (unsigned m : ms) {
    const Field big_field = extension_for_audit(k, m, cfg);
    PointAudit a = audit_rational_map(f, m, cfg, {req.exclude_branch_fibers});
    Json aj = audit_json(k, a, cfg);
    const bool coprime = std::gcd(m, exc.component_definition_lcm) == 1;
    if (exc.exceptional && coprime && !a.bijective) exc_bij = false;
    audits.push_back(aj);
    if (m == 1 && !req.exclude_branch_fibers) audit1 = a;

    BranchData b = ramified_rational_points(f, m, cfg);
    branch.push_back({{"m", m},
                      {"points", points_json(big_field, b.points)},
                      {"count", b.points.size()},
                      {"bound", b.bound}});

    Census c = splitting_census(f, m, cfg);
    std::string src;
    std::optional<std::map<CycleType, Rational>> pred;
    if (groups) {
      const Perm rep = perm_power(groups->rep, m);
      if (groups->g.is_normal_in(groups->a) &&
          quotient_order(groups->g, rep) == groups->a.order() / groups->g.order()) {
        pred = cycle_type_histogram(CosetSpec::make(groups->a, groups->g, rep));
        src = "group spec, coset a^" + std::to_string(m) + "G";
      }
    } else {
      pred = monomial_prediction(f, m, src, cfg);
    }
    censuses.push_back(census_json(c, big_field, pred, src));
  }
  res["audits"] = audits;
  res["branch_points"] = branch;
  res["census"] = censuses;
  res["exceptional_implies_bijective"] = exc_bij;

  Json val;
  const std::uint64_t sq = (req.q + 1) * (req.q + 1);
  if (sq <= cfg.enum_cap) {
    auto viol = validate_intersection_property(exc, cfg);
    Json vj = Json::array();
    for (const auto& v : viol)
      vj.push_back({{"x", point_json(k, v.x)}, {"y", point_json(k, v.y)}, {"factors", v.factors}});
    val["intersection"] = {{"checked", true}, {"violations", vj}};
    if (audit1 && audit1->injective) {
      auto dv = validate_diagonal_bound(exc, *audit1, cfg);
      Json dj = Json::array();
      for (const auto& v : dv)
        dj.push_back({{"factor", v.factor}, {"points", v.points}, {"bound", v.bound}});
      val["diagonal_bound"] = {{"checked", true},
                               {"bound", 2 * std::uint64_t{f.degree()} - 2},
                               {"violations", dj}};
    } else {
      val["diagonal_bound"] = {{"checked", false},
                               {"reason", "needs an injective audit at m = 1"}};
    }
  } else {
    val["intersection"] = {{"checked", false}, {"reason", "(q+1)^2 exceeds the enumeration cap"}};
    val["diagonal_bound"] = {{"checked", false}, {"reason", "(q+1)^2 exceeds the enumeration cap"}};
  }
  res["validators"] = val;

  if (f.degree() >= 2) {
    Applicability ap = threshold_predicates(f.degree(), 0, BigInt(req.q));
    res["thresholds"] = {{"injectivity_A1", ap.a1},
                         {"injectivity_2_5", ap.t25},
                         {"surjectivity_A2", ap.a2},
                         {"ramification_bound", big(ap.ramification_bound)}};
  } else {
    res["thresholds"] = nullptr;
  }
  return envelope("analyze", inputs, res, cfg);
}

Json superelliptic_report(const SuperellipticRequest& req, const Config& cfg) {
  const Field k = Field::of_order(req.q, cfg);
  const Elem gamma = parse_element(req.gamma, k);
  std::optional<SuperellipticCover> cover;
  std::optional<Elem> a;
  if (req.h) {
    cover = SuperellipticCover::make(req.n, gamma, parse_poly(*req.h, k));
  } else {
    a = parse_element(req.a, k);
    cover = SuperellipticCover::nonvanishing_family(k, req.n, *a, gamma);
  }
  const auto ms = resolve_ms(req.m, req.q, cfg, {1});
  Json inputs{{"field", field_json(k)},
              {"n", req.n},
              {"a", req.h ? Json(nullptr) : Json(req.a)},
              {"gamma", req.gamma},
              {"h", req.h ? Json(*req.h) : Json(nullptr)},
              {"m", ms},
              {"exclude_branch_fibers", req.exclude_branch_fibers}};
  const unsigned genus = superelliptic_genus(*cover);
  const InfinityData inf = superelliptic_infinity(*cover);
  Json res;
  res["h"] = format_poly(cover->h());
  res["genus"] = genus;
  res["infinity"] = {{"places", inf.places},
                     {"ramification_index", inf.ramification_index},
                     {"totally_ramified", inf.totally_ramified}};
  Json audits = Json::array();
  for (unsigned m : ms) {
    const Field big_field = extension_for_audit(k, m, cfg);
    PointAudit au = audit_superelliptic(*cover, m, cfg, {req.exclude_branch_fibers});
    Json aj = audit_json(k, au, cfg);
    std::map<std::uint32_t, std::uint64_t> ram;
    for (const auto& b : au.branch_points) ++ram[au.fiber_at(b)];
    aj["branch_fiber_histogram"] = histogram_json(ram);
    const std::uint64_t qm = au.base_order;
    const IntInterval w = singular_weil_interval(BigInt(qm), BigInt(genus));
    aj["weil_interval"] = {big(w.lo), big(w.hi)};
    aj["within_weil_interval"] = BigInt(au.total_points()) >= w.lo && BigInt(au.total_points()) <= w.hi;
    if (a) {
      Embedding emb(k, big_field, cfg);
      aj["fiber_at_0"] = au.fiber_at(ProjPoint::finite(big_field.zero()));
      aj["fiber_at_a"] = au.fiber_at(ProjPoint::finite(emb(*a)));
    }
    audits.push_back(aj);
  }
  res["audits"] = audits;
  if (a) {
    const bool gamma_power = nth_power_solution_count(k, gamma, req.n) > 0;
    res["family_prediction"] = {
        {"gamma_is_nth_power", gamma_power},
        {"genus", (req.n - 1) * (req.q - 3) / 2},
        {"surjective_not_injective", gamma_power},
        {"injective_not_surjective", !gamma_power}};
  } else {
    res["family_prediction"] = nullptr;
  }
  return envelope("superelliptic", inputs, res, cfg);
}

Json groups_report(const GroupsRequest& req, const Config& cfg) {
  ParsedGroups g = build_groups(req.spec_text, cfg);
  Json inputs{{"spec", req.spec_text}};
  auto gens_json = [](const PermGroup& grp) {
    Json a = Json::array();
    for (const auto& p : grp.generators()) a.push_back(p.to_cycles());
    return a;
  };
  auto orbit_json = [](const PermGroup& grp) {
    return Json(orbits(grp, Action::Points));
  };
  Json res;
  res["degree"] = g.a.degree();
  res["A"] = {{"order", std::to_string(g.a.order())},
              {"generators", gens_json(g.a)},
              {"transitive", g.a.is_transitive()},
              {"orbits", orbit_json(g.a)}};
  res["G"] = {{"order", std::to_string(g.g.order())},
              {"generators", gens_json(g.g)},
              {"transitive", g.g.is_transitive()},
              {"orbits", orbit_json(g.g)}};
  res["a"] = g.rep.to_cycles();
  const CosetSpec spec = CosetSpec::make(g.a, g.g, g.rep);
  res["index"] = spec.index();
  auto fpi = [](const FixedPointIdentity& f) {
    return Json{{"lhs", f.lhs}, {"rhs", rational_text(f.rhs)}, {"holds", f.holds()}};
  };
  res["fixed_point_identity"] = {
      {"points", fpi(fixed_point_identity(spec, Action::Points))},
      {"ordered_pairs", fpi(fixed_point_identity(spec, Action::OrderedPairs))}};
  if (g.g.is_transitive()) {
    const ExceptionalityConditions c = exceptionality_conditions(spec);
    res["exceptionality_conditions"] = {{"applicable", true},
                                        {"diagonal_only", c.diagonal_only},
                                        {"unique_fixed_point", c.unique_fixed},
                                        {"at_most_one_fixed_point", c.at_most_one},
                                        {"at_least_one_fixed_point", c.at_least_one},
                                        {"qualifying_elements", c.qualifying},
                                        {"agree", c.agree()}};
  } else {
    res["exceptionality_conditions"] = {{"applicable", false},
                                        {"reason", "G is not transitive"}};
  }
  res["cycle_type_histogram"] = cycle_hist_json(cycle_type_histogram(spec));
  if (g.d) {
    res["decomposition"] = {{"D_order", std::to_string(g.d->order())},
                            {"I_order", std::to_string(g.i->order())},
                            {"common_orbits", common_orbit_count(*g.d, *g.i)}};
  } else {
    res["decomposition"] = nullptr;
  }
  return envelope("groups", inputs, res, cfg);
}

Json bounds_report(const BoundsRequest& req, const Config& cfg) {
  auto parse_big = [](const std::optional<std::string>& s, const char* what) -> std::optional<BigInt> {
    if (!s) return std::nullopt;
    if (s->empty() || s->find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::InvalidArgument, std::string(what) + " must be a natural number");
    return BigInt(*s);
  };
  const auto g_order = parse_big(req.g_order, "#G");
  const auto u_size = parse_big(req.u_size, "#U");
  const auto q = parse_big(req.q, "q");
  const auto pa = parse_big(req.pa, "p_a");
  Json inputs{{"n", req.n},
              {"gx", req.gx},
              {"gy", req.gy},
              {"g_order", req.g_order ? Json(*req.g_order) : Json(nullptr)},
              {"u_size", req.u_size ? Json(*req.u_size) : Json(nullptr)},
              {"q", req.q ? Json(*req.q) : Json(nullptr)},
              {"pa", req.pa ? Json(*req.pa) : Json(nullptr)},
              {"castelnuovo", req.castelnuovo ? Json(*req.castelnuovo) : Json(nullptr)}};
  const ThresholdReport r = threshold_report(req.n, req.gx, req.gy, g_order, u_size);
  Json res;
  res["injectivity_A1"] = thresholds_json(r.injectivity.a1);
  res["injectivity_2_5"] = thresholds_json(r.injectivity.t25);
  res["surjectivity_A2"] = thresholds_json(r.surjectivity);
  res["genus_upper"] = big(r.genus_upper);
  res["chebotarev_min_k"] = big(r.chebotarev_min_k);
  res["ramification_bound"] = big(r.ramification_bound);
  if (q) {
    const Applicability ap = theorem_applicability(req.n, req.gx, *q);
    res["applicability"] = {{"injectivity_A1", ap.a1},
                            {"injectivity_2_5", ap.t25},
                            {"surjectivity_A2", ap.a2}};
    if (pa) {
      const IntInterval w = singular_weil_interval(*q, *pa);
      res["weil_interval"] = {big(w.lo), big(w.hi)};
    } else {
      res["weil_interval"] = nullptr;
    }
  } else {
    if (pa) throw Error(Errc::InvalidArgument, "p_a needs q");
    res["applicability"] = nullptr;
    res["weil_interval"] = nullptr;
  }
  if (req.castelnuovo) {
    const auto& c = *req.castelnuovo;
    if (c.size() != 4) throw Error(Errc::InvalidArgument, "castelnuovo needs d1,d2,g1,g2");
    res["castelnuovo"] = big(castelnuovo_bound(c[0], c[1], c[2], c[3]));
  } else {
    res["castelnuovo"] = nullptr;
  }
  (void)cfg;
  return envelope("bounds", inputs, res, cfg);
}

Json examples_report(const Config& cfg) {
  Json claims = Json::array();
  bool all = true;
  auto claim = [&](const std::string& ex, const std::string& what, Json expected, Json observed) {
    const bool ok = expected == observed;
    all = all && ok;
    claims.push_back({{"example", ex},
                      {"claim", what},
                      {"expected", expected},
                      {"observed", observed},
                      {"holds", ok}});
  };

  {  // superelliptic nonvanishing family, q = 13, n = 3, a = 8
    const Field k = Field::of_order(13, cfg);
    const Elem a = k.from_int(8);
    for (int g : {1, 2}) {
      const auto c = SuperellipticCover::nonvanishing_family(k, 3, a, k.from_int(g));
      const PointAudit au = audit_superelliptic(c, 1, cfg);
      const std::string tag = "superelliptic q=13 n=3 a=8 gamma=" + std::to_string(g);
      claim(tag, "genus (n-1)(q-3)/2", 10, superelliptic_genus(c));
      claim(tag, "surjective", g == 1, au.surjective);
      claim(tag, "injective", g == 2, au.injective);
      bool total = true;
      for (Elem x : k.elements())
        if (x.code != 0 && x != a && au.fiber_sizes[x.code] != 1) total = false;
      total = total && au.fiber_at(ProjPoint::infinity()) == 1 &&
              superelliptic_infinity(c).totally_ramified;
      claim(tag, "fibers of size 1 away from 0 and a (incl. infinity)", true, total);
      claim(tag, "fibers over 0 and a", g == 1 ? Json{3, 3} : Json{0, 0},
            Json{au.fiber_sizes[0], au.fiber_sizes[a.code]});
    }
  }
  {  // degree-5 bijective, non-exceptional
    struct P {
      std::uint64_t q;
      int a, b;
    };
    for (P pr : {P{17, 10, 3}, P{29, 13, 4}}) {
      const Field k = Field::of_order(pr.q, cfg);
      const RationalMap f = quintic_map(k, k.from_int(pr.a), k.from_int(pr.b));
      const std::string tag = "(x^5-" + std::to_string(pr.a) + "x)/(x^4-" + std::to_string(pr.b) +
                              ") over F_" + std::to_string(pr.q);
      claim(tag, "bijective on P^1(F_q)", true, audit_rational_map(f, 1, cfg).bijective);
      claim(tag, "exceptional", false, decide_exceptional(f, cfg).exceptional);
    }
  }
  {  // isogeny-induced quintic over F_13, i = 5, b = 2
    const Field k = Field::of_order(13, cfg);
    const RationalMap f = isogeny_quintic_map(k, k.from_int(5), k.from_int(2));
    const std::string tag = "(x^5-8x)/(x^4-2) over F_13";
    const ExceptionalityReport r = decide_exceptional(f, cfg);
    claim(tag, "exceptional", true, r.exceptional);
    claim(tag, "bijective for m = 1", true, audit_rational_map(f, 1, cfg).bijective);
    claim(tag, "bijective for m = 3", true, audit_rational_map(f, 3, cfg).bijective);
    const PointAudit a2 = audit_rational_map(f, 2, cfg);
    claims.push_back({{"example", tag},
                      {"claim", "behaviour for m = 2 (reported only)"},
                      {"expected", nullptr},
                      {"observed", {{"injective", a2.injective}, {"surjective", a2.surjective}}},
                      {"holds", nullptr}});
    claims.back()["component_definition_lcm"] = r.component_definition_lcm;
  }
  Json res{{"claims", claims}, {"all_claims_hold", all}};
  return envelope("examples", Json::object(), res, cfg);
}

}  // namespace exccover
