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

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "exccover.h"

using nlohmann::json;

namespace {

int exit_code(exc_status s) {
  if (s == EXC_OK) return 0;
  if (s == EXC_E_CAP_EXCEEDED || s == EXC_E_DEGREE_CAP_EXCEEDED) return 2;
  return 1;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

std::string yes_no(const json& v) {
  if (v.is_null()) return "n/a";
  return v.get<bool>() ? "yes" : "no";
}

std::string point_text(const json& p) {
  if (p.is_string()) return p.get<std::string>();
  if (p.size() == 1) return std::to_string(p[0].get<unsigned>());
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i].get<unsigned>());
  return s + "]";
}

std::string points_text(const json& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + point_text(ps[i]);
  return s + "}";
}

std::string type_text(const json& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i].get<unsigned>());
  return s + "]";
}

std::string hist_text(const json& h) {
  std::string s;
  for (const auto& e : h)
    s += (s.empty() ? "" : ", ") + std::to_string(e["fiber_size"].get<unsigned>()) + ":" +
         std::to_string(e["count"].get<std::uint64_t>());
  return "{" + s + "}";
}

void render_audit(std::ostream& os, const json& a) {
  os << "  m=" << a["m"] << ": injective " << yes_no(a["injective"]) << ", surjective "
     << yes_no(a["surjective"]) << ", bijective " << yes_no(a["bijective"])
     << "  (points " << a["total_points"].get<std::string>() << " over "
     << a["base_points"].get<std::string>() << ", fiber sizes " << hist_text(a["fiber_histogram"])
     << ")\n";
}

void render_analyze(std::ostream& os, const json& r) {
  const auto& m = r["map"];
  os << "map: (" << m["num"].get<std::string>() << ") / (" << m["den"].get<std::string>()
     << "), degree " << m["degree"] << "\n";
  if (m["normalization"]["applied"].get<bool>())
    os << "  normalized from (" << m["input_num"].get<std::string>() << ") / ("
       << m["input_den"].get<std::string>() << ") by y -> 1/(y - "
       << point_text(m["normalization"]["shift"]) << ")\n";
  const auto& e = r["exceptionality"];
  os << "exceptional: " << yes_no(e["exceptional"])
     << "  (component definition lcm " << e["component_definition_lcm"] << ")\n";
  os << "fiber product components (diagonal removed):\n";
  for (const auto& f : e["factors"]) {
    os << "  " << f["factor"].get<std::string>() << "  c=" << f["definition_degree"]
       << (f["absolutely_irreducible"].get<bool>() ? "  absolutely irreducible" : "")
       << (f["multiplicity"].get<unsigned>() > 1 ? "  mult " + f["multiplicity"].dump() : "");
    if (!f["projective_points"].is_null())
      os << "  points " << f["projective_points"].get<std::string>();
    os << "\n";
  }
  os << "point audits:\n";
  for (const auto& a : r["audits"]) render_audit(os, a);
  os << "branch points:\n";
  for (const auto& b : r["branch_points"])
    os << "  m=" << b["m"] << ": " << points_text(b["points"]) << "  (" << b["count"]
       << " <= " << b["bound"] << ")\n";
  os << "splitting census (non-branch points):\n";
  for (const auto& c : r["census"]) {
    os << "  m=" << c["m"] << ":";
    for (const auto& h : c["histogram"])
      os << " " << type_text(h["type"]) << ":" << h["count"];
    if (!c["prediction"].is_null())
      os << "  vs " << c["prediction"]["source"].get<std::string>() << ", TV distance "
         << c["prediction"]["total_variation"].get<std::string>();
    os << "\n";
  }
  const auto& v = r["validators"];
  os << "intersection property: "
     << (v["intersection"]["checked"].get<bool>()
             ? std::to_string(v["intersection"]["violations"].size()) + " violations"
             : "not checked")
     << "\n";
  os << "diagonal bound: "
     << (v["diagonal_bound"]["checked"].get<bool>()
             ? std::to_string(v["diagonal_bound"]["violations"].size()) + " violations"
             : "not checked (" + v["diagonal_bound"]["reason"].get<std::string>() + ")")
     << "\n";
  os << "exceptional => bijective for m coprime to lcm: " << yes_no(r["exceptional_implies_bijective"])
     << "\n";
}

void render_superelliptic(std::ostream& os, const json& r) {
  os << "h: " << r["h"].get<std::string>() << "\n";
  os << "genus: " << r["genus"] << "\n";
  os << "over infinity: " << r["infinity"]["places"] << " place(s), ramification index "
     << r["infinity"]["ramification_index"] << "\n";
  os << "point audits:\n";
  for (const auto& a : r["audits"]) {
    render_audit(os, a);
    os << "    branch fibers " << hist_text(a["branch_fiber_histogram"]);
    if (a.contains("fiber_at_0"))
      os << ", over 0: " << a["fiber_at_0"] << ", over a: " << a["fiber_at_a"];
    os << ", Weil interval [" << a["weil_interval"][0].get<std::string>() << ", "
       << a["weil_interval"][1].get<std::string>() << "]\n";
  }
  if (!r["family_prediction"].is_null()) {
    const auto& p = r["family_prediction"];
    os << "gamma is an n-th power: " << yes_no(p["gamma_is_nth_power"])
       << "; expected " << (p["surjective_not_injective"].get<bool>()
                                ? "surjective, not injective"
                                : "injective, not surjective")
       << "\n";
  }
}

void render_groups(std::ostream& os, const json& r) {
  os << "degree " << r["degree"] << ", |A| = " << r["A"]["order"].get<std::string>()
     << ", |G| = " << r["G"]["order"].get<std::string>() << ", [A:G] = " << r["index"]
     << ", a = " << r["a"].get<std::string>() << "\n";
  for (const char* act : {"points", "ordered_pairs"}) {
    const auto& f = r["fixed_point_identity"][act];
    os << "common orbits on " << act << ": " << f["lhs"] << " = mean fixed points "
       << f["rhs"].get<std::string>() << (f["holds"].get<bool>() ? "" : "  MISMATCH") << "\n";
  }
  const auto& c = r["exceptionality_conditions"];
  if (c["applicable"].get<bool>())
    os << "exceptionality conditions (diagonal only, unique fixed, <= 1 fixed, >= 1 fixed): " << yes_no(c["diagonal_only"]) << " " << yes_no(c["unique_fixed_point"])
       << " " << yes_no(c["at_most_one_fixed_point"]) << " " << yes_no(c["at_least_one_fixed_point"])
       << "  agree: " << yes_no(c["agree"]) << "\n";
  else
    os << "exceptionality conditions: not applicable (" << c["reason"].get<std::string>() << ")\n";
  os << "cycle types over aG:";
  for (const auto& h : r["cycle_type_histogram"])
    os << " " << type_text(h["type"]) << ":" << h["frequency"].get<std::string>();
  os << "\n";
  if (!r["decomposition"].is_null())
    os << "common orbits of D and I: " << r["decomposition"]["common_orbits"] << "\n";
}

void render_bounds(std::ostream& os, const json& r) {
  auto thr = [&](const char* name, const json& t) {
    os << name << ": B = " << t["bound"].get<std::string>() << ", least q "
       << t["min_q"].get<std::string>() << " (least prime power "
       << t["min_prime_power"].get<std::string>() << ")\n";
  };
  thr("injectivity, sqrt(q) > 2n^2 + 4n g_X", r["injectivity_A1"]);
  thr("injectivity, sqrt(q) > 2(n-2)^2 + 4(n-1) g_X + 1", r["injectivity_2_5"]);
  thr("surjectivity, sqrt(q) >= n!(3 g_X + 3n)", r["surjectivity_A2"]);
  os << "Galois closure genus <= " << r["genus_upper"].get<std::string>() << "\n";
  os << "Chebotarev field size >= " << r["chebotarev_min_k"].get<std::string>() << "\n";
  os << "ramified rational points <= " << r["ramification_bound"].get<std::string>() << "\n";
  if (!r["applicability"].is_null())
    os << "at this q: injectivity (general) " << yes_no(r["applicability"]["injectivity_A1"])
       << ", injectivity (sharp) " << yes_no(r["applicability"]["injectivity_2_5"]) << ", surjectivity "
       << yes_no(r["applicability"]["surjectivity_A2"]) << "\n";
  if (!r["weil_interval"].is_null())
    os << "point count interval: [" << r["weil_interval"][0].get<std::string>() << ", "
       << r["weil_interval"][1].get<std::string>() << "]\n";
  if (!r["castelnuovo"].is_null())
    os << "Castelnuovo bound: " << r["castelnuovo"].get<std::string>() << "\n";
}

void render_examples(std::ostream& os, const json& r) {
  for (const auto& c : r["claims"]) {
    const char* tag = c["holds"].is_null() ? "INFO" : (c["holds"].get<bool>() ? "OK  " : "FAIL");
    os << tag << " " << c["example"].get<std::string>() << ": " << c["claim"].get<std::string>()
       << " -> " << c["observed"].dump() << "\n";
  }
  os << (r["all_claims_hold"].get<bool>() ? "all claims hold" : "SOME CLAIMS FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exccover: exceptional covers over finite fields"};
  app.fallthrough();
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = 0x5eed;
  std::optional<std::uint64_t> cap;
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_option("--seed", seed, "RNG seed for randomized factoring");
  app.add_option("--cap", cap, "enumeration cap (points per audit)");
  app.set_version_flag("--version", std::string(exc_version()));

  std::uint64_t q = 0, p = 0;
  unsigned k = 1;
  std::string num, den = "1", group_file;
  std::vector<unsigned> ms;
  bool exclude = false;
  auto* analyze = app.add_subcommand("analyze", "exceptionality, audits, census, validators");
  auto* q_opt = analyze->add_option("--q", q, "field order");
  auto* p_opt = analyze->add_option("--p", p, "field characteristic (with --k)");
  analyze->add_option("--k", k, "extension degree over F_p")->needs(p_opt);
  q_opt->excludes(p_opt);
  analyze->add_option("--num", num, "numerator p(x)")->required();
  analyze->add_option("--den", den, "denominator r(x)");
  analyze->add_option("--m", ms, "extension degrees to audit")->delimiter(',');
  analyze->add_option("--group-spec", group_file, "group-spec file for the census prediction");
  analyze->add_flag("--exclude-branch-fibers", exclude, "judge only non-branch fibers");

  std::uint64_t sq = 0;
  unsigned sn = 0;
  std::string sa, sgamma = "1", sh;
  std::vector<unsigned> sms;
  bool sexclude = false;
  auto* super = app.add_subcommand("superelliptic", "y^n = gamma h(x) audits and genus");
  super->set_help_flag("--help", "print this help message and exit");
  super->add_option("--q", sq, "field order")->required();
  super->add_option("--n", sn, "exponent n")->required();
  auto* a_opt = super->add_option("--a", sa, "marked n-th power a (nonvanishing family)");
  auto* h_opt = super->add_option("--h", sh, "explicit squarefree h(x)");
  a_opt->excludes(h_opt);
  super->add_option("--gamma", sgamma, "gamma");
  super->add_option("--m", sms, "extension degrees to audit")->delimiter(',');
  super->add_flag("--exclude-branch-fibers", sexclude, "judge only non-branch fibers");

  std::string spec_file;
  auto* groups = app.add_subcommand("groups", "orbit and fixed-point checks on a spec file");
  groups->add_option("spec", spec_file, "group-spec file")->required();

  std::uint64_t bn = 2, bgx = 0, bgy = 0;
  std::string bgo, bus, bq, bpa;
  std::vector<std::int64_t> cast;
  auto* bounds = app.add_subcommand("bounds", "exact thresholds and bounds");
  bounds->add_option("--n", bn, "degree n")->required();
  bounds->add_option("--gx", bgx, "genus of X");
  bounds->add_option("--gy", bgy, "genus of Y");
  auto* go_opt = bounds->add_option("--g-order", bgo, "#G");
  auto* us_opt = bounds->add_option("--u-size", bus, "#U");
  auto* bq_opt = bounds->add_option("--q", bq, "field order to test");
  auto* pa_opt = bounds->add_option("--pa", bpa, "arithmetic genus for the point interval");
  auto* ca_opt = bounds->add_option("--castelnuovo", cast, "d1,d2,g1,g2")->delimiter(',')->expected(4);

  auto* examples = app.add_subcommand("examples", "replay the worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  exc_context* ctx = nullptr;
  if (exc_context_create(seed, &ctx) != EXC_OK) {
    std::cerr << "error: cannot create context\n";
    return 1;
  }
  if (cap && exc_context_set_enum_cap(ctx, *cap) != EXC_OK) {
    std::cerr << "error: " << exc_last_error(ctx) << "\n";
    exc_context_destroy(ctx);
    return 1;
  }

  char* out = nullptr;
  exc_status st = EXC_OK;
  std::string command;
  const auto t0 = std::chrono::steady_clock::now();
  if (analyze->parsed()) {
    command = "analyze";
    if (!*q_opt) {
      if (!*p_opt) {
        std::cerr << "error: analyze needs --q or --p\n";
        exc_context_destroy(ctx);
        return 1;
      }
      q = 1;
      for (unsigned i = 0; i < k; ++i) q *= p;
    }
    std::string spec;
    if (!group_file.empty() && !read_file(group_file, spec)) {
      std::cerr << "error: cannot read " << group_file << "\n";
      exc_context_destroy(ctx);
      return 1;
    }
    st = exc_report_analyze(ctx, q, num.c_str(), den.c_str(), ms.empty() ? nullptr : ms.data(),
                            ms.size(), group_file.empty() ? nullptr : spec.c_str(), exclude, &out);
  } else if (super->parsed()) {
    command = "superelliptic";
    if (!*a_opt && !*h_opt) {
      std::cerr << "error: superelliptic needs --a or --h\n";
      exc_context_destroy(ctx);
      return 1;
    }
    st = exc_report_superelliptic(ctx, sq, sn, *a_opt ? sa.c_str() : nullptr, sgamma.c_str(),
                                  *h_opt ? sh.c_str() : nullptr,
                                  sms.empty() ? nullptr : sms.data(), sms.size(), sexclude, &out);
  } else if (groups->parsed()) {
    command = "groups";
    std::string spec;
    if (!read_file(spec_file, spec)) {
      std::cerr << "error: cannot read " << spec_file << "\n";
      exc_context_destroy(ctx);
      return 1;
    }
    st = exc_report_groups(ctx, spec.c_str(), &out);
  } else if (bounds->parsed()) {
    command = "bounds";
    st = exc_report_bounds(ctx, bn, bgx, bgy, *go_opt ? bgo.c_str() : nullptr,
                           *us_opt ? bus.c_str() : nullptr, *bq_opt ? bq.c_str() : nullptr,
                           *pa_opt ? bpa.c_str() : nullptr, *ca_opt ? cast.data() : nullptr, &out);
  } else if (examples->parsed()) {
    command = "examples";
    st = exc_report_examples(ctx, &out);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (st != EXC_OK) {
    std::cerr << "error (" << exc_status_name(st) << "): " << exc_last_error(ctx) << "\n";
    exc_context_destroy(ctx);
    return exit_code(st);
  }
  if (as_json) {
    std::cout << out << "\n";
  } else {
    const json rep = json::parse(out);
    const json& r = rep["results"];
    if (command == "analyze") render_analyze(std::cout, r);
    if (command == "superelliptic") render_superelliptic(std::cout, r);
    if (command == "groups") render_groups(std::cout, r);
    if (command == "bounds") render_bounds(std::cout, r);
    if (command == "examples") render_examples(std::cout, r);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", secs);
    std::cout << "time: " << buf << " s\n";
  }
  exc_string_free(out);
  exc_context_destroy(ctx);
  return 0;
}
