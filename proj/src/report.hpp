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

#ifndef EXCCOVER_REPORT_HPP
#define EXCCOVER_REPORT_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace exccover {

using Json = nlohmann::json;

struct AnalyzeRequest {
  std::uint64_t q = 0;
  std::string num, den = "1";
  std::vector<unsigned> m;  // empty: {1, 2, 3} within the enumeration cap
  std::optional<std::string> group_spec;  // text of a group-spec file
  bool exclude_branch_fibers = false;
};

struct SuperellipticRequest {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::string a, gamma;
  std::optional<std::string> h;  // overrides the nonvanishing family
  std::vector<unsigned> m;       // empty: {1}
  bool exclude_branch_fibers = false;
};

struct GroupsRequest {
  std::string spec_text;
};

struct BoundsRequest {
  std::uint64_t n = 2, gx = 0, gy = 0;
  std::optional<std::string> g_order, u_size, q, pa;
  std::optional<std::vector<std::int64_t>> castelnuovo;  // d1, d2, g1, g2
};

/// Each returns {command, inputs, results, version, seed}; throws Error.
Json analyze_report(const AnalyzeRequest& req, const Config& cfg);
Json superelliptic_report(const SuperellipticRequest& req, const Config& cfg);
Json groups_report(const GroupsRequest& req, const Config& cfg);
Json bounds_report(const BoundsRequest& req, const Config& cfg);
/// Replays the worked examples; results.all_claims_hold summarizes.
Json examples_report(const Config& cfg);

/// Key-sorted, two-space indented.
std::string dump_report(const Json& j);

}  // namespace exccover

#endif
