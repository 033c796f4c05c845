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

#include <nlohmann/json.hpp>
#include <string>

#include "exccover.h"

using nlohmann::json;

namespace {

struct Ctx {
  exc_context* c = nullptr;
  explicit Ctx(uint64_t seed = 1) { REQUIRE(exc_context_create(seed, &c) == EXC_OK); }
  ~Ctx() { exc_context_destroy(c); }
};

json take(char* s) {
  json j = json::parse(s);
  exc_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(exc_status_name(EXC_OK)) == "Ok");
  CHECK(std::string(exc_status_name(EXC_E_CAP_EXCEEDED)) == "CapExceeded");
  CHECK(std::string(exc_status_name(EXC_E_PARSE)) == "ParseError");
  CHECK(std::string(exc_version()).size() > 0);
}

TEST_CASE("null handles") {
  exc_field* f = nullptr;
  CHECK(exc_field_create(nullptr, 5, &f) == EXC_E_NULL_HANDLE);
  CHECK(exc_context_create(1, nullptr) == EXC_E_NULL_HANDLE);
  Ctx ctx;
  CHECK(exc_field_create(ctx.c, 5, nullptr) == EXC_E_NULL_HANDLE);
  exc_context_destroy(nullptr);
  exc_field_destroy(nullptr);
  exc_map_destroy(nullptr);
  exc_string_free(nullptr);
}

TEST_CASE("fields and maps") {
  Ctx ctx;
  exc_field* f = nullptr;
  CHECK(exc_field_create(ctx.c, 12, &f) == EXC_E_NOT_PRIME_POWER);
  CHECK(std::string(exc_last_error(ctx.c)).size() > 0);
  REQUIRE(exc_field_create(ctx.c, 17, &f) == EXC_OK);
  CHECK(exc_field_order(f) == 17);

  exc_map* m = nullptr;
  REQUIRE(exc_map_create(ctx.c, f, "x^5-10*x", "x^4-3", &m) == EXC_OK);
  CHECK(exc_map_degree(m) == 5);
  int bij = -1, exc = -1;
  unsigned k = 0;
  CHECK(exc_map_audit(ctx.c, m, 1, &bij) == EXC_OK);
  CHECK(bij == 1);
  CHECK(exc_map_is_exceptional(ctx.c, m, &exc, &k) == EXC_OK);
  CHECK(exc == 0);
  CHECK(k == 1);

  exc_map* bad = nullptr;
  CHECK(exc_map_create(ctx.c, f, "x^^2", "1", &bad) == EXC_E_PARSE);
  CHECK(exc_last_error_offset(ctx.c) == 2);
  CHECK(bad == nullptr);
  CHECK(exc_map_create(ctx.c, f, "x^17", "1", &bad) == EXC_E_NOT_SEPARABLE);
  CHECK(exc_map_create(ctx.c, f, "x", "0", &bad) == EXC_E_INVALID_ARGUMENT);

  char* s = nullptr;
  REQUIRE(exc_poly_normalize(ctx.c, f, "x^5-10*x", &s) == EXC_OK);
  CHECK(std::string(s) == "x^5 + 7*x");
  exc_string_free(s);

  CHECK(exc_context_set_enum_cap(ctx.c, 0) == EXC_E_INVALID_ARGUMENT);
  REQUIRE(exc_context_set_enum_cap(ctx.c, 100) == EXC_OK);
  CHECK(exc_map_audit(ctx.c, m, 2, &bij) == EXC_E_CAP_EXCEEDED);
  exc_map_destroy(m);
  exc_field_destroy(f);
}

TEST_CASE("reports") {
  Ctx ctx(42);
  char* s = nullptr;
  const unsigned ms[] = {1};
  REQUIRE(exc_report_analyze(ctx.c, 17, "x^5-10*x", "x^4-3", ms, 1, nullptr, 0, &s) == EXC_OK);
  json a = take(s);
  CHECK(a["command"] == "analyze");
  CHECK(a["seed"] == "42");
  CHECK(a["results"]["exceptionality"]["exceptional"] == false);
  CHECK(a["results"]["audits"][0]["bijective"] == true);

  REQUIRE(exc_report_superelliptic(ctx.c, 13, 3, "8", "1", nullptr, ms, 1, 0, &s) == EXC_OK);
  json se = take(s);
  CHECK(se["results"]["genus"] == 10);
  CHECK(se["results"]["audits"][0]["surjective"] == true);
  CHECK(se["results"]["audits"][0]["injective"] == false);

  REQUIRE(exc_report_bounds(ctx.c, 5, 0, 0, nullptr, nullptr, nullptr, nullptr, nullptr, &s) ==
          EXC_OK);
  json b = take(s);
  CHECK(b["results"]["injectivity_A1"]["min_q"] == "2501");
  CHECK(b["results"]["injectivity_2_5"]["min_q"] == "362");
  CHECK(b["results"]["surjectivity_A2"]["min_q"] == "3240000");
  CHECK(exc_report_bounds(ctx.c, 5, 0, 0, nullptr, nullptr, "2500", nullptr, nullptr, &s) ==
        EXC_E_NOT_PRIME_POWER);

  REQUIRE(exc_report_groups(ctx.c, "[A]\n(0 1 2)\n(0 1)\n[G]\n(0 1 2)\n[a]\n(0 1)\n", &s) == EXC_OK);
  json g = take(s);
  CHECK(g["results"]["exceptionality_conditions"]["agree"] == true);
  CHECK(exc_report_groups(ctx.c, "[A]\n(0 1 2)\n[G]\n(0 1)\n[a]\n()\n", &s) == EXC_E_NOT_SUBGROUP);

  REQUIRE(exc_report_examples(ctx.c, &s) == EXC_OK);
  CHECK(take(s)["results"]["all_claims_hold"] == true);
}

TEST_CASE("reports are byte-stable") {
  auto run = [](uint64_t seed) {
    Ctx ctx(seed);
    char* s = nullptr;
    REQUIRE(exc_report_analyze(ctx.c, 13, "x^5-8*x", "x^4-2", nullptr, 0, nullptr, 0, &s) ==
            EXC_OK);
    std::string out(s);
    exc_string_free(s);
    return out;
  };
  const std::string a = run(7), b = run(7);
  CHECK(a == b);
  CHECK(json::parse(a).dump(2) == a);
}
