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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EXCCOVER_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const char* name) { return std::string(EXCCOVER_DATA) + "/" + name; }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("analyze --p 17 --num 'x^5-10*x' --den 'x^4-3' --m 1").code == 0);
  CHECK(run("analyze --q 17 --num 'x^^2'").code == 1);
  CHECK(run("analyze --q 12 --num 'x^3'").code == 1);
  CHECK(run("--cap 100 analyze --q 101 --num 'x^5' --m 3").code == 2);
  CHECK(run("analyze --q 101 --num 'x^5' --m 3 --cap 100").code == 2);
  CHECK(run("nonsense").code == 1);
  CHECK(run("analyze").code == 1);
  CHECK(run("groups /nonexistent/file").code == 1);
  CHECK(run("bounds --n 5 --gx 0 --q 2500").code == 1);
  CHECK(run("examples").code == 0);
}

TEST_CASE("json envelope") {
  const Run r = run("--json --seed 99 bounds --n 5 --gx 0");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "bounds");
  CHECK(j["seed"] == "99");
  CHECK(j.contains("version"));
  CHECK(j["inputs"]["n"] == 5);
  CHECK(j["results"]["injectivity_A1"]["bound"] == "50");
  CHECK(j["results"]["injectivity_A1"]["min_q"] == "2501");
  CHECK(j["results"]["injectivity_2_5"]["bound"] == "19");
  CHECK(j["results"]["injectivity_2_5"]["min_q"] == "362");
  CHECK(j["results"]["surjectivity_A2"]["bound"] == "1800");
  CHECK(j["results"]["surjectivity_A2"]["min_q"] == "3240000");
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("identical argv and seed give identical bytes") {
  const std::vector<std::string> cases{
      "--json analyze --q 13 --num 'x^5-8*x' --den 'x^4-2'",
        "--json analyze --p 3 --k 2 --num 'x^3+g*x' --m 1,2",
        "--json --seed 5 superelliptic --q 13 --n 3 --a 8 --gamma 2",
        "--json superelliptic --q 11 --n 2 --h 'x^3+x+1' --m 1,2",
        "--json groups " + data("s4_dec.grp"),
        "--json bounds --n 4 --gx 1 --gy 0 --g-order 24 --u-size 6 --q 10007 --pa 3 "
        "--castelnuovo 2,3,1,0",
      "--json examples"};
  for (const auto& args : cases) {
    CAPTURE(args);
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::accept(a.out));
  }
}

TEST_CASE("text mode") {
  const Run r = run("analyze --q 17 --num 'x^5-10*x' --den 'x^4-3' --m 1");
  CHECK(r.out.find("exceptional: no") != std::string::npos);
  CHECK(r.out.find("bijective yes") != std::string::npos);
  CHECK(r.out.find("time:") != std::string::npos);
  const Run g = run("groups " + data("s3_a3.grp"));
  CHECK(g.code == 0);
  CHECK(g.out.find("agree: yes") != std::string::npos);
}
