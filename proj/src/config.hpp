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

#ifndef EXCCOVER_CONFIG_HPP
#define EXCCOVER_CONFIG_HPP

#include <cstddef>
#include <cstdint>

namespace exccover {

/// Resource caps and the seed used by randomized splitting. Passed by value;
/// every operation reads it but never mutates it.
struct Config {
  std::uint64_t field_cap = std::uint64_t{1} << 31;  // max order of any field
  std::uint64_t enum_cap = std::uint64_t{1} << 22;   // max points enumerated
  int degree_cap = 16;                               // per-variable, bivariate
  std::size_t group_cap = 100000;                    // max materialized group
  std::uint64_t seed = 0x5eedULL;
};

inline constexpr const char* kVersion = "0.1.0";

}  // namespace exccover

#endif
