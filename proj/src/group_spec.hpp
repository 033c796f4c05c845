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

#ifndef EXCCOVER_GROUP_SPEC_HPP
#define EXCCOVER_GROUP_SPEC_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "groups.hpp"

namespace exccover {

/// Plain-text group description:
///
///   # comment
///   [degree]
///   5
///   [A]
///   (0 1 2 3 4)
///   (1 2 4 3)
///   [G]
///   (0 1 2 3 4)
///   [a]
///   (1 2 4 3)
///
/// One generator per line in 0-based cycle notation. [degree] defaults to
/// one more than the largest point mentioned; [G] may be empty (trivial);
/// [a] holds exactly one permutation. Optional [D] and [I] describe a
/// decomposition/inertia pair (I defaults to trivial).
struct GroupSpecFile {
  std::uint32_t degree = 0;
  std::vector<Perm> a_gens, g_gens;
  Perm rep = Perm::identity(0);
  std::optional<std::vector<Perm>> d_gens, i_gens;
};

/// Throws ParseError carrying the byte offset into `text`.
GroupSpecFile parse_group_spec(std::string_view text);

}  // namespace exccover

#endif
