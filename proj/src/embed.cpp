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

#include "factor.hpp"
#include "gf.hpp"
#include "upoly.hpp"

namespace exccover {

Embedding::Embedding(const Field& source, const Field& target, const Config& cfg)
    : source_(source), target_(target) {
  if (source.characteristic() != target.characteristic() ||
      target.degree() % source.degree() != 0)
    throw Error(Errc::NoEmbedding, "source degree does not divide target degree");
  if (source.degree() == 1) {
    basis_images_ = {target.one()};
    return;
  }
  std::vector<Elem> m;
  for (std::uint32_t c : source.modulus()) m.push_back(target.from_int(c));
  const auto rs = roots(UPoly(target, std::move(m)), cfg);
  if (rs.empty()) throw Error(Errc::NoEmbedding, "modulus has no root in target");
  Elem p = target.one();
  for (std::uint32_t i = 0; i < source.degree(); ++i) {
    basis_images_.push_back(p);
    p = target.mul(p, rs.front());
  }
}

}  // namespace exccover
