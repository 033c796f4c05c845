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

#ifndef EXCCOVER_FACTOR_HPP
#define EXCCOVER_FACTOR_HPP

#include <random>
#include <vector>

#include "bpoly.hpp"

namespace exccover {

template <class Poly>
struct Factor {
  Poly poly;
  unsigned multiplicity = 1;
};

/// input = unit * prod(factor^multiplicity). Factors are monic (univariate)
/// or lex-normalized (bivariate), irreducible over `field`, and sorted.
template <class Poly>
struct FactorCertificate {
  Field field;
  Elem unit;
  std::vector<Factor<Poly>> factors;
};

using UFactorization = FactorCertificate<UPoly>;
using BFactorization = FactorCertificate<BPoly>;

UPoly product(const UFactorization& cert);
BPoly product(const BFactorization& cert);

// --- univariate -----------------------------------------------------------

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with their multiplicities.
std::vector<Factor<UPoly>> squarefree_decomposition(const UPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial:
/// (product of its irreducible factors of degree d, d).
std::vector<std::pair<UPoly, unsigned>> distinct_degree_factorization(const UPoly& f);

/// Splits a monic squarefree f whose irreducible factors all have degree d.
std::vector<UPoly> equal_degree_factorization(const UPoly& f, unsigned d, std::mt19937_64& rng);

UFactorization factor_univariate(const UPoly& f, const Config& cfg = {});
bool is_irreducible(const UPoly& f);
/// Degrees of the irreducible factors of a squarefree f, sorted ascending.
std::vector<unsigned> factor_degrees(const UPoly& f);
/// Distinct roots in the coefficient field, sorted by code.
std::vector<Elem> roots(const UPoly& f, const Config& cfg = {});

// --- bivariate ------------------------------------------------------------

BFactorization factor_bivariate(const BPoly& f, const Config& cfg = {});
bool is_irreducible(const BPoly& f, const Config& cfg = {});

/// Embeds f into F_{Q^m} and factors it there.
BFactorization factor_over_extension(const BPoly& f, unsigned m, const Config& cfg = {});

struct GeometricComponent {
  BPoly factor;             // irreducible over the base field
  unsigned components = 1;  // absolutely irreducible pieces (c)
  bool absolutely_irreducible() const noexcept { return components == 1; }
};

/// For each irreducible factor G of a squarefree f, counts its absolutely
/// irreducible components by factoring over F_{Q^d}, d = gcd(deg_x G,
/// deg_y G) (every component is defined over F_{Q^c} with c | d).
std::vector<GeometricComponent> geometric_components(const BPoly& f, const Config& cfg = {});

}  // namespace exccover

#endif
