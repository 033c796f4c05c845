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

#ifndef EXCCOVER_BOUNDS_HPP
#define EXCCOVER_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>

namespace exccover {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint64_t n);
/// Floor square root of a nonnegative integer.
BigInt isqrt(const BigInt& v);
/// Deterministic below 3.3e24 (fixed Miller-Rabin bases); strong
/// probable-prime test beyond.
bool is_probable_prime(const BigInt& n);
bool is_prime_power(const BigInt& q);
BigInt smallest_prime_power_at_least(const BigInt& v);

/// (d1 - 1)(d2 - 1) + d1 g1 + d2 g2.
BigInt castelnuovo_bound(std::int64_t d1, std::int64_t d2, std::int64_t g1, std::int64_t g2);

struct IntInterval {
  BigInt lo, hi;
};
/// Integers N with |N - (q + 1)| <= 2 p_a sqrt(q), clamped at 0.
IntInterval singular_weil_interval(const BigInt& q, const BigInt& pa);

struct Threshold {
  BigInt bound;                // B
  bool strict = true;          // sqrt(q) > B, otherwise sqrt(q) >= B
  BigInt min_q;                // least integer q satisfying the condition
  BigInt min_prime_power;      // least prime power doing so
  bool satisfied_by(const BigInt& q) const;
};

struct InjectivityThresholds {
  Threshold a1;   // sqrt(q) > 2n^2 + 4n g_X
  Threshold t25;  // sqrt(q) > 2(n-2)^2 + 4(n-1) g_X + 1
};
InjectivityThresholds injectivity_thresholds(std::uint64_t n, std::uint64_t gx);
/// sqrt(q) >= n! (3 g_X + 3n).
Threshold surjectivity_threshold(std::uint64_t n, std::uint64_t gx);

/// 1 + #G (g_X - 1 - (n-2)(g_Y - 1))/2, or 1 + n! (g_X + n - 3)/2 without
/// #G; halves round up. Throws InvalidOrder unless #G divides n!.
BigInt galois_closure_genus_bound(std::uint64_t n, std::uint64_t gx, std::uint64_t gy,
                                  const std::optional<BigInt>& g_order = std::nullopt);

/// Least #k >= 1 with sqrt(#k) >= 2 g_V + sqrt(#G #U).
BigInt chebotarev_threshold(const BigInt& gv, const BigInt& g_order, const BigInt& u_size);

struct Applicability {
  bool a1 = false, t25 = false, a2 = false;
  BigInt ramification_bound;  // 2 g_X + 2n - 2
};
/// The threshold predicates at any integer q >= 1 (boundary checks).
Applicability threshold_predicates(std::uint64_t n, std::uint64_t gx, const BigInt& q);
/// As threshold_predicates; throws NotPrimePower.
Applicability theorem_applicability(std::uint64_t n, std::uint64_t gx, const BigInt& q);

struct ThresholdReport {
  std::uint64_t n = 0, gx = 0, gy = 0;
  std::optional<BigInt> g_order, u_size;
  InjectivityThresholds injectivity;
  Threshold surjectivity;
  BigInt genus_upper;
  BigInt chebotarev_min_k;  // with g_V = genus_upper, #G (or n!), #U (or ramification bound)
  BigInt ramification_bound;
};
ThresholdReport threshold_report(std::uint64_t n, std::uint64_t gx, std::uint64_t gy = 0,
                                 const std::optional<BigInt>& g_order = std::nullopt,
                                 const std::optional<BigInt>& u_size = std::nullopt);

}  // namespace exccover

#endif
