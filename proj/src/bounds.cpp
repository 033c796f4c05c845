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

#include "bounds.hpp"

#include <cmath>
#include <limits>

#include "error.hpp"

namespace exccover {

namespace {

BigInt ceil_half(const BigInt& v) {
  // floor division rounds toward zero in cpp_int; adjust for positive odd.
  BigInt h = v / 2;
  if (v > 0 && v % 2 != 0) ++h;
  return h;
}

BigInt powm(BigInt b, BigInt e, const BigInt& m) {
  BigInt r = 1;
  b %= m;
  while (e > 0) {
    if ((e & 1) != 0) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

BigInt iroot(const BigInt& v, unsigned k) {
  if (v < 2) return v;
  BigInt lo = 1, hi = BigInt(1) << (msb(v) / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (pow(mid, k) <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

bool is_prime64(std::uint64_t n) {
  if (n < 2) return false;
  static const std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto b : bases) {
    std::uint64_t x = 1, e = d, base = b;
    while (e) {
      if (e & 1) x = mulmod64(x, base, n);
      base = mulmod64(base, base, n);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (unsigned r = 1; r < s && comp; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

// r^k == q, for q < 2^64.
bool exact_root64(std::uint64_t q, unsigned k, std::uint64_t& r) {
  const auto est = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(q), 1.0 / k)));
  for (std::uint64_t c = est > 0 ? est - 1 : 0; c <= est + 1; ++c) {
    unsigned __int128 v = 1;
    for (unsigned i = 0; i < k && v <= q; ++i) v *= c;
    if (v == q) {
      r = c;
      return true;
    }
  }
  return false;
}

void require_prime_power(const BigInt& q) {
  if (!is_prime_power(q))
    throw Error(Errc::NotPrimePower, q.str() + " is not a prime power");
}

Threshold make_threshold(BigInt bound, bool strict) {
  Threshold t;
  t.strict = strict;
  if (bound < 0) bound = -1;  // every q >= 1 satisfies sqrt(q) > B
  t.bound = bound;
  if (bound < 0)
    t.min_q = 1;
  else
    t.min_q = BigInt(bound * bound) + (strict ? 1 : 0);
  if (t.min_q < 1) t.min_q = 1;
  t.min_prime_power = smallest_prime_power_at_least(t.min_q);
  return t;
}

}  // namespace

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw Error(Errc::InvalidArgument, "square root of a negative integer");
  return boost::multiprecision::sqrt(v);
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned b : bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned b : bases) {
    BigInt x = powm(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (unsigned r = 1; r < s && comp; ++r) {
      x = x * x % n;
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

bool is_prime_power(const BigInt& q) {
  if (q < 2) return false;
  if (q <= std::numeric_limits<std::uint64_t>::max()) {
    const auto v = static_cast<std::uint64_t>(q);
    // The largest exponent k with q a perfect k-th power yields the prime.
    for (unsigned k = 63; k >= 1; --k) {
      std::uint64_t r;
      if (k == 1) return is_prime64(v);
      if ((std::uint64_t{1} << std::min(k, 63u)) > v) continue;
      if (exact_root64(v, k, r)) return is_prime64(r);
    }
  }
  for (unsigned k = msb(q) + 1; k >= 1; --k) {
    BigInt r = iroot(q, k);
    if (pow(r, k) == q) return is_probable_prime(r);
  }
  return false;
}

BigInt smallest_prime_power_at_least(const BigInt& v) {
  BigInt q = v < 2 ? BigInt(2) : v;
  while (!is_prime_power(q)) ++q;
  return q;
}

BigInt castelnuovo_bound(std::int64_t d1, std::int64_t d2, std::int64_t g1, std::int64_t g2) {
  if (d1 < 1 || d2 < 1 || g1 < 0 || g2 < 0)
    throw Error(Errc::InvalidArgument, "need d1, d2 >= 1 and g1, g2 >= 0");
  return BigInt(d1 - 1) * (d2 - 1) + BigInt(d1) * g1 + BigInt(d2) * g2;
}

IntInterval singular_weil_interval(const BigInt& q, const BigInt& pa) {
  require_prime_power(q);
  if (pa < 0) throw Error(Errc::InvalidArgument, "arithmetic genus must be >= 0");
  // 2 p_a sqrt(q) = sqrt(4 p_a^2 q); floor is exact for hi, and the
  // least L with (q + 1 - L)^2 <= 4 p_a^2 q is q + 1 - floor.
  const BigInt w = isqrt(4 * pa * pa * q);
  IntInterval r{q + 1 - w, q + 1 + w};
  if (r.lo < 0) r.lo = 0;
  return r;
}

bool Threshold::satisfied_by(const BigInt& q) const {
  if (bound < 0) return q >= 1;
  const BigInt b2 = bound * bound;
  return strict ? q > b2 : q >= b2;
}

namespace {

BigInt a1_bound(std::uint64_t n, std::uint64_t gx) {
  const BigInt N = n, G = gx;
  return 2 * N * N + 4 * N * G;
}

BigInt t25_bound(std::uint64_t n, std::uint64_t gx) {
  const BigInt N = n, G = gx;
  return 2 * (N - 2) * (N - 2) + 4 * (N - 1) * G + 1;
}

BigInt a2_bound(std::uint64_t n, std::uint64_t gx) {
  return factorial(n) * (3 * BigInt(gx) + 3 * BigInt(n));
}

void require_degree(std::uint64_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "n must be >= 2");
}

}  // namespace

InjectivityThresholds injectivity_thresholds(std::uint64_t n, std::uint64_t gx) {
  require_degree(n);
  return {make_threshold(a1_bound(n, gx), true), make_threshold(t25_bound(n, gx), true)};
}

Threshold surjectivity_threshold(std::uint64_t n, std::uint64_t gx) {
  require_degree(n);
  return make_threshold(a2_bound(n, gx), false);
}

BigInt galois_closure_genus_bound(std::uint64_t n, std::uint64_t gx, std::uint64_t gy,
                                  const std::optional<BigInt>& g_order) {
  if (n < 2) throw Error(Errc::InvalidArgument, "n must be >= 2");
  const BigInt nf = factorial(n);
  const BigInt N = n, GX = gx, GY = gy;
  if (g_order) {
    if (*g_order < 1 || nf % *g_order != 0)
      throw Error(Errc::InvalidOrder, "#G must divide n!");
    return 1 + ceil_half(*g_order * (GX - 1 - (N - 2) * (GY - 1)));
  }
  return 1 + ceil_half(nf * (GX + N - 3));
}

BigInt chebotarev_threshold(const BigInt& gv, const BigInt& g_order, const BigInt& u_size) {
  if (gv < 0 || g_order < 0 || u_size < 0)
    throw Error(Errc::InvalidArgument, "arguments must be >= 0");
  // sqrt(k) >= A + sqrt(B)  <=>  k >= A^2 + B + 2A sqrt(B).
  const BigInt A = 2 * gv, B = g_order * u_size;
  const BigInt s2 = 4 * A * A * B;
  BigInt c = isqrt(s2);
  if (c * c < s2) ++c;
  BigInt k = A * A + B + c;
  return k < 1 ? BigInt(1) : k;
}

Applicability theorem_applicability(std::uint64_t n, std::uint64_t gx, const BigInt& q) {
  require_prime_power(q);
  return threshold_predicates(n, gx, q);
}

Applicability threshold_predicates(std::uint64_t n, std::uint64_t gx, const BigInt& q) {
  require_degree(n);
  auto sq = [](const BigInt& b) { return BigInt(b * b); };
  Applicability a;
  a.a1 = q > sq(a1_bound(n, gx));
  a.t25 = q > sq(t25_bound(n, gx));
  a.a2 = q >= sq(a2_bound(n, gx));
  a.ramification_bound = 2 * BigInt(gx) + 2 * BigInt(n) - 2;
  return a;
}

ThresholdReport threshold_report(std::uint64_t n, std::uint64_t gx, std::uint64_t gy,
                                 const std::optional<BigInt>& g_order,
                                 const std::optional<BigInt>& u_size) {
  ThresholdReport r;
  r.n = n;
  r.gx = gx;
  r.gy = gy;
  r.g_order = g_order;
  r.u_size = u_size;
  r.injectivity = injectivity_thresholds(n, gx);
  r.surjectivity = surjectivity_threshold(n, gx);
  r.genus_upper = galois_closure_genus_bound(n, gx, gy, g_order);
  r.ramification_bound = 2 * BigInt(gx) + 2 * BigInt(n) - 2;
  BigInt gv = r.genus_upper < 0 ? BigInt(0) : r.genus_upper;
  r.chebotarev_min_k =
      chebotarev_threshold(gv, g_order.value_or(factorial(n)), u_size.value_or(r.ramification_bound));
  return r;
}

}  // namespace exccover
