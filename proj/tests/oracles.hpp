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

// Test-only reference computations, independent of the factorization code.
#ifndef EXCCOVER_TESTS_ORACLES_HPP
#define EXCCOVER_TESTS_ORACLES_HPP

#include <algorithm>
#include <random>
#include <unordered_map>
#include <vector>

#include "bpoly.hpp"
#include "gf.hpp"

namespace oracle {

using namespace exccover;

inline BPoly bpoly_from_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  // rows[i][j] is the coefficient of x^i y^j.
  std::vector<std::tuple<std::size_t, std::size_t, Elem>> t;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) t.emplace_back(i, j, f.from_int(rows[i][j]));
  return BPoly::from_terms(f, t);
}

inline BPoly random_bpoly(const Field& f, int dx, int dy, std::mt19937_64& rng) {
  std::vector<std::tuple<std::size_t, std::size_t, Elem>> t;
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j)
      t.emplace_back(i, j, Elem{static_cast<std::uint32_t>(rng() % f.order())});
  return BPoly::from_terms(f, t);
}

// Enumerates every normalized candidate divisor H of F with bidegree (a, b)
// and fewer coefficient slots than its cofactor; the first exact divisor
// splits F. Verified by multiplying back.
inline void brute_factor(const BPoly& F, std::vector<BPoly>& out) {
  if (F.is_constant()) return;
  const Field& k = F.field();
  const int dx = F.deg_x(), dy = F.deg_y();
  std::vector<std::pair<int, int>> shapes;
  for (int a = 0; a <= dx; ++a)
    for (int b = 0; b <= dy; ++b) {
      if ((a == 0 && b == 0) || (a == dx && b == dy)) continue;
      if ((a + 1) * (b + 1) > (dx - a + 1) * (dy - b + 1)) continue;
      shapes.emplace_back(a, b);
    }
  std::sort(shapes.begin(), shapes.end(), [](auto s, auto t) {
    return (s.first + 1) * (s.second + 1) < (t.first + 1) * (t.second + 1);
  });
  const std::uint64_t q = k.order();
  for (auto [a, b] : shapes) {
    // Leading slot (L, b) is one; slots (i, b) with i > L are zero.
    for (int L = 0; L <= a; ++L) {
      std::vector<std::pair<int, int>> free;
      for (int i = 0; i <= a; ++i)
        for (int j = 0; j < b; ++j) free.emplace_back(i, j);
      for (int i = 0; i < L; ++i) free.emplace_back(i, b);
      std::uint64_t total = 1;
      for (std::size_t s = 0; s < free.size(); ++s) total *= q;
      for (std::uint64_t n = 0; n < total; ++n) {
        std::vector<std::tuple<std::size_t, std::size_t, Elem>> t;
        t.emplace_back(L, b, k.one());
        std::uint64_t m = n;
        for (auto [i, j] : free) {
          t.emplace_back(i, j, Elem{static_cast<std::uint32_t>(m % q)});
          m /= q;
        }
        BPoly h = BPoly::from_terms(k, t);
        if (h.deg_x() != a || h.deg_y() != b) continue;
        auto cof = exact_div(F, h);
        if (!cof || !(h * *cof == F)) continue;
        brute_factor(h, out);
        brute_factor(*cof, out);
        return;
      }
    }
  }
  out.push_back(F.normalized());
}

inline std::vector<std::pair<BPoly, unsigned>> brute_factor_counted(const BPoly& F) {
  std::vector<BPoly> all;
  brute_factor(F, all);
  std::sort(all.begin(), all.end());
  std::vector<std::pair<BPoly, unsigned>> out;
  for (auto& h : all) {
    if (!out.empty() && out.back().first == h)
      ++out.back().second;
    else
      out.emplace_back(h, 1);
  }
  return out;
}

}  // namespace oracle

#endif
