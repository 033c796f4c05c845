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

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace exccover {

namespace {

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

// p-th root of a polynomial whose exponents are all multiples of p.
UPoly upoly_proot(const UPoly& f) {
  const Field& k = f.field();
  const std::uint32_t p = k.characteristic();
  const std::uint64_t e = k.order() / p;
  std::vector<Elem> v(f.degree() / p + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.pow(f[i * p], e);
  return UPoly(k, std::move(v));
}

UPoly random_poly(const Field& k, int below_degree, std::mt19937_64& rng) {
  std::vector<Elem> v(below_degree);
  for (auto& c : v) c = Elem{static_cast<std::uint32_t>(rng() % k.order())};
  return UPoly(k, std::move(v));
}

}  // namespace

UPoly product(const UFactorization& cert) {
  UPoly r = UPoly::constant(cert.field, cert.unit);
  for (const auto& f : cert.factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  return r;
}

BPoly product(const BFactorization& cert) {
  BPoly r = BPoly::from_x(UPoly::constant(cert.field, cert.unit));
  for (const auto& f : cert.factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  return r;
}

std::vector<Factor<UPoly>> squarefree_decomposition(const UPoly& f) {
  std::vector<Factor<UPoly>> out;
  if (f.degree() <= 0) return out;
  const unsigned p = f.field().characteristic();
  const UPoly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& g : squarefree_decomposition(upoly_proot(f)))
      out.push_back({g.poly, g.multiplicity * p});
    return out;
  }
  UPoly c = gcd(f, fp);
  UPoly w = f / c;
  unsigned i = 1;
  while (!w.is_constant()) {
    UPoly y = gcd(w, c);
    UPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_constant())
    for (auto& g : squarefree_decomposition(upoly_proot(c.monic())))
      out.push_back({g.poly, g.multiplicity * p});
  return out;
}

std::vector<std::pair<UPoly, unsigned>> distinct_degree_factorization(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  const Field& k = f.field();
  UPoly g = f.monic();
  UPoly h = UPoly::x(k) % g;
  unsigned d = 0;
  while (g.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = powmod(h, k.order(), g);
    UPoly t = gcd(h - UPoly::x(k), g);
    if (t.degree() > 0) {
      out.emplace_back(t, d);
      g = g / t;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(g.degree()));
  return out;
}

std::vector<UPoly> equal_degree_factorization(const UPoly& f, unsigned d, std::mt19937_64& rng) {
  const Field& k = f.field();
  if (f.degree() <= static_cast<int>(d)) return {f.monic()};
  const std::uint64_t q = k.order();
  for (;;) {
    UPoly a = random_poly(k, f.degree(), rng);
    if (a.degree() <= 0) continue;
    UPoly b(k);
    if (q % 2 == 1) {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      UPoly t = a % f, acc = a % f;
      for (unsigned i = 1; i < d; ++i) {
        t = powmod(t, q, f);
        acc = mulmod(acc, t, f);
      }
      b = powmod(acc, (q - 1) / 2, f) - UPoly::constant(k, k.one());
    } else {
      // Absolute trace to F_2: sum of a^(2^i), i < d * log2(q).
      unsigned bits = 0;
      for (std::uint64_t t = q; t > 1; t >>= 1) ++bits;
      UPoly t = a % f;
      b = t;
      for (unsigned i = 1; i < d * bits; ++i) {
        t = mulmod(t, t, f);
        b += t;
      }
    }
    UPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factorization(g, d, rng);
      auto right = equal_degree_factorization(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

UFactorization factor_univariate(const UPoly& f, const Config& cfg) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "cannot factor the zero polynomial");
  UFactorization cert{f.field(), f.lead(), {}};
  std::mt19937_64 rng(cfg.seed);
  for (const auto& part : squarefree_decomposition(f.monic())) {
    for (const auto& [h, d] : distinct_degree_factorization(part.poly)) {
      for (auto& g : equal_degree_factorization(h, d, rng))
        cert.factors.push_back({g, part.multiplicity});
    }
  }
  std::sort(cert.factors.begin(), cert.factors.end(),
            [](const auto& a, const auto& b) { return upoly_less(a.poly, b.poly); });
  // Merge repeats (possible when the same factor comes from separate p-power layers).
  std::vector<Factor<UPoly>> merged;
  for (auto& fc : cert.factors) {
    if (!merged.empty() && merged.back().poly == fc.poly)
      merged.back().multiplicity += fc.multiplicity;
    else
      merged.push_back(fc);
  }
  cert.factors = std::move(merged);
  return cert;
}

bool is_irreducible(const UPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const UPoly g = f.monic();
  const UPoly x = UPoly::x(f.field());
  if (!(frobenius_power_x(g, n) - x % g).is_zero()) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) prime = false;
    if (!prime) continue;
    if (gcd(frobenius_power_x(g, n / l) - x, g).degree() > 0) return false;
  }
  return true;
}

std::vector<unsigned> factor_degrees(const UPoly& f) {
  std::vector<unsigned> out;
  for (const auto& [h, d] : distinct_degree_factorization(f.monic()))
    for (int i = 0; i < h.degree() / static_cast<int>(d); ++i) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> roots(const UPoly& f, const Config& cfg) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "roots of the zero polynomial");
  std::vector<Elem> out;
  if (f.degree() <= 0) return out;
  const Field& k = f.field();
  const UPoly m = f.monic();
  UPoly split = gcd(m, frobenius_power_x(m, 1) - UPoly::x(k));
  if (split.degree() <= 0) return out;
  std::mt19937_64 rng(cfg.seed);
  for (auto& lin : equal_degree_factorization(split, 1, rng)) out.push_back(k.neg(lin[0]));
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------------------------

namespace {

using Series = std::vector<UPoly>;  // coefficient of x^i, as polynomials in y

Series series_mul(const Series& a, const Series& b, std::size_t prec, const Field& k) {
  Series r(prec, UPoly(k));
  for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < prec; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::pair<Series, Series> lift_pair(const Series& target, const UPoly& a0, const UPoly& b0,
                                    std::size_t prec) {
  const Field& k = a0.field();
  const ExtGcd eg = ext_gcd(a0, b0);  // s a0 + t b0 = 1
  Series a(prec, UPoly(k)), b(prec, UPoly(k));
  a[0] = a0;
  b[0] = b0;
  for (std::size_t j = 1; j < prec; ++j) {
    UPoly e = j < target.size() ? target[j] : UPoly(k);
    for (std::size_t i = 1; i < j; ++i)
      if (!a[i].is_zero() && !b[j - i].is_zero()) e -= a[i] * b[j - i];
    if (e.is_zero()) continue;
    UPoly da = (eg.t * e) % a0;
    UPoly db = (e - da * b0) / a0;
    a[j] = std::move(da);
    b[j] = std::move(db);
  }
  return {std::move(a), std::move(b)};
}

std::vector<Series> lift_all(const Series& target, const std::vector<UPoly>& local,
                             std::size_t prec) {
  std::vector<Series> out;
  Series cur = target;
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    UPoly rest = UPoly::constant(local[0].field(), local[0].field().one());
    for (std::size_t j = i + 1; j < local.size(); ++j) rest = rest * local[j];
    auto [a, b] = lift_pair(cur, local[i], rest, prec);
    out.push_back(std::move(a));
    cur = std::move(b);
  }
  out.push_back(std::move(cur));
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool good_specialization(const BPoly& f, Elem x0) {
  if (f.lead_y().eval(x0).code == 0) return false;
  UPoly u = f.at_x(x0);
  UPoly du = u.derivative();
  if (du.is_zero()) return false;
  return gcd(u, du).degree() == 0;
}

std::optional<Elem> find_specialization(const BPoly& f) {
  for (Elem e : f.field().elements())
    if (good_specialization(f, e)) return e;
  return std::nullopt;
}

// f: gcd(f, df/dy) = 1, primitive in y, deg_y >= 2; x0 gives a squarefree
// specialization of full degree. Returns normalized irreducible factors.
std::vector<BPoly> hensel_factor(const BPoly& f, Elem x0, const Config& cfg) {
  const Field& k = f.field();
  const BPoly fs = f.shifted_x(x0);
  const std::size_t dx = static_cast<std::size_t>(std::max(fs.deg_x(), 0));
  const UPoly f0 = fs.at_x(k.zero());
  const UFactorization local = factor_univariate(f0, cfg);
  if (local.factors.size() <= 1) return {f.normalized()};

  const std::size_t prec = 2 * dx + 1;
  // Make fs monic in y over k[[x]]: multiply by the series inverse of lc_y.
  const UPoly lc = fs.lead_y();
  std::vector<Elem> inv(prec, k.zero());
  inv[0] = k.inv(lc[0]);
  for (std::size_t n = 1; n < prec; ++n) {
    Elem s = k.zero();
    for (std::size_t i = 1; i <= n; ++i) s = k.add(s, k.mul(lc[i], inv[n - i]));
    inv[n] = k.neg(k.mul(inv[0], s));
  }
  const auto cx = fs.x_coeffs();
  Series target(prec, UPoly(k));
  for (std::size_t n = 0; n < prec; ++n)
    for (std::size_t a = 0; a <= n; ++a)
      if (n - a < cx.size() && inv[a].code != 0) target[n] += cx[n - a].scaled(inv[a]);

  std::vector<UPoly> gs;
  for (const auto& fc : local.factors) gs.push_back(fc.poly);
  const std::vector<Series> lifted = lift_all(target, gs, prec);

  std::vector<std::size_t> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  BPoly cur = fs;
  std::vector<BPoly> found;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> comb(s);
    std::iota(comb.begin(), comb.end(), 0);
    const auto lcx = cur.lead_y().coeffs();
    const std::size_t cdx = static_cast<std::size_t>(cur.deg_x());
    do {
      Series prod(prec, UPoly(k));
      for (std::size_t i = 0; i < lcx.size() && i < prec; ++i)
        prod[i] = UPoly::constant(k, lcx[i]);
      for (std::size_t i : comb) prod = series_mul(prod, lifted[remaining[i]], prec, k);
      bool fits = true;
      for (std::size_t i = cdx + 1; i < prec; ++i)
        if (!prod[i].is_zero()) fits = false;
      if (!fits) continue;
      prod.resize(std::min(prec, cdx + 1), UPoly(k));
      BPoly h = primitive_part_y(BPoly::from_x_coeffs(k, prod));
      if (h.deg_y() <= 0) continue;
      auto q = exact_div(cur, h);
      if (!q) continue;
      found.push_back(h);
      cur = *q;
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (std::find(comb.begin(), comb.end(), i) == comb.end()) keep.push_back(remaining[i]);
      remaining = std::move(keep);
      hit = true;
      break;
    } while (next_combination(comb, remaining.size()));
    if (!hit) ++s;
  }
  if (!cur.is_constant()) found.push_back(cur);
  for (auto& h : found) h = h.shifted_x(k.neg(x0)).normalized();
  return found;
}

// Factors f (as in hensel_factor, minus the specialization requirement),
// moving to an extension field when the base field is too small.
std::vector<BPoly> squarefree_split(const BPoly& f, const Config& cfg) {
  if (f.deg_y() <= 1) return {f.normalized()};
  if (auto x0 = find_specialization(f)) return hensel_factor(f, *x0, cfg);

  const Field& k = f.field();
  for (std::uint32_t e = 2;; ++e) {
    const Field big = Field::make(k.characteristic(), k.degree() * e, cfg);
    const Embedding emb(k, big, cfg);
    const BPoly fe = f.mapped(emb);
    auto x0 = find_specialization(fe);
    if (!x0) continue;
    std::vector<BPoly> pieces = hensel_factor(fe, *x0, cfg);
    std::unordered_map<std::uint32_t, Elem> back;
    for (Elem a : k.elements()) back.emplace(emb(a).code, a);
    std::vector<bool> used(pieces.size(), false);
    std::vector<BPoly> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      BPoly orbit = pieces[i];
      BPoly img = pieces[i].coeff_pow(k.order()).normalized();
      while (!(img == pieces[i])) {
        for (std::size_t j = 0; j < pieces.size(); ++j)
          if (!used[j] && pieces[j] == img) {
            used[j] = true;
            break;
          }
        orbit = orbit * img;
        img = img.coeff_pow(k.order()).normalized();
      }
      orbit = orbit.normalized();
      std::vector<std::tuple<std::size_t, std::size_t, Elem>> terms;
      for (int a = 0; a <= orbit.deg_x(); ++a)
        for (int b = 0; b <= orbit.deg_y(); ++b) {
          Elem c = orbit.coeff(a, b);
          if (c.code == 0) continue;
          auto it = back.find(c.code);
          if (it == back.end())
            throw Error(Errc::InvalidArgument, "descended factor left the base field");
          terms.emplace_back(a, b, it->second);
        }
      out.push_back(BPoly::from_terms(k, terms));
    }
    return out;
  }
}

BPoly bpoly_proot(const BPoly& f) {
  const Field& k = f.field();
  const std::uint32_t p = k.characteristic();
  const std::uint64_t e = k.order() / p;
  std::vector<std::tuple<std::size_t, std::size_t, Elem>> terms;
  for (int i = 0; i <= f.deg_x(); i += p)
    for (int j = 0; j <= f.deg_y(); j += p) {
      Elem c = f.coeff(i, j);
      if (c.code != 0) terms.emplace_back(i / p, j / p, k.pow(c, e));
    }
  return BPoly::from_terms(k, terms);
}

// f primitive in both directions, nonconstant. Appends irreducible factors
// (possibly repeated) to out.
void collect_irreducibles(const BPoly& f, std::vector<BPoly>& out, const Config& cfg) {
  if (f.is_constant()) return;
  const BPoly fy = f.derivative_y(), fx = f.derivative_x();
  if (fy.is_zero() && fx.is_zero()) {
    collect_irreducibles(bpoly_proot(f), out, cfg);
    return;
  }
  std::optional<BPoly> split;
  if (!fy.is_zero()) {
    BPoly g = gcd(f, fy);
    if (g.is_constant()) {
      for (auto& h : squarefree_split(f, cfg)) out.push_back(h);
      return;
    }
    split = g;
  }
  if (!fx.is_zero()) {
    BPoly g = gcd(f, fx);
    if (g.is_constant()) {
      for (auto& h : squarefree_split(f.transposed(), cfg)) out.push_back(h.transposed().normalized());
      return;
    }
    if (!split) split = g;
  }
  auto rest = exact_div(f, *split);
  if (!rest) throw Error(Errc::InvalidArgument, "gcd does not divide its argument");
  collect_irreducibles(*split, out, cfg);
  collect_irreducibles(*rest, out, cfg);
}

}  // namespace

BFactorization factor_bivariate(const BPoly& f, const Config& cfg) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "cannot factor the zero polynomial");
  if (f.deg_x() > cfg.degree_cap || f.deg_y() > cfg.degree_cap)
    throw Error(Errc::DegreeCapExceeded, "bivariate degree exceeds cap");
  const Field& k = f.field();
  BFactorization cert{k, k.one(), {}};

  const UPoly cx = content_y(f);
  BPoly f1 = f;
  if (!cx.is_constant()) {
    auto ys = f.y_coeffs();
    for (auto& u : ys) u = u / cx;
    f1 = BPoly::from_y_coeffs(k, ys);
    for (auto& fc : factor_univariate(cx, cfg).factors)
      cert.factors.push_back({BPoly::from_x(fc.poly), fc.multiplicity});
  }
  const BPoly t1 = f1.transposed();
  const UPoly cy = content_y(t1);
  BPoly f2 = f1;
  if (!cy.is_constant()) {
    f2 = primitive_part_y(t1).transposed();
    for (auto& fc : factor_univariate(cy, cfg).factors)
      cert.factors.push_back({BPoly::from_y(fc.poly), fc.multiplicity});
  }
  if (!f2.is_constant()) {
    std::vector<BPoly> irr;
    collect_irreducibles(f2, irr, cfg);
    for (auto& h : irr) h = h.normalized();
    std::sort(irr.begin(), irr.end());
    irr.erase(std::unique(irr.begin(), irr.end()), irr.end());
    BPoly rest = f2;
    for (const auto& h : irr) {
      unsigned m = 0;
      while (auto q = exact_div(rest, h)) {
        rest = *q;
        ++m;
      }
      if (m == 0) throw Error(Errc::InvalidArgument, "spurious bivariate factor");
      cert.factors.push_back({h, m});
    }
  }
  std::sort(cert.factors.begin(), cert.factors.end(),
            [](const auto& a, const auto& b) { return a.poly < b.poly; });
  cert = BFactorization{k, k.one(), std::move(cert.factors)};
  const BPoly prod = product(cert);
  cert.unit = k.div(std::get<2>(f.leading_term()), std::get<2>(prod.leading_term()));
  return cert;
}

bool is_irreducible(const BPoly& f, const Config& cfg) {
  if (f.is_zero() || f.is_constant()) return false;
  auto cert = factor_bivariate(f, cfg);
  return cert.factors.size() == 1 && cert.factors[0].multiplicity == 1;
}

BFactorization factor_over_extension(const BPoly& f, unsigned m, const Config& cfg) {
  const Field& k = f.field();
  if (m == 1) return factor_bivariate(f, cfg);
  const Field big = Field::make(k.characteristic(), k.degree() * m, cfg);
  const Embedding emb(k, big, cfg);
  return factor_bivariate(f.mapped(emb), cfg);
}

std::vector<GeometricComponent> geometric_components(const BPoly& f, const Config& cfg) {
  const BFactorization cert = factor_bivariate(f, cfg);
  for (const auto& fc : cert.factors)
    if (fc.multiplicity > 1) throw Error(Errc::NotSquarefree, "input has a repeated factor");
  std::vector<GeometricComponent> out;
  for (const auto& fc : cert.factors) {
    const unsigned d = std::gcd(static_cast<unsigned>(fc.poly.deg_x()),
                                static_cast<unsigned>(fc.poly.deg_y()));
    unsigned c = 1;
    if (d > 1) {
      c = 0;
      for (const auto& piece : factor_over_extension(fc.poly, d, cfg).factors) c += piece.multiplicity;
    }
    out.push_back({fc.poly, c});
  }
  return out;
}

}  // namespace exccover
