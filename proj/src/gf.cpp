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

#include "gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace exccover {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NoEmbedding: return "NoEmbedding";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::WildCase: return "WildCase";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint64_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
  if (q < 2)
    throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1)
    throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return {p, k};
}

namespace {

// Dense polynomials over F_p used only to select field moduli.
using PPoly = std::vector<std::uint64_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, std::uint64_t p) {
  ptrim(a);
  const std::size_t dm = m.size() - 1;
  std::uint64_t inv_lead = 1;
  {
    std::uint64_t base = m.back(), e = p - 2;
    while (e) {
      if (e & 1) inv_lead = inv_lead * base % p;
      base = base * base % p;
      e >>= 1;
    }
  }
  while (a.size() > dm) {
    std::uint64_t c = a.back() * inv_lead % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    ptrim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return pmod(std::move(c), m, p);
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& m, std::uint64_t p) {
  PPoly r{1};
  base = pmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    a = pmod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin: f of degree k is irreducible iff x^(p^k) = x mod f and
// gcd(x^(p^(k/l)) - x, f) = 1 for each prime l | k.
bool rabin_irreducible(const PPoly& f, std::uint64_t p) {
  const std::uint64_t k = f.size() - 1;
  auto frob_iter = [&](std::uint64_t times) {
    PPoly h{0, 1};
    for (std::uint64_t i = 0; i < times; ++i) h = ppowmod(h, p, f, p);
    return h;
  };
  auto minus_x = [&](PPoly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    ptrim(h);
    return h;
  };
  if (!minus_x(frob_iter(k)).empty() && k > 0) return false;
  for (std::uint64_t l : distinct_prime_factors(k)) {
    PPoly g = pgcd(f, minus_x(frob_iter(k / l)), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    PPoly f(k + 1, 0);
    std::uint64_t t = n;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (rabin_irreducible(f, p))
      return std::vector<std::uint32_t>(f.begin(), f.end());
  }
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
}

constexpr std::uint64_t kTableCap = std::uint64_t{1} << 21;

}  // namespace

namespace detail {

std::uint32_t FieldImpl::add_digits(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += static_cast<std::uint32_t>(s * ppow[i]);
    a /= p;
    b /= p;
  }
  return r;
}

std::uint32_t FieldImpl::sub_digits(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t da = a % p, db = b % p;
    std::uint32_t s = da >= db ? da - db : da + p - db;
    r += static_cast<std::uint32_t>(s * ppow[i]);
    a /= p;
    b /= p;
  }
  return r;
}

std::uint32_t FieldImpl::mul_generic(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t da[32], db[32], prod[64] = {};
  for (std::uint32_t i = 0; i < k; ++i) {
    da[i] = a % p;
    db[i] = b % p;
    a /= p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < k; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (std::uint32_t i = 2 * k - 2; i >= k; --i) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < k; ++j)
      prod[i - k + j] = (prod[i - k + j] + (p - c) * modulus[j]) % p;
  }
  std::uint64_t r = 0;
  for (std::uint32_t i = k; i-- > 0;) r = r * p + prod[i];
  return static_cast<std::uint32_t>(r);
}

}  // namespace detail

Field Field::make(std::uint32_t p, std::uint32_t k, const Config& cfg) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (q > cfg.field_cap / p)
      throw Error(Errc::CapExceeded, "field order " + std::to_string(p) + "^" +
                                         std::to_string(k) + " exceeds cap");
    q *= p;
  }
  if (q > cfg.field_cap || q > (std::uint64_t{1} << 32))
    throw Error(Errc::CapExceeded, "field order exceeds cap");

  auto impl = std::make_shared<detail::FieldImpl>();
  impl->p = p;
  impl->k = k;
  impl->q = q;
  impl->modulus = smallest_irreducible(p, k);
  impl->ppow.resize(k + 1);
  impl->ppow[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) impl->ppow[i] = impl->ppow[i - 1] * p;

  if (k >= 2 && q <= kTableCap) {
    // Find a primitive element by order test, then tabulate its powers.
    const auto primes = distinct_prime_factors(q - 1);
    auto gpow = [&](std::uint32_t a, std::uint64_t e) {
      std::uint32_t r = 1;
      while (e) {
        if (e & 1) r = impl->mul_generic(r, a);
        a = impl->mul_generic(a, a);
        e >>= 1;
      }
      return r;
    };
    std::uint32_t prim = 0;
    for (std::uint32_t c = 2; c < q; ++c) {
      bool ok = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t l) {
        return gpow(c, (q - 1) / l) != 1;
      });
      if (ok) {
        prim = c;
        break;
      }
    }
    impl->exp.resize(2 * (q - 1));
    impl->log.assign(q, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      impl->exp[i] = cur;
      impl->exp[i + q - 1] = cur;
      impl->log[cur] = static_cast<std::uint32_t>(i);
      cur = impl->mul_generic(cur, prim);
    }
  }
  return Field(std::move(impl));
}

Field Field::of_order(std::uint64_t q, const Config& cfg) {
  auto [p, k] = prime_power_decompose(q);
  if (q > cfg.field_cap) throw Error(Errc::CapExceeded, "field order exceeds cap");
  return make(static_cast<std::uint32_t>(p), k, cfg);
}

Elem Field::generator() const noexcept {
  if (impl_->k == 1) return zero();
  return Elem{impl_->p};
}

Elem Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(impl_->p);
  if (r < 0) r += impl_->p;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> residues) const {
  if (residues.size() > impl_->k)
    throw Error(Errc::InvalidArgument, "too many residues for field degree");
  std::uint64_t r = 0;
  for (std::size_t i = residues.size(); i-- > 0;) {
    if (residues[i] >= impl_->p)
      throw Error(Errc::InvalidArgument, "residue out of range");
    r = r * impl_->p + residues[i];
  }
  return Elem{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::coeffs(Elem e) const {
  std::vector<std::uint32_t> out(impl_->k);
  std::uint32_t c = e.code;
  for (auto& d : out) {
    d = c % impl_->p;
    c /= impl_->p;
  }
  return out;
}

Elem Field::at(std::uint64_t code) const {
  if (code >= impl_->q) throw Error(Errc::InvalidArgument, "element code out of range");
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (impl_->k == 1) {
    // Extended Euclid on residues.
    std::int64_t t = 0, nt = 1, r = impl_->p, nr = a.code;
    while (nr != 0) {
      std::int64_t qq = r / nr;
      t = std::exchange(nt, t - qq * nt);
      r = std::exchange(nr, r - qq * nr);
    }
    if (t < 0) t += impl_->p;
    return Elem{static_cast<std::uint32_t>(t)};
  }
  if (!impl_->exp.empty())
    return Elem{impl_->exp[(impl_->q - 1 - impl_->log[a.code]) % (impl_->q - 1)]};
  return pow(a, impl_->q - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  if (impl_->k >= 2 && !impl_->exp.empty()) {
    const std::uint64_t n = impl_->q - 1;
    auto idx = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(impl_->log[a.code]) * (e % n)) % n);
    return Elem{impl_->exp[idx]};
  }
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(Errc::MixedFields, "operands belong to different fields");
}

Fel Fel::operator+(const Fel& o) const {
  require_same_field(field_, o.field_);
  return Fel(field_, field_.add(e_, o.e_));
}
Fel Fel::operator-(const Fel& o) const {
  require_same_field(field_, o.field_);
  return Fel(field_, field_.sub(e_, o.e_));
}
Fel Fel::operator*(const Fel& o) const {
  require_same_field(field_, o.field_);
  return Fel(field_, field_.mul(e_, o.e_));
}
Fel Fel::operator/(const Fel& o) const {
  require_same_field(field_, o.field_);
  return Fel(field_, field_.div(e_, o.e_));
}

Elem Embedding::operator()(Elem e) const {
  if (source_.degree() == 1) return Elem{e.code};
  Elem r = target_.zero();
  auto digits = source_.coeffs(e);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    r = target_.add(r, target_.mul(target_.from_int(digits[i]), basis_images_[i]));
  }
  return r;
}

Fel embed(const Fel& e, const Field& target, const Config& cfg) {
  Embedding emb(e.field(), target, cfg);
  return Fel(target, emb(e.elem()));
}

std::uint64_t nth_power_solution_count(const Field& field, Elem c, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  if (c.code == 0) return 1;
  const std::uint64_t m = field.order() - 1;
  const std::uint64_t g = std::gcd(n, m);
  return field.pow(c, m / g) == field.one() ? g : 0;
}

}  // namespace exccover
