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

#include "upoly.hpp"

#include <algorithm>

namespace exccover {

UPoly::UPoly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Elem e : c_)
    if (e.code >= field_.order())
      throw Error(Errc::InvalidArgument, "coefficient outside field");
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

UPoly UPoly::constant(const Field& f, Elem c) { return UPoly(f, {c}); }

UPoly UPoly::monomial(const Field& f, Elem c, std::size_t exponent) {
  std::vector<Elem> v(exponent + 1, f.zero());
  v[exponent] = c;
  return UPoly(f, std::move(v));
}

Elem UPoly::eval(Elem x) const noexcept {
  Elem r = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(field_);
  std::vector<Elem> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())), c_[i]);
  return UPoly(field_, std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty() || c_.back() == field_.one()) return *this;
  return scaled(field_.inv(c_.back()));
}

UPoly UPoly::scaled(Elem s) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
  return UPoly(field_, std::move(v));
}

UPoly UPoly::mapped(const Embedding& emb) const {
  require_same_field(field_, emb.source());
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = emb(c_[i]);
  return UPoly(emb.target(), std::move(v));
}

UPoly UPoly::coeff_pow(std::uint64_t e) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.pow(c_[i], e);
  return UPoly(field_, std::move(v));
}

UPoly UPoly::reversed() const {
  std::vector<Elem> v(c_.rbegin(), c_.rend());
  return UPoly(field_, std::move(v));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  require_same_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  require_same_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  const Field& f = a.field_;
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].code == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return UPoly(f, std::move(v));
}

UPoly operator-(const UPoly& a) {
  std::vector<Elem> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.neg(a.c_[i]);
  return UPoly(a.field_, std::move(v));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {UPoly(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> q(r.size() - db, f.zero());
  const Elem inv_lead = f.inv(bc.back());
  for (std::size_t i = r.size(); i-- > db;) {
    Elem c = r[i];
    if (c.code == 0) continue;
    c = f.mul(c, inv_lead);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  require_same_field(a.field(), b.field());
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const UPoly& a, const UPoly& b) {
  const Field& f = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(f, f.one()), s1(f);
  UPoly t0(f), t1 = UPoly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Elem li = f.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& mod) { return (a * b) % mod; }

UPoly powmod(UPoly base, std::uint64_t e, const UPoly& mod) {
  UPoly r = UPoly::constant(mod.field(), mod.field().one()) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) r = mulmod(r, base, mod);
    e >>= 1;
    if (e) base = mulmod(base, base, mod);
  }
  return r;
}

UPoly frobenius_power_x(const UPoly& f, std::uint64_t times) {
  UPoly h = UPoly::x(f.field()) % f;
  for (std::uint64_t i = 0; i < times; ++i) h = powmod(h, f.field().order(), f);
  return h;
}

UPoly compose(const UPoly& f, const UPoly& g) {
  UPoly r(f.field());
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    r = r * g + UPoly::constant(f.field(), f.coeffs()[i]);
  return r;
}

}  // namespace exccover
