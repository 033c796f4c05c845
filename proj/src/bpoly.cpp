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

#include "bpoly.hpp"

#include <algorithm>

namespace exccover {

BPoly::BPoly(Field f, std::size_t nx, std::size_t ny, std::vector<Elem> c)
    : field_(std::move(f)), nx_(nx), ny_(ny), c_(std::move(c)) {
  trim();
}

void BPoly::trim() {
  std::size_t mx = 0, my = 0;
  bool any = false;
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j)
      if (c_[i * ny_ + j].code != 0) {
        any = true;
        mx = std::max(mx, i + 1);
        my = std::max(my, j + 1);
      }
  if (!any) {
    nx_ = ny_ = 0;
    c_.clear();
    return;
  }
  if (mx == nx_ && my == ny_) return;
  std::vector<Elem> t(mx * my);
  for (std::size_t i = 0; i < mx; ++i)
    for (std::size_t j = 0; j < my; ++j) t[i * my + j] = c_[i * ny_ + j];
  nx_ = mx;
  ny_ = my;
  c_ = std::move(t);
}

BPoly BPoly::from_terms(const Field& f,
                        const std::vector<std::tuple<std::size_t, std::size_t, Elem>>& terms) {
  std::size_t nx = 0, ny = 0;
  for (auto& [i, j, c] : terms) {
    nx = std::max(nx, i + 1);
    ny = std::max(ny, j + 1);
  }
  std::vector<Elem> c(nx * ny, f.zero());
  for (auto& [i, j, e] : terms) c[i * ny + j] = f.add(c[i * ny + j], e);
  return BPoly(f, nx, ny, std::move(c));
}

BPoly BPoly::from_x(const UPoly& p) {
  const auto& pc = p.coeffs();
  return BPoly(p.field(), pc.size(), pc.empty() ? 0 : 1, pc);
}

BPoly BPoly::from_y(const UPoly& p) {
  const auto& pc = p.coeffs();
  return BPoly(p.field(), pc.empty() ? 0 : 1, pc.size(), pc);
}

BPoly BPoly::from_y_coeffs(const Field& f, const std::vector<UPoly>& cy) {
  std::size_t nx = 0;
  for (auto& u : cy) nx = std::max(nx, u.coeffs().size());
  const std::size_t ny = cy.size();
  std::vector<Elem> c(nx * ny, f.zero());
  for (std::size_t j = 0; j < ny; ++j) {
    require_same_field(f, cy[j].field());
    for (std::size_t i = 0; i < cy[j].coeffs().size(); ++i) c[i * ny + j] = cy[j].coeffs()[i];
  }
  return BPoly(f, nx, ny, std::move(c));
}

BPoly BPoly::from_x_coeffs(const Field& f, const std::vector<UPoly>& cx) {
  std::size_t ny = 0;
  for (auto& u : cx) ny = std::max(ny, u.coeffs().size());
  const std::size_t nx = cx.size();
  std::vector<Elem> c(nx * ny, f.zero());
  for (std::size_t i = 0; i < nx; ++i) {
    require_same_field(f, cx[i].field());
    for (std::size_t j = 0; j < cx[i].coeffs().size(); ++j) c[i * ny + j] = cx[i].coeffs()[j];
  }
  return BPoly(f, nx, ny, std::move(c));
}

int BPoly::total_degree() const noexcept {
  int best = -1;
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j)
      if (c_[i * ny_ + j].code != 0) best = std::max(best, static_cast<int>(i + j));
  return best;
}

std::vector<UPoly> BPoly::y_coeffs() const {
  std::vector<UPoly> out;
  out.reserve(ny_);
  for (std::size_t j = 0; j < ny_; ++j) {
    std::vector<Elem> v(nx_);
    for (std::size_t i = 0; i < nx_; ++i) v[i] = c_[i * ny_ + j];
    out.emplace_back(field_, std::move(v));
  }
  return out;
}

std::vector<UPoly> BPoly::x_coeffs() const {
  std::vector<UPoly> out;
  out.reserve(nx_);
  for (std::size_t i = 0; i < nx_; ++i)
    out.emplace_back(field_, std::vector<Elem>(c_.begin() + i * ny_, c_.begin() + (i + 1) * ny_));
  return out;
}

UPoly BPoly::lead_y() const {
  if (is_zero()) return UPoly(field_);
  std::vector<Elem> v(nx_);
  for (std::size_t i = 0; i < nx_; ++i) v[i] = c_[i * ny_ + ny_ - 1];
  return UPoly(field_, std::move(v));
}

Elem BPoly::eval(Elem x, Elem y) const noexcept {
  Elem r = field_.zero();
  for (std::size_t i = nx_; i-- > 0;) {
    Elem row = field_.zero();
    for (std::size_t j = ny_; j-- > 0;) row = field_.add(field_.mul(row, y), c_[i * ny_ + j]);
    r = field_.add(field_.mul(r, x), row);
  }
  return r;
}

UPoly BPoly::at_x(Elem x0) const {
  std::vector<Elem> v(ny_, field_.zero());
  Elem xp = field_.one();
  for (std::size_t i = 0; i < nx_; ++i) {
    for (std::size_t j = 0; j < ny_; ++j) v[j] = field_.add(v[j], field_.mul(xp, c_[i * ny_ + j]));
    xp = field_.mul(xp, x0);
  }
  return UPoly(field_, std::move(v));
}

UPoly BPoly::at_y(Elem y0) const { return transposed().at_x(y0); }

BPoly BPoly::transposed() const {
  std::vector<Elem> t(c_.size());
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j) t[j * nx_ + i] = c_[i * ny_ + j];
  return BPoly(field_, ny_, nx_, std::move(t));
}

BPoly BPoly::shifted_x(Elem a) const {
  // Horner in x over polynomial-in-y coefficients: sum_i C_i(y) (x + a)^i.
  const UPoly lin(field_, {a, field_.one()});
  auto cx = x_coeffs();
  BPoly r(field_);
  const BPoly xa = BPoly::from_x(lin);
  for (std::size_t i = cx.size(); i-- > 0;) r = r * xa + BPoly::from_y(cx[i]);
  return r;
}

BPoly BPoly::derivative_x() const {
  if (nx_ <= 1) return BPoly(field_);
  std::vector<Elem> d((nx_ - 1) * ny_);
  for (std::size_t i = 1; i < nx_; ++i) {
    Elem k = field_.from_int(static_cast<std::int64_t>(i % field_.characteristic()));
    for (std::size_t j = 0; j < ny_; ++j) d[(i - 1) * ny_ + j] = field_.mul(k, c_[i * ny_ + j]);
  }
  return BPoly(field_, nx_ - 1, ny_, std::move(d));
}

BPoly BPoly::derivative_y() const { return transposed().derivative_x().transposed(); }

BPoly BPoly::scaled(Elem s) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
  return BPoly(field_, nx_, ny_, std::move(v));
}

BPoly BPoly::mapped(const Embedding& emb) const {
  require_same_field(field_, emb.source());
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = emb(c_[i]);
  return BPoly(emb.target(), nx_, ny_, std::move(v));
}

BPoly BPoly::coeff_pow(std::uint64_t e) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.pow(c_[i], e);
  return BPoly(field_, nx_, ny_, std::move(v));
}

std::tuple<std::size_t, std::size_t, Elem> BPoly::leading_term() const {
  if (is_zero()) return {0, 0, Elem{0}};
  const std::size_t j = ny_ - 1;
  for (std::size_t i = nx_; i-- > 0;)
    if (c_[i * ny_ + j].code != 0) return {i, j, c_[i * ny_ + j]};
  return {0, 0, Elem{0}};
}

BPoly BPoly::normalized() const {
  if (is_zero()) return *this;
  Elem lc = std::get<2>(leading_term());
  if (lc == field_.one()) return *this;
  return scaled(field_.inv(lc));
}

BPoly& BPoly::operator+=(const BPoly& o) {
  require_same_field(field_, o.field_);
  const std::size_t nx = std::max(nx_, o.nx_), ny = std::max(ny_, o.ny_);
  std::vector<Elem> v(nx * ny, field_.zero());
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) v[i * ny + j] = field_.add(coeff(i, j), o.coeff(i, j));
  nx_ = nx;
  ny_ = ny;
  c_ = std::move(v);
  trim();
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  require_same_field(field_, o.field_);
  const std::size_t nx = std::max(nx_, o.nx_), ny = std::max(ny_, o.ny_);
  std::vector<Elem> v(nx * ny, field_.zero());
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) v[i * ny + j] = field_.sub(coeff(i, j), o.coeff(i, j));
  nx_ = nx;
  ny_ = ny;
  c_ = std::move(v);
  trim();
  return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return BPoly(a.field_);
  const Field& f = a.field_;
  const std::size_t nx = a.nx_ + b.nx_ - 1, ny = a.ny_ + b.ny_ - 1;
  std::vector<Elem> v(nx * ny, f.zero());
  for (std::size_t i = 0; i < a.nx_; ++i)
    for (std::size_t j = 0; j < a.ny_; ++j) {
      Elem c = a.c_[i * a.ny_ + j];
      if (c.code == 0) continue;
      for (std::size_t k = 0; k < b.nx_; ++k)
        for (std::size_t l = 0; l < b.ny_; ++l) {
          Elem d = b.c_[k * b.ny_ + l];
          if (d.code == 0) continue;
          Elem& t = v[(i + k) * ny + j + l];
          t = f.add(t, f.mul(c, d));
        }
    }
  return BPoly(f, nx, ny, std::move(v));
}

bool operator<(const BPoly& a, const BPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.ny_ != b.ny_) return a.ny_ < b.ny_;
  if (a.nx_ != b.nx_) return a.nx_ < b.nx_;
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::optional<BPoly> exact_div(const BPoly& a, const BPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "bivariate division by zero");
  const Field& f = a.field();
  if (a.is_zero()) return BPoly(f);
  if (a.deg_x() < b.deg_x() || a.deg_y() < b.deg_y()) return std::nullopt;
  auto [bi, bj, bc] = b.leading_term();
  const Elem binv = f.inv(bc);
  // Work on a dense copy of the remainder to avoid re-trimming each step.
  const std::size_t nx = a.deg_x() + 1, ny = a.deg_y() + 1;
  std::vector<Elem> r(nx * ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) r[i * ny + j] = a.coeff(i, j);
  std::vector<std::tuple<std::size_t, std::size_t, Elem>> q;
  const std::size_t bnx = b.deg_x() + 1, bny = b.deg_y() + 1;
  for (std::size_t j = ny; j-- > 0;) {
    for (std::size_t i = nx; i-- > 0;) {
      Elem c = r[i * ny + j];
      if (c.code == 0) continue;
      if (j < bj || i < bi) return std::nullopt;
      const std::size_t si = i - bi, sj = j - bj;
      if (si + bnx > nx || sj + bny > ny) return std::nullopt;
      Elem t = f.mul(c, binv);
      q.emplace_back(si, sj, t);
      for (std::size_t k = 0; k < bnx; ++k)
        for (std::size_t l = 0; l < bny; ++l) {
          Elem d = b.coeff(k, l);
          if (d.code == 0) continue;
          Elem& cell = r[(si + k) * ny + sj + l];
          cell = f.sub(cell, f.mul(t, d));
        }
    }
  }
  return BPoly::from_terms(f, q);
}

UPoly content_y(const BPoly& f) {
  UPoly g(f.field());
  for (const auto& c : f.y_coeffs()) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

BPoly primitive_part_y(const BPoly& f) {
  if (f.is_zero()) return f;
  UPoly c = content_y(f);
  if (c.is_one()) return f;
  auto cy = f.y_coeffs();
  for (auto& u : cy) u = u / c;
  return BPoly::from_y_coeffs(f.field(), cy);
}

namespace {

// Pseudo-remainder of a by b in F[x][y], followed by primitive part.
BPoly prem_pp(const BPoly& a, const BPoly& b) {
  const Field& f = a.field();
  auto r = a.y_coeffs();
  const auto bc = b.y_coeffs();
  const UPoly lb = bc.back();
  const std::size_t db = bc.size() - 1;
  auto trim = [](std::vector<UPoly>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(r);
  while (!r.empty() && r.size() - 1 >= db) {
    const UPoly lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c = c * lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] = r[shift + j] - lr * bc[j];
    trim(r);
  }
  return primitive_part_y(BPoly::from_y_coeffs(f, r));
}

}  // namespace

BPoly gcd(const BPoly& a, const BPoly& b) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const UPoly c = gcd(content_y(a), content_y(b));
  BPoly x = primitive_part_y(a), y = primitive_part_y(b);
  if (x.deg_y() < y.deg_y()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.deg_y() == 0) {
      x = BPoly::from_x(UPoly::constant(f, f.one()));
      break;
    }
    BPoly r = prem_pp(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return (primitive_part_y(x) * BPoly::from_x(c)).normalized();
}

}  // namespace exccover
