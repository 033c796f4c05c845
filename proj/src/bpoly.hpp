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

#ifndef EXCCOVER_BPOLY_HPP
#define EXCCOVER_BPOLY_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "upoly.hpp"

namespace exccover {

/// Dense bivariate polynomial sum c(i,j) x^i y^j, trimmed so that the
/// stored rectangle is exactly (deg_x + 1) x (deg_y + 1).
class BPoly {
 public:
  explicit BPoly(Field field) : field_(std::move(field)) {}

  /// Terms are (x exponent, y exponent, coefficient); repeated terms add.
  static BPoly from_terms(const Field& f,
                          const std::vector<std::tuple<std::size_t, std::size_t, Elem>>& terms);
  static BPoly from_x(const UPoly& p);  // p(x)
  static BPoly from_y(const UPoly& p);  // p(y)
  /// sum_j cy[j](x) y^j
  static BPoly from_y_coeffs(const Field& f, const std::vector<UPoly>& cy);
  /// sum_i cx[i](y) x^i
  static BPoly from_x_coeffs(const Field& f, const std::vector<UPoly>& cx);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return nx_ <= 1 && ny_ <= 1; }
  int deg_x() const noexcept { return static_cast<int>(nx_) - 1; }
  int deg_y() const noexcept { return static_cast<int>(ny_) - 1; }
  int total_degree() const noexcept;
  Elem coeff(std::size_t i, std::size_t j) const noexcept {
    return (i < nx_ && j < ny_) ? c_[i * ny_ + j] : Elem{0};
  }

  /// Coefficient of y^j as a polynomial in x, for j = 0..deg_y.
  std::vector<UPoly> y_coeffs() const;
  /// Coefficient of x^i as a polynomial in y, for i = 0..deg_x.
  std::vector<UPoly> x_coeffs() const;
  /// Leading coefficient in y, as a polynomial in x.
  UPoly lead_y() const;

  Elem eval(Elem x, Elem y) const noexcept;
  UPoly at_x(Elem x0) const;  // F(x0, y)
  UPoly at_y(Elem y0) const;  // F(x, y0)

  BPoly transposed() const;
  BPoly shifted_x(Elem a) const;  // F(x + a, y)
  BPoly derivative_x() const;
  BPoly derivative_y() const;
  BPoly scaled(Elem s) const;
  BPoly mapped(const Embedding& emb) const;
  BPoly coeff_pow(std::uint64_t e) const;
  /// Lex-leading term (highest y degree, then highest x degree).
  std::tuple<std::size_t, std::size_t, Elem> leading_term() const;
  /// Scalar multiple whose lex-leading coefficient is one.
  BPoly normalized() const;

  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend bool operator==(const BPoly& a, const BPoly& b) {
    return a.field_ == b.field_ && a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.c_ == b.c_;
  }
  /// Total order used to sort factor lists deterministically.
  friend bool operator<(const BPoly& a, const BPoly& b);

 private:
  BPoly(Field f, std::size_t nx, std::size_t ny, std::vector<Elem> c);
  Elem& at(std::size_t i, std::size_t j) { return c_[i * ny_ + j]; }
  void trim();

  Field field_;
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<Elem> c_;
};

/// A / B when B divides A exactly, otherwise nullopt.
std::optional<BPoly> exact_div(const BPoly& a, const BPoly& b);
/// Normalized gcd in F[x, y].
BPoly gcd(const BPoly& a, const BPoly& b);
/// Monic gcd in F[x] of the y-coefficients.
UPoly content_y(const BPoly& f);
/// f / content_y(f).
BPoly primitive_part_y(const BPoly& f);

}  // namespace exccover

#endif
