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

#ifndef EXCCOVER_UPOLY_HPP
#define EXCCOVER_UPOLY_HPP

#include <utility>
#include <vector>

#include "gf.hpp"

namespace exccover {

/// Dense univariate polynomial, coefficients low to high. The zero
/// polynomial has degree kZeroDegree.
class UPoly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit UPoly(Field field) : field_(std::move(field)) {}
  UPoly(Field field, std::vector<Elem> coeffs);

  static UPoly constant(const Field& f, Elem c);
  static UPoly monomial(const Field& f, Elem c, std::size_t exponent);
  static UPoly x(const Field& f) { return monomial(f, f.one(), 1); }

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == field_.one(); }
  /// Coefficient of x^i (zero past the degree).
  Elem operator[](std::size_t i) const noexcept {
    return i < c_.size() ? c_[i] : Elem{0};
  }
  Elem lead() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  Elem eval(Elem x) const noexcept;
  UPoly derivative() const;
  UPoly monic() const;
  UPoly scaled(Elem s) const;
  /// Coefficients mapped through an embedding into a larger field.
  UPoly mapped(const Embedding& emb) const;
  /// Coefficientwise x -> x^e (e.g. a Frobenius power).
  UPoly coeff_pow(std::uint64_t e) const;
  /// x^d * f(1/x) for d = degree().
  UPoly reversed() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend UPoly operator/(const UPoly& a, const UPoly& b);
  friend UPoly operator%(const UPoly& a, const UPoly& b);

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();
  Field field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws DivisionByZero when b = 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic gcd (zero only if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  UPoly g, s, t;
};
ExtGcd ext_gcd(const UPoly& a, const UPoly& b);

UPoly powmod(UPoly base, std::uint64_t e, const UPoly& mod);
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& mod);
/// x^(Q^times) mod f by repeated Q-th powering, Q = field order.
UPoly frobenius_power_x(const UPoly& f, std::uint64_t times);
/// f(g(x)).
UPoly compose(const UPoly& f, const UPoly& g);

}  // namespace exccover

#endif
