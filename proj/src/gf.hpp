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

#ifndef EXCCOVER_GF_HPP
#define EXCCOVER_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <ranges>
#include <span>
#include <vector>

#include "config.hpp"
#include "error.hpp"

namespace exccover {

/// An element of some F_{p^k}, encoded as the integer sum(c_i * p^i) of its
/// residue vector c over the polynomial basis. The owning Field interprets it.
struct Elem {
  std::uint32_t code = 0;
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

struct FieldImpl {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, k + 1 residues, low to high
  std::vector<std::uint64_t> ppow;     // p^0 .. p^k
  // Discrete log tables, present only for small extension fields.
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;  // length 2(q-1)

  std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_digits(std::uint32_t a, std::uint32_t b) const;
};

}  // namespace detail

bool is_prime(std::uint64_t n) noexcept;

/// Returns (p, k) with q = p^k, or throws NotPrimePower.
std::pair<std::uint64_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

/// F_{p^k} presented as F_p[g]/(modulus(g)), where the modulus is the
/// lexicographically smallest monic irreducible of degree k. Cheap to copy.
class Field {
 public:
  static Field make(std::uint32_t p, std::uint32_t k, const Config& cfg = {});
  static Field of_order(std::uint64_t q, const Config& cfg = {});

  std::uint32_t characteristic() const noexcept { return impl_->p; }
  std::uint32_t degree() const noexcept { return impl_->k; }
  std::uint64_t order() const noexcept { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const noexcept {
    return impl_->modulus;
  }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Class of the modulus variable; only meaningful when degree() > 1.
  Elem generator() const noexcept;
  Elem from_int(std::int64_t v) const noexcept;
  Elem from_coeffs(std::span<const std::uint32_t> residues) const;
  std::vector<std::uint32_t> coeffs(Elem e) const;
  /// Element with the given code; codes enumerate the field as 0 .. q-1.
  Elem at(std::uint64_t code) const;

  Elem add(Elem a, Elem b) const noexcept {
    if (impl_->k == 1) {
      std::uint32_t s = a.code + b.code;
      return Elem{s >= impl_->p ? s - impl_->p : s};
    }
    if (impl_->p == 2) return Elem{a.code ^ b.code};
    return Elem{impl_->add_digits(a.code, b.code)};
  }
  Elem sub(Elem a, Elem b) const noexcept {
    if (impl_->k == 1)
      return Elem{a.code >= b.code ? a.code - b.code
                                   : a.code + impl_->p - b.code};
    if (impl_->p == 2) return Elem{a.code ^ b.code};
    return Elem{impl_->sub_digits(a.code, b.code)};
  }
  Elem neg(Elem a) const noexcept { return sub(zero(), a); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (impl_->k == 1)
      return Elem{static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(a.code) * b.code % impl_->p)};
    if (a.code == 0 || b.code == 0) return zero();
    if (!impl_->exp.empty())
      return Elem{impl_->exp[impl_->log[a.code] + impl_->log[b.code]]};
    return Elem{impl_->mul_generic(a.code, b.code)};
  }
  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// x -> x^p, the absolute Frobenius.
  Elem frobenius(Elem a) const noexcept { return pow(a, impl_->p); }

  auto elements() const {
    return std::views::iota(std::uint64_t{0}, impl_->q) |
           std::views::transform([](std::uint64_t c) {
             return Elem{static_cast<std::uint32_t>(c)};
           });
  }

  /// Fields compare equal when they are the same F_{p^k}; since the modulus
  /// is canonical this identifies the representation too.
  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k);
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;
};

void require_same_field(const Field& a, const Field& b);

/// A field element bundled with its field; the checked, user-facing value.
class Fel {
 public:
  Fel(Field field, Elem e) : field_(std::move(field)), e_(e) {}
  Fel(Field field, std::int64_t v) : field_(field), e_(field.from_int(v)) {}

  const Field& field() const noexcept { return field_; }
  Elem elem() const noexcept { return e_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(e_); }
  bool is_zero() const noexcept { return e_.code == 0; }

  Fel operator+(const Fel& o) const;
  Fel operator-(const Fel& o) const;
  Fel operator*(const Fel& o) const;
  Fel operator/(const Fel& o) const;
  Fel operator-() const { return Fel(field_, field_.neg(e_)); }
  Fel inv() const { return Fel(field_, field_.inv(e_)); }
  Fel pow(std::uint64_t e) const { return Fel(field_, field_.pow(e_, e)); }

  friend bool operator==(const Fel& a, const Fel& b) {
    return a.field_ == b.field_ && a.e_ == b.e_;
  }

 private:
  Field field_;
  Elem e_;
};

/// A fixed ring embedding F_{p^a} -> F_{p^b} (a | b), sending the source
/// generator to the smallest-coded root of the source modulus in the target.
class Embedding {
 public:
  Embedding(const Field& source, const Field& target, const Config& cfg = {});

  const Field& source() const noexcept { return source_; }
  const Field& target() const noexcept { return target_; }
  Elem operator()(Elem e) const;

 private:
  Field source_;
  Field target_;
  std::vector<Elem> basis_images_;  // image of g^i, i < source degree
};

Fel embed(const Fel& e, const Field& target, const Config& cfg = {});

/// #{y in F : y^n = c}.
std::uint64_t nth_power_solution_count(const Field& field, Elem c,
                                       std::uint64_t n);

}  // namespace exccover

#endif
