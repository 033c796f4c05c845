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

#include "poly_io.hpp"

#include <cctype>
#include <map>

namespace exccover {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 16;

class Parser {
 public:
  Parser(std::string_view s, const Field& f) : s_(s), f_(f) {}

  // exponent -> coefficient
  std::map<std::uint64_t, Elem> parse() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    }
    term(neg);
    for (skip(); i_ < s_.size(); skip()) {
      char c = s_[i_];
      if (c != '+' && c != '-') {
        if (std::isalpha(static_cast<unsigned char>(c)) && c != 'x' && c != 'g')
          throw ParseError(Errc::UnknownSymbol, i_, std::string("unknown symbol '") + c + "'");
        throw ParseError(Errc::ParseError, i_, "expected '+' or '-'");
      }
      ++i_;
      term(c == '-');
    }
    return acc_;
  }

 private:
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  std::uint64_t nat(bool as_exponent) {
    skip();
    const std::size_t start = i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      throw ParseError(Errc::ParseError, i_, "expected a natural number");
    std::uint64_t v = 0;
    const std::uint64_t p = f_.characteristic();
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(s_[i_] - '0');
      if (as_exponent) {
        v = v * 10 + d;
        if (v > kMaxExponent) throw ParseError(Errc::ParseError, start, "exponent too large");
      } else {
        v = (v * 10 + d) % p;
      }
      ++i_;
    }
    return v;
  }

  std::uint64_t opt_exponent() {
    if (peek() != '^') return 1;
    ++i_;
    return nat(true);
  }

  void term(bool neg) {
    Elem coef = f_.one();
    std::uint64_t xdeg = 0;
    bool any = false;
    for (;;) {
      char c = peek();
      if (any && c == '*') {
        ++i_;
        c = peek();
        if (c == '\0') throw ParseError(Errc::ParseError, i_, "expected a factor");
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef = f_.mul(coef, f_.from_int(static_cast<std::int64_t>(nat(false))));
      } else if (c == 'x') {
        ++i_;
        xdeg += opt_exponent();
        if (xdeg > kMaxExponent) throw ParseError(Errc::ParseError, i_, "exponent too large");
      } else if (c == 'g') {
        const std::size_t at = i_;
        if (f_.degree() == 1)
          throw ParseError(Errc::UnknownSymbol, at, "'g' is undefined over a prime field");
        ++i_;
        coef = f_.mul(coef, f_.pow(f_.generator(), opt_exponent()));
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        throw ParseError(Errc::UnknownSymbol, i_, std::string("unknown symbol '") + c + "'");
      } else {
        if (!any) throw ParseError(Errc::ParseError, i_, "expected a term");
        break;
      }
      any = true;
    }
    if (neg) coef = f_.neg(coef);
    auto [it, fresh] = acc_.emplace(xdeg, coef);
    if (!fresh) it->second = f_.add(it->second, coef);
  }

  std::string_view s_;
  const Field& f_;
  std::size_t i_ = 0;
  std::map<std::uint64_t, Elem> acc_;
};

// Monomial c * g^i * x^d with c a nonzero digit.
std::string monomial_text(std::uint32_t c, std::uint32_t gi, std::uint64_t d) {
  std::string out;
  auto append = [&](const std::string& piece) {
    if (!out.empty()) out += '*';
    out += piece;
  };
  if (c != 1 || (gi == 0 && d == 0)) append(std::to_string(c));
  if (gi > 0) append(gi == 1 ? std::string("g") : "g^" + std::to_string(gi));
  if (d > 0) append(d == 1 ? std::string("x") : "x^" + std::to_string(d));
  return out;
}

}  // namespace

UPoly parse_poly(std::string_view text, const Field& field) {
  auto terms = Parser(text, field).parse();
  std::vector<Elem> c(terms.empty() ? 0 : terms.rbegin()->first + 1, field.zero());
  for (const auto& [d, e] : terms) c[d] = e;
  return UPoly(field, c);
}

Elem parse_element(std::string_view text, const Field& field) {
  UPoly p = parse_poly(text, field);
  if (p.degree() > 0) throw ParseError(Errc::ParseError, 0, "expected a constant");
  return p.is_zero() ? field.zero() : p[0];
}

std::string format_poly(const UPoly& f) {
  if (f.is_zero()) return "0";
  const Field& k = f.field();
  std::string out;
  for (int d = f.degree(); d >= 0; --d) {
    if (f[d].code == 0) continue;
    const auto digits = k.coeffs(f[d]);
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
      if (digits[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += monomial_text(digits[i], static_cast<std::uint32_t>(i), static_cast<std::uint64_t>(d));
    }
  }
  return out;
}

std::string format_element(const Field& field, Elem e) {
  return format_poly(UPoly::constant(field, e));
}

}  // namespace exccover
