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

#ifndef EXCCOVER_POLY_IO_HPP
#define EXCCOVER_POLY_IO_HPP

#include <string>
#include <string_view>

#include "upoly.hpp"

namespace exccover {

/// Grammar (whitespace ignored):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*'? factor)*
///   factor := nat | 'g' ('^' nat)? | 'x' ('^' nat)?
/// 'g' is the field generator and is rejected over prime fields.
/// Throws ParseError (codes ParseError or UnknownSymbol) with the offset.
UPoly parse_poly(std::string_view text, const Field& field);

/// A constant expression; throws ParseError if x occurs.
Elem parse_element(std::string_view text, const Field& field);

/// Canonical text that parse_poly maps back to the same polynomial.
std::string format_poly(const UPoly& f);
std::string format_element(const Field& field, Elem e);

}  // namespace exccover

#endif
