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

#ifndef EXCCOVER_ERROR_HPP
#define EXCCOVER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace exccover {

enum class Errc {
  NonPrime,
  CapExceeded,
  MixedFields,
  DivisionByZero,
  NoEmbedding,
  DegreeCapExceeded,
  NotSquarefree,
  NotSeparable,
  WildCase,
  ParseError,
  UnknownSymbol,
  NotTransitive,
  NotSubgroup,
  InvalidOrder,
  NotPrimePower,
  PreconditionFailed,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failures carry the 0-based byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t offset, const std::string& what)
      : Error(code, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace exccover

#endif
