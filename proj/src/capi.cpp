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

#include "exccover.h"

#include <cstring>
#include <new>
#include <string>

#include "excep.hpp"
#include "poly_io.hpp"
#include "report.hpp"

struct exc_context {
  exccover::Config cfg;
  std::string last_error;
  std::int64_t offset = -1;
};

struct exc_field {
  exccover::Field field;
};

struct exc_map {
  exccover::RationalMap map;
};

namespace {

exc_status to_status(exccover::Errc e) {
  using exccover::Errc;
  switch (e) {
    case Errc::NonPrime: return EXC_E_NON_PRIME;
    case Errc::CapExceeded: return EXC_E_CAP_EXCEEDED;
    case Errc::MixedFields: return EXC_E_MIXED_FIELDS;
    case Errc::DivisionByZero: return EXC_E_DIVISION_BY_ZERO;
    case Errc::NoEmbedding: return EXC_E_NO_EMBEDDING;
    case Errc::DegreeCapExceeded: return EXC_E_DEGREE_CAP_EXCEEDED;
    case Errc::NotSquarefree: return EXC_E_NOT_SQUAREFREE;
    case Errc::NotSeparable: return EXC_E_NOT_SEPARABLE;
    case Errc::WildCase: return EXC_E_WILD_CASE;
    case Errc::ParseError: return EXC_E_PARSE;
    case Errc::UnknownSymbol: return EXC_E_UNKNOWN_SYMBOL;
    case Errc::NotTransitive: return EXC_E_NOT_TRANSITIVE;
    case Errc::NotSubgroup: return EXC_E_NOT_SUBGROUP;
    case Errc::InvalidOrder: return EXC_E_INVALID_ORDER;
    case Errc::NotPrimePower: return EXC_E_NOT_PRIME_POWER;
    case Errc::PreconditionFailed: return EXC_E_PRECONDITION;
    case Errc::InvalidArgument: return EXC_E_INVALID_ARGUMENT;
  }
  return EXC_E_INTERNAL;
}

struct NullArgument {
  const char* what;
};

template <class F>
exc_status guarded(exc_context* ctx, F&& body) {
  if (!ctx) return EXC_E_NULL_HANDLE;
  ctx->last_error.clear();
  ctx->offset = -1;
  try {
    body();
    return EXC_OK;
  } catch (const NullArgument& e) {
    ctx->last_error = e.what;
    return EXC_E_NULL_HANDLE;
  } catch (const exccover::ParseError& e) {
    ctx->last_error = e.what();
    ctx->offset = static_cast<std::int64_t>(e.offset());
    return to_status(e.code());
  } catch (const exccover::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return EXC_E_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return EXC_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<unsigned> ms_vector(const unsigned* ms, std::size_t n) {
  if (!ms) return {};
  return std::vector<unsigned>(ms, ms + n);
}

std::optional<std::string> opt(const char* s) {
  return s ? std::optional<std::string>(s) : std::nullopt;
}

void require(bool ok, const char* what) {
  if (!ok) throw NullArgument{what};
}

void check(bool ok, const char* what) {
  if (!ok) throw exccover::Error(exccover::Errc::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* exc_version(void) { return exccover::kVersion; }

const char* exc_status_name(exc_status status) {
  switch (status) {
    case EXC_OK: return "Ok";
    case EXC_E_NULL_HANDLE: return "NullHandle";
    case EXC_E_INTERNAL: return "Internal";
    default: break;
  }
  if (status > EXC_OK && status < EXC_E_NULL_HANDLE)
    return exccover::errc_name(static_cast<exccover::Errc>(status - 1));
  return "Unknown";
}

exc_status exc_context_create(uint64_t seed, exc_context** out) {
  if (!out) return EXC_E_NULL_HANDLE;
  *out = new (std::nothrow) exc_context;
  if (!*out) return EXC_E_INTERNAL;
  (*out)->cfg.seed = seed;
  return EXC_OK;
}

void exc_context_destroy(exc_context* ctx) { delete ctx; }

exc_status exc_context_set_enum_cap(exc_context* ctx, uint64_t cap) {
  return guarded(ctx, [&] {
    check(cap > 0, "cap must be positive");
    ctx->cfg.enum_cap = cap;
  });
}

exc_status exc_context_set_field_cap(exc_context* ctx, uint64_t cap) {
  return guarded(ctx, [&] {
    check(cap > 1 && cap <= (std::uint64_t{1} << 31), "field cap must be in [2, 2^31]");
    ctx->cfg.field_cap = cap;
  });
}

const char* exc_last_error(const exc_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

int64_t exc_last_error_offset(const exc_context* ctx) { return ctx ? ctx->offset : -1; }

exc_status exc_field_create(exc_context* ctx, uint64_t q, exc_field** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output pointer");
    *out = new exc_field{exccover::Field::of_order(q, ctx->cfg)};
  });
}

void exc_field_destroy(exc_field* field) { delete field; }

uint64_t exc_field_order(const exc_field* field) { return field ? field->field.order() : 0; }

exc_status exc_map_create(exc_context* ctx, const exc_field* field, const char* num,
                          const char* den, exc_map** out) {
  return guarded(ctx, [&] {
    require(field && num && out, "null argument");
    const auto& k = field->field;
    *out = new exc_map{exccover::RationalMap::make(exccover::parse_poly(num, k),
                                                   exccover::parse_poly(den ? den : "1", k))};
  });
}

void exc_map_destroy(exc_map* map) { delete map; }

unsigned exc_map_degree(const exc_map* map) { return map ? map->map.degree() : 0; }

exc_status exc_map_audit(exc_context* ctx, const exc_map* map, unsigned m, int* bijective) {
  return guarded(ctx, [&] {
    require(map && bijective, "null argument");
    *bijective = exccover::audit_rational_map(map->map, m, ctx->cfg).bijective ? 1 : 0;
  });
}

exc_status exc_map_is_exceptional(exc_context* ctx, const exc_map* map, int* exceptional,
                                  unsigned* k) {
  return guarded(ctx, [&] {
    require(map && exceptional, "null argument");
    auto r = exccover::decide_exceptional(map->map, ctx->cfg);
    *exceptional = r.exceptional ? 1 : 0;
    if (k) *k = r.component_definition_lcm;
  });
}

exc_status exc_poly_normalize(exc_context* ctx, const exc_field* field, const char* text,
                              char** out) {
  return guarded(ctx, [&] {
    require(field && text && out, "null argument");
    *out = dup_string(exccover::format_poly(exccover::parse_poly(text, field->field)));
  });
}

exc_status exc_report_analyze(exc_context* ctx, uint64_t q, const char* num, const char* den,
                              const unsigned* ms, size_t n_ms, const char* group_spec,
                              int exclude_branch_fibers, char** json_out) {
  return guarded(ctx, [&] {
    require(num && json_out, "null argument");
    exccover::AnalyzeRequest r;
    r.q = q;
    r.num = num;
    r.den = den ? den : "1";
    r.m = ms_vector(ms, n_ms);
    r.group_spec = opt(group_spec);
    r.exclude_branch_fibers = exclude_branch_fibers != 0;
    *json_out = dup_string(exccover::dump_report(exccover::analyze_report(r, ctx->cfg)));
  });
}

exc_status exc_report_superelliptic(exc_context* ctx, uint64_t q, unsigned n, const char* a,
                                    const char* gamma, const char* h, const unsigned* ms,
                                    size_t n_ms, int exclude_branch_fibers, char** json_out) {
  return guarded(ctx, [&] {
    require(gamma && json_out && (a || h), "null argument");
    exccover::SuperellipticRequest r;
    r.q = q;
    r.n = n;
    r.a = a ? a : "";
    r.gamma = gamma;
    r.h = opt(h);
    r.m = ms_vector(ms, n_ms);
    r.exclude_branch_fibers = exclude_branch_fibers != 0;
    *json_out = dup_string(exccover::dump_report(exccover::superelliptic_report(r, ctx->cfg)));
  });
}

exc_status exc_report_groups(exc_context* ctx, const char* spec_text, char** json_out) {
  return guarded(ctx, [&] {
    require(spec_text && json_out, "null argument");
    *json_out = dup_string(exccover::dump_report(exccover::groups_report({spec_text}, ctx->cfg)));
  });
}

exc_status exc_report_bounds(exc_context* ctx, uint64_t n, uint64_t gx, uint64_t gy,
                             const char* g_order, const char* u_size, const char* q,
                             const char* pa, const int64_t* castelnuovo, char** json_out) {
  return guarded(ctx, [&] {
    require(json_out != nullptr, "null argument");
    exccover::BoundsRequest r;
    r.n = n;
    r.gx = gx;
    r.gy = gy;
    r.g_order = opt(g_order);
    r.u_size = opt(u_size);
    r.q = opt(q);
    r.pa = opt(pa);
    if (castelnuovo) r.castelnuovo = std::vector<std::int64_t>(castelnuovo, castelnuovo + 4);
    *json_out = dup_string(exccover::dump_report(exccover::bounds_report(r, ctx->cfg)));
  });
}

exc_status exc_report_examples(exc_context* ctx, char** json_out) {
  return guarded(ctx, [&] {
    require(json_out != nullptr, "null argument");
    *json_out = dup_string(exccover::dump_report(exccover::examples_report(ctx->cfg)));
  });
}

void exc_string_free(char* s) { std::free(s); }

}  // extern "C"
