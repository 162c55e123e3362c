// Copyright 2026 The afra-toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "afra/afra.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "afra/defeat.hpp"
#include "afra/io.hpp"

struct afra_framework {
  afra::Framework fw;
};

namespace {

thread_local std::string last_error;

afra_status status_of(afra::ErrorCode code) {
  using afra::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidId: return AFRA_E_INVALID_ID;
    case ErrorCode::DuplicateId: return AFRA_E_DUPLICATE_ID;
    case ErrorCode::DanglingSource: return AFRA_E_DANGLING_SOURCE;
    case ErrorCode::DanglingTarget: return AFRA_E_DANGLING_TARGET;
    case ErrorCode::CyclicTargetChain: return AFRA_E_CYCLIC_TARGET_CHAIN;
    case ErrorCode::UnknownAttack: return AFRA_E_UNKNOWN_ATTACK;
    case ErrorCode::UnknownElement: return AFRA_E_UNKNOWN_ELEMENT;
    case ErrorCode::NotAnAttack: return AFRA_E_NOT_AN_ATTACK;
    case ErrorCode::TooLargeToEnumerate: return AFRA_E_TOO_LARGE;
    case ErrorCode::NotPlainAF: return AFRA_E_NOT_PLAIN_AF;
    case ErrorCode::InvalidEaf: return AFRA_E_INVALID_EAF;
    case ErrorCode::InvalidHoaf: return AFRA_E_INVALID_HOAF;
    case ErrorCode::PreconditionViolated: return AFRA_E_PRECONDITION;
    case ErrorCode::SyntaxError: return AFRA_E_SYNTAX;
  }
  return AFRA_E_INTERNAL;
}

afra_status fail(afra_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
afra_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return AFRA_OK;
  } catch (const afra::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AFRA_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AFRA_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

afra::SolveOptions options_of(const afra_solve_options* o) {
  afra::SolveOptions opts;
  if (!o) return opts;
  if (o->max_enum) opts.max_enum = o->max_enum;
  if (o->timeout_ms > 0) opts.timeout = std::chrono::milliseconds(o->timeout_ms);
  if (o->native_route) opts.route = afra::Route::native;
  return opts;
}

struct BadArgument {
  std::string message;
};

afra::SemanticsId semantics_of(const char* name) {
  if (!name) throw BadArgument{"semantics is null"};
  auto id = afra::parse_semantics(name);
  if (!id) throw BadArgument{std::string("unknown semantics '") + name + "'"};
  return *id;
}

afra::Format format_of(const char* name) {
  if (!name) return afra::Format::text;
  auto f = afra::parse_format(name);
  if (!f) throw BadArgument{std::string("unknown format '") + name + "'"};
  return *f;
}

template <typename Body>
afra_status checked(Body&& body) {
  try {
    return guarded(std::forward<Body>(body));
  } catch (const BadArgument& b) {
    return fail(AFRA_E_BAD_ARGUMENT, b.message);
  }
}

}  // namespace

extern "C" {

const char* afra_version(void) { return "1.0.0"; }

const char* afra_last_error(void) { return last_error.c_str(); }

const char* afra_status_name(afra_status status) {
  switch (status) {
    case AFRA_OK: return "ok";
    case AFRA_E_BAD_ARGUMENT: return "BadArgument";
    case AFRA_E_INTERNAL: return "Internal";
    default: break;
  }
  // The error codes mirror afra::ErrorCode one to one.
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(afra::ErrorCode::SyntaxError))
    return afra::to_string(static_cast<afra::ErrorCode>(code)).data();
  return "unknown";
}

void afra_string_free(char* s) { std::free(s); }

afra_status afra_parse(const char* text, afra_framework** out) {
  return afra_import("afra", text, out);
}

afra_status afra_import(const char* kind, const char* text,
                        afra_framework** out) {
  if (!kind || !text || !out)
    return fail(AFRA_E_BAD_ARGUMENT, "null argument");
  *out = nullptr;
  const std::string k = kind;
  if (k != "afra" && k != "eaf" && k != "hoaf")
    return fail(AFRA_E_BAD_ARGUMENT, "unknown input kind '" + k + "'");
  return guarded([&] {
    afra::Framework fw;
    if (k == "eaf") fw = afra::eaf_to_afra(afra::parse_eaf(text));
    else if (k == "hoaf") fw = afra::hoaf_to_afra(afra::parse_hoaf(text));
    else fw = afra::parse_afra(text);
    *out = new afra_framework{std::move(fw)};
  });
}

void afra_framework_free(afra_framework* fw) { delete fw; }

afra_status afra_stats_get(const afra_framework* fw, afra_stats* out) {
  if (!fw || !out) return fail(AFRA_E_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    out->arguments = fw->fw.num_arguments();
    out->attacks = fw->fw.num_attacks();
    out->defeats = afra::defeat_relation(fw->fw).size();
    out->plain = afra::is_plain_af(fw->fw) ? 1 : 0;
  });
}

afra_status afra_solve(const afra_framework* fw, const char* semantics,
                       const char* format, const afra_solve_options* options,
                       char** out) {
  if (!fw || !out) return fail(AFRA_E_BAD_ARGUMENT, "null argument");
  *out = nullptr;
  return checked([&] {
    const auto which = semantics_of(semantics);
    const auto f = format_of(format);
    *out = dup(afra::render(afra::solve(fw->fw, which, options_of(options)), f));
  });
}

afra_status afra_render(const afra_framework* fw, const char* format,
                        const afra_solve_options* options, char** out) {
  if (!fw || !out) return fail(AFRA_E_BAD_ARGUMENT, "null argument");
  *out = nullptr;
  return checked([&] {
    *out = dup(afra::render(fw->fw, format_of(format), options_of(options)));
  });
}

afra_status afra_flatten(const afra_framework* fw, char** out) {
  if (!fw || !out) return fail(AFRA_E_BAD_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = dup(afra::render_apx(afra::flatten(fw->fw))); });
}

afra_status afra_oracle(const afra_framework* fw, const char* semantics,
                        const char* format, const afra_solve_options* options,
                        int* agree, char** out) {
  if (!fw || !out || !agree) return fail(AFRA_E_BAD_ARGUMENT, "null argument");
  *out = nullptr;
  return checked([&] {
    const auto which = semantics_of(semantics);
    const auto f = format_of(format);
    const auto report = afra::cross_check(fw->fw, which, options_of(options));
    *agree = report.agree ? 1 : 0;
    *out = dup(afra::render(report, f));
  });
}

}  // extern "C"
