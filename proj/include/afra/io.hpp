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

// Text formats.
//
// Documents are sequences of statements `name(term, ...).` in the style of
// apx files. Whitespace is insignificant and `%` starts a comment running to
// the end of the line. A term is a bare word of letters, digits and
// underscores, or a double-quoted string (with \" and \\ escapes) for names
// such as "not(A)".
//
//   AFRA:  arg(a).  att(id, source, target).
//   EAF:   earg(a). eatt(a, b).  edatt(c, a, b).   % c attacks (a, b)
//   HOAF:  carg(a). carg(a, "neg_a").  hatt(h).  hpair(x, y).
//
// carg(a) with one term names the companion "not(a)". Attack targets may
// refer to attacks declared later in the document.

#ifndef AFRA_IO_HPP
#define AFRA_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afra/dung.hpp"
#include "afra/framework.hpp"
#include "afra/interop.hpp"
#include "afra/oracle.hpp"
#include "afra/semantics.hpp"

namespace afra {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Term {
  std::string text;
  Location where;
};

struct Statement {
  std::string keyword;
  std::vector<Term> terms;
  Location where;
};

struct Document {
  std::vector<Statement> statements;
};

/// Tokenizes and groups statements; does not interpret keywords. Throws
/// SyntaxError with "line L, column C" in the message.
Document parse_document(std::string_view text);

/// Build errors are rethrown with their original code, prefixed by the
/// location of the offending statement.
Framework parse_afra(std::string_view text);
Eaf parse_eaf(std::string_view text);
Hoaf parse_hoaf(std::string_view text);

enum class Format { text, json, dot, hasse_dot };

std::optional<Format> parse_format(std::string_view name) noexcept;

/// text: one "<semantics>: {a, b}" line per extension, or
/// "<semantics>: none". json: {"semantics":..,"extensions":[[..],..]}.
/// Other formats throw PreconditionViolated.
std::string render(const ExtensionSet& result, Format format = Format::text);
/// text or json.
std::string render(const OracleReport& report, Format format = Format::text);
/// text: the canonical AFRA document. json: arguments and attacks.
/// dot: the defeat graph, direct defeats solid and indirect ones dashed.
/// hasse_dot: covering relation of the admissible sets (bounded by
/// options.max_enum).
std::string render(const Framework& fw, Format format = Format::text,
                   const SolveOptions& options = {});
/// Plain apx: arg(x). and att(x, y). lines.
std::string render_apx(const DungAF& af);

}  // namespace afra

#endif  // AFRA_IO_HPP
