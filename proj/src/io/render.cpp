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

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "afra/defeat.hpp"
#include "afra/io.hpp"

namespace afra {

namespace {

using Json = nlohmann::ordered_json;

// Names that are not bare words are written as quoted strings.
std::string term(const std::string& name) {
  const bool bare =
      !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
  if (bare) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string dot_id(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

Json family(const ExtensionSet& result) {
  Json out = Json::array();
  for (const auto& ext : result.extensions()) out.push_back(ext.members());
  return out;
}

void text_lines(std::ostringstream& os, std::string_view label,
                const ExtensionSet& result) {
  if (result.empty()) {
    os << label << ": none\n";
    return;
  }
  for (const auto& ext : result.extensions())
    os << label << ": " << to_string(ext) << '\n';
}

[[noreturn]] void unsupported(const char* what, Format format) {
  static constexpr const char* names[] = {"text", "json", "dot", "hasse-dot"};
  throw Error(ErrorCode::PreconditionViolated,
              std::string("cannot render ") + what + " as " +
                  names[static_cast<int>(format)]);
}

std::string defeat_dot(const Framework& fw) {
  std::ostringstream os;
  os << "digraph defeat {\n";
  for (const auto& e : fw.elements()) {
    os << "  " << dot_id(e.name) << " [shape="
       << (e.kind == ElementKind::argument ? "ellipse" : "box") << "];\n";
  }
  for (const auto& edge : defeat_relation(fw)) {
    os << "  " << dot_id(edge.attacker) << " -> " << dot_id(edge.victim);
    if (!edge.direct) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string hasse_dot(const Framework& fw, const SolveOptions& options) {
  const auto sets = admissible_sets(fw, options).extensions();
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < sets.size(); ++i)
    os << "  s" << i << " [label=" << dot_id(to_string(sets[i])) << "];\n";
  auto below = [&](std::size_t a, std::size_t b) {
    return a != b && sets[a].is_subset_of(sets[b]);
  };
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if (!below(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < sets.size() && covered; ++c)
        covered = !(below(a, c) && below(c, b));
      if (covered) os << "  s" << a << " -> s" << b << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "dot") return Format::dot;
  if (name == "hasse-dot" || name == "hasse_dot") return Format::hasse_dot;
  return std::nullopt;
}

std::string render(const ExtensionSet& result, Format format) {
  if (format == Format::json) {
    Json j;
    j["semantics"] = to_string(result.semantics());
    j["extensions"] = family(result);
    return j.dump();
  }
  if (format != Format::text) unsupported("an extension family", format);
  std::ostringstream os;
  text_lines(os, to_string(result.semantics()), result);
  return os.str();
}

std::string render(const OracleReport& report, Format format) {
  if (format == Format::json) {
    Json j;
    j["semantics"] = to_string(report.semantics);
    j["agree"] = report.agree;
    j["oracle"] = family(report.oracle_result);
    j["solver"] = family(report.solver_result);
    return j.dump();
  }
  if (format != Format::text) unsupported("an oracle report", format);
  std::ostringstream os;
  os << "semantics: " << to_string(report.semantics) << '\n'
     << "agree: " << (report.agree ? "yes" : "no") << '\n';
  text_lines(os, "oracle", report.oracle_result);
  text_lines(os, "solver", report.solver_result);
  return os.str();
}

std::string render(const Framework& fw, Format format,
                   const SolveOptions& options) {
  switch (format) {
    case Format::text: {
      std::ostringstream os;
      for (const auto& a : fw.arguments()) os << "arg(" << term(a) << ").\n";
      for (const auto& at : fw.attacks())
        os << "att(" << at.id << "," << at.source << "," << at.target.id
           << ").\n";
      return os.str();
    }
    case Format::json: {
      Json j;
      j["arguments"] = fw.arguments();
      j["attacks"] = Json::array();
      for (const auto& at : fw.attacks())
        j["attacks"].push_back(
            {{"id", at.id}, {"source", at.source}, {"target", at.target.id}});
      return j.dump();
    }
    case Format::dot:
      return defeat_dot(fw);
    case Format::hasse_dot:
      return hasse_dot(fw, options);
  }
  return {};
}

std::string render_apx(const DungAF& af) {
  std::ostringstream os;
  for (const auto& a : af.arguments()) os << "arg(" << term(a) << ").\n";
  for (const auto& [from, to] : af.attacks())
    os << "att(" << term(from) << "," << term(to) << ").\n";
  return os.str();
}

}  // namespace afra
