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
//
// Command-line front end over the C library.
//
//   afra solve   -i FILE -s SEMANTICS [-f text|json]
//   afra check   -i FILE
//   afra flatten -i FILE
//   afra hasse   -i FILE
//   afra dot     -i FILE
//   afra import  -t eaf|hoaf -i FILE
//   afra oracle  -i FILE -s SEMANTICS [-f text|json]
//
// Exit status: 0 ok, 1 the oracle disagrees with the solver, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "afra/afra.h"

namespace {

constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kInputError = 2;

struct Flags {
  std::string input;
  std::string semantics;
  std::string format = "text";
  std::string kind;
  std::size_t max_enum = 0;
};

int report(afra_status status) {
  std::cerr << "afra: " << afra_status_name(status) << ": "
            << afra_last_error() << '\n';
  return kInputError;
}

bool slurp(const std::string& path, std::string* text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *text = ss.str();
  return true;
}

// Prints `s`, making sure output ends with a newline, and frees it.
void emit(char* s) {
  std::string out = s;
  afra_string_free(s);
  if (out.empty() || out.back() != '\n') out += '\n';
  std::cout << out;
}

class Loaded {
 public:
  ~Loaded() { afra_framework_free(fw_); }
  afra_framework* get() const { return fw_; }
  afra_framework** out() { return &fw_; }

 private:
  afra_framework* fw_ = nullptr;
};

int run(const std::string& command, const Flags& flags) {
  std::string text;
  if (!slurp(flags.input, &text)) {
    std::cerr << "afra: cannot read '" << flags.input << "'\n";
    return kInputError;
  }

  Loaded fw;
  const char* kind = command == "import" ? flags.kind.c_str() : "afra";
  if (auto st = afra_import(kind, text.c_str(), fw.out()); st != AFRA_OK)
    return report(st);

  afra_solve_options opts{flags.max_enum, 0, 0};
  char* out = nullptr;
  afra_status st = AFRA_OK;

  if (command == "check") {
    afra_stats stats;
    if ((st = afra_stats_get(fw.get(), &stats)) != AFRA_OK) return report(st);
    std::cout << "ok: " << stats.arguments << " arguments, " << stats.attacks
              << " attacks, " << stats.defeats << " defeats"
              << (stats.plain ? ", no attacks on attacks" : "") << '\n';
    return kOk;
  }
  if (command == "solve") {
    st = afra_solve(fw.get(), flags.semantics.c_str(), flags.format.c_str(),
                    &opts, &out);
  } else if (command == "flatten") {
    st = afra_flatten(fw.get(), &out);
  } else if (command == "hasse") {
    st = afra_render(fw.get(), "hasse-dot", &opts, &out);
  } else if (command == "dot") {
    st = afra_render(fw.get(), "dot", &opts, &out);
  } else if (command == "import") {
    st = afra_render(fw.get(), "text", &opts, &out);
  } else if (command == "oracle") {
    int agree = 0;
    st = afra_oracle(fw.get(), flags.semantics.c_str(), flags.format.c_str(),
                     &opts, &agree, &out);
    if (st != AFRA_OK) return report(st);
    emit(out);
    return agree ? kOk : kDisagree;
  }
  if (st != AFRA_OK) return report(st);
  emit(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver for argumentation frameworks with recursive attacks"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--max-enum", flags.max_enum,
                 "Largest element count for exhaustive enumeration");

  const std::vector<std::string> semantics_names = {
      "complete", "grounded",   "preferred",     "stable",
      "semi_stable", "semi-stable", "ideal", "admissible",
      "conflict_free", "conflict-free"};

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", flags.input, "Input document")
        ->required()
        ->check(CLI::ExistingFile);
    return sub;
  };
  auto with_semantics = [&](CLI::App* sub) {
    sub->add_option("-s,--semantics", flags.semantics, "Semantics")
        ->required()
        ->check(CLI::IsMember(semantics_names));
    sub->add_option("-f,--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  with_semantics(add("solve", "Enumerate extensions"));
  add("check", "Validate a document");
  add("flatten", "Print the flattened classical framework (apx)");
  add("hasse", "Hasse diagram of the admissible sets (dot)");
  add("dot", "Defeat graph (dot)");
  add("import", "Translate an EAF or HOAF document into AFRA")
      ->add_option("-t,--type", flags.kind, "Input kind")
      ->required()
      ->check(CLI::IsMember({"eaf", "hoaf"}));
  with_semantics(add("oracle", "Cross-check the solver by brute force"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  return run(app.get_subcommands().front()->get_name(), flags);
}
