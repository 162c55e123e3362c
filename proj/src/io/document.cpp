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

#include <cctype>
#include <map>
#include <string>

#include "afra/io.hpp"

namespace afra {

namespace {

std::string at(Location loc) {
  return "line " + std::to_string(loc.line) + ", column " +
         std::to_string(loc.column);
}

[[noreturn]] void syntax_error(Location loc, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, at(loc) + ": " + what);
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

enum class Tok { word, punct, end };

struct Token {
  Tok kind;
  std::string text;
  Location where;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    const Location start = loc_;
    if (pos_ == text_.size()) return {Tok::end, {}, start};
    const char c = text_[pos_];
    if (c == '(' || c == ')' || c == ',' || c == '.') {
      advance();
      return {Tok::punct, std::string(1, c), start};
    }
    if (c == '"') return quoted(start);
    if (word_char(c)) {
      std::string w;
      while (pos_ < text_.size() && word_char(text_[pos_])) {
        w += text_[pos_];
        advance();
      }
      return {Tok::word, std::move(w), start};
    }
    syntax_error(start, std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token quoted(Location start) {
    advance();  // opening quote
    std::string s;
    for (;;) {
      if (pos_ == text_.size()) syntax_error(start, "unterminated string");
      char c = text_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\n') syntax_error(start, "unterminated string");
      if (c == '\\') {
        advance();
        if (pos_ == text_.size()) syntax_error(start, "unterminated string");
        c = text_[pos_];
        if (c != '"' && c != '\\')
          syntax_error(loc_, std::string("unknown escape '\\") + c + "'");
      }
      s += c;
      advance();
    }
    if (s.empty()) syntax_error(start, "empty name");
    return {Tok::word, std::move(s), start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Location loc_;
};

const char* describe(const Token& t) {
  return t.kind == Tok::end ? "end of input" : t.text.c_str();
}

void expect_punct(Lexer& lex, char p) {
  auto t = lex.next();
  if (t.kind != Tok::punct || t.text[0] != p)
    syntax_error(t.where, std::string("expected '") + p + "' but found '" +
                              describe(t) + "'");
}

const std::string& term(const Statement& st, std::size_t i) {
  return st.terms[i].text;
}

void require_arity(const Statement& st, std::size_t lo, std::size_t hi) {
  const auto n = st.terms.size();
  if (n < lo || n > hi) {
    std::string want = std::to_string(lo);
    if (hi != lo) want += " or " + std::to_string(hi);
    syntax_error(st.where, st.keyword + " takes " + want + " terms, got " +
                               std::to_string(n));
  }
}

[[noreturn]] void unknown_keyword(const Statement& st, const char* allowed) {
  syntax_error(st.where, "unknown statement '" + st.keyword + "' (expected " +
                             allowed + ")");
}

// Rethrows a build error located at the statement that introduced its
// subject: the last declaration for duplicates, the first otherwise.
[[noreturn]] void relocate(const Error& e, const Document& doc) {
  const Statement* found = nullptr;
  for (const auto& st : doc.statements) {
    if (st.terms.empty() || st.terms[0].text != e.subject()) continue;
    found = &st;
    if (e.code() != ErrorCode::DuplicateId) break;
  }
  if (!found) throw e;
  throw Error(e.code(), at(found->where) + ": " + e.what(), e.subject());
}

}  // namespace

Document parse_document(std::string_view text) {
  Document doc;
  Lexer lex(text);
  for (;;) {
    auto head = lex.next();
    if (head.kind == Tok::end) break;
    if (head.kind != Tok::word)
      syntax_error(head.where,
                   std::string("expected a statement but found '") +
                       describe(head) + "'");
    Statement st{head.text, {}, head.where};
    expect_punct(lex, '(');
    for (;;) {
      auto t = lex.next();
      if (t.kind != Tok::word)
        syntax_error(t.where, std::string("expected a name but found '") +
                                  describe(t) + "'");
      st.terms.push_back({t.text, t.where});
      auto sep = lex.next();
      if (sep.kind == Tok::punct && sep.text == ")") break;
      if (sep.kind != Tok::punct || sep.text != ",")
        syntax_error(sep.where, std::string("expected ',' or ')' but found '") +
                                    describe(sep) + "'");
    }
    expect_punct(lex, '.');
    doc.statements.push_back(std::move(st));
  }
  return doc;
}

Framework parse_afra(std::string_view text) {
  const auto doc = parse_document(text);
  std::vector<ElementId> args;
  std::vector<AttackDecl> attacks;
  for (const auto& st : doc.statements) {
    if (st.keyword == "arg") {
      require_arity(st, 1, 1);
      args.push_back(term(st, 0));
    } else if (st.keyword == "att") {
      require_arity(st, 3, 3);
      attacks.push_back({term(st, 0), term(st, 1), term(st, 2)});
    } else {
      unknown_keyword(st, "arg or att");
    }
  }
  try {
    return build_framework(std::move(args), std::move(attacks));
  } catch (const Error& e) {
    relocate(e, doc);
  }
}

Eaf parse_eaf(std::string_view text) {
  const auto doc = parse_document(text);
  std::vector<ElementId> args;
  std::vector<EafPair> r;
  std::vector<EafDefeater> d;
  for (const auto& st : doc.statements) {
    if (st.keyword == "earg") {
      require_arity(st, 1, 1);
      args.push_back(term(st, 0));
    } else if (st.keyword == "eatt") {
      require_arity(st, 2, 2);
      r.emplace_back(term(st, 0), term(st, 1));
    } else if (st.keyword == "edatt") {
      require_arity(st, 3, 3);
      d.push_back({term(st, 0), {term(st, 1), term(st, 2)}});
    } else {
      unknown_keyword(st, "earg, eatt or edatt");
    }
  }
  return Eaf::build(std::move(args), std::move(r), std::move(d));
}

Hoaf parse_hoaf(std::string_view text) {
  const auto doc = parse_document(text);
  std::vector<std::string> a_c, a_hash;
  std::map<std::string, std::string> not_map;
  std::vector<HoafPair> hash;
  for (const auto& st : doc.statements) {
    if (st.keyword == "carg") {
      require_arity(st, 1, 2);
      const auto& a = term(st, 0);
      if (not_map.contains(a))
        throw Error(ErrorCode::InvalidHoaf,
                    at(st.where) + ": '" + a + "' is declared more than once",
                    a);
      a_c.push_back(a);
      not_map[a] = st.terms.size() == 2 ? term(st, 1) : "not(" + a + ")";
    } else if (st.keyword == "hatt") {
      require_arity(st, 1, 1);
      a_hash.push_back(term(st, 0));
    } else if (st.keyword == "hpair") {
      require_arity(st, 2, 2);
      hash.push_back({term(st, 0), term(st, 1)});
    } else {
      unknown_keyword(st, "carg, hatt or hpair");
    }
  }
  return Hoaf::build(std::move(a_c), std::move(not_map), std::move(a_hash),
                     std::move(hash));
}

}  // namespace afra
