// Copyright 2026 The dlorder Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>

#include "dlorder/allen.hpp"
#include "dlorder/core.hpp"

namespace dlorder {
namespace {

enum class Tok {
  kIdent,
  kNumber,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kDot,
  kImplies,
  kLess,
  kEquals,
  kConstDecl,
  kBindDecl,
  kEnd,
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kNumber: return "element literal";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kComma: return "','";
    case Tok::kDot: return "'.'";
    case Tok::kImplies: return "':-'";
    case Tok::kLess: return "'<'";
    case Tok::kEquals: return "'='";
    case Tok::kConstDecl: return "'@const'";
    case Tok::kBindDecl: return "'@bind'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '@';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourcePos pos{line_, col_};
      if (i_ >= text_.size()) {
        out.push_back({Tok::kEnd, "", pos});
        return out;
      }
      char c = text_[i_];
      if (ident_start(c)) {
        std::size_t start = i_;
        while (i_ < text_.size() && ident_char(text_[i_])) advance();
        out.push_back({Tok::kIdent, std::string(text_.substr(start, i_ - start)), pos});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
        std::size_t start = i_;
        advance();
        while (i_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[i_])) ||
                                     text_[i_] == '/' || text_[i_] == '-')) {
          advance();
        }
        out.push_back({Tok::kNumber, std::string(text_.substr(start, i_ - start)), pos});
      } else if (c == '@') {
        std::size_t start = i_;
        advance();
        while (i_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i_]))) advance();
        std::string_view word = text_.substr(start, i_ - start);
        if (word == "@const") {
          out.push_back({Tok::kConstDecl, std::string(word), pos});
        } else if (word == "@bind") {
          out.push_back({Tok::kBindDecl, std::string(word), pos});
        } else {
          throw ParseError(pos, "unknown directive '" + std::string(word) + "'");
        }
      } else if (c == ':' && i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
        advance();
        advance();
        out.push_back({Tok::kImplies, ":-", pos});
      } else {
        Tok kind;
        switch (c) {
          case '(': kind = Tok::kLParen; break;
          case ')': kind = Tok::kRParen; break;
          case '[': kind = Tok::kLBracket; break;
          case ']': kind = Tok::kRBracket; break;
          case ',': kind = Tok::kComma; break;
          case '.': kind = Tok::kDot; break;
          case '<': kind = Tok::kLess; break;
          case '=': kind = Tok::kEquals; break;
          default:
            throw ParseError(pos, std::string("unexpected character '") + c + "'");
        }
        advance();
        out.push_back({kind, std::string(1, c), pos});
      }
    }
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '%') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    while (peek().kind != Tok::kEnd) {
      if (peek().kind == Tok::kConstDecl) {
        parse_const_decl();
      } else if (peek().kind == Tok::kBindDecl) {
        parse_bind();
      } else {
        prog_.rules.push_back(parse_rule());
      }
    }
    return std::move(prog_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  Token expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind) {
      throw ParseError(t.pos, "expected " + std::string(describe(kind)) + ", found " +
                                  (t.kind == Tok::kEnd ? std::string(describe(t.kind))
                                                       : "'" + t.text + "'"));
    }
    return toks_[pos_++];
  }

  bool accept(Tok kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  void parse_const_decl() {
    expect(Tok::kConstDecl);
    do {
      Token id = expect(Tok::kIdent);
      if (!std::islower(static_cast<unsigned char>(id.text[0]))) {
        throw ParseError(id.pos, "constant names must start with a lowercase letter: '" +
                                     id.text + "'");
      }
      if (std::find(prog_.constants.begin(), prog_.constants.end(), id.text) ==
          prog_.constants.end()) {
        prog_.constants.push_back(id.text);
      }
    } while (accept(Tok::kComma));
    expect(Tok::kDot);
  }

  void parse_bind() {
    SourcePos pos = expect(Tok::kBindDecl).pos;
    Token id = expect(Tok::kIdent);
    check_declared(id);
    expect(Tok::kEquals);
    Token value = expect(Tok::kNumber);
    expect(Tok::kDot);
    prog_.bindings.push_back({id.text, value.text, pos});
  }

  void check_declared(const Token& id) {
    if (std::find(prog_.constants.begin(), prog_.constants.end(), id.text) ==
        prog_.constants.end()) {
      throw ParseError(id.pos, "undeclared constant '" + id.text + "'");
    }
  }

  Term make_term(const Token& id) {
    if (std::isupper(static_cast<unsigned char>(id.text[0])) || id.text[0] == '_') {
      return Term::Var(id.text);
    }
    check_declared(id);
    return Term::Const(id.text);
  }

  Term parse_term() { return make_term(expect(Tok::kIdent)); }

  std::vector<Term> parse_terms_until_rparen() {
    std::vector<Term> terms;
    if (peek().kind != Tok::kRParen) {
      do {
        terms.push_back(parse_term());
      } while (accept(Tok::kComma));
    }
    expect(Tok::kRParen);
    return terms;
  }

  void record_arity(const Token& sym, std::size_t arity) {
    auto [it, inserted] = prog_.idb_arity.emplace(sym.text, static_cast<int>(arity));
    if (!inserted && it->second != static_cast<int>(arity)) {
      throw ParseError(sym.pos, "arity mismatch for '" + sym.text + "': declared " +
                                    std::to_string(it->second) + ", used with " +
                                    std::to_string(arity));
    }
  }

  IdbAtom parse_idb_after_symbol(const Token& sym) {
    IdbAtom atom{sym.text, {}};
    if (accept(Tok::kLParen)) atom.args = parse_terms_until_rparen();
    record_arity(sym, atom.args.size());
    return atom;
  }

  Rule parse_rule() {
    Token sym = expect(Tok::kIdent);
    Rule rule;
    rule.pos = sym.pos;
    rule.head = parse_idb_after_symbol(sym);
    if (accept(Tok::kImplies)) {
      do {
        rule.body.push_back(parse_literal());
      } while (accept(Tok::kComma));
    }
    expect(Tok::kDot);
    return rule;
  }

  Atom parse_interval_args(RelationBits bits, SourcePos pos) {
    expect(Tok::kLParen);
    Term left = parse_term();
    expect(Tok::kComma);
    Term right = parse_term();
    expect(Tok::kRParen);
    return Atom{IntervalAtom{bits, std::move(left), std::move(right)}, pos};
  }

  Atom parse_literal() {
    const Token& first = peek();
    SourcePos pos = first.pos;
    if (first.kind == Tok::kLBracket) {
      ++pos_;
      RelationBits bits = 0;
      do {
        Token rel = expect(Tok::kIdent);
        auto b = allen::basic_from_name(rel.text);
        if (!b) throw ParseError(rel.pos, "unknown interval relation '" + rel.text + "'");
        bits |= allen::Relation::bit(*b);
      } while (accept(Tok::kComma));
      expect(Tok::kRBracket);
      return parse_interval_args(bits, pos);
    }
    Token id = expect(Tok::kIdent);
    if (peek().kind == Tok::kLess) {
      ++pos_;
      Term left = make_term(id);
      Term right = parse_term();
      return Atom{OrderAtom{std::move(left), std::move(right)}, pos};
    }
    if (peek().kind == Tok::kLParen) {
      if (auto b = allen::basic_from_name(id.text)) {
        return parse_interval_args(allen::Relation::bit(*b), pos);
      }
    }
    return Atom{parse_idb_after_symbol(id), pos};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Program prog_;
};

}  // namespace

bool is_relation_name(std::string_view name) {
  return allen::basic_from_name(name).has_value();
}

Program parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace dlorder
