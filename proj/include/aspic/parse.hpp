#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aspic/errors.hpp"
#include "aspic/theory.hpp"

namespace aspic {

// Surface grammar (statements end with '.', '#' comments to end of line):
//
//   fact       := "fact" atom "."
//   assumption := "assume" atom "."
//   strict     := atom "<-" atom-list "."
//   defeasible := atom ":" atom "<=" atom-list "."     # name : head <= body
//   contrary   := "contrary" atom ":" atom-list "."    # subject : contraries
//   atom       := ident | ident "(" term {"," term} ")"
//
// Variables match [A-Z][A-Za-z0-9_]*, constants [a-z][A-Za-z0-9_]* | [0-9]+.
// "fact", "assume" and "contrary" act as keywords only at the start of a
// statement when followed by an atom; the "__" identifier prefix is reserved
// for generated predicates.

namespace detail {

struct Token {
  enum class Kind {
    ident,     // constant / variable / predicate / keyword
    lparen,
    rparen,
    comma,
    period,
    colon,
    arrow,     // <-
    darrow,    // <=
    eof,
  };
  Kind kind = Kind::eof;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::eof;
      return t;
    }
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    switch (c) {
      case '(': t.kind = Token::Kind::lparen; break;
      case ')': t.kind = Token::Kind::rparen; break;
      case ',': t.kind = Token::Kind::comma; break;
      case '.': t.kind = Token::Kind::period; break;
      case ':': t.kind = Token::Kind::colon; break;
      case '<': {
        advance();
        if (pos_ < text_.size() && text_[pos_] == '-') {
          t.kind = Token::Kind::arrow;
          t.text = "<-";
          advance();
          return t;
        }
        if (pos_ < text_.size() && text_[pos_] == '=') {
          t.kind = Token::Kind::darrow;
          t.text = "<=";
          advance();
          return t;
        }
        throw parse_error("expected '<-' or '<='", t.line, t.column);
      }
      default:
        throw parse_error(std::string("unexpected character '") + c + "'",
                          t.line, t.column);
    }
    t.text = c;
    advance();
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Theory parse() {
    Theory t;
    while (cur_.kind != Token::Kind::eof) {
      statement(t);
    }
    return t;
  }

 private:
  void shift() {
    cur_ = ahead_valid_ ? ahead_ : lexer_.next();
    ahead_valid_ = false;
  }

  const Token& peek() {
    if (!ahead_valid_) {
      ahead_ = lexer_.next();
      ahead_valid_ = true;
    }
    return ahead_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, cur_.line, cur_.column);
  }

  void expect(Token::Kind k, const char* what) {
    if (cur_.kind != k) fail(std::string("expected ") + what);
    shift();
  }

  bool at_keyword(const char* kw) {
    // A keyword must be followed by the start of an atom; "fact(X)" is a
    // plain atom with predicate "fact".
    return cur_.kind == Token::Kind::ident && cur_.text == kw &&
           peek().kind == Token::Kind::ident;
  }

  Atom atom() {
    if (cur_.kind != Token::Kind::ident) fail("expected atom");
    Atom a;
    a.predicate = cur_.text;
    const int line = cur_.line;
    const int column = cur_.column;
    if (a.predicate.rfind("__", 0) == 0) {
      throw parse_error("predicate '" + a.predicate +
                            "' uses the reserved '__' prefix",
                        line, column);
    }
    if (a.predicate.front() >= 'A' && a.predicate.front() <= 'Z') {
      throw parse_error("predicate '" + a.predicate +
                            "' must not start with an uppercase letter",
                        line, column);
    }
    shift();
    if (cur_.kind == Token::Kind::lparen) {
      shift();
      while (true) {
        if (cur_.kind != Token::Kind::ident) fail("expected term");
        a.args.push_back(term_from_token(cur_.text));
        shift();
        if (cur_.kind == Token::Kind::comma) {
          shift();
          continue;
        }
        break;
      }
      expect(Token::Kind::rparen, "')'");
    }
    note_arity(a, line, column);
    return a;
  }

  AtomSet atom_list() {
    AtomSet atoms;
    atoms.insert(atom());
    while (cur_.kind == Token::Kind::comma) {
      shift();
      atoms.insert(atom());
    }
    return atoms;
  }

  void note_arity(const Atom& a, int line, int column) {
    auto [it, inserted] = arity_.emplace(a.predicate, a.arity());
    if (!inserted && it->second != a.arity()) {
      throw parse_error("predicate '" + a.predicate + "' was used with arity " +
                            std::to_string(it->second) + ", now with arity " +
                            std::to_string(a.arity()),
                        line, column);
    }
  }

  void statement(Theory& t) {
    if (at_keyword("fact")) {
      shift();
      Atom a = atom();
      if (!a.ground()) fail("facts must be ground");
      t.facts.insert(std::move(a));
      expect(Token::Kind::period, "'.'");
      return;
    }
    if (at_keyword("assume")) {
      shift();
      Atom a = atom();
      if (!a.ground()) fail("assumptions must be ground");
      t.assumptions.insert(std::move(a));
      expect(Token::Kind::period, "'.'");
      return;
    }
    if (at_keyword("contrary")) {
      shift();
      ContraryExpr c;
      c.subject = atom();
      expect(Token::Kind::colon, "':'");
      c.contraries = atom_list();
      expect(Token::Kind::period, "'.'");
      t.contraries.insert(std::move(c));
      return;
    }

    Atom first = atom();
    if (cur_.kind == Token::Kind::arrow) {
      shift();
      StrictRule r;
      r.head = std::move(first);
      r.body = atom_list();
      expect(Token::Kind::period, "'.'");
      t.strict.insert(std::move(r));
      return;
    }
    if (cur_.kind == Token::Kind::colon) {
      shift();
      DefeasibleRule r;
      r.name = std::move(first);
      r.head = atom();
      expect(Token::Kind::darrow, "'<='");
      r.body = atom_list();
      expect(Token::Kind::period, "'.'");
      t.defeasible.insert(std::move(r));
      return;
    }
    fail("expected '<-' or ':' after atom");
  }

  Lexer lexer_;
  Token cur_;
  Token ahead_;
  bool ahead_valid_ = false;
  std::map<std::string, std::size_t> arity_;
};

}  // namespace detail

/// Parses theory text. Throws parse_error with a 1-based position on
/// malformed input, arity clashes, and reserved predicate names.
/// Duplicate declarations are deduplicated.
inline Theory parse_theory(std::string_view text) {
  return detail::Parser(text).parse();
}

}  // namespace aspic
