/*
 * Copyright (c) 2026, the scra authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "scra/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace scra {
namespace {

enum class Tok {
  Ident, Number,
  LParen, RParen, LBrace, RBrace, Comma, Semi,
  Plus, Caret, Par, Conj, FairPar, Bang,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
  long value = 0;  // Number
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      const int line = line_, col = col_;
      if (eof()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
          word.push_back(advance());
        out.push_back({Tok::Ident, word, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
          digits.push_back(advance());
        Token t{Tok::Number, digits, line, col};
        t.value = std::stol(digits);
        out.push_back(t);
      } else {
        switch (c) {
          case '(': out.push_back({Tok::LParen, "(", line, col}); advance(); break;
          case ')': out.push_back({Tok::RParen, ")", line, col}); advance(); break;
          case '{': out.push_back({Tok::LBrace, "{", line, col}); advance(); break;
          case '}': out.push_back({Tok::RBrace, "}", line, col}); advance(); break;
          case ',': out.push_back({Tok::Comma, ",", line, col}); advance(); break;
          case ';': out.push_back({Tok::Semi, ";", line, col}); advance(); break;
          case '+': out.push_back({Tok::Plus, "+", line, col}); advance(); break;
          case '^': out.push_back({Tok::Caret, "^", line, col}); advance(); break;
          case '!': out.push_back({Tok::Bang, "!", line, col}); advance(); break;
          case '&': {
            advance();
            if (eof() || peek() != '&') throw ParseError(line, col, "expected '&&'");
            advance();
            out.push_back({Tok::Conj, "&&", line, col});
            break;
          }
          case '|': {
            advance();
            if (eof() || peek() != '|') throw ParseError(line, col, "expected '||'");
            advance();
            // '||f' only when the f is not the start of a longer word.
            if (!eof() && peek() == 'f' && !ident_continues_after(1)) {
              advance();
              out.push_back({Tok::FairPar, "||f", line, col});
            } else {
              out.push_back({Tok::Par, "||", line, col});
            }
            break;
          }
          default:
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
      }
    }
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool ident_continues_after(std::size_t off) const {
    if (pos_ + off >= text_.size()) return false;
    const char c = text_[pos_ + off];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  CommandPtr run() {
    CommandPtr c = choice();
    expect(Tok::End, "end of input");
    return c;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  Token take() { return toks_[pos_++]; }
  void expect(Tok k, const std::string& what) {
    if (!at(k)) throw ParseError(cur().line, cur().col, "expected " + what);
    take();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur().line, cur().col, msg);
  }

  CommandPtr choice() {
    CommandPtr first = join();
    if (!at(Tok::Plus)) return first;
    std::vector<CommandPtr> cs{first};
    while (at(Tok::Plus)) {
      take();
      cs.push_back(join());
    }
    return cmd_choice(std::move(cs));
  }

  CommandPtr join() {
    CommandPtr c = sync();
    while (at(Tok::Caret)) {
      take();
      c = cmd_join(std::move(c), sync());
    }
    return c;
  }

  CommandPtr sync() {
    CommandPtr c = seq();
    std::optional<Tok> op;
    while (at(Tok::Par) || at(Tok::Conj) || at(Tok::FairPar)) {
      const Token t = take();
      if (op && *op != t.kind)
        throw ParseError(t.line, t.col,
                         "mixing synchronisation operators needs parentheses");
      op = t.kind;
      CommandPtr rhs = seq();
      switch (t.kind) {
        case Tok::Par: c = cmd_par(std::move(c), std::move(rhs)); break;
        case Tok::Conj: c = cmd_conj(std::move(c), std::move(rhs)); break;
        default: c = cmd_fairpar(std::move(c), std::move(rhs)); break;
      }
    }
    return c;
  }

  CommandPtr seq() {
    CommandPtr c = atom();
    while (at(Tok::Semi)) {
      take();
      c = cmd_seq(std::move(c), atom());
    }
    return c;
  }

  CommandPtr atom() {
    if (at(Tok::LParen)) {
      take();
      CommandPtr c = choice();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (at(Tok::Bang)) {
      take();
      AtomSpec spec = atomlit();
      spec.negated = !spec.negated;
      return cmd_atomic(std::move(spec));
    }
    if (!at(Tok::Ident)) fail("expected a command");
    const Token t = cur();
    const std::string& w = t.text;
    if (w == "abort") { take(); return cmd_abort(); }
    if (w == "magic") { take(); return cmd_magic(); }
    if (w == "nil") { take(); return cmd_nil(); }
    if (w == "skip") { take(); return cmd_skip(); }
    if (w == "chaos") { take(); return cmd_chaos(); }
    if (w == "term") { take(); return cmd_term(); }
    if (w == "fair") { take(); return cmd_fair(); }
    if (w == "pi" || w == "eps" || w == "alpha" || w == "pgm" || w == "env")
      return cmd_atomic(atomlit());
    if (w == "fin" || w == "om" || w == "inf") {
      take();
      expect(Tok::LParen, "'(' after iteration operator");
      CommandPtr c = choice();
      expect(Tok::RParen, "')'");
      if (w == "fin") return cmd_fin(std::move(c));
      if (w == "om") return cmd_om(std::move(c));
      return cmd_inf(std::move(c));
    }
    if (w == "pow") {
      take();
      expect(Tok::LParen, "'(' after pow");
      CommandPtr c = choice();
      expect(Tok::Comma, "',' before the exponent");
      if (!at(Tok::Number)) fail("exponent must be a natural number literal");
      const long e = take().value;
      expect(Tok::RParen, "')'");
      return cmd_pow(std::move(c), static_cast<int>(e));
    }
    fail("unknown identifier '" + w + "'");
  }

  AtomSpec atomlit() {
    if (!at(Tok::Ident)) fail("expected an atomic step literal");
    const Token t = take();
    AtomSpec spec;
    if (t.text == "pi") { spec.base = AtomSpec::Base::Pi; return spec; }
    if (t.text == "eps") { spec.base = AtomSpec::Base::Eps; return spec; }
    if (t.text == "alpha") { spec.base = AtomSpec::Base::Alpha; return spec; }
    if (t.text != "pgm" && t.text != "env")
      throw ParseError(t.line, t.col, "expected pi, eps, alpha, pgm or env");
    spec.base = t.text == "pgm" ? AtomSpec::Base::Pgm : AtomSpec::Base::Env;
    expect(Tok::LBrace, "'{'");
    if (!at(Tok::RBrace)) {
      while (true) {
        expect(Tok::LParen, "'(' starting a state pair");
        if (!at(Tok::Number)) fail("expected a state number");
        const int pre = static_cast<int>(take().value);
        expect(Tok::Comma, "',' between states");
        if (!at(Tok::Number)) fail("expected a state number");
        const int post = static_cast<int>(take().value);
        expect(Tok::RParen, "')' closing a state pair");
        spec.pairs.emplace_back(pre, post);
        if (at(Tok::Comma)) { take(); continue; }
        break;
      }
    }
    expect(Tok::RBrace, "'}'");
    return spec;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

CommandPtr parse_command(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace scra
