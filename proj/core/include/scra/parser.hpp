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

#ifndef SCRA_PARSER_HPP_
#define SCRA_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "scra/ast.hpp"

namespace scra {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/**
 * Parse a command term.
 *
 * Grammar (precedence high to low: ! on atomic literals, the function
 * forms fin/om/inf/pow, ';', the synchronisation level {'||', '&&',
 * '||f'}, '^', '+'):
 *
 *   cmd     := choice
 *   choice  := join ("+" join)*
 *   join    := sync ("^" sync)*
 *   sync    := seq (("||" | "&&" | "||f") seq)*
 *   seq     := atom (";" atom)*
 *   atom    := "abort" | "magic" | "nil" | "skip" | "chaos" | "term"
 *            | "fair" | "alpha" | "pi" | "eps" | atomlit | "!" atomlit
 *            | "fin(" cmd ")" | "om(" cmd ")" | "inf(" cmd ")"
 *            | "pow(" cmd "," nat ")" | "(" cmd ")"
 *   atomlit := ("pgm" | "env") "{" pairs "}" | "pi" | "eps" | "alpha"
 *
 * The three synchronisation operators share one precedence level and are
 * left-associative within a run of one operator; mixing distinct ones
 * without parentheses is a parse error.
 */
CommandPtr parse_command(std::string_view text);

}  // namespace scra

#endif  // SCRA_PARSER_HPP_
