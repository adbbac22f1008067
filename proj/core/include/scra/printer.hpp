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

#ifndef SCRA_PRINTER_HPP_
#define SCRA_PRINTER_HPP_

#include <string>

#include "scra/ast.hpp"

namespace scra {

/// Minimal-parentheses rendering; parse(print(c)) is structurally equal
/// to c for every grammar-producible term. Derived constant names are
/// preserved.
std::string print_command(const CommandPtr& c);

}  // namespace scra

#endif  // SCRA_PRINTER_HPP_
