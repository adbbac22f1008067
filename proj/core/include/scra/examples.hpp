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

#ifndef SCRA_EXAMPLES_HPP_
#define SCRA_EXAMPLES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "scra/refinement.hpp"

namespace scra {

/**
 * Built-in scenarios over the two-state space x in {0,1}: an assignment
 * x := 1 running next to a loop, in unfair, fair-conjoined and
 * fair-until-termination variants. The guarded-command encodings are
 * illustrative: the assignment is a program step 0->1 (or 1->1)
 * surrounded by arbitrary environment activity, a loop iteration is a
 * program step that keeps x, and the guard test is folded into the
 * loop's program step. A non-terminating loop gets an explicit
 * environment-divergence tail so that being pre-empted forever is part
 * of its behaviour.
 */
struct ExampleCase {
  std::string name;
  std::string description;
  CommandPtr ast;
  std::string expectation;
  /// Decides whether the evaluated window matches the scenario's claim.
  std::function<bool(Evaluator&, const Denotation&, const CommandDiagnostics&,
                     std::string& detail)>
      check;
};

std::vector<std::string> example_names();
ExampleCase build_example(const std::string& name);

struct ExampleOutcome {
  std::string name;
  std::string description;
  std::string expectation;
  CommandDiagnostics diagnostics;
  bool pass = false;
  std::string detail;
};

ExampleOutcome run_example(const ExampleCase& ex, const Window& window,
                           std::size_t element_cap = 2'000'000);

}  // namespace scra

#endif  // SCRA_EXAMPLES_HPP_
