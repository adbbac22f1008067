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

#include "scra/examples.hpp"

#include <algorithm>

#include "scra/parser.hpp"

namespace scra {
namespace {

// x := 1; surrounded by arbitrary environment activity.
CommandPtr assign_x1() { return parse_command("skip ; pgm{(0,1),(1,1)} ; skip"); }

// do x /= 1 -> body od; the body keeps x = 0, exit is abstracted to skip.
CommandPtr loop_while_x0() { return parse_command("om(fin(eps) ; pgm{(0,0)}) ; skip"); }

// do true -> body od; the body keeps x; never terminates, and between
// iterations the environment may take over forever.
CommandPtr loop_forever() {
  return parse_command("om(fin(eps) ; pgm{(0,0),(1,1)}) ; inf(eps)");
}

bool period_stuck_before_assignment(const Lasso& l) {
  return std::all_of(l.period.begin(), l.period.end(),
                     [](const Step& s) { return s.pre == 0 && s.post == 0; });
}

bool period_all_environment(const Lasso& l) {
  return std::all_of(l.period.begin(), l.period.end(),
                     [](const Step& s) { return s.kind == StepKind::Environment; });
}

}  // namespace

std::vector<std::string> example_names() {
  return {"ex-term", "inc-y-loop", "fair-term", "example1", "example2"};
}

ExampleCase build_example(const std::string& name) {
  ExampleCase ex;
  ex.name = name;

  if (name == "ex-term") {
    ex.description = "x := 1 running next to `do x /= 1 -> y := y + 1 od`, unfair parallel";
    ex.ast = cmd_par(assign_x1(), loop_while_x0());
    ex.expectation =
        "may terminate, but the loop can pre-empt the assignment forever "
        "(a lasso stuck in x = 0 exists)";
    ex.check = [](Evaluator&, const Denotation& d, const CommandDiagnostics& g,
                  std::string& detail) {
      const bool preempted = std::any_of(d.infinite.begin(), d.infinite.end(),
                                         period_stuck_before_assignment);
      detail = preempted ? "found a pre-emption-forever lasso"
                         : "no pre-emption-forever lasso in the window";
      return g.has_terminated && preempted;
    };
    return ex;
  }

  if (name == "inc-y-loop") {
    ex.description = "`do true -> y := y + 1 od` alone, no fairness";
    ex.ast = loop_forever();
    ex.expectation =
        "the loop can be pre-empted forever (an all-environment lasso exists); "
        "conjoining fair removes every all-environment lasso";
    ex.check = [](Evaluator& eval, const Denotation& d, const CommandDiagnostics& g,
                  std::string& detail) {
      const bool preempted =
          std::any_of(d.infinite.begin(), d.infinite.end(), period_all_environment);
      const Denotation fair_version = eval.denote(cmd_conj(loop_forever(), cmd_fair()));
      const bool fair_preempted = std::any_of(fair_version.infinite.begin(),
                                              fair_version.infinite.end(),
                                              period_all_environment);
      detail = preempted ? (fair_preempted ? "fair conjunction kept an all-environment lasso"
                                           : "fair conjunction removed pre-emption forever")
                         : "no all-environment lasso in the window";
      return g.has_lasso && preempted && !fair_version.infinite.empty() && !fair_preempted;
    };
    return ex;
  }

  if (name == "fair-term") {
    ex.description = "(x := 1 && fair) || (do x /= 1 -> ... od && fair)";
    ex.ast = cmd_par(cmd_conj(assign_x1(), cmd_fair()),
                     cmd_conj(loop_while_x0(), cmd_fair()));
    ex.expectation =
        "terminates: the assignment cannot be pre-empted forever, so no lasso "
        "stays in x = 0";
    ex.check = [](Evaluator&, const Denotation& d, const CommandDiagnostics& g,
                  std::string& detail) {
      const bool stuck = std::any_of(d.infinite.begin(), d.infinite.end(),
                                     period_stuck_before_assignment);
      detail = stuck ? "a lasso never leaves x = 0" : "every window behaviour leaves x = 0";
      return g.has_terminated && !stuck;
    };
    return ex;
  }

  if (name == "example1") {
    ex.description = "(x := 1 && fair) || (do true -> ... od && fair)";
    ex.ast = cmd_par(cmd_conj(assign_x1(), cmd_fair()),
                     cmd_conj(loop_forever(), cmd_fair()));
    ex.expectation =
        "infeasible: fair execution of the assignment bounds its whole trace, the "
        "loop never terminates, so the composition has no lasso and never terminates";
    ex.check = [](Evaluator&, const Denotation&, const CommandDiagnostics& g,
                  std::string& detail) {
      detail = "terminated=" + std::string(g.has_terminated ? "yes" : "no") +
               " lasso=" + (g.has_lasso ? "yes" : "no");
      return !g.has_lasso && !g.has_terminated && !g.has_aborted;
    };
    return ex;
  }

  if (name == "example2") {
    ex.description = "((x := 1 && fair) ; skip) || ((do true -> ... od && fair) ; skip)";
    ex.ast = cmd_par(cmd_seq(cmd_conj(assign_x1(), cmd_fair()), cmd_skip()),
                     cmd_seq(cmd_conj(loop_forever(), cmd_fair()), cmd_skip()));
    ex.expectation =
        "feasible again: fair only until termination, so the loop may run forever "
        "after the assignment finishes (a lasso exists)";
    ex.check = [](Evaluator&, const Denotation&, const CommandDiagnostics& g,
                  std::string& detail) {
      detail = std::string("lasso=") + (g.has_lasso ? "yes" : "no");
      return g.has_lasso;
    };
    return ex;
  }

  throw ContractError("unknown example '" + name + "'");
}

ExampleOutcome run_example(const ExampleCase& ex, const Window& window,
                           std::size_t element_cap) {
  Evaluator eval(StateSpace(2), window, EvalOptions{element_cap});
  const Denotation d = eval.denote(ex.ast);
  ExampleOutcome out;
  out.name = ex.name;
  out.description = ex.description;
  out.expectation = ex.expectation;
  out.diagnostics = diagnose(d);
  out.pass = ex.check(eval, d, out.diagnostics, out.detail);
  return out;
}

}  // namespace scra
