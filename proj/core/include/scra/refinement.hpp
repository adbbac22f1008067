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

#ifndef SCRA_REFINEMENT_HPP_
#define SCRA_REFINEMENT_HPP_

#include <optional>
#include <string>
#include <variant>

#include "scra/denotation.hpp"

namespace scra {

enum class RelationKind { Equal, RefinesTo, Incomparable };

/// A counterexample observation together with the side whose denotation
/// contains it.
struct Witness {
  enum class Side { Lhs, Rhs };
  Side side = Side::Lhs;
  std::variant<Trace, Lasso> obs;

  std::string render() const;
};

/**
 * Result of a window check. Equality verdicts are exact for the window;
 * refinement confirmation is "up to window" only (a refutation, in
 * contrast, is exact: the witness genuinely distinguishes the sides).
 */
struct Verdict {
  RelationKind relation = RelationKind::Incomparable;
  std::optional<Witness> witness;
  Window window;

  bool holds() const { return relation != RelationKind::Incomparable; }
};

/// Window equality: identical finite and lasso sets. Otherwise a witness
/// from the symmetric difference, preferring the shortest trace and only
/// then the smallest lasso.
Verdict check_equal(Evaluator& eval, const CommandPtr& lhs, const CommandPtr& rhs);

/// Window refinement: coarse is refined by fine iff fine's window is a
/// subset of coarse's. The witness, if any, is a member of fine's window
/// missing from coarse's.
Verdict check_refines(Evaluator& eval, const CommandPtr& coarse, const CommandPtr& fine);

/// Feasibility and progress flags of one command's window.
struct CommandDiagnostics {
  bool has_terminated = false;
  bool has_aborted = false;
  bool has_lasso = false;
  /// Longest Incomplete trace that no longer member or lasso unrolling
  /// extends: the point past which the command makes no progress.
  int progress_horizon = 0;
};

CommandDiagnostics diagnose(const Denotation& d);
CommandDiagnostics diagnose(Evaluator& eval, const CommandPtr& c);

}  // namespace scra

#endif  // SCRA_REFINEMENT_HPP_
