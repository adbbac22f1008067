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

#ifndef SCRA_AST_HPP_
#define SCRA_AST_HPP_

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "scra/atomic.hpp"
#include "scra/model.hpp"

namespace scra {

/**
 * Node kinds of the command term language.
 *
 * Skip, Chaos, Term, Fair and FairPar are derived constants/operators;
 * they expand structurally (expand_macros) before evaluation:
 *   skip        = om(eps)
 *   chaos       = om(alpha)
 *   term        = fin(alpha) ; om(eps)
 *   fair        = fin(eps) ; om(pi ; fin(eps))
 *   fairpar c d = (c && fair) ; skip || (d && fair) ; skip
 * Printing preserves the derived names when the user wrote them.
 */
enum class NodeKind : std::uint8_t {
  Abort,    // bottom: the failed command
  Magic,    // top: the infeasible command
  Nil,      // immediate successful termination
  Atomic,   // lifted atomic step command
  Seq,      // sequential composition
  Choice,   // n-ary nondeterministic choice (meet); empty = Magic
  Join,     // lattice join (conjunction of behaviours)
  Par,      // synchronous parallel
  Conj,     // weak conjunction
  FairPar,  // fair parallel (derived)
  Fin,      // finite iteration, zero or more times
  Om,       // finite or infinite iteration
  Inf,      // infinite iteration
  Pow,      // fixed iteration, exponent times
  Skip,
  Chaos,
  Term,
  Fair,
};

/**
 * A space-independent atomic step literal. Pi/Eps/Alpha resolve to the
 * usual step classes; Pgm/Env carry explicit (pre, post) pairs; Mask is a
 * resolved bit mask over a known space size (used when laws bind atomic
 * variables to arbitrary subsets). A literal may be negated.
 */
struct AtomSpec {
  enum class Base : std::uint8_t { Pi, Eps, Alpha, Pgm, Env, Mask };

  Base base = Base::Alpha;
  bool negated = false;
  std::vector<std::pair<int, int>> pairs;  // Pgm/Env
  int mask_states = 0;                     // Mask
  std::uint64_t mask = 0;                  // Mask

  AtomicCommand resolve(const StateSpace& space) const;

  friend bool operator==(const AtomSpec&, const AtomSpec&) = default;
};

class Command;
using CommandPtr = std::shared_ptr<const Command>;

/// An immutable command term. Construct via the cmd_* builders.
class Command {
 public:
  NodeKind kind;
  AtomSpec atom;                    // Atomic only
  std::vector<CommandPtr> children; // operator arguments
  int exponent = 0;                 // Pow only

  explicit Command(NodeKind k) : kind(k) {}
};

CommandPtr cmd_abort();
CommandPtr cmd_magic();
CommandPtr cmd_nil();
CommandPtr cmd_skip();
CommandPtr cmd_chaos();
CommandPtr cmd_term();
CommandPtr cmd_fair();
CommandPtr cmd_atomic(AtomSpec spec);
CommandPtr cmd_pi();
CommandPtr cmd_eps();
CommandPtr cmd_alpha();
CommandPtr cmd_atomic_mask(const StateSpace& space, std::uint64_t mask);
CommandPtr cmd_seq(CommandPtr a, CommandPtr b);
CommandPtr cmd_choice(std::vector<CommandPtr> cs);
CommandPtr cmd_join(CommandPtr a, CommandPtr b);
CommandPtr cmd_par(CommandPtr a, CommandPtr b);
CommandPtr cmd_conj(CommandPtr a, CommandPtr b);
CommandPtr cmd_fairpar(CommandPtr a, CommandPtr b);
CommandPtr cmd_fin(CommandPtr c);
CommandPtr cmd_om(CommandPtr c);
CommandPtr cmd_inf(CommandPtr c);
CommandPtr cmd_pow(CommandPtr c, int exponent);
CommandPtr cmd_sync(SyncOp op, CommandPtr a, CommandPtr b);

/// Deep structural equality.
bool structurally_equal(const CommandPtr& a, const CommandPtr& b);

/// Rewrite all derived constants/operators to core forms. Pure; the input
/// is unchanged. Idempotent.
CommandPtr expand_macros(const CommandPtr& c);

std::size_t node_count(const CommandPtr& c);

}  // namespace scra

#endif  // SCRA_AST_HPP_
