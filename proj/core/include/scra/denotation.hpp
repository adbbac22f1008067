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

#ifndef SCRA_DENOTATION_HPP_
#define SCRA_DENOTATION_HPP_

#include <map>
#include <memory>
#include <set>
#include <string>

#include "scra/ast.hpp"
#include "scra/closure.hpp"
#include "scra/model.hpp"

namespace scra {

/**
 * The exact observation window of a command's trace set: materialized
 * finite traces of length <= N plus canonical lassos with prefix <= K and
 * period <= L. Closure-closed, and it contains the empty Incomplete trace
 * for every state (every command refines the infeasible command).
 */
struct Denotation {
  Window window;
  std::set<Trace> finite;
  std::set<Lasso> infinite;

  std::size_t size() const { return finite.size() + infinite.size(); }
  bool has_status(Status s) const;
  friend bool operator==(const Denotation&, const Denotation&) = default;
};

/// Drop members outside `w`. The result of restricting a closed set is
/// closed, so this is safe at any point.
Denotation restrict_to(const Denotation& d, const Window& w);

struct EvalOptions {
  /// Upper bound on materialized elements per denotation. Exceeding it
  /// raises ResourceError; it never produces a wrong answer.
  std::size_t element_cap = 2'000'000;
};

/**
 * Window-exact evaluator for command terms.
 *
 * Evaluation runs on an enlarged internal window whose trace bound is
 * max(N, K+L): lasso computations assemble and test pieces of up to
 * prefix-plus-period length, and transient periods during lasso
 * synchronisation may reach L*L before canonicalization shrinks them.
 * Results are restricted to the requested window at the end;
 * canonicalization only ever shrinks a lasso, so nothing is pushed out.
 *
 * Denotations are memoized per structurally distinct subterm; the
 * evaluator is meant to be reused across many queries at one
 * space/window configuration. All values are immutable once returned.
 */
class Evaluator {
 public:
  Evaluator(const StateSpace& space, const Window& external, EvalOptions opts = {});

  /// Denotation restricted to the external window.
  Denotation denote(const CommandPtr& ast);

  /// Denotation at the internal (stored) window; memoized reference.
  const Denotation& denote_stored(const CommandPtr& ast);

  static Window stored_for(const Window& external);

  const StateSpace& space() const { return space_; }
  const Window& external_window() const { return external_; }
  const Window& stored_window() const { return stored_; }
  const Universe& universe() const { return universe_; }
  const EvalOptions& options() const { return opts_; }

 private:
  const Denotation& eval(const CommandPtr& core);
  Denotation eval_node(const CommandPtr& core);

  Denotation finish(TraceSets sets, const CommandPtr& origin);
  Denotation finish_preclosed(TraceSets sets, const CommandPtr& origin);

  Denotation eval_abort();
  Denotation eval_magic();
  Denotation eval_nil();
  Denotation eval_atomic(const AtomicCommand& a);
  Denotation combine_seq(const Denotation& a, const Denotation& b, const CommandPtr& origin);
  Denotation combine_sync(SyncOp op, const Denotation& a, const Denotation& b,
                          const CommandPtr& origin);
  Denotation eval_fin(const Denotation& c, const CommandPtr& origin);
  Denotation eval_om(const Denotation& c, const CommandPtr& origin);

  StateSpace space_;
  Window external_;
  Window stored_;
  EvalOptions opts_;
  Universe universe_;
  std::map<std::string, std::unique_ptr<Denotation>> memo_;
};

}  // namespace scra

#endif  // SCRA_DENOTATION_HPP_
