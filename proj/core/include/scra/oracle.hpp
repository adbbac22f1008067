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

#ifndef SCRA_ORACLE_HPP_
#define SCRA_ORACLE_HPP_

#include <map>
#include <string>

#include "scra/ast.hpp"
#include "scra/closure.hpp"
#include "scra/model.hpp"

namespace scra {

/**
 * Brute-force membership oracle: decides whether one observation belongs
 * to a command's denotation by recursive decomposition of the observation
 * (split points for sequential composition and the iterations, kind
 * splittings for the synchronisation operators), independently of the
 * window-materializing evaluator. Exponential in term size; meant for
 * cross-validation at small windows and for re-checking emitted
 * counterexample witnesses.
 */
class Oracle {
 public:
  struct Options {
    std::size_t max_nodes = 512;  // guard on the normalized term size
  };

  Oracle(const StateSpace& space, const Window& external);
  Oracle(const StateSpace& space, const Window& external, Options opts);

  bool member(const Trace& t, const CommandPtr& ast);
  bool member(const Lasso& l, const CommandPtr& ast);

  const Window& piece_window() const { return stored_; }

 private:
  bool member_trace(const Trace& t, const CommandPtr& node);
  bool member_lasso(const Lasso& l, const CommandPtr& node);
  bool structural_trace(const Trace& t, const CommandPtr& node);
  bool structural_lasso(const Lasso& l, const CommandPtr& node);
  bool terminated_decomposable(int state, const std::vector<Step>& word, std::size_t from,
                               const CommandPtr& piece_source);
  CommandPtr normalize(const CommandPtr& ast);

  StateSpace space_;
  Window stored_;
  Universe universe_;
  Options opts_;
  std::map<std::pair<const Command*, std::string>, bool> memo_;
  std::map<std::string, CommandPtr> normal_forms_;
};

}  // namespace scra

#endif  // SCRA_ORACLE_HPP_
