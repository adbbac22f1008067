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

#ifndef SCRA_CLOSURE_HPP_
#define SCRA_CLOSURE_HPP_

#include <set>
#include <vector>

#include "scra/model.hpp"

namespace scra {

/// A pair of window-bounded observation sets.
struct TraceSets {
  std::set<Trace> traces;
  std::set<Lasso> lassos;

  std::size_t size() const { return traces.size() + lassos.size(); }
  friend bool operator==(const TraceSets&, const TraceSets&) = default;
};

/**
 * Cached enumerations of everything a window can hold over a space:
 * all contiguous step words from each state (up to the trace bound) and
 * all canonical lassos from each state (prefix/period bounds). Shared by
 * the closure rules, the evaluator and the membership oracle.
 */
class Universe {
 public:
  Universe(const StateSpace& space, const Window& window, std::size_t element_cap = 0);

  const StateSpace& space() const { return space_; }
  const Window& window() const { return window_; }

  /// All contiguous words from `state` of length 1..N, shortest first.
  const std::vector<std::vector<Step>>& words_from(int state) const;

  /// All canonical lassos with initial `state`, prefix <= K, period <= L.
  const std::vector<Lasso>& lassos_from(int state) const;

  /// Steps enabled from a state (every kind/post combination).
  const std::vector<Step>& steps_from(int state) const;

 private:
  StateSpace space_;
  Window window_;
  std::vector<std::vector<Step>> steps_from_;
  std::vector<std::vector<std::vector<Step>>> words_from_;
  std::vector<std::vector<Lasso>> lassos_from_;
};

/**
 * Smallest superset of the input closed under the two rules that make a
 * trace set a valid command denotation:
 *
 *  (a) prefix closure: every prefix of a trace, the trace itself
 *      included, relabeled Incomplete is present; every finite unrolled
 *      prefix of a lasso up to the trace bound, labeled Incomplete, is
 *      present;
 *  (b) abort closure: after an Aborted trace anything may happen -- every
 *      contiguous extension within the window is present with every
 *      status, and every window lasso extending the aborted trace is
 *      present.
 *
 * Idempotent, monotone and extensive in both components.
 */
TraceSets close_sets(TraceSets in, const Universe& universe);

/// Convenience overload building a throwaway Universe.
TraceSets close_sets(TraceSets in, const StateSpace& space, const Window& window);

}  // namespace scra

#endif  // SCRA_CLOSURE_HPP_
