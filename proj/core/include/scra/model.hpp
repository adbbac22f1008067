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

#ifndef SCRA_MODEL_HPP_
#define SCRA_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scra {

/// Raised when a value violates a structural contract (bad contiguity,
/// period not a cycle, state out of range, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an evaluation would materialize more elements than the
/// configured cap allows. Carries the term that blew the budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string subterm, const std::string& what)
      : std::runtime_error(what), subterm_(std::move(subterm)) {}
  const std::string& subterm() const { return subterm_; }

 private:
  std::string subterm_;
};

/**
 * A finite state space. States are identified as 0..size-1.
 *
 * Sizes are capped so that the step universe (2 * size^2 kinds of atomic
 * steps) fits a 64-bit mask; this tool is meant for desk-scale spaces.
 */
struct StateSpace {
  int size = 1;

  StateSpace() = default;
  explicit StateSpace(int n) : size(n) {
    if (n < 1) throw ContractError("state space must have at least one state");
    if (n > kMaxStates)
      throw ContractError("state space too large (max " +
                          std::to_string(kMaxStates) + " states)");
  }

  static constexpr int kMaxStates = 5;

  int step_universe_size() const { return 2 * size * size; }
  bool contains(int state) const { return state >= 0 && state < size; }

  friend bool operator==(const StateSpace&, const StateSpace&) = default;
};

/// A step is taken either by the process itself or by its environment.
/// The two kinds partition the step universe.
enum class StepKind : std::uint8_t { Program, Environment };

/// One labeled state transition.
struct Step {
  StepKind kind = StepKind::Program;
  int pre = 0;
  int post = 0;

  friend auto operator<=>(const Step&, const Step&) = default;
};

inline Step pstep(int pre, int post) { return Step{StepKind::Program, pre, post}; }
inline Step estep(int pre, int post) { return Step{StepKind::Environment, pre, post}; }

std::string to_string(const Step& s);  // "p(0,1)" / "e(1,1)"

/// How a finite observation ends: successful completion, failure, or an
/// observation that stops early (infeasible continuation or an implied
/// prefix of a longer behaviour).
enum class Status : std::uint8_t { Terminated, Aborted, Incomplete };

std::string status_marker(Status s);  // "!term" / "!abort" / "!inc"

/**
 * A finite, state-contiguous step sequence starting in an explicit initial
 * state. Consecutive steps must chain through states:
 * steps[0].pre == initial and steps[i+1].pre == steps[i].post.
 *
 * Empty traces exist per initial state; this is what lets nil synchronize
 * per-state under parallel composition.
 */
struct Trace {
  int initial = 0;
  Status status = Status::Incomplete;
  std::vector<Step> steps;

  Trace() = default;
  Trace(int initial_state, std::vector<Step> ss, Status st);

  int final_state() const { return steps.empty() ? initial : steps.back().post; }
  std::size_t length() const { return steps.size(); }

  /// Prefix of the first n steps, relabeled with the given status.
  Trace prefix(std::size_t n, Status st) const;

  friend auto operator<=>(const Trace&, const Trace&) = default;
};

std::string to_string(const Trace& t);  // "0: p(0,1) e(1,1) !term"

/**
 * An ultimately periodic infinite step sequence: prefix . period^omega.
 * The period is non-empty and forms a state cycle; prefix.period.period...
 * is state-contiguous.
 *
 * Canonical form (see canonical_lasso): the period is primitive (not a
 * proper power under rotation) and the prefix is shortest (its last step
 * never equals the period's last step, so nothing more can be absorbed
 * into a rotation of the period).
 */
struct Lasso {
  int initial = 0;
  std::vector<Step> prefix;
  std::vector<Step> period;

  Lasso() = default;
  Lasso(int initial_state, std::vector<Step> pre, std::vector<Step> per);

  /// Step at position i of the infinite unrolling.
  const Step& step_at(std::size_t i) const;
  /// First n steps of the infinite unrolling.
  std::vector<Step> unroll(std::size_t n) const;
  /// State at position i (state before step i; i == 0 gives the initial).
  int state_at(std::size_t i) const;

  friend auto operator<=>(const Lasso&, const Lasso&) = default;
};

/// The unique canonical representative of the same infinite step sequence.
/// Idempotent. Throws ContractError on malformed input.
Lasso canonical_lasso(const Lasso& l);

bool is_canonical(const Lasso& l);

std::string to_string(const Lasso& l);  // "0: p(0,1) [e(1,1)]^w"

/**
 * Observation window: traces up to N steps, lassos with canonical prefix
 * up to K and canonical period up to L. Window equality of denotations is
 * literal set equality of the window contents.
 */
struct Window {
  int max_trace_len = 0;     // N
  int max_lasso_prefix = 0;  // K
  int max_lasso_period = 1;  // L

  Window() = default;
  Window(int n, int k, int l) : max_trace_len(n), max_lasso_prefix(k), max_lasso_period(l) {
    if (n < 0 || k < 0 || l < 1)
      throw ContractError("window requires N >= 0, K >= 0, L >= 1");
  }

  bool admits(const Trace& t) const {
    return static_cast<int>(t.steps.size()) <= max_trace_len;
  }
  bool admits(const Lasso& l) const {
    return static_cast<int>(l.prefix.size()) <= max_lasso_prefix &&
           static_cast<int>(l.period.size()) <= max_lasso_period;
  }

  friend auto operator<=>(const Window&, const Window&) = default;
};

std::string to_string(const Window& w);

/// True if the steps chain through states starting at `initial`.
bool contiguous(int initial, const std::vector<Step>& steps);

}  // namespace scra

#endif  // SCRA_MODEL_HPP_
