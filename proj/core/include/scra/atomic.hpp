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

#ifndef SCRA_ATOMIC_HPP_
#define SCRA_ATOMIC_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "scra/model.hpp"

namespace scra {

/// Bit index of a step in the universe mask of a space.
int step_index(const StateSpace& space, const Step& s);
Step step_from_index(const StateSpace& space, int index);

/**
 * An atomic step command: a subset of the step universe of a state space,
 * represented as a bit mask. These form a Boolean algebra in which the
 * set of all steps (alpha) is the least element and the empty set (the
 * step disabled everywhere) is the greatest; choice is union, conjunction
 * is intersection and ! is complement.
 */
class AtomicCommand {
 public:
  AtomicCommand() = default;
  AtomicCommand(const StateSpace& space, std::uint64_t mask);

  static AtomicCommand none(const StateSpace& space) { return AtomicCommand(space, 0); }

  const StateSpace& space() const { return space_; }
  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  bool contains(const Step& s) const;

  AtomicCommand with(const Step& s) const;
  AtomicCommand unite(const AtomicCommand& other) const;
  AtomicCommand intersect(const AtomicCommand& other) const;

  /// All member steps in ascending index order.
  std::vector<Step> steps() const;

  friend bool operator==(const AtomicCommand&, const AtomicCommand&) = default;

 private:
  StateSpace space_{1};
  std::uint64_t mask_ = 0;
};

AtomicCommand atomic_pi(const StateSpace& space);     // all program steps
AtomicCommand atomic_eps(const StateSpace& space);    // all environment steps
AtomicCommand atomic_alpha(const StateSpace& space);  // all steps
AtomicCommand atomic_negate(const AtomicCommand& a);  // alpha \ a

/// Step synchronisation for parallel composition: a program step matches
/// the identical environment step of the partner and gives the program
/// step; identical environment steps give that environment step. Every
/// other pair fails to synchronise (an infeasible combination, not an
/// error).
std::optional<Step> step_sync_par(const Step& a, const Step& b);

/// Step synchronisation for weak conjunction: equal steps synchronise to
/// themselves; everything else is infeasible (set intersection at the
/// level of atomic steps).
std::optional<Step> step_sync_conj(const Step& a, const Step& b);

enum class SyncOp : std::uint8_t { Parallel, Conjunction };

std::optional<Step> step_sync(SyncOp op, const Step& a, const Step& b);

/// Pointwise lift of a step synchronisation table to atomic commands.
AtomicCommand lift_sync(SyncOp op, const AtomicCommand& a, const AtomicCommand& b);

}  // namespace scra

#endif  // SCRA_ATOMIC_HPP_
