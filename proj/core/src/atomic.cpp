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

#include "scra/atomic.hpp"

namespace scra {

int step_index(const StateSpace& space, const Step& s) {
  if (!space.contains(s.pre) || !space.contains(s.post))
    throw ContractError("step mentions a state outside the space");
  const int n = space.size;
  const int kind = s.kind == StepKind::Program ? 0 : 1;
  return kind * n * n + s.pre * n + s.post;
}

Step step_from_index(const StateSpace& space, int index) {
  const int n = space.size;
  if (index < 0 || index >= space.step_universe_size())
    throw ContractError("step index out of range");
  const StepKind kind = index < n * n ? StepKind::Program : StepKind::Environment;
  const int rest = index % (n * n);
  return Step{kind, rest / n, rest % n};
}

AtomicCommand::AtomicCommand(const StateSpace& space, std::uint64_t mask)
    : space_(space), mask_(mask) {
  const int bits = space.step_universe_size();
  if (bits < 64 && (mask >> bits) != 0)
    throw ContractError("atomic command mask has bits outside the step universe");
}

bool AtomicCommand::contains(const Step& s) const {
  return (mask_ >> step_index(space_, s)) & 1u;
}

AtomicCommand AtomicCommand::with(const Step& s) const {
  return AtomicCommand(space_, mask_ | (std::uint64_t{1} << step_index(space_, s)));
}

AtomicCommand AtomicCommand::unite(const AtomicCommand& other) const {
  if (space_ != other.space_) throw ContractError("atomic commands over different spaces");
  return AtomicCommand(space_, mask_ | other.mask_);
}

AtomicCommand AtomicCommand::intersect(const AtomicCommand& other) const {
  if (space_ != other.space_) throw ContractError("atomic commands over different spaces");
  return AtomicCommand(space_, mask_ & other.mask_);
}

std::vector<Step> AtomicCommand::steps() const {
  std::vector<Step> out;
  const int bits = space_.step_universe_size();
  for (int i = 0; i < bits; ++i)
    if ((mask_ >> i) & 1u) out.push_back(step_from_index(space_, i));
  return out;
}

AtomicCommand atomic_pi(const StateSpace& space) {
  const int nn = space.size * space.size;
  std::uint64_t mask = nn >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nn) - 1);
  return AtomicCommand(space, mask);
}

AtomicCommand atomic_eps(const StateSpace& space) {
  const int nn = space.size * space.size;
  return AtomicCommand(space, atomic_pi(space).mask() << nn);
}

AtomicCommand atomic_alpha(const StateSpace& space) {
  return atomic_pi(space).unite(atomic_eps(space));
}

AtomicCommand atomic_negate(const AtomicCommand& a) {
  return AtomicCommand(a.space(), atomic_alpha(a.space()).mask() & ~a.mask());
}

std::optional<Step> step_sync_par(const Step& a, const Step& b) {
  if (a.pre != b.pre || a.post != b.post) return std::nullopt;
  if (a.kind == StepKind::Program && b.kind == StepKind::Program) return std::nullopt;
  if (a.kind == StepKind::Program || b.kind == StepKind::Program)
    return Step{StepKind::Program, a.pre, a.post};
  return a;  // identical environment steps
}

std::optional<Step> step_sync_conj(const Step& a, const Step& b) {
  if (a == b) return a;
  return std::nullopt;
}

std::optional<Step> step_sync(SyncOp op, const Step& a, const Step& b) {
  return op == SyncOp::Parallel ? step_sync_par(a, b) : step_sync_conj(a, b);
}

AtomicCommand lift_sync(SyncOp op, const AtomicCommand& a, const AtomicCommand& b) {
  AtomicCommand out = AtomicCommand::none(a.space());
  for (const Step& sa : a.steps())
    for (const Step& sb : b.steps())
      if (auto s = step_sync(op, sa, sb)) out = out.with(*s);
  return out;
}

}  // namespace scra
