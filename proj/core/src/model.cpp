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

#include "scra/model.hpp"

#include <algorithm>
#include <sstream>

namespace scra {

std::string to_string(const Step& s) {
  std::ostringstream os;
  os << (s.kind == StepKind::Program ? 'p' : 'e') << '(' << s.pre << ',' << s.post << ')';
  return os.str();
}

std::string status_marker(Status s) {
  switch (s) {
    case Status::Terminated: return "!term";
    case Status::Aborted: return "!abort";
    case Status::Incomplete: return "!inc";
  }
  return "!?";
}

bool contiguous(int initial, const std::vector<Step>& steps) {
  int at = initial;
  for (const Step& s : steps) {
    if (s.pre != at) return false;
    at = s.post;
  }
  return true;
}

Trace::Trace(int initial_state, std::vector<Step> ss, Status st)
    : initial(initial_state), status(st), steps(std::move(ss)) {
  if (!contiguous(initial, steps))
    throw ContractError("trace steps are not state-contiguous");
}

Trace Trace::prefix(std::size_t n, Status st) const {
  Trace out;
  out.initial = initial;
  out.status = st;
  out.steps.assign(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

std::string to_string(const Trace& t) {
  std::ostringstream os;
  os << t.initial << ':';
  for (const Step& s : t.steps) os << ' ' << to_string(s);
  os << ' ' << status_marker(t.status);
  return os.str();
}

Lasso::Lasso(int initial_state, std::vector<Step> pre, std::vector<Step> per)
    : initial(initial_state), prefix(std::move(pre)), period(std::move(per)) {
  if (period.empty()) throw ContractError("lasso period must be non-empty");
  std::vector<Step> chain = prefix;
  chain.insert(chain.end(), period.begin(), period.end());
  if (!contiguous(initial, chain))
    throw ContractError("lasso prefix.period is not state-contiguous");
  if (period.back().post != period.front().pre)
    throw ContractError("lasso period is not a state cycle");
}

const Step& Lasso::step_at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

std::vector<Step> Lasso::unroll(std::size_t n) const {
  std::vector<Step> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(step_at(i));
  return out;
}

int Lasso::state_at(std::size_t i) const {
  if (i == 0) return initial;
  return step_at(i - 1).post;
}

namespace {

// Smallest d dividing n such that v = root^(n/d) under plain repetition.
std::size_t primitive_root_length(const std::vector<Step>& v) {
  const std::size_t n = v.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = (v[i] == v[i % d]);
    if (ok) return d;
  }
  return n;
}

}  // namespace

Lasso canonical_lasso(const Lasso& l) {
  // Constructor re-validates contiguity and the cycle property.
  Lasso work(l.initial, l.prefix, l.period);

  const std::size_t root = primitive_root_length(work.period);
  work.period.resize(root);

  // Absorb prefix steps into rotations of the period: u.x with x equal to
  // the period's last step denotes the same word as u with the period
  // rotated right by one.
  while (!work.prefix.empty() && work.prefix.back() == work.period.back()) {
    work.prefix.pop_back();
    std::rotate(work.period.rbegin(), work.period.rbegin() + 1, work.period.rend());
  }

  work.initial = work.prefix.empty() ? work.period.front().pre : work.prefix.front().pre;
  return work;
}

bool is_canonical(const Lasso& l) { return canonical_lasso(l) == l; }

std::string to_string(const Lasso& l) {
  std::ostringstream os;
  os << l.initial << ':';
  for (const Step& s : l.prefix) os << ' ' << to_string(s);
  os << " [";
  for (std::size_t i = 0; i < l.period.size(); ++i) {
    if (i > 0) os << ' ';
    os << to_string(l.period[i]);
  }
  os << "]^w";
  return os.str();
}

std::string to_string(const Window& w) {
  std::ostringstream os;
  os << "N=" << w.max_trace_len << " K=" << w.max_lasso_prefix << " L=" << w.max_lasso_period;
  return os.str();
}

}  // namespace scra
