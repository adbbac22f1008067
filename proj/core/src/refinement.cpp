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

#include "scra/refinement.hpp"

#include <algorithm>
#include <vector>

namespace scra {

std::string Witness::render() const {
  if (const Trace* t = std::get_if<Trace>(&obs)) return to_string(*t);
  return to_string(std::get<Lasso>(obs));
}

namespace {

/// Elements of `in` missing from `from`, paired with `side`.
template <typename T>
void collect_missing(const std::set<T>& in, const std::set<T>& from, Witness::Side side,
                     std::vector<std::pair<Witness::Side, T>>& out) {
  for (const T& x : in)
    if (!from.count(x)) out.emplace_back(side, x);
}

std::optional<Witness> pick_witness(const Denotation& lhs, const Denotation& rhs) {
  std::vector<std::pair<Witness::Side, Trace>> traces;
  collect_missing(lhs.finite, rhs.finite, Witness::Side::Lhs, traces);
  collect_missing(rhs.finite, lhs.finite, Witness::Side::Rhs, traces);
  if (!traces.empty()) {
    auto best = std::min_element(traces.begin(), traces.end(),
                                 [](const auto& a, const auto& b) {
                                   if (a.second.steps.size() != b.second.steps.size())
                                     return a.second.steps.size() < b.second.steps.size();
                                   return a.second < b.second;
                                 });
    return Witness{best->first, best->second};
  }
  std::vector<std::pair<Witness::Side, Lasso>> lassos;
  collect_missing(lhs.infinite, rhs.infinite, Witness::Side::Lhs, lassos);
  collect_missing(rhs.infinite, lhs.infinite, Witness::Side::Rhs, lassos);
  if (!lassos.empty()) {
    auto size_of = [](const Lasso& l) { return l.prefix.size() + l.period.size(); };
    auto best = std::min_element(lassos.begin(), lassos.end(),
                                 [&](const auto& a, const auto& b) {
                                   if (size_of(a.second) != size_of(b.second))
                                     return size_of(a.second) < size_of(b.second);
                                   return a.second < b.second;
                                 });
    return Witness{best->first, best->second};
  }
  return std::nullopt;
}

}  // namespace

namespace {

// The stored window differs from the requested one only in the trace
// bound, so window comparisons can run on the stored sets directly,
// skipping over-length traces instead of copying both sets first.
bool window_equal(const Denotation& a, const Denotation& b, const Window& w) {
  if (a.infinite != b.infinite) return false;
  auto ia = a.finite.begin(), ib = b.finite.begin();
  while (true) {
    while (ia != a.finite.end() && !w.admits(*ia)) ++ia;
    while (ib != b.finite.end() && !w.admits(*ib)) ++ib;
    if (ia == a.finite.end() || ib == b.finite.end())
      return ia == a.finite.end() && ib == b.finite.end();
    if (!(*ia == *ib)) return false;
    ++ia;
    ++ib;
  }
}

bool window_subset(const Denotation& inner, const Denotation& outer, const Window& w) {
  if (!std::includes(outer.infinite.begin(), outer.infinite.end(), inner.infinite.begin(),
                     inner.infinite.end()))
    return false;
  for (const Trace& t : inner.finite) {
    if (!w.admits(t)) continue;
    if (!outer.finite.count(t)) return false;
  }
  return true;
}

}  // namespace

Verdict check_equal(Evaluator& eval, const CommandPtr& lhs, const CommandPtr& rhs) {
  const Denotation& dl = eval.denote_stored(lhs);
  const Denotation& dr = eval.denote_stored(rhs);
  Verdict v;
  v.window = eval.external_window();
  if (window_equal(dl, dr, v.window)) {
    v.relation = RelationKind::Equal;
    return v;
  }
  v.relation = RelationKind::Incomparable;
  v.witness = pick_witness(restrict_to(dl, v.window), restrict_to(dr, v.window));
  return v;
}

Verdict check_refines(Evaluator& eval, const CommandPtr& coarse, const CommandPtr& fine) {
  const Denotation& dc = eval.denote_stored(coarse);
  const Denotation& df = eval.denote_stored(fine);
  Verdict v;
  v.window = eval.external_window();
  if (window_subset(df, dc, v.window)) {
    v.relation = RelationKind::RefinesTo;
    return v;
  }
  v.relation = RelationKind::Incomparable;
  // Witness: something the implementation does that the specification
  // does not allow.
  for (const Trace& t : df.finite) {
    if (!v.window.admits(t)) continue;
    if (!dc.finite.count(t)) {
      v.witness = Witness{Witness::Side::Rhs, t};
      break;
    }
  }
  if (!v.witness) {
    for (const Lasso& l : df.infinite) {
      if (!dc.infinite.count(l)) {
        v.witness = Witness{Witness::Side::Rhs, l};
        break;
      }
    }
  }
  return v;
}

CommandDiagnostics diagnose(const Denotation& d) {
  CommandDiagnostics out;
  out.has_terminated = d.has_status(Status::Terminated);
  out.has_aborted = d.has_status(Status::Aborted);
  out.has_lasso = !d.infinite.empty();

  int horizon = 0;
  for (const Trace& t : d.finite) {
    if (t.status != Status::Incomplete) continue;
    bool extended = false;
    for (const Trace& u : d.finite) {
      if (u.initial != t.initial || u.steps.size() <= t.steps.size()) continue;
      if (std::equal(t.steps.begin(), t.steps.end(), u.steps.begin())) {
        extended = true;
        break;
      }
    }
    if (!extended) {
      for (const Lasso& l : d.infinite) {
        if (l.initial == t.initial && l.unroll(t.steps.size()) == t.steps) {
          extended = true;
          break;
        }
      }
    }
    if (!extended) horizon = std::max(horizon, static_cast<int>(t.steps.size()));
  }
  out.progress_horizon = horizon;
  return out;
}

CommandDiagnostics diagnose(Evaluator& eval, const CommandPtr& c) {
  return diagnose(eval.denote(c));
}

}  // namespace scra
