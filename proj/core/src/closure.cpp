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

#include "scra/closure.hpp"

#include <algorithm>
#include <set>

namespace scra {

Universe::Universe(const StateSpace& space, const Window& window, std::size_t element_cap)
    : space_(space), window_(window) {
  const int n = space.size;

  steps_from_.resize(n);
  for (int s = 0; s < n; ++s) {
    for (int post = 0; post < n; ++post) {
      steps_from_[s].push_back(pstep(s, post));
      steps_from_[s].push_back(estep(s, post));
    }
  }

  // Contiguous words, bounded breadth-first so shorter words come first.
  words_from_.resize(n);
  std::size_t total = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<std::vector<Step>> frontier;
    for (const Step& st : steps_from_[s]) frontier.push_back({st});
    for (int len = 1; len <= window.max_trace_len && !frontier.empty(); ++len) {
      std::vector<std::vector<Step>> next;
      for (auto& w : frontier) {
        words_from_[s].push_back(w);
        ++total;
        if (element_cap != 0 && total > element_cap)
          throw ResourceError("<universe>", "window universe exceeds the element cap");
        if (len < window.max_trace_len) {
          for (const Step& st : steps_from_[w.back().post]) {
            std::vector<Step> ext = w;
            ext.push_back(st);
            next.push_back(std::move(ext));
          }
        }
      }
      frontier = std::move(next);
    }
  }

  // Canonical lassos: raw prefixes up to K joined with cycles up to L,
  // canonicalized and deduplicated. Every canonical form is itself such a
  // raw pair, so this enumeration is exhaustive for the window.
  lassos_from_.resize(n);
  for (int s = 0; s < n; ++s) {
    std::set<Lasso> seen;
    std::vector<std::vector<Step>> prefixes = {{}};
    for (const auto& w : words_from_[s])
      if (static_cast<int>(w.size()) <= window.max_lasso_prefix) prefixes.push_back(w);
    for (const auto& pre : prefixes) {
      const int anchor = pre.empty() ? s : pre.back().post;
      // Cycles from anchor of length 1..L.
      std::vector<std::vector<Step>> cyc;
      for (const Step& st : steps_from_[anchor]) cyc.push_back({st});
      for (int len = 1; len <= window.max_lasso_period; ++len) {
        std::vector<std::vector<Step>> next;
        for (auto& c : cyc) {
          if (c.back().post == anchor) {
            Lasso raw(s, pre, c);
            Lasso canon = canonical_lasso(raw);
            if (window.admits(canon) && seen.insert(canon).second) {
              lassos_from_[s].push_back(canon);
              ++total;
              if (element_cap != 0 && total > element_cap)
                throw ResourceError("<universe>", "window universe exceeds the element cap");
            }
          }
          if (len < window.max_lasso_period) {
            for (const Step& st : steps_from_[c.back().post]) {
              std::vector<Step> ext = c;
              ext.push_back(st);
              next.push_back(std::move(ext));
            }
          }
        }
        cyc = std::move(next);
      }
    }
    std::sort(lassos_from_[s].begin(), lassos_from_[s].end());
  }
}

const std::vector<std::vector<Step>>& Universe::words_from(int state) const {
  return words_from_.at(static_cast<std::size_t>(state));
}

const std::vector<Lasso>& Universe::lassos_from(int state) const {
  return lassos_from_.at(static_cast<std::size_t>(state));
}

const std::vector<Step>& Universe::steps_from(int state) const {
  return steps_from_.at(static_cast<std::size_t>(state));
}

namespace {

// Keep only aborted traces with no aborted proper prefix in the set; the
// extensions of the others are subsumed.
std::vector<Trace> minimal_aborted(const std::set<Trace>& traces) {
  std::vector<Trace> out;
  for (const Trace& t : traces) {
    if (t.status != Status::Aborted) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < t.steps.size() && minimal; ++j)
      minimal = traces.count(t.prefix(j, Status::Aborted)) == 0;
    if (minimal) out.push_back(t);
  }
  return out;
}

}  // namespace

TraceSets close_sets(TraceSets in, const Universe& universe) {
  const Window& w = universe.window();
  TraceSets out = std::move(in);

  // Abort closure first: it is the only rule that introduces new words.
  for (const Trace& t : minimal_aborted(out.traces)) {
    const int from = t.final_state();
    for (Status st : {Status::Terminated, Status::Aborted, Status::Incomplete}) {
      Trace same = t;
      same.status = st;
      out.traces.insert(std::move(same));
    }
    for (const auto& ext : universe.words_from(from)) {
      if (static_cast<int>(t.steps.size() + ext.size()) > w.max_trace_len) continue;
      std::vector<Step> steps = t.steps;
      steps.insert(steps.end(), ext.begin(), ext.end());
      for (Status st : {Status::Terminated, Status::Aborted, Status::Incomplete})
        out.traces.insert(Trace(t.initial, steps, st));
    }
    for (const Lasso& l : universe.lassos_from(t.initial)) {
      if (l.unroll(t.steps.size()) == t.steps) out.lassos.insert(l);
    }
  }

  // Prefix closure: improper prefixes included. Chains stop early at a
  // prefix that is already covered, since whoever inserted it continued
  // down its own chain (or sits in the set and owns a chain here).
  std::set<Trace> prefixes;
  for (const Trace& t : out.traces) {
    for (std::size_t i = t.steps.size() + 1; i-- > 0;) {
      Trace p = t.prefix(i, Status::Incomplete);
      const bool is_self = p == t;
      if (!is_self && out.traces.count(p)) break;
      if (!prefixes.insert(std::move(p)).second && !is_self) break;
    }
  }
  for (const Lasso& l : out.lassos) {
    for (std::size_t i = static_cast<std::size_t>(w.max_trace_len) + 1; i-- > 0;) {
      Trace p(l.initial, l.unroll(i), Status::Incomplete);
      if (out.traces.count(p)) break;
      if (!prefixes.insert(std::move(p)).second) break;
    }
  }
  out.traces.merge(prefixes);

  return out;
}

TraceSets close_sets(TraceSets in, const StateSpace& space, const Window& window) {
  Universe u(space, window);
  return close_sets(std::move(in), u);
}

}  // namespace scra
