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

#include "scra/denotation.hpp"

#include <algorithm>
#include <numeric>

#include "scra/printer.hpp"

namespace scra {

bool Denotation::has_status(Status s) const {
  return std::any_of(finite.begin(), finite.end(),
                     [s](const Trace& t) { return t.status == s; });
}

Denotation restrict_to(const Denotation& d, const Window& w) {
  Denotation out;
  out.window = w;
  for (const Trace& t : d.finite)
    if (w.admits(t)) out.finite.insert(t);
  for (const Lasso& l : d.infinite)
    if (w.admits(l)) out.infinite.insert(l);
  return out;
}

namespace {

constexpr unsigned kTermBit = 1u << 0;
constexpr unsigned kIncBit = 1u << 1;
constexpr unsigned kAbortBit = 1u << 2;

unsigned status_bit(Status s) {
  switch (s) {
    case Status::Terminated: return kTermBit;
    case Status::Incomplete: return kIncBit;
    case Status::Aborted: return kAbortBit;
  }
  return 0;
}

Status status_of_bit(unsigned bit) {
  if (bit == kTermBit) return Status::Terminated;
  if (bit == kIncBit) return Status::Incomplete;
  return Status::Aborted;
}

using PathKey = std::vector<int>;

PathKey path_of(const Trace& t) {
  PathKey key;
  key.reserve(t.steps.size() + 1);
  key.push_back(t.initial);
  for (const Step& s : t.steps) key.push_back(s.post);
  return key;
}

PathKey unrolled_path(const Lasso& l, int n) {
  PathKey key;
  key.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) key.push_back(l.state_at(static_cast<std::size_t>(i)));
  return key;
}

bool is_prefix(const PathKey& p, const PathKey& q) {
  return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

// Canonical form of an ultimately periodic state sequence; used to group
// lassos that could synchronise (they must share the full state word).
struct StateWord {
  std::vector<int> prefix;
  std::vector<int> period;
  friend auto operator<=>(const StateWord&, const StateWord&) = default;
};

StateWord state_word(const Lasso& l) {
  StateWord w;
  for (std::size_t i = 0; i < l.prefix.size(); ++i) w.prefix.push_back(l.state_at(i));
  for (std::size_t i = 0; i < l.period.size(); ++i)
    w.period.push_back(l.state_at(l.prefix.size() + i));
  // Primitive root of the period.
  const std::size_t n = w.period.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = (w.period[i] == w.period[i % d]);
    if (ok) {
      w.period.resize(d);
      break;
    }
  }
  // Absorb prefix tail into period rotations.
  while (!w.prefix.empty() && w.prefix.back() == w.period.back()) {
    w.prefix.pop_back();
    std::rotate(w.period.rbegin(), w.period.rbegin() + 1, w.period.rend());
  }
  return w;
}

}  // namespace

namespace {

/// Insert the canonical form of word.l into `out` when it fits the
/// window. A canonical lasso with a non-empty prefix absorbs nothing
/// more, so the attached prefix length is exact; only the pure-period
/// case can shrink back into the window. Deciding that up front keeps
/// attachment loops over large trace sets cheap.
void attach_lasso(std::set<Lasso>& out, int initial, const std::vector<Step>& word,
                  const Lasso& l, const Window& stored) {
  const auto max_prefix = static_cast<std::size_t>(stored.max_lasso_prefix);
  if (!l.prefix.empty()) {
    if (word.size() + l.prefix.size() > max_prefix) return;
  } else if (word.size() > max_prefix) {
    const std::vector<Step>& q = l.period;
    std::size_t absorbed = 0;
    while (absorbed < word.size() &&
           word[word.size() - 1 - absorbed] ==
               q[(q.size() - 1 - absorbed % q.size() + q.size()) % q.size()])
      ++absorbed;
    if (word.size() - absorbed > max_prefix) return;
  }
  std::vector<Step> pre = word;
  pre.insert(pre.end(), l.prefix.begin(), l.prefix.end());
  Lasso canon = canonical_lasso(Lasso(initial, std::move(pre), l.period));
  if (stored.admits(canon)) out.insert(std::move(canon));
}

/// Lassos of a continuation set indexed for attachment after a
/// terminated word. Only short words can pick up a lasso that already
/// has a prefix, so those are kept apart from the pure-period ones.
class LassoAttachIndex {
 public:
  explicit LassoAttachIndex(const std::set<Lasso>& lassos) {
    for (const Lasso& l : lassos)
      (l.prefix.empty() ? period_only_ : with_prefix_)[l.initial].push_back(&l);
  }

  void attach(std::set<Lasso>& out, int initial, const std::vector<Step>& word, int at,
              const Window& stored) const {
    if (static_cast<int>(word.size()) < stored.max_lasso_prefix) {
      if (auto it = with_prefix_.find(at); it != with_prefix_.end())
        for (const Lasso* l : it->second) attach_lasso(out, initial, word, *l, stored);
    }
    if (auto it = period_only_.find(at); it != period_only_.end())
      for (const Lasso* l : it->second) attach_lasso(out, initial, word, *l, stored);
  }

 private:
  std::map<int, std::vector<const Lasso*>> with_prefix_;
  std::map<int, std::vector<const Lasso*>> period_only_;
};

}  // namespace

Window Evaluator::stored_for(const Window& external) {
  const int m = std::max(external.max_trace_len,
                         external.max_lasso_prefix + external.max_lasso_period);
  return Window(m, external.max_lasso_prefix, external.max_lasso_period);
}

Evaluator::Evaluator(const StateSpace& space, const Window& external, EvalOptions opts)
    : space_(space),
      external_(external),
      stored_(stored_for(external)),
      opts_(opts),
      universe_(space, stored_, opts.element_cap) {}

Denotation Evaluator::denote(const CommandPtr& ast) {
  return restrict_to(denote_stored(ast), external_);
}

const Denotation& Evaluator::denote_stored(const CommandPtr& ast) {
  return eval(expand_macros(ast));
}

const Denotation& Evaluator::eval(const CommandPtr& core) {
  const std::string key = print_command(core);
  auto it = memo_.find(key);
  if (it != memo_.end()) return *it->second;
  Denotation d = eval_node(core);
  auto [pos, _] = memo_.emplace(key, std::make_unique<Denotation>(std::move(d)));
  return *pos->second;
}

Denotation Evaluator::eval_node(const CommandPtr& core) {
  switch (core->kind) {
    case NodeKind::Abort: return eval_abort();
    case NodeKind::Magic: return eval_magic();
    case NodeKind::Nil: return eval_nil();
    case NodeKind::Atomic: return eval_atomic(core->atom.resolve(space_));
    case NodeKind::Seq:
      return combine_seq(eval(core->children[0]), eval(core->children[1]), core);
    case NodeKind::Choice: {
      // A union of closed sets is closed; no re-closure needed.
      TraceSets acc;
      for (const CommandPtr& k : core->children) {
        const Denotation& d = eval(k);
        acc.traces.insert(d.finite.begin(), d.finite.end());
        acc.lassos.insert(d.infinite.begin(), d.infinite.end());
      }
      return finish_preclosed(std::move(acc), core);
    }
    case NodeKind::Join: {
      // Same for intersections.
      const Denotation& a = eval(core->children[0]);
      const Denotation& b = eval(core->children[1]);
      TraceSets acc;
      std::set_intersection(a.finite.begin(), a.finite.end(), b.finite.begin(),
                            b.finite.end(), std::inserter(acc.traces, acc.traces.end()));
      std::set_intersection(a.infinite.begin(), a.infinite.end(), b.infinite.begin(),
                            b.infinite.end(), std::inserter(acc.lassos, acc.lassos.end()));
      return finish_preclosed(std::move(acc), core);
    }
    case NodeKind::Par:
      return combine_sync(SyncOp::Parallel, eval(core->children[0]), eval(core->children[1]),
                          core);
    case NodeKind::Conj:
      return combine_sync(SyncOp::Conjunction, eval(core->children[0]),
                          eval(core->children[1]), core);
    case NodeKind::Fin: return eval_fin(eval(core->children[0]), core);
    case NodeKind::Om: return eval_om(eval(core->children[0]), core);
    case NodeKind::Inf:
      // inf(c) = om(c) ; magic
      return combine_seq(eval_om(eval(core->children[0]), core), eval_magic(), core);
    case NodeKind::Pow: {
      if (core->exponent == 0) return eval_nil();
      // c^(i+1) = c ; c^i, with the sub-power memoized under its own key.
      const Denotation& c = eval(core->children[0]);
      const Denotation& rest = eval(cmd_pow(core->children[0], core->exponent - 1));
      return combine_seq(c, rest, core);
    }
    default:
      throw ContractError("evaluator requires a macro-expanded term");
  }
}

Denotation Evaluator::finish(TraceSets sets, const CommandPtr& origin) {
  for (int s = 0; s < space_.size; ++s)
    sets.traces.insert(Trace(s, {}, Status::Incomplete));
  sets = close_sets(std::move(sets), universe_);
  return finish_preclosed(std::move(sets), origin);
}

Denotation Evaluator::finish_preclosed(TraceSets sets, const CommandPtr& origin) {
  for (int s = 0; s < space_.size; ++s)
    sets.traces.insert(Trace(s, {}, Status::Incomplete));
  if (sets.size() > opts_.element_cap)
    throw ResourceError(print_command(origin), "denotation exceeds the element cap");
  Denotation d;
  d.window = stored_;
  d.finite = std::move(sets.traces);
  d.infinite = std::move(sets.lassos);
  return d;
}

Denotation Evaluator::eval_abort() {
  TraceSets sets;
  for (int s = 0; s < space_.size; ++s) sets.traces.insert(Trace(s, {}, Status::Aborted));
  return finish(std::move(sets), cmd_abort());
}

Denotation Evaluator::eval_magic() { return finish(TraceSets{}, cmd_magic()); }

Denotation Evaluator::eval_nil() {
  TraceSets sets;
  for (int s = 0; s < space_.size; ++s) sets.traces.insert(Trace(s, {}, Status::Terminated));
  return finish(std::move(sets), cmd_nil());
}

Denotation Evaluator::eval_atomic(const AtomicCommand& a) {
  TraceSets sets;
  for (const Step& s : a.steps())
    sets.traces.insert(Trace(s.pre, {s}, Status::Terminated));
  return finish(std::move(sets), cmd_atomic_mask(space_, a.mask()));
}

Denotation Evaluator::combine_seq(const Denotation& a, const Denotation& b,
                                  const CommandPtr& origin) {
  const auto max_len = static_cast<std::size_t>(stored_.max_trace_len);
  TraceSets out;

  // Continuations grouped by word: concatenate once, stamp statuses
  // after; buckets sorted by length so the budget check breaks early.
  std::map<std::pair<int, std::vector<Step>>, unsigned> b_groups;
  for (const Trace& u : b.finite) b_groups[{u.initial, u.steps}] |= status_bit(u.status);
  std::map<int, std::vector<std::pair<const std::vector<Step>*, unsigned>>> b_by_init;
  for (const auto& [key, mask] : b_groups) b_by_init[key.first].push_back({&key.second, mask});
  for (auto& [_, bucket] : b_by_init)
    std::sort(bucket.begin(), bucket.end(),
              [](const auto& x, const auto& y) { return x.first->size() < y.first->size(); });
  const LassoAttachIndex b_lassos(b.infinite);

  std::vector<Step> buf;
  for (const Trace& t : a.finite) {
    if (t.status != Status::Terminated) {
      out.traces.insert(t);
      continue;
    }
    auto it = b_by_init.find(t.final_state());
    if (it != b_by_init.end()) {
      for (const auto& [word, mask] : it->second) {
        if (t.steps.size() + word->size() > max_len) break;
        buf = t.steps;
        buf.insert(buf.end(), word->begin(), word->end());
        for (unsigned bit : {kTermBit, kIncBit, kAbortBit})
          if (mask & bit) out.traces.insert(Trace(t.initial, buf, status_of_bit(bit)));
      }
    }
    b_lassos.attach(out.lassos, t.initial, t.steps, t.final_state(), stored_);
  }
  out.lassos.insert(a.infinite.begin(), a.infinite.end());
  return finish(std::move(out), origin);
}

namespace {

// Traces sharing one step word, with the statuses they occur under.
struct WordGroup {
  int initial = 0;
  std::vector<Step> word;
  unsigned statuses = 0;
};

std::map<PathKey, std::vector<WordGroup>> group_words(const std::set<Trace>& traces) {
  std::map<std::pair<int, std::vector<Step>>, unsigned> merged;
  for (const Trace& t : traces) merged[{t.initial, t.steps}] |= status_bit(t.status);
  std::map<PathKey, std::vector<WordGroup>> out;
  for (auto& [key, mask] : merged) {
    WordGroup g{key.first, key.second, mask};
    Trace probe(key.first, key.second, Status::Incomplete);
    out[path_of(probe)].push_back(std::move(g));
  }
  return out;
}

}  // namespace

Denotation Evaluator::combine_sync(SyncOp op, const Denotation& a, const Denotation& b,
                                   const CommandPtr& origin) {
  TraceSets out;

  // Traces pair when one state path is a prefix of the other's; within a
  // path, synchronise each pair of step words once and combine status
  // sets afterwards.
  auto a_paths = group_words(a.finite);
  auto b_paths = group_words(b.finite);

  std::vector<Step> buf;
  auto sync_into = [&](const std::vector<Step>& x, const std::vector<Step>& y,
                       std::size_t len) {
    buf.clear();
    for (std::size_t i = 0; i < len; ++i) {
      auto s = step_sync(op, x[i], y[i]);
      if (!s) return false;
      buf.push_back(*s);
    }
    return true;
  };

  auto emit_group_pair = [&](const WordGroup& g1, const WordGroup& g2) {
    const std::size_t k = std::min(g1.word.size(), g2.word.size());
    unsigned result = 0;
    if (g1.word.size() == g2.word.size()) {
      for (unsigned b1 = 0; b1 < 3; ++b1) {
        if (!(g1.statuses >> b1 & 1u)) continue;
        for (unsigned b2 = 0; b2 < 3; ++b2)
          if (g2.statuses >> b2 & 1u) result |= 1u << std::max(b1, b2);
      }
    } else {
      // The shorter observation stops at k; a terminated one cannot.
      const unsigned shorter = g1.word.size() < g2.word.size() ? g1.statuses : g2.statuses;
      result = shorter & ~kTermBit;
    }
    if (result == 0 || !sync_into(g1.word, g2.word, k)) return;
    for (unsigned bit : {kTermBit, kIncBit, kAbortBit})
      if (result & bit) out.traces.insert(Trace(g1.initial, buf, status_of_bit(bit)));
  };

  for (const auto& [ka, bucket_a] : a_paths) {
    for (auto it = b_paths.lower_bound(ka); it != b_paths.end() && is_prefix(ka, it->first);
         ++it) {
      for (const WordGroup& g1 : bucket_a)
        for (const WordGroup& g2 : it->second) emit_group_pair(g1, g2);
    }
    for (std::size_t len = 1; len < ka.size(); ++len) {
      auto it = b_paths.find(PathKey(ka.begin(), ka.begin() + static_cast<std::ptrdiff_t>(len)));
      if (it == b_paths.end()) continue;
      for (const WordGroup& g1 : bucket_a)
        for (const WordGroup& g2 : it->second) emit_group_pair(g1, g2);
    }
  }

  // A finite observation that is not yet complete synchronises with a
  // partner that can exhibit at least as many steps; lassos always can.
  const int horizon = stored_.max_trace_len;
  using UnrolledLasso = std::vector<Step>;
  std::map<PathKey, std::vector<UnrolledLasso>> a_lasso_paths, b_lasso_paths;
  for (const Lasso& l : a.infinite)
    a_lasso_paths[unrolled_path(l, horizon)].push_back(
        l.unroll(static_cast<std::size_t>(horizon)));
  for (const Lasso& l : b.infinite)
    b_lasso_paths[unrolled_path(l, horizon)].push_back(
        l.unroll(static_cast<std::size_t>(horizon)));

  auto emit_group_lasso = [&](const WordGroup& g, const UnrolledLasso& l) {
    const unsigned result = g.statuses & ~kTermBit;
    if (result == 0 || !sync_into(g.word, l, g.word.size())) return;
    for (unsigned bit : {kIncBit, kAbortBit})
      if (result & bit) out.traces.insert(Trace(g.initial, buf, status_of_bit(bit)));
  };

  auto pair_groups_with_lassos =
      [&](const std::map<PathKey, std::vector<WordGroup>>& groups,
          const std::map<PathKey, std::vector<UnrolledLasso>>& lassos) {
        for (const auto& [kt, bucket] : groups) {
          for (auto it = lassos.lower_bound(kt);
               it != lassos.end() && is_prefix(kt, it->first); ++it) {
            for (const WordGroup& g : bucket)
              for (const UnrolledLasso& l : it->second) emit_group_lasso(g, l);
          }
        }
      };
  pair_groups_with_lassos(a_paths, b_lasso_paths);
  pair_groups_with_lassos(b_paths, a_lasso_paths);

  // Lassos pair when their full state words agree; the synchronised word
  // has prefix max(|u1|,|u2|) and period lcm(|v1|,|v2|) before
  // canonicalization.
  std::map<StateWord, std::vector<const Lasso*>> a_words, b_words;
  for (const Lasso& l : a.infinite) a_words[state_word(l)].push_back(&l);
  for (const Lasso& l : b.infinite) b_words[state_word(l)].push_back(&l);

  for (const auto& [word, bucket_a] : a_words) {
    auto it = b_words.find(word);
    if (it == b_words.end()) continue;
    for (const Lasso* l1 : bucket_a) {
      for (const Lasso* l2 : it->second) {
        const std::size_t m = std::max(l1->prefix.size(), l2->prefix.size());
        const std::size_t p = std::lcm(l1->period.size(), l2->period.size());
        std::vector<Step> synced;
        synced.reserve(m + p);
        bool ok = true;
        for (std::size_t i = 0; i < m + p && ok; ++i) {
          auto s = step_sync(op, l1->step_at(i), l2->step_at(i));
          if (!s) ok = false;
          else synced.push_back(*s);
        }
        if (!ok) continue;
        std::vector<Step> pre(synced.begin(), synced.begin() + static_cast<std::ptrdiff_t>(m));
        std::vector<Step> per(synced.begin() + static_cast<std::ptrdiff_t>(m), synced.end());
        Lasso canon = canonical_lasso(Lasso(l1->initial, std::move(pre), std::move(per)));
        if (stored_.admits(canon)) out.lassos.insert(std::move(canon));
      }
    }
  }

  return finish(std::move(out), origin);
}

namespace {

/// All words over `terminated` pieces (by initial state), i.e. the
/// terminated traces of the finite iteration, bounded by max_len.
std::vector<std::set<std::vector<Step>>> terminated_concats(
    const StateSpace& space, const std::set<Trace>& finite, int max_len) {
  std::map<int, std::vector<const Trace*>> term_by_init;
  for (const Trace& t : finite)
    if (t.status == Status::Terminated && !t.steps.empty())
      term_by_init[t.initial].push_back(&t);

  std::vector<std::set<std::vector<Step>>> out(static_cast<std::size_t>(space.size));
  for (int s = 0; s < space.size; ++s) {
    std::vector<std::pair<std::vector<Step>, int>> work = {{{}, s}};
    out[static_cast<std::size_t>(s)].insert(std::vector<Step>{});
    while (!work.empty()) {
      auto [word, at] = std::move(work.back());
      work.pop_back();
      auto it = term_by_init.find(at);
      if (it == term_by_init.end()) continue;
      for (const Trace* piece : it->second) {
        if (static_cast<int>(word.size() + piece->steps.size()) > max_len) continue;
        std::vector<Step> next = word;
        next.insert(next.end(), piece->steps.begin(), piece->steps.end());
        if (out[static_cast<std::size_t>(s)].insert(next).second)
          work.emplace_back(std::move(next), piece->final_state());
      }
    }
  }
  return out;
}

int end_state(int initial, const std::vector<Step>& word) {
  return word.empty() ? initial : word.back().post;
}

}  // namespace

Denotation Evaluator::eval_fin(const Denotation& c, const CommandPtr& origin) {
  const auto max_len = static_cast<std::size_t>(stored_.max_trace_len);
  auto concats = terminated_concats(space_, c.finite, stored_.max_trace_len);

  // Unfinished last rounds, grouped by word and sorted by length.
  std::map<std::pair<int, std::vector<Step>>, unsigned> tail_groups;
  for (const Trace& t : c.finite)
    if (t.status != Status::Terminated)
      tail_groups[{t.initial, t.steps}] |= status_bit(t.status);
  std::map<int, std::vector<std::pair<const std::vector<Step>*, unsigned>>> tails_by_init;
  for (const auto& [key, mask] : tail_groups)
    tails_by_init[key.first].push_back({&key.second, mask});
  for (auto& [_, bucket] : tails_by_init)
    std::sort(bucket.begin(), bucket.end(),
              [](const auto& x, const auto& y) { return x.first->size() < y.first->size(); });
  const LassoAttachIndex lassos(c.infinite);

  // Each member is a chain of terminated rounds followed by at most one
  // unfinished round of c, which may itself be infinite.
  TraceSets out;
  std::vector<Step> buf;
  for (int s = 0; s < space_.size; ++s) {
    for (const auto& word : concats[static_cast<std::size_t>(s)]) {
      out.traces.insert(Trace(s, word, Status::Terminated));
      const int at = end_state(s, word);
      if (auto it = tails_by_init.find(at); it != tails_by_init.end()) {
        for (const auto& [tail, mask] : it->second) {
          if (word.size() + tail->size() > max_len) break;
          buf = word;
          buf.insert(buf.end(), tail->begin(), tail->end());
          for (unsigned bit : {kIncBit, kAbortBit})
            if (mask & bit) out.traces.insert(Trace(s, buf, status_of_bit(bit)));
        }
      }
      lassos.attach(out.lassos, s, word, at, stored_);
    }
  }
  return finish(std::move(out), origin);
}

Denotation Evaluator::eval_om(const Denotation& c, const CommandPtr& origin) {
  // Finite observations of repeated execution are exactly those of the
  // finite iteration; the infinite part below adds the lassos.
  Denotation fin_part = eval_fin(c, origin);
  TraceSets out;
  out.traces = std::move(fin_part.finite);
  out.lassos = std::move(fin_part.infinite);

  // This iteration is the least fixpoint: where a round may be empty,
  // infinitely many empty rounds are possible, and that internal
  // divergence is aborting behaviour.
  {
    std::vector<bool> divergent(static_cast<std::size_t>(space_.size), false);
    for (int s = 0; s < space_.size; ++s)
      divergent[static_cast<std::size_t>(s)] =
          c.finite.count(Trace(s, {}, Status::Terminated)) > 0;
    auto concats = terminated_concats(space_, c.finite, stored_.max_trace_len);
    for (int s = 0; s < space_.size; ++s)
      for (const auto& word : concats[static_cast<std::size_t>(s)])
        if (divergent[static_cast<std::size_t>(end_state(s, word))])
          out.traces.insert(Trace(s, word, Status::Aborted));
  }

  const int piece_max = stored_.max_trace_len;

  for (int s = 0; s < space_.size; ++s) {
    for (const Lasso& cand : universe_.lassos_from(s)) {
      const std::size_t u = cand.prefix.size();
      const std::size_t v = cand.period.size();
      const std::size_t positions = u + v;
      auto advance = [&](std::size_t q) {
        return q < u ? q : u + (q - u) % v;
      };

      // Piece edges: position -> positions reachable by consuming one
      // terminated piece of c.
      std::vector<std::vector<std::size_t>> edges(positions);
      for (std::size_t p = 0; p < positions; ++p) {
        for (int m = 1; m <= piece_max; ++m) {
          std::vector<Step> word;
          word.reserve(static_cast<std::size_t>(m));
          for (int i = 0; i < m; ++i) word.push_back(cand.step_at(p + static_cast<std::size_t>(i)));
          Trace probe(cand.state_at(p), std::move(word), Status::Terminated);
          if (c.finite.count(probe)) edges[p].push_back(advance(p + static_cast<std::size_t>(m)));
        }
      }

      // Accepting positions: the remaining word is itself a lasso of c.
      auto accepting = [&](std::size_t p) {
        Lasso tail = [&] {
          if (p < u) {
            std::vector<Step> pre(cand.prefix.begin() + static_cast<std::ptrdiff_t>(p),
                                  cand.prefix.end());
            return Lasso(cand.state_at(p), std::move(pre), cand.period);
          }
          std::vector<Step> per = cand.period;
          std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(p - u), per.end());
          return Lasso(cand.state_at(p), {}, std::move(per));
        }();
        return c.infinite.count(canonical_lasso(tail)) > 0;
      };

      // Reachability from position 0, then: accept if an accepting
      // position is reached, or if the reachable subgraph has a cycle
      // (infinitely many pieces).
      std::vector<bool> reached(positions, false);
      std::vector<std::size_t> stack = {advance(0)};
      reached[advance(0)] = true;
      bool member = false;
      while (!stack.empty() && !member) {
        const std::size_t p = stack.back();
        stack.pop_back();
        if (accepting(p)) { member = true; break; }
        for (std::size_t q : edges[p]) {
          if (!reached[q]) {
            reached[q] = true;
            stack.push_back(q);
          }
        }
      }
      if (!member) {
        for (std::size_t p = 0; p < positions && !member; ++p) {
          if (!reached[p]) continue;
          // Can p reach itself through at least one piece?
          std::vector<bool> seen(positions, false);
          std::vector<std::size_t> work(edges[p].begin(), edges[p].end());
          while (!work.empty()) {
            const std::size_t q = work.back();
            work.pop_back();
            if (q == p) { member = true; break; }
            if (seen[q]) continue;
            seen[q] = true;
            work.insert(work.end(), edges[q].begin(), edges[q].end());
          }
        }
      }
      if (member) out.lassos.insert(cand);
    }
  }
  return finish(std::move(out), origin);
}

}  // namespace scra
