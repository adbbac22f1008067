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

#include "scra/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "scra/denotation.hpp"
#include "scra/printer.hpp"

namespace scra {
namespace {

/// Oracle normal form: derived constants expanded, pow unrolled into
/// sequential compositions and inf rewritten as om followed by magic, so
/// the recursion below deals with a fixed small set of node kinds.
CommandPtr normalize_rec(const CommandPtr& c) {
  switch (c->kind) {
    case NodeKind::Pow: {
      CommandPtr body = normalize_rec(c->children[0]);
      CommandPtr acc = cmd_nil();
      for (int i = 0; i < c->exponent; ++i) acc = cmd_seq(body, acc);
      return acc;
    }
    case NodeKind::Inf:
      return cmd_seq(cmd_om(normalize_rec(c->children[0])), cmd_magic());
    default: {
      if (c->children.empty()) return c;
      std::vector<CommandPtr> kids;
      kids.reserve(c->children.size());
      bool changed = false;
      for (const CommandPtr& k : c->children) {
        kids.push_back(normalize_rec(k));
        changed = changed || kids.back() != k;
      }
      if (!changed) return c;
      auto out = std::make_shared<Command>(c->kind);
      out->atom = c->atom;
      out->children = std::move(kids);
      return out;
    }
  }
}

std::vector<Step> slice(const std::vector<Step>& w, std::size_t from, std::size_t to) {
  return {w.begin() + static_cast<std::ptrdiff_t>(from),
          w.begin() + static_cast<std::ptrdiff_t>(to)};
}

int state_at(const Trace& t, std::size_t i) {
  return i == 0 ? t.initial : t.steps[i - 1].post;
}

/// The infinite tail of a lasso from position i, canonicalized.
Lasso tail_lasso(const Lasso& l, std::size_t i) {
  const std::size_t u = l.prefix.size();
  if (i < u) {
    std::vector<Step> pre(l.prefix.begin() + static_cast<std::ptrdiff_t>(i), l.prefix.end());
    return canonical_lasso(Lasso(l.state_at(i), std::move(pre), l.period));
  }
  std::vector<Step> per = l.period;
  std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>((i - u) % per.size()),
              per.end());
  return canonical_lasso(Lasso(l.state_at(i), {}, std::move(per)));
}

bool same_state_word(const Lasso& a, const Lasso& b) {
  // Ultimately periodic state sequences agree iff they agree on a window
  // of combined prefix plus lcm-period length.
  if (a.initial != b.initial) return false;
  const std::size_t horizon = std::max(a.prefix.size(), b.prefix.size()) +
                              std::lcm(a.period.size(), b.period.size());
  for (std::size_t i = 0; i <= horizon; ++i)
    if (a.state_at(i) != b.state_at(i)) return false;
  return true;
}

}  // namespace

Oracle::Oracle(const StateSpace& space, const Window& external)
    : Oracle(space, external, Options{}) {}

Oracle::Oracle(const StateSpace& space, const Window& external, Options opts)
    : space_(space),
      stored_(Evaluator::stored_for(external)),
      universe_(space, stored_),
      opts_(opts) {}

CommandPtr Oracle::normalize(const CommandPtr& ast) {
  const std::string key = print_command(ast);
  auto it = normal_forms_.find(key);
  if (it != normal_forms_.end()) return it->second;
  CommandPtr norm = normalize_rec(expand_macros(ast));
  if (node_count(norm) > opts_.max_nodes)
    throw ResourceError(print_command(ast), "term too large for the membership oracle");
  normal_forms_.emplace(key, norm);
  return norm;
}

bool Oracle::member(const Trace& t, const CommandPtr& ast) {
  return member_trace(t, normalize(ast));
}

bool Oracle::member(const Lasso& l, const CommandPtr& ast) {
  return member_lasso(canonical_lasso(l), normalize(ast));
}

bool Oracle::member_trace(const Trace& t, const CommandPtr& node) {
  // Every command admits the empty incomplete observation from any state.
  if (t.steps.empty() && t.status == Status::Incomplete) return true;

  const auto key = std::make_pair(node.get(), to_string(t));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  memo_.emplace(key, false);

  bool result = structural_trace(t, node);

  // Abort closure: anything extends a failed observation.
  for (std::size_t j = 0; j <= t.steps.size() && !result; ++j) {
    if (j == t.steps.size() && t.status == Status::Aborted) continue;
    result = member_trace(Trace(t.initial, slice(t.steps, 0, j), Status::Aborted), node);
  }

  memo_[key] = result;
  return result;
}

bool Oracle::member_lasso(const Lasso& l, const CommandPtr& node) {
  const auto key = std::make_pair(node.get(), to_string(l));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  memo_.emplace(key, false);

  bool result = structural_lasso(l, node);
  for (int j = 0; j <= stored_.max_trace_len && !result; ++j)
    result = member_trace(
        Trace(l.initial, l.unroll(static_cast<std::size_t>(j)), Status::Aborted), node);

  memo_[key] = result;
  return result;
}

bool Oracle::structural_trace(const Trace& t, const CommandPtr& node) {
  const std::vector<Step>& w = t.steps;
  switch (node->kind) {
    case NodeKind::Abort:
      return true;
    case NodeKind::Magic:
      return false;
    case NodeKind::Nil:
      return w.empty() && t.status == Status::Terminated;
    case NodeKind::Atomic:
      return w.size() == 1 && t.status != Status::Aborted &&
             node->atom.resolve(space_).contains(w[0]);
    case NodeKind::Choice:
      return std::any_of(node->children.begin(), node->children.end(),
                         [&](const CommandPtr& k) { return member_trace(t, k); });
    case NodeKind::Join:
      return member_trace(t, node->children[0]) && member_trace(t, node->children[1]);
    case NodeKind::Seq: {
      const CommandPtr& c = node->children[0];
      const CommandPtr& d = node->children[1];
      if (t.status != Status::Terminated && member_trace(t, c)) return true;
      for (std::size_t i = 0; i <= w.size(); ++i) {
        if (!member_trace(Trace(t.initial, slice(w, 0, i), Status::Terminated), c)) continue;
        if (member_trace(Trace(state_at(t, i), slice(w, i, w.size()), t.status), d))
          return true;
      }
      return false;
    }
    case NodeKind::Par:
    case NodeKind::Conj: {
      const SyncOp op = node->kind == NodeKind::Par ? SyncOp::Parallel : SyncOp::Conjunction;
      const CommandPtr& c = node->children[0];
      const CommandPtr& d = node->children[1];

      // Kind splittings of the word: weak conjunction demands the word
      // itself on both sides; under parallel each program step belongs to
      // exactly one side and environment steps to both.
      std::vector<std::size_t> free_positions;
      if (op == SyncOp::Parallel)
        for (std::size_t i = 0; i < w.size(); ++i)
          if (w[i].kind == StepKind::Program) free_positions.push_back(i);

      const std::size_t combos = std::size_t{1} << free_positions.size();
      for (std::size_t bits = 0; bits < combos; ++bits) {
        std::vector<Step> w1 = w, w2 = w;
        if (op == SyncOp::Parallel) {
          for (std::size_t i : free_positions) w2[i].kind = StepKind::Environment;
          for (std::size_t j = 0; j < free_positions.size(); ++j) {
            if ((bits >> j) & 1u) {
              w1[free_positions[j]].kind = StepKind::Environment;
              w2[free_positions[j]].kind = StepKind::Program;
            }
          }
        }
        auto check = [&](Status s1, Status s2) {
          return member_trace(Trace(t.initial, w1, s1), c) &&
                 member_trace(Trace(t.initial, w2, s2), d);
        };
        switch (t.status) {
          case Status::Terminated:
            if (check(Status::Terminated, Status::Terminated)) return true;
            break;
          case Status::Incomplete:
            if (check(Status::Incomplete, Status::Incomplete)) return true;
            break;
          case Status::Aborted:
            if (check(Status::Aborted, Status::Incomplete) ||
                check(Status::Incomplete, Status::Aborted) ||
                check(Status::Aborted, Status::Aborted))
              return true;
            break;
        }
      }
      return false;
    }
    case NodeKind::Fin:
    case NodeKind::Om: {
      const CommandPtr& c = node->children[0];
      if (t.status == Status::Terminated && terminated_decomposable(t.initial, w, 0, c))
        return true;
      for (std::size_t i = 0; i <= w.size(); ++i) {
        const std::vector<Step> head = slice(w, 0, i);
        if (!terminated_decomposable(t.initial, head, 0, c)) continue;
        if (member_trace(Trace(state_at(t, i), slice(w, i, w.size()), t.status), c))
          return true;
      }
      // The finite-or-infinite iteration is a least fixpoint: when a
      // round may be empty it can diverge internally, which aborts.
      if (node->kind == NodeKind::Om && t.status == Status::Aborted &&
          terminated_decomposable(t.initial, w, 0, c) &&
          member_trace(Trace(t.final_state(), {}, Status::Terminated), c))
        return true;
      return false;
    }
    default:
      throw ContractError("oracle requires a normalized term");
  }
}

bool Oracle::terminated_decomposable(int state, const std::vector<Step>& word,
                                     std::size_t from, const CommandPtr& piece_source) {
  if (from == word.size()) return true;
  const auto cap = static_cast<std::size_t>(stored_.max_trace_len);
  for (std::size_t m = 1; m + from <= word.size() && m <= cap; ++m) {
    const int piece_state = from == 0 ? state : word[from - 1].post;
    if (!member_trace(Trace(piece_state, slice(word, from, from + m), Status::Terminated),
                      piece_source))
      continue;
    if (terminated_decomposable(state, word, from + m, piece_source)) return true;
  }
  return false;
}

bool Oracle::structural_lasso(const Lasso& l, const CommandPtr& node) {
  switch (node->kind) {
    case NodeKind::Abort:
      return true;
    case NodeKind::Magic:
    case NodeKind::Nil:
    case NodeKind::Atomic:
      return false;  // no infinite behaviour of their own
    case NodeKind::Fin: {
      // Terminated rounds followed by one infinite round.
      const CommandPtr& c = node->children[0];
      for (std::size_t i = 0; i <= static_cast<std::size_t>(stored_.max_trace_len); ++i) {
        if (!terminated_decomposable(l.initial, l.unroll(i), 0, c)) continue;
        if (member_lasso(tail_lasso(l, i), c)) return true;
      }
      return false;
    }
    case NodeKind::Choice:
      return std::any_of(node->children.begin(), node->children.end(),
                         [&](const CommandPtr& k) { return member_lasso(l, k); });
    case NodeKind::Join:
    case NodeKind::Conj:
      // Weak conjunction synchronises equal steps only, so at the level
      // of infinite words it coincides with intersection, like join.
      return member_lasso(l, node->children[0]) && member_lasso(l, node->children[1]);
    case NodeKind::Seq: {
      const CommandPtr& c = node->children[0];
      const CommandPtr& d = node->children[1];
      if (member_lasso(l, c)) return true;
      for (std::size_t i = 0; i <= static_cast<std::size_t>(stored_.max_trace_len); ++i) {
        if (!member_trace(Trace(l.initial, l.unroll(i), Status::Terminated), c)) continue;
        if (member_lasso(tail_lasso(l, i), d)) return true;
      }
      return false;
    }
    case NodeKind::Par: {
      const CommandPtr& c = node->children[0];
      const CommandPtr& d = node->children[1];
      // A parallel lasso factors into two window lassos over the same
      // state word; the partner's kinds are determined pointwise.
      for (const Lasso& cand : universe_.lassos_from(l.initial)) {
        if (!same_state_word(cand, l)) continue;
        const std::size_t m = std::max(l.prefix.size(), cand.prefix.size());
        const std::size_t horizon = m + std::lcm(l.period.size(), cand.period.size());
        std::vector<Step> partner;
        partner.reserve(horizon);
        bool ok = true;
        for (std::size_t i = 0; i < horizon && ok; ++i) {
          const Step out = l.step_at(i);
          const Step mine = cand.step_at(i);
          if (out.kind == StepKind::Environment) {
            if (mine.kind != StepKind::Environment) ok = false;
            partner.push_back(out);
          } else {
            partner.push_back(Step{mine.kind == StepKind::Program ? StepKind::Environment
                                                                  : StepKind::Program,
                                   out.pre, out.post});
          }
        }
        if (!ok) continue;
        Lasso partner_lasso = canonical_lasso(
            Lasso(l.initial, slice(partner, 0, m), slice(partner, m, partner.size())));
        if (!stored_.admits(partner_lasso)) continue;
        if (member_lasso(cand, c) && member_lasso(partner_lasso, d)) return true;
      }
      return false;
    }
    case NodeKind::Om: {
      const CommandPtr& c = node->children[0];
      const std::size_t u = l.prefix.size();
      const std::size_t v = l.period.size();
      const std::size_t positions = u + v;
      auto advance = [&](std::size_t q) { return q < u ? q : u + (q - u) % v; };

      std::vector<std::vector<std::size_t>> edges(positions);
      const int piece_cap = stored_.max_trace_len;
      for (std::size_t p = 0; p < positions; ++p) {
        for (int m = 1; m <= piece_cap; ++m) {
          std::vector<Step> word;
          word.reserve(static_cast<std::size_t>(m));
          for (int i = 0; i < m; ++i)
            word.push_back(l.step_at(p + static_cast<std::size_t>(i)));
          if (member_trace(Trace(l.state_at(p), std::move(word), Status::Terminated), c))
            edges[p].push_back(advance(p + static_cast<std::size_t>(m)));
        }
      }

      std::vector<bool> reached(positions, false);
      std::vector<std::size_t> stack = {advance(0)};
      reached[advance(0)] = true;
      while (!stack.empty()) {
        const std::size_t p = stack.back();
        stack.pop_back();
        if (member_lasso(tail_lasso(l, p), c)) return true;
        for (std::size_t q : edges[p])
          if (!reached[q]) {
            reached[q] = true;
            stack.push_back(q);
          }
      }
      for (std::size_t p = 0; p < positions; ++p) {
        if (!reached[p]) continue;
        std::vector<bool> seen(positions, false);
        std::vector<std::size_t> work(edges[p].begin(), edges[p].end());
        while (!work.empty()) {
          const std::size_t q = work.back();
          work.pop_back();
          if (q == p) return true;
          if (seen[q]) continue;
          seen[q] = true;
          work.insert(work.end(), edges[q].begin(), edges[q].end());
        }
      }
      return false;
    }
    default:
      throw ContractError("oracle requires a normalized term");
  }
}

}  // namespace scra
