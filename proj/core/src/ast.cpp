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

#include "scra/ast.hpp"

namespace scra {

AtomicCommand AtomSpec::resolve(const StateSpace& space) const {
  AtomicCommand out = AtomicCommand::none(space);
  switch (base) {
    case Base::Pi: out = atomic_pi(space); break;
    case Base::Eps: out = atomic_eps(space); break;
    case Base::Alpha: out = atomic_alpha(space); break;
    case Base::Pgm:
    case Base::Env: {
      const StepKind kind = base == Base::Pgm ? StepKind::Program : StepKind::Environment;
      for (const auto& [pre, post] : pairs) {
        if (!space.contains(pre) || !space.contains(post))
          throw ContractError("atomic literal mentions state outside the space");
        out = out.with(Step{kind, pre, post});
      }
      break;
    }
    case Base::Mask: {
      if (mask_states != space.size)
        throw ContractError("resolved atomic mask built for a different space");
      out = AtomicCommand(space, mask);
      break;
    }
  }
  return negated ? atomic_negate(out) : out;
}

namespace {

CommandPtr leaf(NodeKind k) { return std::make_shared<Command>(k); }

CommandPtr binary(NodeKind k, CommandPtr a, CommandPtr b) {
  auto c = std::make_shared<Command>(k);
  c->children = {std::move(a), std::move(b)};
  return c;
}

CommandPtr unary(NodeKind k, CommandPtr a) {
  auto c = std::make_shared<Command>(k);
  c->children = {std::move(a)};
  return c;
}

}  // namespace

CommandPtr cmd_abort() { return leaf(NodeKind::Abort); }
CommandPtr cmd_magic() { return leaf(NodeKind::Magic); }
CommandPtr cmd_nil() { return leaf(NodeKind::Nil); }
CommandPtr cmd_skip() { return leaf(NodeKind::Skip); }
CommandPtr cmd_chaos() { return leaf(NodeKind::Chaos); }
CommandPtr cmd_term() { return leaf(NodeKind::Term); }
CommandPtr cmd_fair() { return leaf(NodeKind::Fair); }

CommandPtr cmd_atomic(AtomSpec spec) {
  auto c = std::make_shared<Command>(NodeKind::Atomic);
  c->atom = std::move(spec);
  return c;
}

namespace {
CommandPtr base_atom(AtomSpec::Base base) {
  AtomSpec spec;
  spec.base = base;
  return cmd_atomic(std::move(spec));
}
}  // namespace

CommandPtr cmd_pi() { return base_atom(AtomSpec::Base::Pi); }
CommandPtr cmd_eps() { return base_atom(AtomSpec::Base::Eps); }
CommandPtr cmd_alpha() { return base_atom(AtomSpec::Base::Alpha); }

CommandPtr cmd_atomic_mask(const StateSpace& space, std::uint64_t mask) {
  AtomSpec spec;
  spec.base = AtomSpec::Base::Mask;
  spec.mask_states = space.size;
  spec.mask = mask;
  return cmd_atomic(std::move(spec));
}

CommandPtr cmd_seq(CommandPtr a, CommandPtr b) {
  return binary(NodeKind::Seq, std::move(a), std::move(b));
}

CommandPtr cmd_choice(std::vector<CommandPtr> cs) {
  auto c = std::make_shared<Command>(NodeKind::Choice);
  c->children = std::move(cs);
  return c;
}

CommandPtr cmd_join(CommandPtr a, CommandPtr b) {
  return binary(NodeKind::Join, std::move(a), std::move(b));
}

CommandPtr cmd_par(CommandPtr a, CommandPtr b) {
  return binary(NodeKind::Par, std::move(a), std::move(b));
}

CommandPtr cmd_conj(CommandPtr a, CommandPtr b) {
  return binary(NodeKind::Conj, std::move(a), std::move(b));
}

CommandPtr cmd_fairpar(CommandPtr a, CommandPtr b) {
  return binary(NodeKind::FairPar, std::move(a), std::move(b));
}

CommandPtr cmd_fin(CommandPtr c) { return unary(NodeKind::Fin, std::move(c)); }
CommandPtr cmd_om(CommandPtr c) { return unary(NodeKind::Om, std::move(c)); }
CommandPtr cmd_inf(CommandPtr c) { return unary(NodeKind::Inf, std::move(c)); }

CommandPtr cmd_pow(CommandPtr c, int exponent) {
  if (exponent < 0) throw ContractError("pow exponent must be a natural number");
  auto node = unary(NodeKind::Pow, std::move(c));
  const_cast<Command&>(*node).exponent = exponent;
  return node;
}

CommandPtr cmd_sync(SyncOp op, CommandPtr a, CommandPtr b) {
  return op == SyncOp::Parallel ? cmd_par(std::move(a), std::move(b))
                                : cmd_conj(std::move(a), std::move(b));
}

bool structurally_equal(const CommandPtr& a, const CommandPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->exponent != b->exponent || !(a->atom == b->atom))
    return false;
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  return true;
}

CommandPtr expand_macros(const CommandPtr& c) {
  if (!c) return c;
  switch (c->kind) {
    case NodeKind::Skip:
      return cmd_om(cmd_eps());
    case NodeKind::Chaos:
      return cmd_om(cmd_alpha());
    case NodeKind::Term:
      return cmd_seq(cmd_fin(cmd_alpha()), cmd_om(cmd_eps()));
    case NodeKind::Fair:
      return cmd_seq(cmd_fin(cmd_eps()), cmd_om(cmd_seq(cmd_pi(), cmd_fin(cmd_eps()))));
    case NodeKind::FairPar: {
      CommandPtr lhs = expand_macros(c->children[0]);
      CommandPtr rhs = expand_macros(c->children[1]);
      CommandPtr fair = expand_macros(cmd_fair());
      CommandPtr skip = expand_macros(cmd_skip());
      return cmd_par(cmd_seq(cmd_conj(std::move(lhs), fair), skip),
                     cmd_seq(cmd_conj(std::move(rhs), fair), skip));
    }
    default:
      break;
  }
  bool changed = false;
  std::vector<CommandPtr> kids;
  kids.reserve(c->children.size());
  for (const CommandPtr& k : c->children) {
    CommandPtr e = expand_macros(k);
    changed = changed || e != k;
    kids.push_back(std::move(e));
  }
  if (!changed) return c;
  auto out = std::make_shared<Command>(c->kind);
  out->atom = c->atom;
  out->exponent = c->exponent;
  out->children = std::move(kids);
  return out;
}

std::size_t node_count(const CommandPtr& c) {
  if (!c) return 0;
  std::size_t n = 1;
  for (const CommandPtr& k : c->children) n += node_count(k);
  return n;
}

}  // namespace scra
