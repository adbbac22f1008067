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

#include "scra/printer.hpp"

#include <sstream>

namespace scra {
namespace {

// Precedence levels, loosest binding first.
constexpr int kChoice = 1;
constexpr int kJoin = 2;
constexpr int kSync = 3;
constexpr int kSeq = 4;
constexpr int kAtom = 5;

int level_of(const Command& c) {
  switch (c.kind) {
    case NodeKind::Choice: return kChoice;
    case NodeKind::Join: return kJoin;
    case NodeKind::Par:
    case NodeKind::Conj:
    case NodeKind::FairPar: return kSync;
    case NodeKind::Seq: return kSeq;
    default: return kAtom;
  }
}

std::string pair_list(const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) os << ',';
    os << '(' << pairs[i].first << ',' << pairs[i].second << ')';
  }
  os << '}';
  return os.str();
}

std::string atom_text(const AtomSpec& a) {
  std::string neg = a.negated ? "!" : "";
  switch (a.base) {
    case AtomSpec::Base::Pi: return neg + "pi";
    case AtomSpec::Base::Eps: return neg + "eps";
    case AtomSpec::Base::Alpha: return neg + "alpha";
    case AtomSpec::Base::Pgm: return neg + "pgm" + pair_list(a.pairs);
    case AtomSpec::Base::Env: return neg + "env" + pair_list(a.pairs);
    case AtomSpec::Base::Mask: {
      // Resolved masks come from law machinery. Render something the
      // parser accepts and the evaluator reads back to the same set.
      StateSpace space(a.mask_states);
      AtomicCommand cmd = a.resolve(space);
      if (cmd == atomic_pi(space)) return "pi";
      if (cmd == atomic_eps(space)) return "eps";
      if (cmd == atomic_alpha(space)) return "alpha";
      std::vector<std::pair<int, int>> pg, en;
      for (const Step& s : cmd.steps()) {
        (s.kind == StepKind::Program ? pg : en).emplace_back(s.pre, s.post);
      }
      if (en.empty()) return "pgm" + pair_list(pg);
      if (pg.empty()) return "env" + pair_list(en);
      return "(pgm" + pair_list(pg) + " + env" + pair_list(en) + ")";
    }
  }
  return "alpha";
}

void render(const CommandPtr& c, std::ostringstream& os);

void child(const CommandPtr& k, int my_level, bool left_slot, NodeKind parent,
           std::ostringstream& os) {
  const int kl = level_of(*k);
  bool parens = kl < my_level;
  if (!parens && kl == my_level) {
    // Same level on the left is the natural left-associative reading,
    // except the sync level where distinct operators must not mix bare.
    if (!left_slot) parens = true;
    else if (my_level == kSync && k->kind != parent) parens = true;
    else if (my_level == kChoice) parens = true;  // nested choice node
  }
  if (parens) os << '(';
  render(k, os);
  if (parens) os << ')';
}

void render(const CommandPtr& c, std::ostringstream& os) {
  switch (c->kind) {
    case NodeKind::Abort: os << "abort"; return;
    case NodeKind::Magic: os << "magic"; return;
    case NodeKind::Nil: os << "nil"; return;
    case NodeKind::Skip: os << "skip"; return;
    case NodeKind::Chaos: os << "chaos"; return;
    case NodeKind::Term: os << "term"; return;
    case NodeKind::Fair: os << "fair"; return;
    case NodeKind::Atomic: os << atom_text(c->atom); return;
    case NodeKind::Fin:
    case NodeKind::Om:
    case NodeKind::Inf: {
      os << (c->kind == NodeKind::Fin ? "fin(" : c->kind == NodeKind::Om ? "om(" : "inf(");
      render(c->children[0], os);
      os << ')';
      return;
    }
    case NodeKind::Pow: {
      os << "pow(";
      render(c->children[0], os);
      os << ',' << c->exponent << ')';
      return;
    }
    case NodeKind::Seq: {
      child(c->children[0], kSeq, true, c->kind, os);
      os << " ; ";
      child(c->children[1], kSeq, false, c->kind, os);
      return;
    }
    case NodeKind::Par:
    case NodeKind::Conj:
    case NodeKind::FairPar: {
      child(c->children[0], kSync, true, c->kind, os);
      os << (c->kind == NodeKind::Par ? " || " : c->kind == NodeKind::Conj ? " && " : " ||f ");
      child(c->children[1], kSync, false, c->kind, os);
      return;
    }
    case NodeKind::Join: {
      child(c->children[0], kJoin, true, c->kind, os);
      os << " ^ ";
      child(c->children[1], kJoin, false, c->kind, os);
      return;
    }
    case NodeKind::Choice: {
      if (c->children.empty()) {
        os << "magic";  // the empty choice is the infeasible command
        return;
      }
      for (std::size_t i = 0; i < c->children.size(); ++i) {
        if (i > 0) os << " + ";
        child(c->children[i], kChoice, i == 0, c->kind, os);
      }
      return;
    }
  }
}

}  // namespace

std::string print_command(const CommandPtr& c) {
  std::ostringstream os;
  render(c, os);
  return os.str();
}

}  // namespace scra
