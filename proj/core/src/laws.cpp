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

#include "scra/laws.hpp"

#include <chrono>
#include <sstream>

#include "scra/oracle.hpp"
#include "scra/parser.hpp"
#include "scra/printer.hpp"

namespace scra {

const CommandPtr& Binding::cmd(const std::string& name) const {
  auto it = commands.find(name);
  if (it == commands.end()) throw ContractError("unbound command variable " + name);
  return it->second;
}

CommandPtr Binding::atom(const StateSpace& space, const std::string& name) const {
  return cmd_atomic_mask(space, mask(name));
}

std::uint64_t Binding::mask(const std::string& name) const {
  auto it = atomics.find(name);
  if (it == atomics.end()) throw ContractError("unbound atomic variable " + name);
  return it->second;
}

int Binding::nat(const std::string& name) const {
  auto it = naturals.find(name);
  if (it == naturals.end()) throw ContractError("unbound natural variable " + name);
  return it->second;
}

const std::vector<CommandPtr>& Binding::set(const std::string& name) const {
  auto it = command_sets.find(name);
  if (it == command_sets.end()) throw ContractError("unbound command-set variable " + name);
  return it->second;
}

std::map<std::string, std::string> Binding::render(const StateSpace& space) const {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : commands) out[k] = print_command(v);
  for (const auto& [k, v] : atomics) out[k] = print_command(cmd_atomic_mask(space, v));
  for (const auto& [k, v] : naturals) out[k] = std::to_string(v);
  for (const auto& [k, vs] : command_sets) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) os << ", ";
      os << print_command(vs[i]);
    }
    os << '}';
    out[k] = os.str();
  }
  if (op == SyncOp::Conjunction) out["<op>"] = "&&";
  else if (!out.empty()) out["<op>"] = "||";
  return out;
}

namespace {

using B = const Binding&;
using C = const LawContext&;

VarSpec cv(std::string n) { return {std::move(n), VarSort::CommandVar}; }
VarSpec av(std::string n) { return {std::move(n), VarSort::AtomicVar}; }
VarSpec nv(std::string n) { return {std::move(n), VarSort::NaturalVar}; }
VarSpec sv(std::string n) { return {std::move(n), VarSort::CommandSetVar}; }

CommandPtr op_identity(SyncOp op) {
  return op == SyncOp::Parallel ? cmd_skip() : cmd_chaos();
}

CommandPtr atom_identity(SyncOp op) {
  return op == SyncOp::Parallel ? cmd_eps() : cmd_alpha();
}

CommandPtr lifted(C ctx, SyncOp op, std::uint64_t a, std::uint64_t b) {
  const AtomicCommand ca(ctx.space, a), cb(ctx.space, b);
  return cmd_atomic_mask(ctx.space, lift_sync(op, ca, cb).mask());
}

std::uint64_t pi_mask(C ctx) { return atomic_pi(ctx.space).mask(); }

LawSpec law(std::string name, std::string display, LawRelation rel,
            std::vector<VarSpec> vars, TermBuilder lhs, TermBuilder rhs) {
  LawSpec s;
  s.name = std::move(name);
  s.display = std::move(display);
  s.relation = rel;
  s.vars = std::move(vars);
  s.equations.push_back({std::move(lhs), std::move(rhs)});
  return s;
}

CommandPtr big_choice(std::vector<CommandPtr> cs) { return cmd_choice(std::move(cs)); }

CommandPtr choice2(CommandPtr a, CommandPtr b) {
  return cmd_choice({std::move(a), std::move(b)});
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::vector<CommandPtr> command_corpus() {
  static const char* kTerms[] = {
      "abort", "magic",  "nil",     "skip",    "chaos",      "term", "fair",
      "pi",    "eps",    "pi ; eps", "fin(pi)", "om(eps)",    "inf(alpha)",
  };
  std::vector<CommandPtr> out;
  for (const char* t : kTerms) out.push_back(parse_command(t));
  return out;
}

CommandPtr random_command(std::mt19937_64& rng, int depth, const StateSpace& space) {
  auto pick = [&rng](std::uint64_t n) { return static_cast<int>(rng() % n); };
  if (depth <= 1) {
    switch (pick(12)) {
      case 0: return cmd_abort();
      case 1: return cmd_magic();
      case 2: return cmd_nil();
      case 3: return cmd_skip();
      case 4: return cmd_chaos();
      case 5: return cmd_term();
      case 6: return cmd_fair();
      case 7: return cmd_pi();
      case 8: return cmd_eps();
      case 9: return cmd_alpha();
      default: {
        AtomSpec spec;
        spec.base = pick(2) == 0 ? AtomSpec::Base::Pgm : AtomSpec::Base::Env;
        spec.negated = pick(4) == 0;
        const int pairs = pick(4);
        for (int i = 0; i < pairs; ++i)
          spec.pairs.emplace_back(pick(static_cast<std::uint64_t>(space.size)),
                                  pick(static_cast<std::uint64_t>(space.size)));
        return cmd_atomic(std::move(spec));
      }
    }
  }
  auto sub = [&]() { return random_command(rng, depth - 1, space); };
  switch (pick(11)) {
    case 0:
    case 1: return cmd_seq(sub(), sub());
    case 2: {
      std::vector<CommandPtr> cs;
      const int n = 2 + pick(2);
      for (int i = 0; i < n; ++i) cs.push_back(sub());
      return cmd_choice(std::move(cs));
    }
    case 3: return cmd_join(sub(), sub());
    case 4: return cmd_par(sub(), sub());
    case 5: return cmd_conj(sub(), sub());
    case 6: return cmd_fin(sub());
    case 7: return cmd_om(sub());
    case 8: return cmd_inf(sub());
    case 9: return cmd_pow(sub(), pick(4));
    default: return cmd_fairpar(sub(), sub());
  }
}

std::vector<Binding> generate_bindings(const LawSpec& law, const StateSpace& space,
                                       int budget, std::uint64_t seed, int ast_depth) {
  std::mt19937_64 rng(seed);
  if (law.vars.empty()) budget = 1;

  const std::vector<CommandPtr> corpus = command_corpus();

  std::vector<std::uint64_t> curated;
  curated.push_back(atomic_pi(space).mask());
  curated.push_back(atomic_eps(space).mask());
  curated.push_back(atomic_alpha(space).mask());
  {
    AtomicCommand p0 = AtomicCommand::none(space).with(pstep(0, 0));
    AtomicCommand e0 = AtomicCommand::none(space).with(estep(0, 0));
    curated.push_back(p0.mask());
    curated.push_back(e0.mask());
    curated.push_back(atomic_negate(p0).mask());
    curated.push_back(atomic_negate(e0).mask());
    if (space.size > 1) {
      curated.push_back(AtomicCommand::none(space).with(pstep(0, 1)).mask());
      curated.push_back(AtomicCommand::none(space).with(estep(1, 0)).mask());
    }
  }

  auto pick = [&rng](std::uint64_t n) { return static_cast<std::size_t>(rng() % n); };
  auto random_cmd_var = [&]() -> CommandPtr {
    if (pick(10) < 6) return corpus[pick(corpus.size())];
    return random_command(rng, 1 + static_cast<int>(pick(static_cast<std::uint64_t>(ast_depth))),
                          space);
  };

  std::vector<Binding> out;
  out.reserve(static_cast<std::size_t>(budget));
  for (int i = 0; i < budget; ++i) {
    Binding b;
    for (const VarSpec& var : law.vars) {
      switch (var.sort) {
        case VarSort::CommandVar:
          b.commands[var.name] = random_cmd_var();
          break;
        case VarSort::AtomicVar:
          if (pick(10) < 7) b.atomics[var.name] = curated[pick(curated.size())];
          else b.atomics[var.name] = rng() & atomic_alpha(space).mask();
          break;
        case VarSort::NaturalVar:
          b.naturals[var.name] = static_cast<int>(pick(4));
          break;
        case VarSort::CommandSetVar: {
          const std::size_t size = law.allow_empty_set ? pick(4) : 1 + pick(3);
          std::vector<CommandPtr> cs;
          for (std::size_t j = 0; j < size; ++j) cs.push_back(random_cmd_var());
          b.command_sets[var.name] = std::move(cs);
          break;
        }
      }
    }

    // Constructive premise generators: force the premise, never filter.
    if (law.premise_tag == "term-refined") {
      for (auto& [_, c] : b.commands) c = cmd_conj(cmd_term(), c);
    } else if (law.premise_tag == "healthy") {
      for (auto& [_, c] : b.commands) c = cmd_seq(c, cmd_skip());
    } else if (law.premise_tag == "conj-fin") {
      for (auto& [name, c] : b.commands)
        if (name != "A" && name != "B") c = cmd_conj(c, cmd_fin(cmd_alpha()));
    } else if (law.premise_tag == "refines-pair") {
      // d1 := d2 + d' so that d1 is refined by d2.
      b.commands["d1"] = choice2(b.cmd("d2"), b.cmd("d1"));
    }

    out.push_back(std::move(b));
  }
  return out;
}

std::vector<LawSpec> law_catalog() {
  std::vector<LawSpec> laws;
  auto add = [&laws](LawSpec s) { laws.push_back(std::move(s)); };

  // ----- sequential composition -----------------------------------------
  add(law("seq-assoc", "c0 ; (c1 ; c2) = (c0 ; c1) ; c2", LawRelation::Equality,
          {cv("c0"), cv("c1"), cv("c2")},
          [](B b, C) { return cmd_seq(b.cmd("c0"), cmd_seq(b.cmd("c1"), b.cmd("c2"))); },
          [](B b, C) { return cmd_seq(cmd_seq(b.cmd("c0"), b.cmd("c1")), b.cmd("c2")); }));

  {
    LawSpec s = law("seq-identity", "c ; nil = c = nil ; c", LawRelation::Equality,
                    {cv("c")},
                    [](B b, C) { return cmd_seq(b.cmd("c"), cmd_nil()); },
                    [](B b, C) { return b.cmd("c"); });
    s.equations.push_back({[](B b, C) { return cmd_seq(cmd_nil(), b.cmd("c")); },
                           [](B b, C) { return b.cmd("c"); }});
    add(std::move(s));
  }

  add(law("seq-annihilation-left", "abort ; c = abort", LawRelation::Equality, {cv("c")},
          [](B b, C) { return cmd_seq(cmd_abort(), b.cmd("c")); },
          [](B, C) { return cmd_abort(); }));

  {
    LawSpec s = law("seq-distr-right", "(+C) ; d = +{c ; d | c in C}", LawRelation::Equality,
                    {sv("C"), cv("d")},
                    [](B b, C) { return cmd_seq(big_choice(b.set("C")), b.cmd("d")); },
                    [](B b, C) {
                      std::vector<CommandPtr> cs;
                      for (const CommandPtr& c : b.set("C")) cs.push_back(cmd_seq(c, b.cmd("d")));
                      return big_choice(std::move(cs));
                    });
    s.allow_empty_set = true;
    add(std::move(s));
  }

  add(law("seq-distr-left", "D /= {} => c ; (+D) = +{c ; d | d in D}", LawRelation::Equality,
          {cv("c"), sv("D")},
          [](B b, C) { return cmd_seq(b.cmd("c"), big_choice(b.set("D"))); },
          [](B b, C) {
            std::vector<CommandPtr> cs;
            for (const CommandPtr& d : b.set("D")) cs.push_back(cmd_seq(b.cmd("c"), d));
            return big_choice(std::move(cs));
          }));

  // ----- synchronisation operators ---------------------------------------
  auto both = [](LawSpec s) {
    s.both_sync_ops = true;
    return s;
  };

  add(both(law("sync-assoc", "c0 x (c1 x c2) = (c0 x c1) x c2", LawRelation::Equality,
               {cv("c0"), cv("c1"), cv("c2")},
               [](B b, C) {
                 return cmd_sync(b.op, b.cmd("c0"), cmd_sync(b.op, b.cmd("c1"), b.cmd("c2")));
               },
               [](B b, C) {
                 return cmd_sync(b.op, cmd_sync(b.op, b.cmd("c0"), b.cmd("c1")), b.cmd("c2"));
               })));

  add(both(law("sync-commutative", "c x d = d x c", LawRelation::Equality,
               {cv("c"), cv("d")},
               [](B b, C) { return cmd_sync(b.op, b.cmd("c"), b.cmd("d")); },
               [](B b, C) { return cmd_sync(b.op, b.cmd("d"), b.cmd("c")); })));

  add(both(law("sync-id", "c x Id = c", LawRelation::Equality, {cv("c")},
               [](B b, C) { return cmd_sync(b.op, b.cmd("c"), op_identity(b.op)); },
               [](B b, C) { return b.cmd("c"); })));

  add(both(law("sync-inf-distrib", "D /= {} => c x (+D) = +{c x d | d in D}",
               LawRelation::Equality, {cv("c"), sv("D")},
               [](B b, C) { return cmd_sync(b.op, b.cmd("c"), big_choice(b.set("D"))); },
               [](B b, C) {
                 std::vector<CommandPtr> cs;
                 for (const CommandPtr& d : b.set("D"))
                   cs.push_back(cmd_sync(b.op, b.cmd("c"), d));
                 return big_choice(std::move(cs));
               })));

  add(both(law("sync-env", "a x iota = a", LawRelation::Equality, {av("A")},
               [](B b, C ctx) {
                 return cmd_sync(b.op, b.atom(ctx.space, "A"), atom_identity(b.op));
               },
               [](B b, C ctx) { return b.atom(ctx.space, "A"); })));

  add(both(law("sync-nil-nil", "nil x nil = nil", LawRelation::Equality, {},
               [](B b, C) { return cmd_sync(b.op, cmd_nil(), cmd_nil()); },
               [](B, C) { return cmd_nil(); })));

  add(both(law("sync-nil-atomic", "nil x a ; c = magic", LawRelation::Equality,
               {av("A"), cv("c")},
               [](B b, C ctx) {
                 return cmd_sync(b.op, cmd_nil(), cmd_seq(b.atom(ctx.space, "A"), b.cmd("c")));
               },
               [](B, C) { return cmd_magic(); })));

  add(both(law("par-closure", "a x b is atomic", LawRelation::Equality, {av("A"), av("B")},
               [](B b, C ctx) {
                 return cmd_sync(b.op, b.atom(ctx.space, "A"), b.atom(ctx.space, "B"));
               },
               [](B b, C ctx) { return lifted(ctx, b.op, b.mask("A"), b.mask("B")); })));

  add(both(law("sync-interchange-seq-atomic", "(a ; c) x (b ; d) = (a x b) ; (c x d)",
               LawRelation::Equality, {av("A"), av("B"), cv("c"), cv("d")},
               [](B b, C ctx) {
                 return cmd_sync(b.op, cmd_seq(b.atom(ctx.space, "A"), b.cmd("c")),
                                 cmd_seq(b.atom(ctx.space, "B"), b.cmd("d")));
               },
               [](B b, C ctx) {
                 return cmd_seq(lifted(ctx, b.op, b.mask("A"), b.mask("B")),
                                cmd_sync(b.op, b.cmd("c"), b.cmd("d")));
               })));

  add(both(law("sync-inf", "inf(a) x inf(b) = inf(a x b)", LawRelation::Equality,
               {av("A"), av("B")},
               [](B b, C ctx) {
                 return cmd_sync(b.op, cmd_inf(b.atom(ctx.space, "A")),
                                 cmd_inf(b.atom(ctx.space, "B")));
               },
               [](B b, C ctx) {
                 return cmd_inf(lifted(ctx, b.op, b.mask("A"), b.mask("B")));
               })));

  add(both(law("sync-interchange-seq", "(c0 ; d0) x (c1 ; d1) refined-by (c0 x c1) ; (d0 x d1)",
               LawRelation::Refinement, {cv("c0"), cv("d0"), cv("c1"), cv("d1")},
               [](B b, C) {
                 return cmd_sync(b.op, cmd_seq(b.cmd("c0"), b.cmd("d0")),
                                 cmd_seq(b.cmd("c1"), b.cmd("d1")));
               },
               [](B b, C) {
                 return cmd_seq(cmd_sync(b.op, b.cmd("c0"), b.cmd("c1")),
                                cmd_sync(b.op, b.cmd("d0"), b.cmd("d1")));
               })));

  // ----- additional parallel / weak conjunction axioms --------------------
  add(law("par-abort", "c || abort = abort", LawRelation::Equality, {cv("c")},
          [](B b, C) { return cmd_par(b.cmd("c"), cmd_abort()); },
          [](B, C) { return cmd_abort(); }));

  add(law("conjoin-abort", "c && abort = abort", LawRelation::Equality, {cv("c")},
          [](B b, C) { return cmd_conj(b.cmd("c"), cmd_abort()); },
          [](B, C) { return cmd_abort(); }));

  add(law("conjoin-idempotent", "c && c = c", LawRelation::Equality, {cv("c")},
          [](B b, C) { return cmd_conj(b.cmd("c"), b.cmd("c")); },
          [](B b, C) { return b.cmd("c"); }));

  add(law("par-pi-pi", "pi || pi = magic", LawRelation::Equality, {},
          [](B, C) { return cmd_par(cmd_pi(), cmd_pi()); },
          [](B, C) { return cmd_magic(); }));

  add(law("conjoin-pi-env", "pi && eps = magic", LawRelation::Equality, {},
          [](B, C) { return cmd_conj(cmd_pi(), cmd_eps()); },
          [](B, C) { return cmd_magic(); }));

  add(law("conjoin-par-finite", "c && pow(alpha,i) = c || pow(eps,i)", LawRelation::Equality,
          {cv("c"), nv("i")},
          [](B b, C) { return cmd_conj(b.cmd("c"), cmd_pow(cmd_alpha(), b.nat("i"))); },
          [](B b, C) { return cmd_par(b.cmd("c"), cmd_pow(cmd_eps(), b.nat("i"))); }));

  add(law("conjoin-par-infinite", "c && inf(alpha) = c || inf(eps)", LawRelation::Equality,
          {cv("c")},
          [](B b, C) { return cmd_conj(b.cmd("c"), cmd_inf(cmd_alpha())); },
          [](B b, C) { return cmd_par(b.cmd("c"), cmd_inf(cmd_eps())); }));

  add(law("sync-initial",
          "(c0 && pow(alpha,i)) ; d0 || (c1 && pow(alpha,i)) ; d1 = "
          "((c0 && pow(alpha,i)) || (c1 && pow(alpha,i))) ; (d0 || d1)",
          LawRelation::Equality, {cv("c0"), cv("c1"), cv("d0"), cv("d1"), nv("i")},
          [](B b, C) {
            auto ai = [&] { return cmd_pow(cmd_alpha(), b.nat("i")); };
            return cmd_par(cmd_seq(cmd_conj(b.cmd("c0"), ai()), b.cmd("d0")),
                           cmd_seq(cmd_conj(b.cmd("c1"), ai()), b.cmd("d1")));
          },
          [](B b, C) {
            auto ai = [&] { return cmd_pow(cmd_alpha(), b.nat("i")); };
            return cmd_seq(cmd_par(cmd_conj(b.cmd("c0"), ai()), cmd_conj(b.cmd("c1"), ai())),
                           cmd_par(b.cmd("d0"), b.cmd("d1")));
          }));

  add(law("conjoin-sync-initial",
          "(c0 && pow(alpha,i)) ; d0 && (c1 && pow(alpha,i)) ; d1 = "
          "(c0 && c1 && pow(alpha,i)) ; (d0 && d1)",
          LawRelation::Equality, {cv("c0"), cv("c1"), cv("d0"), cv("d1"), nv("i")},
          [](B b, C) {
            auto ai = [&] { return cmd_pow(cmd_alpha(), b.nat("i")); };
            return cmd_conj(cmd_seq(cmd_conj(b.cmd("c0"), ai()), b.cmd("d0")),
                            cmd_seq(cmd_conj(b.cmd("c1"), ai()), b.cmd("d1")));
          },
          [](B b, C) {
            return cmd_seq(cmd_conj(cmd_conj(b.cmd("c0"), b.cmd("c1")),
                                    cmd_pow(cmd_alpha(), b.nat("i"))),
                           cmd_conj(b.cmd("d0"), b.cmd("d1")));
          }));

  add(law("conjoin-interchange-par",
          "(c0 || d0) && (c1 || d1) refined-by (c0 && c1) || (d0 && d1)",
          LawRelation::Refinement, {cv("c0"), cv("d0"), cv("c1"), cv("d1")},
          [](B b, C) {
            return cmd_conj(cmd_par(b.cmd("c0"), b.cmd("d0")),
                            cmd_par(b.cmd("c1"), b.cmd("d1")));
          },
          [](B b, C) {
            return cmd_par(cmd_conj(b.cmd("c0"), b.cmd("c1")),
                           cmd_conj(b.cmd("d0"), b.cmd("d1")));
          }));

  // ----- iteration -------------------------------------------------------
  add(law("finite-unfold", "fin(c) = nil + c ; fin(c)", LawRelation::Equality, {cv("c")},
          [](B b, C) { return cmd_fin(b.cmd("c")); },
          [](B b, C) { return choice2(cmd_nil(), cmd_seq(b.cmd("c"), cmd_fin(b.cmd("c")))); }));

  add(law("omega-unfold", "om(c) = nil + c ; om(c)", LawRelation::Equality, {cv("c")},
          [](B b, C) { return cmd_om(b.cmd("c")); },
          [](B b, C) { return choice2(cmd_nil(), cmd_seq(b.cmd("c"), cmd_om(b.cmd("c")))); }));

  add(law("isolation", "om(c) = fin(c) + inf(c)", LawRelation::Equality, {cv("c")},
          [](B b, C) { return cmd_om(b.cmd("c")); },
          [](B b, C) { return choice2(cmd_fin(b.cmd("c")), cmd_inf(b.cmd("c"))); }));

  add(law("finite-iteration", "fin(c) = + {pow(c,i) | i in 0..B}", LawRelation::Equality,
          {cv("c")},
          [](B b, C) { return cmd_fin(b.cmd("c")); },
          [](B b, C ctx) {
            std::vector<CommandPtr> cs;
            for (int i = 0; i <= ctx.iteration_bound; ++i)
              cs.push_back(cmd_pow(b.cmd("c"), i));
            return big_choice(std::move(cs));
          }));

  {
    LawSpec s = law("omega-induction", "d + c ; x refined-by x => om(c) ; d refined-by x",
                    LawRelation::Refinement, {cv("c"), cv("d"), cv("x")},
                    [](B b, C) { return cmd_seq(cmd_om(b.cmd("c")), b.cmd("d")); },
                    [](B b, C) { return b.cmd("x"); });
    s.sampled_implication = true;
    s.premise = [](Evaluator& eval, B b, C) {
      return check_refines(eval, choice2(b.cmd("d"), cmd_seq(b.cmd("c"), b.cmd("x"))),
                           b.cmd("x"))
          .holds();
    };
    add(std::move(s));
  }

  {
    LawSpec s = law("finite-induction", "x refined-by d + c ; x => x refined-by fin(c) ; d",
                    LawRelation::Refinement, {cv("c"), cv("d"), cv("x")},
                    [](B b, C) { return b.cmd("x"); },
                    [](B b, C) { return cmd_seq(cmd_fin(b.cmd("c")), b.cmd("d")); });
    s.sampled_implication = true;
    s.premise = [](Evaluator& eval, B b, C) {
      return check_refines(eval, b.cmd("x"),
                           choice2(b.cmd("d"), cmd_seq(b.cmd("c"), b.cmd("x"))))
          .holds();
    };
    add(std::move(s));
  }

  add(law("finite-leapfrog", "c ; fin(d ; c) = fin(c ; d) ; c", LawRelation::Equality,
          {cv("c"), cv("d")},
          [](B b, C) { return cmd_seq(b.cmd("c"), cmd_fin(cmd_seq(b.cmd("d"), b.cmd("c")))); },
          [](B b, C) { return cmd_seq(cmd_fin(cmd_seq(b.cmd("c"), b.cmd("d"))), b.cmd("c")); }));

  add(law("omega-leapfrog", "c ; om(d ; c) = om(c ; d) ; c", LawRelation::Equality,
          {cv("c"), cv("d")},
          [](B b, C) { return cmd_seq(b.cmd("c"), cmd_om(cmd_seq(b.cmd("d"), b.cmd("c")))); },
          [](B b, C) { return cmd_seq(cmd_om(cmd_seq(b.cmd("c"), b.cmd("d"))), b.cmd("c")); }));

  add(law("omega-decomposition", "om(c + d) = om(c) ; om(d ; om(c))", LawRelation::Equality,
          {cv("c"), cv("d")},
          [](B b, C) { return cmd_om(choice2(b.cmd("c"), b.cmd("d"))); },
          [](B b, C) {
            return cmd_seq(cmd_om(b.cmd("c")),
                           cmd_om(cmd_seq(b.cmd("d"), cmd_om(b.cmd("c")))));
          }));

  // ----- iteration and synchronisation ------------------------------------
  add(law("finite-finite-prefix",
          "fin(a) ; c || fin(b) ; d = fin(a||b) ; ((c || d) + (c || b ; fin(b) ; d) + "
          "(a ; fin(a) ; c || d))",
          LawRelation::Equality, {av("A"), av("B"), cv("c"), cv("d")},
          [](B b, C ctx) {
            return cmd_par(cmd_seq(cmd_fin(b.atom(ctx.space, "A")), b.cmd("c")),
                           cmd_seq(cmd_fin(b.atom(ctx.space, "B")), b.cmd("d")));
          },
          [](B b, C ctx) {
            auto A = [&] { return b.atom(ctx.space, "A"); };
            auto Bv = [&] { return b.atom(ctx.space, "B"); };
            CommandPtr tail = big_choice(
                {cmd_par(b.cmd("c"), b.cmd("d")),
                 cmd_par(b.cmd("c"), cmd_seq(Bv(), cmd_seq(cmd_fin(Bv()), b.cmd("d")))),
                 cmd_par(cmd_seq(A(), cmd_seq(cmd_fin(A()), b.cmd("c"))), b.cmd("d"))});
            return cmd_seq(cmd_fin(lifted(ctx, SyncOp::Parallel, b.mask("A"), b.mask("B"))),
                           std::move(tail));
          }));

  add(law("finite-omega-prefix",
          "fin(a) ; c || om(b) ; d = fin(a||b) ; ((c || d) + (c || b ; om(b) ; d) + "
          "(a ; fin(a) ; c || d))",
          LawRelation::Equality, {av("A"), av("B"), cv("c"), cv("d")},
          [](B b, C ctx) {
            return cmd_par(cmd_seq(cmd_fin(b.atom(ctx.space, "A")), b.cmd("c")),
                           cmd_seq(cmd_om(b.atom(ctx.space, "B")), b.cmd("d")));
          },
          [](B b, C ctx) {
            auto A = [&] { return b.atom(ctx.space, "A"); };
            auto Bv = [&] { return b.atom(ctx.space, "B"); };
            CommandPtr tail = big_choice(
                {cmd_par(b.cmd("c"), b.cmd("d")),
                 cmd_par(b.cmd("c"), cmd_seq(Bv(), cmd_seq(cmd_om(Bv()), b.cmd("d")))),
                 cmd_par(cmd_seq(A(), cmd_seq(cmd_fin(A()), b.cmd("c"))), b.cmd("d"))});
            return cmd_seq(cmd_fin(lifted(ctx, SyncOp::Parallel, b.mask("A"), b.mask("B"))),
                           std::move(tail));
          }));

  add(law("iterate-pi-par-pi", "om(pi ; c) || om(pi ; d) = nil", LawRelation::Equality,
          {cv("c"), cv("d")},
          [](B b, C) {
            return cmd_par(cmd_om(cmd_seq(cmd_pi(), b.cmd("c"))),
                           cmd_om(cmd_seq(cmd_pi(), b.cmd("d"))));
          },
          [](B, C) { return cmd_nil(); }));

  add(both(law("iterate-pi-sync-atomic",
               "om(pi ; c) x a ; d = (pi x a) ; (c ; om(pi ; c) x d)",
               LawRelation::Equality, {av("A"), cv("c"), cv("d")},
               [](B b, C ctx) {
                 return cmd_sync(b.op, cmd_om(cmd_seq(cmd_pi(), b.cmd("c"))),
                                 cmd_seq(b.atom(ctx.space, "A"), b.cmd("d")));
               },
               [](B b, C ctx) {
                 return cmd_seq(
                     lifted(ctx, b.op, pi_mask(ctx), b.mask("A")),
                     cmd_sync(b.op,
                              cmd_seq(b.cmd("c"), cmd_om(cmd_seq(cmd_pi(), b.cmd("c")))),
                              b.cmd("d")));
               })));

  add(both(law("distribute-infeasible-suffix", "c x d ; magic = (c x d) ; magic",
               LawRelation::Equality, {cv("c"), cv("d")},
               [](B b, C) {
                 return cmd_sync(b.op, b.cmd("c"), cmd_seq(b.cmd("d"), cmd_magic()));
               },
               [](B b, C) {
                 return cmd_seq(cmd_sync(b.op, b.cmd("c"), b.cmd("d")), cmd_magic());
               })));

  add(law("infinite-annihilates", "(c && inf(alpha)) ; d1 = (c && inf(alpha)) ; d2",
          LawRelation::Equality, {cv("c"), cv("d1"), cv("d2")},
          [](B b, C) {
            return cmd_seq(cmd_conj(b.cmd("c"), cmd_inf(cmd_alpha())), b.cmd("d1"));
          },
          [](B b, C) {
            return cmd_seq(cmd_conj(b.cmd("c"), cmd_inf(cmd_alpha())), b.cmd("d2"));
          }));

  {
    LawSpec s = law("sync-termination",
                    "(c ; fin(a) || d ; fin(b)) ; (om(a) || om(b)) = c ; om(a) || d ; om(b)",
                    LawRelation::Equality, {cv("c"), cv("d"), av("A"), av("B")},
                    [](B b, C ctx) {
                      return cmd_seq(
                          cmd_par(cmd_seq(b.cmd("c"), cmd_fin(b.atom(ctx.space, "A"))),
                                  cmd_seq(b.cmd("d"), cmd_fin(b.atom(ctx.space, "B")))),
                          cmd_par(cmd_om(b.atom(ctx.space, "A")),
                                  cmd_om(b.atom(ctx.space, "B"))));
                    },
                    [](B b, C ctx) {
                      return cmd_par(cmd_seq(b.cmd("c"), cmd_om(b.atom(ctx.space, "A"))),
                                     cmd_seq(b.cmd("d"), cmd_om(b.atom(ctx.space, "B"))));
                    });
    s.premise_tag = "conj-fin";
    add(std::move(s));
  }

  add(law("par-skip", "(c ; skip || d ; skip) ; skip = c ; skip || d ; skip",
          LawRelation::Equality, {cv("c"), cv("d")},
          [](B b, C) {
            return cmd_seq(cmd_par(cmd_seq(b.cmd("c"), cmd_skip()),
                                   cmd_seq(b.cmd("d"), cmd_skip())),
                           cmd_skip());
          },
          [](B b, C) {
            return cmd_par(cmd_seq(b.cmd("c"), cmd_skip()), cmd_seq(b.cmd("d"), cmd_skip()));
          }));

  // ----- fairness --------------------------------------------------------
  add(law("chaos-fair", "chaos refined-by fair", LawRelation::Refinement, {},
          [](B, C) { return cmd_chaos(); }, [](B, C) { return cmd_fair(); }));

  add(law("introduce-fair", "c refined-by c && fair", LawRelation::Refinement, {cv("c")},
          [](B b, C) { return b.cmd("c"); },
          [](B b, C) { return cmd_conj(b.cmd("c"), cmd_fair()); }));

  add(law("fair-fair", "fair ; fair = fair", LawRelation::Equality, {},
          [](B, C) { return cmd_seq(cmd_fair(), cmd_fair()); },
          [](B, C) { return cmd_fair(); }));

  add(law("fair-distrib-seq", "(c ; d) && fair refined-by (c && fair) ; (d && fair)",
          LawRelation::Refinement, {cv("c"), cv("d")},
          [](B b, C) { return cmd_conj(cmd_seq(b.cmd("c"), b.cmd("d")), cmd_fair()); },
          [](B b, C) {
            return cmd_seq(cmd_conj(b.cmd("c"), cmd_fair()),
                           cmd_conj(b.cmd("d"), cmd_fair()));
          }));

  add(law("skip-fair", "skip && fair = fin(eps)", LawRelation::Equality, {},
          [](B, C) { return cmd_conj(cmd_skip(), cmd_fair()); },
          [](B, C) { return cmd_fin(cmd_eps()); }));

  add(law("term-fair", "term && fair = fin(alpha)", LawRelation::Equality, {},
          [](B, C) { return cmd_conj(cmd_term(), cmd_fair()); },
          [](B, C) { return cmd_fin(cmd_alpha()); }));

  {
    LawSpec s = law("fair-termination", "term refined-by c => fin(alpha) refined-by c && fair",
                    LawRelation::Refinement, {cv("c")},
                    [](B, C) { return cmd_fin(cmd_alpha()); },
                    [](B b, C) { return cmd_conj(b.cmd("c"), cmd_fair()); });
    s.premise_tag = "term-refined";
    add(std::move(s));
  }

  // ----- fairness and concurrency -----------------------------------------
  add(law("fair-par-fair-expand", "fair || fair = fin(eps) ; (nil + pi ; (fair || fair))",
          LawRelation::Equality, {},
          [](B, C) { return cmd_par(cmd_fair(), cmd_fair()); },
          [](B, C) {
            return cmd_seq(cmd_fin(cmd_eps()),
                           choice2(cmd_nil(),
                                   cmd_seq(cmd_pi(), cmd_par(cmd_fair(), cmd_fair()))));
          }));

  add(law("fair-par-fair", "fair refined-by fair || fair", LawRelation::Refinement, {},
          [](B, C) { return cmd_fair(); },
          [](B, C) { return cmd_par(cmd_fair(), cmd_fair()); }));

  add(law("fair-distrib-par-both",
          "(c || d) && fair refined-by (c && fair) || (d && fair)",
          LawRelation::Refinement, {cv("c"), cv("d")},
          [](B b, C) { return cmd_conj(cmd_par(b.cmd("c"), b.cmd("d")), cmd_fair()); },
          [](B b, C) {
            return cmd_par(cmd_conj(b.cmd("c"), cmd_fair()),
                           cmd_conj(b.cmd("d"), cmd_fair()));
          }));

  add(law("fair-par-chaos-expand", "fair || chaos = fin(eps) ; (nil + pi ; (fair || chaos))",
          LawRelation::Equality, {},
          [](B, C) { return cmd_par(cmd_fair(), cmd_chaos()); },
          [](B, C) {
            return cmd_seq(cmd_fin(cmd_eps()),
                           choice2(cmd_nil(),
                                   cmd_seq(cmd_pi(), cmd_par(cmd_fair(), cmd_chaos()))));
          }));

  add(law("fair-par-chaos", "fair || chaos = fair", LawRelation::Equality, {},
          [](B, C) { return cmd_par(cmd_fair(), cmd_chaos()); },
          [](B, C) { return cmd_fair(); }));

  add(law("fair-distrib-par-one", "(c || d) && fair refined-by (c && fair) || d",
          LawRelation::Refinement, {cv("c"), cv("d")},
          [](B b, C) { return cmd_conj(cmd_par(b.cmd("c"), b.cmd("d")), cmd_fair()); },
          [](B b, C) { return cmd_par(cmd_conj(b.cmd("c"), cmd_fair()), b.cmd("d")); }));

  // ----- fair parallel -----------------------------------------------------
  add(law("fair-parallel-commutes", "c ||f d = d ||f c", LawRelation::Equality,
          {cv("c"), cv("d")},
          [](B b, C) { return cmd_fairpar(b.cmd("c"), b.cmd("d")); },
          [](B b, C) { return cmd_fairpar(b.cmd("d"), b.cmd("c")); }));

  add(law("fair-parallel-distrib", "D /= {} => c ||f (+D) = +{c ||f d | d in D}",
          LawRelation::Equality, {cv("c"), sv("D")},
          [](B b, C) { return cmd_fairpar(b.cmd("c"), big_choice(b.set("D"))); },
          [](B b, C) {
            std::vector<CommandPtr> cs;
            for (const CommandPtr& d : b.set("D")) cs.push_back(cmd_fairpar(b.cmd("c"), d));
            return big_choice(std::move(cs));
          }));

  {
    LawSpec s = law("fair-par-monotonic", "d1 refined-by d2 => c ||f d1 refined-by c ||f d2",
                    LawRelation::Refinement, {cv("c"), cv("d1"), cv("d2")},
                    [](B b, C) { return cmd_fairpar(b.cmd("c"), b.cmd("d1")); },
                    [](B b, C) { return cmd_fairpar(b.cmd("c"), b.cmd("d2")); });
    s.premise_tag = "refines-pair";
    add(std::move(s));
  }

  add(law("fair-parallel-nil", "c ||f nil = (c && fair) ; skip", LawRelation::Equality,
          {cv("c")},
          [](B b, C) { return cmd_fairpar(b.cmd("c"), cmd_nil()); },
          [](B b, C) { return cmd_seq(cmd_conj(b.cmd("c"), cmd_fair()), cmd_skip()); }));

  add(law("introduce-fair-skip", "c ||f d refined-by ((c ||f d) && fair) ; skip",
          LawRelation::Refinement, {cv("c"), cv("d")},
          [](B b, C) { return cmd_fairpar(b.cmd("c"), b.cmd("d")); },
          [](B b, C) {
            return cmd_seq(cmd_conj(cmd_fairpar(b.cmd("c"), b.cmd("d")), cmd_fair()),
                           cmd_skip());
          }));

  add(law("finite-absorb-fair-skip",
          "(((c && fin(alpha)) ||f (d && fin(alpha))) && fair) ; skip = "
          "(c && fin(alpha)) ||f (d && fin(alpha))",
          LawRelation::Equality, {cv("c"), cv("d")},
          [](B b, C) {
            auto cf = cmd_conj(b.cmd("c"), cmd_fin(cmd_alpha()));
            auto df = cmd_conj(b.cmd("d"), cmd_fin(cmd_alpha()));
            return cmd_seq(cmd_conj(cmd_fairpar(cf, df), cmd_fair()), cmd_skip());
          },
          [](B b, C) {
            auto cf = cmd_conj(b.cmd("c"), cmd_fin(cmd_alpha()));
            auto df = cmd_conj(b.cmd("d"), cmd_fin(cmd_alpha()));
            return cmd_fairpar(cf, df);
          }));

  add(law("infinite-absorb-fair-skip",
          "(((c && inf(alpha)) ||f d) && fair) ; skip = (c && inf(alpha)) ||f d",
          LawRelation::Equality, {cv("c"), cv("d")},
          [](B b, C) {
            auto ci = cmd_conj(b.cmd("c"), cmd_inf(cmd_alpha()));
            return cmd_seq(cmd_conj(cmd_fairpar(ci, b.cmd("d")), cmd_fair()), cmd_skip());
          },
          [](B b, C) {
            auto ci = cmd_conj(b.cmd("c"), cmd_inf(cmd_alpha()));
            return cmd_fairpar(ci, b.cmd("d"));
          }));

  add(law("absorb-fair-skip", "((c ||f d) && fair) ; skip = c ||f d", LawRelation::Equality,
          {cv("c"), cv("d")},
          [](B b, C) {
            return cmd_seq(cmd_conj(cmd_fairpar(b.cmd("c"), b.cmd("d")), cmd_fair()),
                           cmd_skip());
          },
          [](B b, C) { return cmd_fairpar(b.cmd("c"), b.cmd("d")); }));

  add(law("fair-parallel-associative", "(c ||f d) ||f e = c ||f (d ||f e)",
          LawRelation::Equality, {cv("c"), cv("d"), cv("e")},
          [](B b, C) { return cmd_fairpar(cmd_fairpar(b.cmd("c"), b.cmd("d")), b.cmd("e")); },
          [](B b, C) { return cmd_fairpar(b.cmd("c"), cmd_fairpar(b.cmd("d"), b.cmd("e"))); }));

  return laws;
}

std::vector<LawSpec> mutant_catalog() {
  std::vector<LawSpec> muts;

  muts.push_back(law("mutant-par-pi-pi", "pi || pi = pi (false)", LawRelation::Equality, {},
                     [](B, C) { return cmd_par(cmd_pi(), cmd_pi()); },
                     [](B, C) { return cmd_pi(); }));

  muts.push_back(law("mutant-term-conj-chaos", "term && chaos = fin(alpha) (false)",
                     LawRelation::Equality, {},
                     [](B, C) { return cmd_conj(cmd_term(), cmd_chaos()); },
                     [](B, C) { return cmd_fin(cmd_alpha()); }));

  muts.push_back(law("mutant-fair-refines-chaos", "fair refined-by chaos (false)",
                     LawRelation::Refinement, {},
                     [](B, C) { return cmd_fair(); }, [](B, C) { return cmd_chaos(); }));

  {
    LawSpec s = law("mutant-fair-distrib-par-reverse",
                    "(c && fair) || (d && fair) refined-by (c || d) && fair (false)",
                    LawRelation::Refinement, {cv("c"), cv("d")},
                    [](B b, C) {
                      return cmd_par(cmd_conj(b.cmd("c"), cmd_fair()),
                                     cmd_conj(b.cmd("d"), cmd_fair()));
                    },
                    [](B b, C) {
                      return cmd_conj(cmd_par(b.cmd("c"), b.cmd("d")), cmd_fair());
                    });
    Binding seed;
    seed.commands["c"] = cmd_skip();
    seed.commands["d"] = cmd_om(cmd_pi());
    s.seeds.push_back(std::move(seed));
    muts.push_back(std::move(s));
  }

  {
    LawSpec s = law("mutant-om-is-fin", "om(c) = fin(c) (false)", LawRelation::Equality,
                    {cv("c")},
                    [](B b, C) { return cmd_om(b.cmd("c")); },
                    [](B b, C) { return cmd_fin(b.cmd("c")); });
    Binding seed;
    seed.commands["c"] = cmd_eps();
    s.seeds.push_back(std::move(seed));
    muts.push_back(std::move(s));
  }

  return muts;
}

namespace {

LawReport run_one_law(const LawSpec& law, const SuiteConfig& cfg, Evaluator& eval,
                      Oracle& oracle, const LawContext& ctx) {
  LawReport rep;
  rep.name = law.name;
  rep.window = cfg.window;
  rep.sampled = law.sampled_implication;
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<Binding> bindings = law.seeds;
  {
    auto generated = generate_bindings(law, cfg.space, cfg.samples,
                                       cfg.seed ^ fnv1a(law.name), cfg.ast_depth);
    bindings.insert(bindings.end(), std::make_move_iterator(generated.begin()),
                    std::make_move_iterator(generated.end()));
  }

  const std::vector<SyncOp> ops =
      law.both_sync_ops ? std::vector<SyncOp>{SyncOp::Parallel, SyncOp::Conjunction}
                        : std::vector<SyncOp>{SyncOp::Parallel};

  for (Binding& binding : bindings) {
    if (rep.violations.size() >= 5) break;  // enough evidence either way
    for (SyncOp op : ops) {
      binding.op = op;
      if (law.sampled_implication && law.premise) {
        bool premise_holds = false;
        try {
          premise_holds = law.premise(eval, binding, ctx);
        } catch (const ResourceError&) {
          ++rep.skipped;
          continue;
        }
        if (!premise_holds) {
          ++rep.premise_filtered;
          continue;
        }
      }
      for (const LawEquation& eq : law.equations) {
        CommandPtr lhs, rhs;
        Verdict verdict;
        try {
          lhs = eq.lhs(binding, ctx);
          rhs = eq.rhs(binding, ctx);
          verdict = law.relation == LawRelation::Equality ? check_equal(eval, lhs, rhs)
                                                          : check_refines(eval, lhs, rhs);
        } catch (const ResourceError&) {
          ++rep.skipped;
          continue;
        }
        ++rep.instances;
        if (verdict.holds()) continue;

        ViolationRecord rec;
        rec.bindings = binding.render(cfg.space);
        if (verdict.witness) {
          rec.witness_side = verdict.witness->side == Witness::Side::Lhs ? "lhs" : "rhs";
          rec.witness = verdict.witness->render();
          if (cfg.validate_witnesses) {
            const CommandPtr& side =
                verdict.witness->side == Witness::Side::Lhs ? lhs : rhs;
            try {
              rec.oracle_validated = std::visit(
                  [&](const auto& obs) { return oracle.member(obs, side); },
                  verdict.witness->obs);
              rec.oracle_checked = true;
            } catch (const ResourceError&) {
              rec.oracle_checked = false;
            }
          }
        }
        rep.violations.push_back(std::move(rec));
        if (rep.violations.size() >= 5) break;
      }
    }
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!rep.violations.empty()) rep.status = "fail";
  else if (rep.instances == 0) rep.status = "skipped";
  else rep.status = "pass";
  return rep;
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& cfg) {
  SuiteResult result;
  Evaluator eval(cfg.space, cfg.window, EvalOptions{cfg.element_cap});
  Oracle oracle(cfg.space, cfg.window);
  LawContext ctx{cfg.space, cfg.window,
                 Evaluator::stored_for(cfg.window).max_trace_len + 1};

  bool laws_ok = true;
  bool matched = false;
  for (const LawSpec& law : law_catalog()) {
    if (cfg.only && *cfg.only != law.name) continue;
    matched = true;
    LawReport rep = run_one_law(law, cfg, eval, oracle, ctx);
    laws_ok = laws_ok && rep.status == "pass";
    result.laws.push_back(std::move(rep));
  }

  bool mutants_ok = true;
  if (cfg.include_mutants) {
    for (const LawSpec& mut : mutant_catalog()) {
      if (cfg.only && *cfg.only != mut.name) continue;
      matched = true;
      LawReport rep = run_one_law(mut, cfg, eval, oracle, ctx);
      // A mutant is healthy when the window refutes it.
      mutants_ok = mutants_ok && !rep.violations.empty();
      result.mutants.push_back(std::move(rep));
    }
  }

  if (cfg.only && !matched)
    throw ContractError("no law or mutant named '" + *cfg.only + "'");

  result.ok = laws_ok && mutants_ok;
  return result;
}

}  // namespace scra
