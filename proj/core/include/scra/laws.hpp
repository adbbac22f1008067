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

#ifndef SCRA_LAWS_HPP_
#define SCRA_LAWS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "scra/refinement.hpp"

namespace scra {

enum class LawRelation { Equality, Refinement };
enum class VarSort { CommandVar, AtomicVar, NaturalVar, CommandSetVar };

struct VarSpec {
  std::string name;
  VarSort sort;
};

/// One instantiation of a law's quantifiers. Synchronisation-operator
/// laws run each binding once per operator.
struct Binding {
  std::map<std::string, CommandPtr> commands;
  std::map<std::string, std::uint64_t> atomics;
  std::map<std::string, int> naturals;
  std::map<std::string, std::vector<CommandPtr>> command_sets;
  SyncOp op = SyncOp::Parallel;

  const CommandPtr& cmd(const std::string& name) const;
  CommandPtr atom(const StateSpace& space, const std::string& name) const;
  std::uint64_t mask(const std::string& name) const;
  int nat(const std::string& name) const;
  const std::vector<CommandPtr>& set(const std::string& name) const;

  std::map<std::string, std::string> render(const StateSpace& space) const;
};

struct LawContext {
  StateSpace space{2};
  Window window{5, 3, 3};
  int iteration_bound = 7;  // bound for expanding the fixed-iteration choice
};

using TermBuilder = std::function<CommandPtr(const Binding&, const LawContext&)>;

struct LawEquation {
  TermBuilder lhs;
  TermBuilder rhs;
};

/**
 * A named algebraic law: quantified variables, an optional constructive
 * premise, and one or more lhs/rhs pairs checked under the law's
 * relation. Laws about a generic synchronisation operator are flagged
 * both_sync_ops and run for parallel and weak conjunction alike.
 */
struct LawSpec {
  std::string name;
  std::string display;
  LawRelation relation = LawRelation::Equality;
  std::vector<VarSpec> vars;
  std::optional<std::string> premise_tag;
  bool both_sync_ops = false;
  /// Induction-style laws: universally quantified over x, so bounded
  /// checking can only probe sampled implications, not establish them.
  bool sampled_implication = false;
  bool allow_empty_set = false;
  std::vector<LawEquation> equations;
  std::function<bool(Evaluator&, const Binding&, const LawContext&)> premise;
  /// Bindings tried before the random stream (used by mutants that are
  /// refutable only for particular instantiations).
  std::vector<Binding> seeds;
};

/// Every law of the algebra, ordered as in the catalog documentation.
std::vector<LawSpec> law_catalog();

/// Known-false variants. The runner expects each to be refuted within the
/// window; a mutant that survives means the window cannot see the
/// property it was meant to distinguish.
std::vector<LawSpec> mutant_catalog();

struct ViolationRecord {
  std::map<std::string, std::string> bindings;
  std::string witness_side;  // "lhs" | "rhs"
  std::string witness;
  bool oracle_checked = false;
  bool oracle_validated = false;
};

struct LawReport {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped"
  int instances = 0;
  int skipped = 0;
  int premise_filtered = 0;
  std::vector<ViolationRecord> violations;
  Window window;
  double seconds = 0.0;
  bool sampled = false;
};

struct SuiteConfig {
  StateSpace space{2};
  Window window{5, 3, 3};
  int samples = 100;
  int ast_depth = 3;
  std::uint64_t seed = 1;
  bool include_mutants = false;
  std::optional<std::string> only;
  std::size_t element_cap = 2'000'000;
  bool validate_witnesses = true;
};

struct SuiteResult {
  std::vector<LawReport> laws;
  std::vector<LawReport> mutants;
  bool ok = false;  // every law passed and every mutant was refuted
};

SuiteResult run_suite(const SuiteConfig& config);

/// The fixed command corpus quantified command variables draw from.
std::vector<CommandPtr> command_corpus();

/// Random grammar-producible command of the given depth (tree levels).
CommandPtr random_command(std::mt19937_64& rng, int depth, const StateSpace& space);

std::vector<Binding> generate_bindings(const LawSpec& law, const StateSpace& space,
                                       int budget, std::uint64_t seed, int ast_depth);

}  // namespace scra

#endif  // SCRA_LAWS_HPP_
