// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "reflectica/syntax.hpp"

namespace reflectica {

/// The assertion that a term has the given string as its value.
struct Judgment {
  Term term;
  Str value;
};

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

struct SideCondition {
  std::string label;
  Str payload;
};

/// Evidence for one derived value: the rule that produced it, the
/// premise derivations, and any recorded syntactic side conditions.
struct Derivation {
  Judgment conclusion;
  std::string rule;
  std::vector<DerivationPtr> premises;
  std::vector<SideCondition> side;
};

/// Resource limits that make the semi-computable interpretation function
/// queryable: rule firings, growth of the instantiation pool, and the
/// length of candidate witness terms for the existential quantifier.
struct Budget {
  std::size_t max_steps = 10000;
  std::size_t max_pool = 2000;
  std::size_t max_witness_len = 8;
};

struct InconsistencyWitness {
  Term term;
  Str first_value;
  Str second_value;
  DerivationPtr first;
  DerivationPtr second;
};

struct InconsistencyError : std::runtime_error {
  explicit InconsistencyError(InconsistencyWitness w)
      : std::runtime_error("two values derived for one term"),
        witness(std::move(w)) {}
  InconsistencyWitness witness;
};

/// Axioms, derived judgments with their derivations, and the pool of
/// instantiation candidates. A knowledge base is plain data: copying it
/// snapshots the whole state, and saturation works on such a snapshot.
class KnowledgeBase {
 public:
  explicit KnowledgeBase(const SymbolTable& table);

  const SymbolTable& table() const { return *table_; }

  /// Adds an axiom judgment. Throws InconsistencyError when a different
  /// value is already on record for the term. Idempotent.
  void assert_axiom(const Judgment& j);

  const std::vector<Judgment>& axioms() const { return axioms_; }

  std::optional<Str> value_of(const Str& term_text) const;
  DerivationPtr derivation_of(const Str& term_text) const;

  std::size_t fact_count() const { return facts_.size(); }
  std::size_t pool_size() const { return pool_.size(); }
  bool pool_contains(const Str& term_text) const { return pool_.count(term_text) > 0; }

  /// Inserts a term (and its subterms) into the instantiation pool.
  void pool_insert(const Term& t);

  /// Same axioms, same derived values, same pool.
  friend bool same_state(const KnowledgeBase& a, const KnowledgeBase& b);

 private:
  struct Fact {
    Term term;
    Str value;
    DerivationPtr derivation;
  };

  enum class InsertOutcome { Inserted, Duplicate, Conflict };
  InsertOutcome add_fact(const Term& t, const Str& value, DerivationPtr d);

  const SymbolTable* table_;
  std::vector<Judgment> axioms_;
  std::set<std::pair<Str, Str>> axiom_keys_;
  std::map<Str, Fact> facts_;             // term text -> value + evidence
  std::vector<Str> fact_order_;           // insertion order of fact keys
  std::map<Str, Term, ShortLex> pool_;    // term text -> term

  friend class Saturator;
};

/// The three base axioms: the true, the false, and the zero numeral each
/// denote themselves.
std::vector<Judgment> core_axioms(const SymbolTable& table);

/// Names of the built-in rules, in firing order. Useful for inspecting
/// derivations.
const std::vector<std::string>& builtin_rule_names();

struct SaturationResult {
  bool reached_fixpoint = false;
  bool steps_exhausted = false;
  bool pool_exhausted = false;
  std::size_t steps_used = 0;
  std::optional<InconsistencyWitness> witness;
};

/// Fires the built-in rules over the pool until nothing new can be
/// derived or the budget runs out. Monotone: facts only accumulate.
/// Stops at the first pair of conflicting values and reports it.
SaturationResult saturate(KnowledgeBase& kb, const Budget& budget);

struct EvalResult {
  std::optional<Str> value;
  DerivationPtr derivation;
  bool budget_exhausted = false;  // absent because limits were hit, not fixpoint
};

/// Evaluates t against a snapshot of kb: seeds the pool with t's
/// subterms and with canonical names of strings already derived as
/// values, saturates, and reads off the value. Deterministic.
/// Throws InconsistencyError when saturation derives two values for one
/// term.
EvalResult evaluate(const Term& t, const KnowledgeBase& kb, const Budget& budget);

struct ScanReport {
  std::size_t terms = 0;
  std::size_t defined = 0;
  std::size_t undefined = 0;
  std::vector<InconsistencyWitness> witnesses;
  bool budget_exhausted = false;
  std::size_t steps_used = 0;
};

/// Enumerates every term over the given symbols up to max_len, saturates
/// a snapshot of kb over them, and reports how many came out defined and
/// whether any term received two values. Findings are data, not errors.
ScanReport consistency_scan(const KnowledgeBase& kb,
                            const std::vector<SymbolId>& pool_symbols,
                            std::size_t max_len, const Budget& budget);

/// Re-checks every node of a derivation against its named rule. The
/// checker is independent of the search: it validates instances, it does
/// not find them.
bool replay(const Derivation& d, const KnowledgeBase& kb);

/// One node per line, depth-indented, ASCII rendering, side conditions
/// in brackets. Stable across runs.
void export_derivation(std::ostream& os, const Derivation& d,
                       const SymbolTable& table, int depth = 0);
std::string export_derivation(const Derivation& d, const SymbolTable& table);

}  // namespace reflectica
