// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "reflectica/engine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "reflectica/naming.hpp"

namespace reflectica {

// ---------------------------------------------------------------------------
// Knowledge base

KnowledgeBase::KnowledgeBase(const SymbolTable& table) : table_(&table) {
  for (const Judgment& j : core_axioms(table)) assert_axiom(j);
}

std::vector<Judgment> core_axioms(const SymbolTable& table) {
  const CoreSymbols& core = table.core();
  auto leaf = [&](SymbolId s) { return Term::apply(s, {}, table); };
  return {
      {leaf(core.top), Str{core.top}},
      {leaf(core.bot), Str{core.bot}},
      {leaf(core.zero), Str{core.zero}},
  };
}

KnowledgeBase::InsertOutcome KnowledgeBase::add_fact(const Term& t, const Str& value,
                                                     DerivationPtr d) {
  auto it = facts_.find(t.text());
  if (it != facts_.end())
    return it->second.value == value ? InsertOutcome::Duplicate : InsertOutcome::Conflict;
  facts_.emplace(t.text(), Fact{t, value, std::move(d)});
  fact_order_.push_back(t.text());
  return InsertOutcome::Inserted;
}

void KnowledgeBase::assert_axiom(const Judgment& j) {
  if (j.value.empty()) throw std::invalid_argument("axiom value must be nonempty");
  auto key = std::make_pair(j.term.text(), j.value);
  if (axiom_keys_.count(key)) return;

  auto d = std::make_shared<Derivation>();
  d->conclusion = j;
  d->rule = "axiom";

  auto it = facts_.find(j.term.text());
  if (it != facts_.end() && it->second.value != j.value)
    throw InconsistencyError(InconsistencyWitness{
        j.term, it->second.value, j.value, it->second.derivation, d});

  axioms_.push_back(j);
  axiom_keys_.insert(key);
  if (it == facts_.end()) {
    facts_.emplace(j.term.text(), Fact{j.term, j.value, d});
    fact_order_.push_back(j.term.text());
  }
  pool_insert(j.term);
}

std::optional<Str> KnowledgeBase::value_of(const Str& term_text) const {
  auto it = facts_.find(term_text);
  if (it == facts_.end()) return std::nullopt;
  return it->second.value;
}

DerivationPtr KnowledgeBase::derivation_of(const Str& term_text) const {
  auto it = facts_.find(term_text);
  return it == facts_.end() ? nullptr : it->second.derivation;
}

void KnowledgeBase::pool_insert(const Term& t) {
  if (pool_.count(t.text())) return;
  for (const Term& a : t.args()) pool_insert(a);
  pool_.emplace(t.text(), t);
}

bool same_state(const KnowledgeBase& a, const KnowledgeBase& b) {
  if (a.axiom_keys_ != b.axiom_keys_) return false;
  if (a.facts_.size() != b.facts_.size()) return false;
  for (const auto& [key, fact] : a.facts_) {
    auto it = b.facts_.find(key);
    if (it == b.facts_.end() || it->second.value != fact.value) return false;
  }
  if (a.pool_.size() != b.pool_.size()) return false;
  for (const auto& [key, term] : a.pool_)
    if (!b.pool_.count(key)) return false;
  return true;
}

const std::vector<std::string>& builtin_rule_names() {
  static const std::vector<std::string> names = {
      "name-intro",
      "not-intro-false", "not-intro-true",
      "and-intro-true", "and-intro-false-left", "and-intro-false-right",
      "or-intro-false", "or-intro-true-left", "or-intro-true-right",
      "imp-intro",
      "eq-intro-true", "eq-intro-false", "eq-elim-fst", "eq-elim-snd",
      "sharp-intro", "flat-intro",
      "exists-intro", "forall-elim",
      "cat-intro", "succ-intro",
      "dag-intro", "dag-elim",
      "yields-elim",
      "defd-intro",
      "form-intro-true", "form-intro-false",
  };
  return names;
}

// ---------------------------------------------------------------------------
// Saturation

namespace {
enum class EventKind { PoolTerm, Fact };
}

/// Worklist-driven forward closure. Every rule instance is triggered when
/// its last enabling input arrives: pool membership of the subject, a
/// premise value, or an instantiation candidate. Emissions that repeat an
/// existing fact are dropped without consuming budget; a conflicting
/// emission stops the run with a witness.
class Saturator {
 public:
  Saturator(KnowledgeBase& kb, const Budget& budget)
      : kb_(kb), budget_(budget), table_(kb.table()), core_(table_.core()) {}

  SaturationResult run() {
    pool_cap_ = std::max(budget_.max_pool, kb_.pool_.size());
    for (const auto& [key, term] : kb_.pool_) queue_.push_back({EventKind::PoolTerm, key});
    for (const Str& key : kb_.fact_order_) {
      queue_.push_back({EventKind::Fact, key});
      seed_value_name(kb_.facts_.at(key).value);
    }
    while (!queue_.empty() && !stop_) {
      auto [kind, key] = queue_.front();
      queue_.pop_front();
      if (kind == EventKind::PoolTerm)
        process_pool_term(key);
      else
        process_fact(key);
    }
    SaturationResult result;
    result.steps_used = steps_used_;
    result.steps_exhausted = steps_exhausted_;
    result.pool_exhausted = pool_exhausted_;
    result.witness = witness_;
    result.reached_fixpoint =
        !steps_exhausted_ && !pool_exhausted_ && !witness_.has_value();
    return result;
  }

 private:
  using Fact = KnowledgeBase::Fact;

  const Fact* fact(const Str& key) const {
    auto it = kb_.facts_.find(key);
    return it == kb_.facts_.end() ? nullptr : &it->second;
  }

  bool is_top(const Str& v) const { return v.size() == 1 && v[0] == core_.top; }
  bool is_bot(const Str& v) const { return v.size() == 1 && v[0] == core_.bot; }
  Str top_str() const { return Str{core_.top}; }
  Str bot_str() const { return Str{core_.bot}; }

  bool is_bare_variable(const Term& t) const {
    return !t.is_name() && table_.is_variable(t.head_id());
  }

  void pool_add(const Term& t) {
    if (kb_.pool_.count(t.text())) return;
    for (const Term& a : t.args()) pool_add(a);
    if (kb_.pool_.count(t.text())) return;
    if (kb_.pool_.size() >= pool_cap_) {
      pool_exhausted_ = true;
      return;
    }
    kb_.pool_.emplace(t.text(), t);
    queue_.push_back({EventKind::PoolTerm, t.text()});
  }

  void seed_value_name(const Str& value) {
    std::size_t level = quote_level(value, table_);
    if (value.size() + 2 * level + 2 > budget_.max_witness_len) return;
    pool_add(Term::name_of(value, table_));
  }

  void emit(const Term& subject, const Str& value, const char* rule,
            std::vector<DerivationPtr> premises,
            std::vector<SideCondition> side = {}) {
    if (stop_) return;
    auto it = kb_.facts_.find(subject.text());
    auto make_derivation = [&] {
      auto d = std::make_shared<Derivation>();
      d->conclusion = Judgment{subject, value};
      d->rule = rule;
      d->premises = std::move(premises);
      d->side = std::move(side);
      return d;
    };
    if (it != kb_.facts_.end()) {
      if (it->second.value == value) return;
      witness_ = InconsistencyWitness{subject, it->second.value, value,
                                      it->second.derivation, make_derivation()};
      stop_ = true;
      return;
    }
    if (steps_used_ >= budget_.max_steps) {
      steps_exhausted_ = true;
      stop_ = true;
      return;
    }
    ++steps_used_;
    kb_.facts_.emplace(subject.text(), Fact{subject, value, make_derivation()});
    kb_.fact_order_.push_back(subject.text());
    pool_add(subject);
    seed_value_name(value);
    queue_.push_back({EventKind::Fact, subject.text()});
  }

  void instantiate_forall(const Str& fact_key, const Str& pool_key) {
    if (stop_) return;
    const Fact& f = kb_.facts_.at(fact_key);
    const Term& binder = f.term.args()[0];
    const Term& body = f.term.args()[1];
    const Term& tau = kb_.pool_.at(pool_key);
    Term instance = substitute(body, binder.head_id(), tau);
    emit(instance, top_str(), "forall-elim", {f.derivation},
         {{"instance", tau.text()}});
  }

  void try_witness(const Str& exists_key, const Str& witness_key) {
    if (stop_) return;
    const Term& existential = kb_.pool_.at(exists_key);
    const Term& tau = kb_.pool_.at(witness_key);
    if (tau.size() > budget_.max_witness_len) return;
    const Term& binder = existential.args()[0];
    Term instance = substitute(existential.args()[1], binder.head_id(), tau);
    pool_add(instance);
    exists_waiters_[instance.text()].insert({exists_key, witness_key});
    const Fact* fi = fact(instance.text());
    if (fi && is_top(fi->value) && is_formula(instance))
      emit(existential, top_str(), "exists-intro", {fi->derivation},
           {{"witness", tau.text()}});
  }

  // Conclusion-directed checks, dispatched on the head of t. Looks up
  // whatever premises are currently known and emits every conclusion they
  // support. Safe to call repeatedly; duplicates are dropped at insert.
  void check_term(const Term& t) {
    if (stop_) return;
    if (t.is_name()) {
      emit(t, t.name_content(), "name-intro", {});
      return;
    }
    const SymbolId h = t.head_id();
    const auto& args = t.args();

    if (h == core_.sharp) {
      emit(t, args[0].text(), "sharp-intro", {});
    } else if (h == core_.flat) {
      emit(t, args[0].text(), "flat-intro", {});
    } else if (h == core_.neg) {
      if (!is_formula(args[0])) return;
      if (const Fact* f = fact(args[0].text())) {
        if (is_top(f->value)) emit(t, bot_str(), "not-intro-false", {f->derivation});
        else if (is_bot(f->value)) emit(t, top_str(), "not-intro-true", {f->derivation});
      }
    } else if (h == core_.conj) {
      if (!is_formula(args[0]) || !is_formula(args[1])) return;
      const Fact* fa = fact(args[0].text());
      const Fact* fb = fact(args[1].text());
      if (fa && is_top(fa->value) && fb && is_top(fb->value))
        emit(t, top_str(), "and-intro-true", {fa->derivation, fb->derivation});
      if (fa && is_bot(fa->value))
        emit(t, bot_str(), "and-intro-false-left", {fa->derivation});
      if (fb && is_bot(fb->value))
        emit(t, bot_str(), "and-intro-false-right", {fb->derivation});
    } else if (h == core_.disj) {
      if (!is_formula(args[0]) || !is_formula(args[1])) return;
      const Fact* fa = fact(args[0].text());
      const Fact* fb = fact(args[1].text());
      if (fa && is_bot(fa->value) && fb && is_bot(fb->value))
        emit(t, bot_str(), "or-intro-false", {fa->derivation, fb->derivation});
      if (fa && is_top(fa->value))
        emit(t, top_str(), "or-intro-true-left", {fa->derivation});
      if (fb && is_top(fb->value))
        emit(t, top_str(), "or-intro-true-right", {fb->derivation});
    } else if (h == core_.impl) {
      // Material implication is defined through its expansion: whatever
      // value the disjunction of the negated antecedent with the
      // consequent has, the implication has as well.
      if (!is_formula(args[0]) || !is_formula(args[1])) return;
      Term negated = Term::apply(core_.neg, {args[0]}, table_);
      Term expansion = Term::apply(core_.disj, {negated, args[1]}, table_);
      pool_add(expansion);
      imp_waiters_[expansion.text()].emplace(t.text(), t);
      if (const Fact* fp = fact(expansion.text()))
        emit(t, fp->value, "imp-intro", {fp->derivation});
    } else if (h == core_.eq) {
      const Fact* fa = fact(args[0].text());
      const Fact* fb = fact(args[1].text());
      if (fa && fb) {
        if (fa->value == fb->value)
          emit(t, top_str(), "eq-intro-true", {fa->derivation, fb->derivation});
        else
          emit(t, bot_str(), "eq-intro-false", {fa->derivation, fb->derivation});
      }
      const Fact* self = fact(t.text());
      if (self && is_top(self->value)) {
        if (fa) emit(args[1], fa->value, "eq-elim-snd", {self->derivation, fa->derivation});
        if (fb) emit(args[0], fb->value, "eq-elim-fst", {self->derivation, fb->derivation});
      }
    } else if (h == core_.cat) {
      const Fact* fa = fact(args[0].text());
      const Fact* fb = fact(args[1].text());
      if (fa && fb) {
        Str value = fa->value;
        value.insert(value.end(), fb->value.begin(), fb->value.end());
        emit(t, value, "cat-intro", {fa->derivation, fb->derivation});
      }
    } else if (h == core_.succ) {
      if (const Fact* f = fact(args[0].text())) {
        Str value{core_.succ};
        value.insert(value.end(), f->value.begin(), f->value.end());
        emit(t, value, "succ-intro", {f->derivation});
      }
    } else if (h == core_.dag) {
      const Fact* fa = fact(args[0].text());
      if (!fa) return;
      auto inner = Term::try_parse(fa->value, table_);
      if (!inner) return;
      pool_add(*inner);
      dag_waiters_[fa->value].emplace(t.text(), t);
      if (const Fact* fi = fact(fa->value))
        emit(t, fi->value, "dag-intro", {fa->derivation, fi->derivation});
      if (const Fact* self = fact(t.text()))
        emit(*inner, self->value, "dag-elim", {fa->derivation, self->derivation});
    } else if (h == core_.defd) {
      if (const Fact* f = fact(args[0].text()))
        emit(t, top_str(), "defd-intro", {f->derivation});
    } else if (h == core_.form) {
      if (const Fact* f = fact(args[0].text())) {
        auto value_term = Term::try_parse(f->value, table_);
        if (value_term && is_formula(*value_term))
          emit(t, top_str(), "form-intro-true", {f->derivation});
        else
          emit(t, bot_str(), "form-intro-false", {f->derivation});
      }
    } else if (h == core_.yields) {
      if (!is_formula(args[0]) || !is_formula(args[1])) return;
      const Fact* self = fact(t.text());
      if (!self || !is_top(self->value)) return;
      yields_waiters_[args[0].text()].insert(t.text());
      const Fact* fp = fact(args[0].text());
      if (fp && is_top(fp->value))
        emit(args[1], top_str(), "yields-elim", {self->derivation, fp->derivation});
    }
  }

  void process_pool_term(const Str& key) {
    const Term& t = kb_.pool_.at(key);
    if (!t.is_name())
      for (const Term& a : t.args()) parents_[a.text()].insert(key);
    check_term(t);
    if (stop_) return;

    if (!t.is_name() && t.head_id() == core_.exists && is_bare_variable(t.args()[0])) {
      exists_terms_.push_back(key);
      std::vector<Str> snapshot = pool_snapshot();
      for (const Str& wk : snapshot) {
        try_witness(key, wk);
        if (stop_) return;
      }
    }
    for (std::size_t i = 0; i < forall_true_.size() && !stop_; ++i)
      instantiate_forall(forall_true_[i], key);
    if (t.size() <= budget_.max_witness_len)
      for (std::size_t i = 0; i < exists_terms_.size() && !stop_; ++i)
        try_witness(exists_terms_[i], key);
  }

  void process_fact(const Str& key) {
    const Fact& f = kb_.facts_.at(key);
    const Term term = f.term;
    const Str value = f.value;

    check_term(term);
    if (stop_) return;

    if (auto pit = parents_.find(key); pit != parents_.end()) {
      std::set<Str> parent_keys = pit->second;
      for (const Str& pk : parent_keys) {
        check_term(kb_.pool_.at(pk));
        if (stop_) return;
      }
    }

    if (is_top(value)) {
      if (!term.is_name() && term.head_id() == core_.forall &&
          is_bare_variable(term.args()[0]) && !forall_seen_.count(key)) {
        forall_seen_.insert(key);
        forall_true_.push_back(key);
        std::vector<Str> snapshot = pool_snapshot();
        for (const Str& pk : snapshot) {
          instantiate_forall(key, pk);
          if (stop_) return;
        }
      }
      if (!term.is_name() && term.head_id() == core_.eq) {
        eq_waiters_[term.args()[0].text()].insert(key);
        eq_waiters_[term.args()[1].text()].insert(key);
      }
      if (auto wit = yields_waiters_.find(key); wit != yields_waiters_.end()) {
        std::set<Str> waiting = wit->second;
        for (const Str& yk : waiting) {
          check_term(kb_.facts_.at(yk).term);
          if (stop_) return;
        }
      }
      if (auto wit = exists_waiters_.find(key); wit != exists_waiters_.end()) {
        if (is_formula(term)) {
          auto waiting = wit->second;
          for (const auto& [ek, wk] : waiting) {
            const Term& existential = kb_.pool_.at(ek);
            emit(existential, top_str(), "exists-intro", {f.derivation},
                 {{"witness", kb_.pool_.at(wk).text()}});
            if (stop_) return;
          }
        }
      }
    }

    if (auto wit = eq_waiters_.find(key); wit != eq_waiters_.end()) {
      std::set<Str> waiting = wit->second;
      for (const Str& ek : waiting) {
        check_term(kb_.facts_.at(ek).term);
        if (stop_) return;
      }
    }
    if (auto wit = imp_waiters_.find(key); wit != imp_waiters_.end()) {
      auto waiting = wit->second;
      for (const auto& [tk, t] : waiting) {
        check_term(t);
        if (stop_) return;
      }
    }
    if (auto wit = dag_waiters_.find(key); wit != dag_waiters_.end()) {
      auto waiting = wit->second;
      for (const auto& [tk, t] : waiting) {
        check_term(t);
        if (stop_) return;
      }
    }
  }

  std::vector<Str> pool_snapshot() const {
    std::vector<Str> keys;
    keys.reserve(kb_.pool_.size());
    for (const auto& [key, term] : kb_.pool_) keys.push_back(key);
    return keys;
  }

  KnowledgeBase& kb_;
  const Budget& budget_;
  const SymbolTable& table_;
  const CoreSymbols& core_;

  std::deque<std::pair<EventKind, Str>> queue_;
  std::size_t pool_cap_ = 0;
  std::size_t steps_used_ = 0;
  bool stop_ = false;
  bool steps_exhausted_ = false;
  bool pool_exhausted_ = false;
  std::optional<InconsistencyWitness> witness_;

  std::map<Str, std::set<Str>> parents_;       // arg text -> pool compounds using it
  std::vector<Str> forall_true_;               // universal truths, arrival order
  std::set<Str> forall_seen_;
  std::vector<Str> exists_terms_;              // pool existentials, arrival order
  std::map<Str, std::set<Str>> yields_waiters_;          // premise -> rule facts
  std::map<Str, std::set<Str>> eq_waiters_;              // arg -> equality facts
  std::map<Str, std::map<Str, Term>> imp_waiters_;       // expansion -> implications
  std::map<Str, std::map<Str, Term>> dag_waiters_;       // value term -> daggers
  std::map<Str, std::set<std::pair<Str, Str>>> exists_waiters_;  // instance -> (term, witness)
};

SaturationResult saturate(KnowledgeBase& kb, const Budget& budget) {
  return Saturator(kb, budget).run();
}

EvalResult evaluate(const Term& t, const KnowledgeBase& kb, const Budget& budget) {
  KnowledgeBase snapshot = kb;
  snapshot.pool_insert(t);
  SaturationResult res = saturate(snapshot, budget);
  if (res.witness) throw InconsistencyError(*res.witness);
  EvalResult out;
  if (auto v = snapshot.value_of(t.text())) {
    out.value = *v;
    out.derivation = snapshot.derivation_of(t.text());
  } else {
    out.budget_exhausted = res.steps_exhausted || res.pool_exhausted;
  }
  return out;
}

ScanReport consistency_scan(const KnowledgeBase& kb,
                            const std::vector<SymbolId>& pool_symbols,
                            std::size_t max_len, const Budget& budget) {
  std::vector<Term> terms = enumerate_terms(pool_symbols, max_len, kb.table());
  KnowledgeBase snapshot = kb;
  for (const Term& t : terms) snapshot.pool_insert(t);
  SaturationResult res = saturate(snapshot, budget);
  ScanReport report;
  report.terms = terms.size();
  for (const Term& t : terms)
    if (snapshot.value_of(t.text())) ++report.defined;
  report.undefined = report.terms - report.defined;
  if (res.witness) report.witnesses.push_back(*res.witness);
  report.budget_exhausted = res.steps_exhausted || res.pool_exhausted;
  report.steps_used = res.steps_used;
  return report;
}

// ---------------------------------------------------------------------------
// Replay

namespace {

const Str* find_side(const Derivation& d, const char* label) {
  for (const SideCondition& s : d.side)
    if (s.label == label) return &s.payload;
  return nullptr;
}

// Validates one node against its named rule, taking the premises'
// conclusions at face value (they are checked by their own nodes).
bool check_node(const Derivation& d, const KnowledgeBase& kb) {
  const SymbolTable& table = kb.table();
  const CoreSymbols& core = table.core();
  const Term& t = d.conclusion.term;
  const Str& value = d.conclusion.value;
  const auto& ps = d.premises;

  auto is_top = [&](const Str& v) { return v.size() == 1 && v[0] == core.top; };
  auto is_bot = [&](const Str& v) { return v.size() == 1 && v[0] == core.bot; };
  auto premise = [&](std::size_t i) -> const Judgment& { return ps[i]->conclusion; };
  auto head_is = [&](const Term& x, SymbolId h) {
    return !x.is_name() && x.head_id() == h;
  };

  const std::string& rule = d.rule;

  if (rule == "axiom") {
    if (!ps.empty()) return false;
    for (const Judgment& a : kb.axioms())
      if (a.term.text() == t.text() && a.value == value) return true;
    return false;
  }
  if (rule == "name-intro") {
    if (!ps.empty()) return false;
    auto content = try_decode(t.text(), table);
    return content && *content == value;
  }
  if (rule == "sharp-intro")
    return ps.empty() && head_is(t, core.sharp) && t.args()[0].text() == value;
  if (rule == "flat-intro")
    return ps.empty() && head_is(t, core.flat) && t.args()[0].text() == value;
  if (rule == "not-intro-false")
    return ps.size() == 1 && head_is(t, core.neg) && is_formula(t.args()[0]) &&
           premise(0).term == t.args()[0] && is_top(premise(0).value) && is_bot(value);
  if (rule == "not-intro-true")
    return ps.size() == 1 && head_is(t, core.neg) && is_formula(t.args()[0]) &&
           premise(0).term == t.args()[0] && is_bot(premise(0).value) && is_top(value);
  if (rule == "and-intro-true")
    return ps.size() == 2 && head_is(t, core.conj) && is_formula(t.args()[0]) &&
           is_formula(t.args()[1]) && premise(0).term == t.args()[0] &&
           premise(1).term == t.args()[1] && is_top(premise(0).value) &&
           is_top(premise(1).value) && is_top(value);
  if (rule == "and-intro-false-left")
    return ps.size() == 1 && head_is(t, core.conj) && is_formula(t.args()[0]) &&
           is_formula(t.args()[1]) && premise(0).term == t.args()[0] &&
           is_bot(premise(0).value) && is_bot(value);
  if (rule == "and-intro-false-right")
    return ps.size() == 1 && head_is(t, core.conj) && is_formula(t.args()[0]) &&
           is_formula(t.args()[1]) && premise(0).term == t.args()[1] &&
           is_bot(premise(0).value) && is_bot(value);
  if (rule == "or-intro-false")
    return ps.size() == 2 && head_is(t, core.disj) && is_formula(t.args()[0]) &&
           is_formula(t.args()[1]) && premise(0).term == t.args()[0] &&
           premise(1).term == t.args()[1] && is_bot(premise(0).value) &&
           is_bot(premise(1).value) && is_bot(value);
  if (rule == "or-intro-true-left")
    return ps.size() == 1 && head_is(t, core.disj) && is_formula(t.args()[0]) &&
           is_formula(t.args()[1]) && premise(0).term == t.args()[0] &&
           is_top(premise(0).value) && is_top(value);
  if (rule == "or-intro-true-right")
    return ps.size() == 1 && head_is(t, core.disj) && is_formula(t.args()[0]) &&
           is_formula(t.args()[1]) && premise(0).term == t.args()[1] &&
           is_top(premise(0).value) && is_top(value);
  if (rule == "imp-intro") {
    if (ps.size() != 1 || !head_is(t, core.impl)) return false;
    if (!is_formula(t.args()[0]) || !is_formula(t.args()[1])) return false;
    Term negated = Term::apply(core.neg, {t.args()[0]}, table);
    Term expansion = Term::apply(core.disj, {negated, t.args()[1]}, table);
    return premise(0).term == expansion && premise(0).value == value;
  }
  if (rule == "eq-intro-true")
    return ps.size() == 2 && head_is(t, core.eq) &&
           premise(0).term == t.args()[0] && premise(1).term == t.args()[1] &&
           premise(0).value == premise(1).value && is_top(value);
  if (rule == "eq-intro-false")
    return ps.size() == 2 && head_is(t, core.eq) &&
           premise(0).term == t.args()[0] && premise(1).term == t.args()[1] &&
           premise(0).value != premise(1).value && is_bot(value);
  if (rule == "eq-elim-snd")
    return ps.size() == 2 && head_is(premise(0).term, core.eq) &&
           is_top(premise(0).value) &&
           premise(0).term.args()[0] == premise(1).term &&
           premise(0).term.args()[1] == t && premise(1).value == value;
  if (rule == "eq-elim-fst")
    return ps.size() == 2 && head_is(premise(0).term, core.eq) &&
           is_top(premise(0).value) &&
           premise(0).term.args()[1] == premise(1).term &&
           premise(0).term.args()[0] == t && premise(1).value == value;
  if (rule == "cat-intro") {
    if (ps.size() != 2 || !head_is(t, core.cat)) return false;
    if (premise(0).term != t.args()[0] || premise(1).term != t.args()[1]) return false;
    Str expected = premise(0).value;
    expected.insert(expected.end(), premise(1).value.begin(), premise(1).value.end());
    return expected == value;
  }
  if (rule == "succ-intro") {
    if (ps.size() != 1 || !head_is(t, core.succ)) return false;
    if (premise(0).term != t.args()[0]) return false;
    Str expected{core.succ};
    expected.insert(expected.end(), premise(0).value.begin(), premise(0).value.end());
    return expected == value;
  }
  if (rule == "dag-intro")
    return ps.size() == 2 && head_is(t, core.dag) &&
           premise(0).term == t.args()[0] &&
           premise(1).term.text() == premise(0).value && premise(1).value == value;
  if (rule == "dag-elim")
    return ps.size() == 2 && head_is(premise(1).term, core.dag) &&
           premise(1).term.args()[0] == premise(0).term &&
           t.text() == premise(0).value && premise(1).value == value;
  if (rule == "yields-elim")
    return ps.size() == 2 && head_is(premise(0).term, core.yields) &&
           is_top(premise(0).value) && is_top(premise(1).value) &&
           premise(0).term.args()[0] == premise(1).term &&
           premise(0).term.args()[1] == t && is_formula(premise(0).term.args()[0]) &&
           is_formula(premise(0).term.args()[1]) && is_top(value);
  if (rule == "defd-intro")
    return ps.size() == 1 && head_is(t, core.defd) &&
           premise(0).term == t.args()[0] && is_top(value);
  if (rule == "form-intro-true") {
    if (ps.size() != 1 || !head_is(t, core.form)) return false;
    if (premise(0).term != t.args()[0] || !is_top(value)) return false;
    auto value_term = Term::try_parse(premise(0).value, table);
    return value_term && is_formula(*value_term);
  }
  if (rule == "form-intro-false") {
    if (ps.size() != 1 || !head_is(t, core.form)) return false;
    if (premise(0).term != t.args()[0] || !is_bot(value)) return false;
    auto value_term = Term::try_parse(premise(0).value, table);
    return !(value_term && is_formula(*value_term));
  }
  if (rule == "forall-elim") {
    if (ps.size() != 1 || !is_top(value)) return false;
    const Term& universal = premise(0).term;
    if (!head_is(universal, core.forall) || !is_top(premise(0).value)) return false;
    const Term& binder = universal.args()[0];
    if (binder.is_name() || !table.is_variable(binder.head_id())) return false;
    const Str* instance_text = find_side(d, "instance");
    if (!instance_text) return false;
    auto tau = Term::try_parse(*instance_text, table);
    if (!tau) return false;
    return substitute(universal.args()[1], binder.head_id(), *tau) == t;
  }
  if (rule == "exists-intro") {
    if (ps.size() != 1 || !head_is(t, core.exists) || !is_top(value)) return false;
    const Term& binder = t.args()[0];
    if (binder.is_name() || !table.is_variable(binder.head_id())) return false;
    const Str* witness_text = find_side(d, "witness");
    if (!witness_text) return false;
    auto tau = Term::try_parse(*witness_text, table);
    if (!tau) return false;
    const Term& instance = premise(0).term;
    if (!is_formula(instance) || !is_top(premise(0).value)) return false;
    return substitute(t.args()[1], binder.head_id(), *tau) == instance;
  }
  return false;  // unknown rule name
}

}  // namespace

bool replay(const Derivation& d, const KnowledgeBase& kb) {
  if (!check_node(d, kb)) return false;
  for (const DerivationPtr& p : d.premises)
    if (!p || !replay(*p, kb)) return false;
  return true;
}

void export_derivation(std::ostream& os, const Derivation& d,
                       const SymbolTable& table, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
  os << d.rule << ": val(" << render(d.conclusion.term.text(), TextMode::Ascii, table)
     << ") = " << render(d.conclusion.value, TextMode::Ascii, table);
  for (const SideCondition& s : d.side)
    os << " [" << s.label << ": " << render(s.payload, TextMode::Ascii, table) << "]";
  os << "\n";
  for (const DerivationPtr& p : d.premises)
    if (p) export_derivation(os, *p, table, depth + 1);
}

std::string export_derivation(const Derivation& d, const SymbolTable& table) {
  std::ostringstream os;
  export_derivation(os, d, table, 0);
  return os.str();
}

}  // namespace reflectica
