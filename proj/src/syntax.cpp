// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "reflectica/syntax.hpp"

#include <algorithm>

#include "reflectica/naming.hpp"

namespace reflectica {

namespace {

struct Parser {
  const Str& text;
  const SymbolTable& table;
  std::size_t pos = 0;

  Term parse_term();
};

}  // namespace

Term Term::name_of(const Str& content, const SymbolTable& table) {
  Term t;
  t.text_ = make_name(content, table);
  t.is_name_ = true;
  t.content_ = content;
  t.table_ = &table;
  return t;
}

Term Term::apply(SymbolId head, std::vector<Term> args, const SymbolTable& table) {
  const Symbol& s = table.symbol(head);
  if (!s.arity.has_value())
    throw std::invalid_argument("symbol '" + s.ascii_name + "' has no arity");
  if (static_cast<std::size_t>(*s.arity) != args.size())
    throw std::invalid_argument("arity mismatch for '" + s.ascii_name + "'");
  Term t;
  t.text_.push_back(head);
  for (const Term& a : args) t.text_.insert(t.text_.end(), a.text_.begin(), a.text_.end());
  t.head_ = head;
  t.args_ = std::move(args);
  t.table_ = &table;
  return t;
}

Term Parser::parse_term() {
  if (pos >= text.size())
    throw ParseError(pos, "unexpected end of input: missing term");
  if (auto np = scan_name_prefix(text, pos, table)) {
    Term t = Term::name_of(np->content, table);
    pos += np->length;
    return t;
  }
  const Symbol& s = table.symbol(text[pos]);
  if (!s.arity.has_value())
    throw ParseError(pos, "quote symbol '" + s.ascii_name +
                              "' outside a canonical name");
  ++pos;
  std::vector<Term> args;
  args.reserve(static_cast<std::size_t>(*s.arity));
  for (int i = 0; i < *s.arity; ++i) args.push_back(parse_term());
  return Term::apply(s.id, std::move(args), table);
}

Term Term::parse(const Str& x, const SymbolTable& table) {
  Parser p{x, table};
  Term t = p.parse_term();
  if (p.pos != x.size())
    throw ParseError(p.pos, "trailing symbols after a complete term");
  return t;
}

std::optional<Term> Term::try_parse(const Str& x, const SymbolTable& table) {
  try {
    return parse(x, table);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::vector<Term> Term::subterms() const {
  std::vector<Term> out;
  out.push_back(*this);
  for (std::size_t i = 0; i < out.size(); ++i) {
    // out grows while we walk it; index loop keeps iterators valid
    std::vector<Term> args = out[i].args_;
    for (Term& a : args) out.push_back(std::move(a));
  }
  return out;
}

bool is_formula(const Term& t) {
  if (t.is_name()) return false;
  SymbolKind k = t.head().kind;
  return k == SymbolKind::Predicate || k == SymbolKind::Logical;
}

namespace {

bool is_bare_variable(const Term& t, const SymbolTable& table) {
  return !t.is_name() && table.is_variable(t.head_id());
}

void classify(const Term& t, SymbolId v, std::size_t base, bool quoted,
              const std::set<SymbolId>& bound_vars,
              std::vector<VariableOccurrence>& out) {
  const SymbolTable& table = t.table();
  if (t.is_name()) {
    const Str& text = t.text();
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i] == v) out.push_back({base + i, BindingStatus::Bound});
    return;
  }
  const CoreSymbols& core = table.core();
  SymbolId h = t.head_id();
  if (h == v) {
    bool bound = quoted || bound_vars.count(v) > 0;
    out.push_back({base, bound ? BindingStatus::Bound : BindingStatus::Free});
    return;
  }
  if (h == core.sharp) {
    classify(t.args()[0], v, base + 1, true, bound_vars, out);
    return;
  }
  if ((h == core.forall || h == core.exists) &&
      is_bare_variable(t.args()[0], table)) {
    SymbolId w = t.args()[0].head_id();
    if (w == v) out.push_back({base + 1, BindingStatus::Bound});
    std::set<SymbolId> inner = bound_vars;
    inner.insert(w);
    classify(t.args()[1], v, base + 2, quoted, inner, out);
    return;
  }
  std::size_t offset = base + 1;
  for (const Term& a : t.args()) {
    classify(a, v, offset, quoted, bound_vars, out);
    offset += a.size();
  }
}

Term rewrite_free(const Term& t, SymbolId v, const Term& tau,
                  const std::set<SymbolId>& bound_vars) {
  const SymbolTable& table = t.table();
  if (t.is_name()) return t;
  const CoreSymbols& core = table.core();
  SymbolId h = t.head_id();
  if (h == v) return bound_vars.count(v) ? t : tau;
  if (h == core.sharp) return t;  // the binding quote: argument untouched
  if ((h == core.forall || h == core.exists) &&
      is_bare_variable(t.args()[0], table)) {
    SymbolId w = t.args()[0].head_id();
    std::set<SymbolId> inner = bound_vars;
    inner.insert(w);
    std::vector<Term> args;
    args.push_back(t.args()[0]);
    args.push_back(rewrite_free(t.args()[1], v, tau, inner));
    return Term::apply(h, std::move(args), table);
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(rewrite_free(a, v, tau, bound_vars));
  return Term::apply(h, std::move(args), table);
}

}  // namespace

std::vector<VariableOccurrence> occurrences(const Term& t, SymbolId v) {
  if (!t.table().is_variable(v))
    throw std::invalid_argument("occurrences: symbol is not a variable");
  std::vector<VariableOccurrence> out;
  classify(t, v, 0, false, {}, out);
  return out;
}

Term substitute(const Term& phi, SymbolId v, const Term& tau) {
  if (!phi.table().is_variable(v))
    throw std::invalid_argument("substitute: symbol is not a variable");
  return rewrite_free(phi, v, tau, {});
}

std::vector<Term> enumerate_terms(const std::vector<SymbolId>& pool,
                                  std::size_t max_len, const SymbolTable& table) {
  std::vector<SymbolId> symbols = pool;
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

  const CoreSymbols& core = table.core();
  bool has_qo = false, has_qc = false, has_bar = false;
  for (SymbolId s : symbols) {
    if (s == core.qo) has_qo = true;
    if (s == core.qc) has_qc = true;
    if (s == core.bar) has_bar = true;
  }

  std::vector<std::vector<Term>> by_len(max_len + 1);

  // Canonical names over pool strings. A level-n name needs the bar
  // symbol in the pool as well as both quote marks.
  if (has_qo && has_qc && max_len >= 3) {
    Str content;
    auto visit = [&](auto&& self, std::size_t target) -> void {
      if (content.size() == target) {
        std::size_t level = quote_level(content, table);
        if (level > 0 && !has_bar) return;
        std::size_t name_len = content.size() + 2 * level + 2;
        if (name_len <= max_len)
          by_len[name_len].push_back(Term::name_of(content, table));
        return;
      }
      for (SymbolId s : symbols) {
        content.push_back(s);
        self(self, target);
        content.pop_back();
      }
    };
    for (std::size_t c = 1; c + 2 <= max_len; ++c) visit(visit, c);
  }

  // Compounds, built by length so every argument list is already known.
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (SymbolId s : symbols) {
      auto arity = table.arity_of(s);
      if (!arity) continue;
      if (*arity == 0) {
        if (len == 1) by_len[1].push_back(Term::apply(s, {}, table));
      } else if (*arity == 1) {
        if (len >= 2)
          for (const Term& a : by_len[len - 1])
            by_len[len].push_back(Term::apply(s, {a}, table));
      } else if (*arity == 2) {
        for (std::size_t l1 = 1; l1 + 2 <= len; ++l1)
          for (const Term& a : by_len[l1])
            for (const Term& b : by_len[len - 1 - l1])
              by_len[len].push_back(Term::apply(s, {a, b}, table));
      } else {
        // arity >= 3: enumerate argument length splits recursively
        std::vector<Term> args;
        auto build = [&](auto&& self, int remaining, std::size_t budget) -> void {
          if (remaining == 0) {
            if (budget == 0)
              by_len[len].push_back(Term::apply(s, args, table));
            return;
          }
          for (std::size_t l = 1; l + static_cast<std::size_t>(remaining) - 1 <= budget; ++l)
            for (const Term& a : by_len[l]) {
              args.push_back(a);
              self(self, remaining - 1, budget - l);
              args.pop_back();
            }
        };
        if (len >= static_cast<std::size_t>(*arity) + 1)
          build(build, *arity, len - 1);
      }
    }
  }

  std::vector<Term> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::sort(by_len[len].begin(), by_len[len].end(),
              [](const Term& a, const Term& b) { return a.text() < b.text(); });
    for (Term& t : by_len[len]) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace reflectica
