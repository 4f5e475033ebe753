// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "reflectica/alphabet.hpp"

#include <cctype>

namespace reflectica {

namespace {

bool is_punct_char(char c) {
  return c == '(' || c == ')' || c == '[' || c == ']' || c == ',';
}

bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Length of the UTF-8 sequence introduced by `lead`, or 0 if invalid.
std::size_t utf8_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 0;
}

}  // namespace

SymbolId SymbolTable::add(const std::string& display, const std::string& ascii_name,
                          std::optional<int> arity, SymbolKind kind,
                          const std::vector<std::string>& aliases) {
  if (display.empty() || ascii_name.empty())
    throw std::logic_error("symbol display and ascii name must be nonempty");
  if (utf8_len(static_cast<unsigned char>(display[0])) != display.size())
    throw std::logic_error("symbol display must be a single glyph: " + display);
  if (by_display_.count(display))
    throw std::logic_error("duplicate display glyph: " + display);
  if (by_ascii_.count(ascii_name))
    throw std::logic_error("duplicate ascii name: " + ascii_name);
  if (kind == SymbolKind::QuoteComponent) {
    if (arity.has_value())
      throw std::logic_error("quote components have no arity");
  } else {
    if (!arity.has_value() || *arity < 0)
      throw std::logic_error("symbol must have a nonnegative arity: " + ascii_name);
    if (kind == SymbolKind::Variable && *arity != 0)
      throw std::logic_error("variables have arity 0");
  }

  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back(Symbol{id, display, ascii_name, arity, kind});
  by_display_[display] = id;
  by_ascii_[ascii_name] = id;
  for (const auto& alias : aliases) {
    if (by_ascii_.count(alias)) throw std::logic_error("duplicate ascii alias: " + alias);
    by_ascii_[alias] = id;
  }
  return id;
}

SymbolTable::SymbolTable() {
  core_.top = add("⊤", "top", 0, SymbolKind::Logical);
  core_.bot = add("⊥", "bot", 0, SymbolKind::Logical);
  core_.neg = add("¬", "not", 1, SymbolKind::Logical);
  core_.conj = add("&", "and", 2, SymbolKind::Logical);
  core_.disj = add("∨", "or", 2, SymbolKind::Logical);
  core_.impl = add("→", "imp", 2, SymbolKind::Logical);
  core_.eq = add("=", "eq", 2, SymbolKind::Predicate);
  core_.sharp = add("♯", "sharp", 1, SymbolKind::Functional);
  core_.flat = add("♮", "flat", 1, SymbolKind::Functional);
  core_.forall = add("∀", "all", 2, SymbolKind::Logical, {"forall"});
  core_.exists = add("∃", "ex", 2, SymbolKind::Logical, {"exists"});
  core_.cat = add("·", "cat", 2, SymbolKind::Functional);
  core_.zero = add("0", "zero", 0, SymbolKind::Functional);
  core_.succ = add("S", "succ", 1, SymbolKind::Functional);
  core_.dag = add("†", "dag", 1, SymbolKind::Functional);
  core_.yields = add("↣", "yields", 2, SymbolKind::Predicate);
  core_.cond = add("⇒", "cond", 2, SymbolKind::Predicate);
  core_.defd = add("↓", "defd", 1, SymbolKind::Predicate);
  core_.form = add("𝔽", "form", 1, SymbolKind::Predicate);
  core_.qo = add("⌈", "qo", std::nullopt, SymbolKind::QuoteComponent);
  core_.qc = add("⌉", "qc", std::nullopt, SymbolKind::QuoteComponent);
  core_.bar = add("|", "bar", std::nullopt, SymbolKind::QuoteComponent);

  for (char c = 'a'; c <= 'z'; ++c)
    add(std::string(1, c), std::string(1, c), 0, SymbolKind::Variable);

  static const std::pair<const char*, const char*> kGreek[] = {
      {"α", "alpha"},   {"β", "beta"},  {"γ", "gamma"}, {"δ", "delta"},
      {"ε", "epsilon"}, {"ζ", "zeta"},  {"η", "eta"},   {"θ", "theta"},
      {"ι", "iota"},    {"κ", "kappa"}, {"λ", "lambda"}, {"μ", "mu"},
      {"ν", "nu"},      {"ξ", "xi"},    {"ο", "omicron"}, {"π", "pi"},
      {"ρ", "rho"},     {"σ", "sigma"}, {"τ", "tau"},   {"υ", "upsilon"},
      {"φ", "phi"},     {"χ", "chi"},   {"ψ", "psi"},   {"ω", "omega"}};
  for (const auto& [glyph, name] : kGreek) add(glyph, name, 0, SymbolKind::Variable);

  core_count_ = symbols_.size();
}

const Symbol* SymbolTable::find_ascii(std::string_view token) const {
  auto it = by_ascii_.find(token);
  return it == by_ascii_.end() ? nullptr : &symbols_[it->second];
}

const Symbol* SymbolTable::find_display(std::string_view glyph) const {
  auto it = by_display_.find(glyph);
  return it == by_display_.end() ? nullptr : &symbols_[it->second];
}

SymbolId SymbolTable::register_symbol(const std::string& display,
                                      const std::string& ascii_name, int arity,
                                      SymbolKind kind) {
  if (kind == SymbolKind::QuoteComponent)
    throw std::logic_error("quote components are fixed; cannot register more");
  return add(display, ascii_name, arity, kind);
}

bool has_non_ascii(std::string_view text) {
  for (unsigned char c : text)
    if (c >= 0x80) return true;
  return false;
}

namespace {

Str tokenize_unicode(std::string_view text, const SymbolTable& table) {
  Str out;
  std::size_t i = 0;
  std::size_t cp_index = 0;
  while (i < text.size()) {
    unsigned char lead = static_cast<unsigned char>(text[i]);
    std::size_t n = utf8_len(lead);
    if (n == 0 || i + n > text.size())
      throw TokenizeError(cp_index, "invalid UTF-8 sequence");
    if (n == 1 && (is_space_char(text[i]) || is_punct_char(text[i]))) {
      ++i;
      ++cp_index;
      continue;
    }
    std::string_view glyph = text.substr(i, n);
    const Symbol* s = table.find_display(glyph);
    if (!s)
      throw TokenizeError(cp_index, "unknown symbol '" + std::string(glyph) + "'");
    out.push_back(s->id);
    i += n;
    ++cp_index;
  }
  if (out.empty()) throw TokenizeError(cp_index, "empty string: no symbols in input");
  return out;
}

Str tokenize_ascii(std::string_view text, const SymbolTable& table) {
  Str out;
  std::size_t i = 0;
  auto resolve = [&](std::string_view word, std::size_t pos) {
    if (const Symbol* s = table.find_ascii(word)) return s->id;
    if (const Symbol* s = table.find_display(word)) return s->id;
    throw TokenizeError(pos, "unknown token '" + std::string(word) + "'");
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c >= 0x80)
      throw TokenizeError(i, "non-ASCII character in ASCII-mode input");
    if (is_space_char(text[i]) || is_punct_char(text[i])) {
      ++i;
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isalpha(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back(resolve(text.substr(i, j - i), i));
      i = j;
    } else {
      out.push_back(resolve(text.substr(i, 1), i));
      ++i;
    }
  }
  if (out.empty()) throw TokenizeError(text.size(), "empty string: no symbols in input");
  return out;
}

}  // namespace

Str tokenize(std::string_view text, TextMode mode, const SymbolTable& table) {
  return mode == TextMode::Unicode ? tokenize_unicode(text, table)
                                   : tokenize_ascii(text, table);
}

std::string render(const Str& x, TextMode mode, const SymbolTable& table) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Symbol& s = table.symbol(x[i]);
    if (mode == TextMode::Ascii) {
      if (i) out += ' ';
      out += s.ascii_name;
    } else {
      out += s.display;
    }
  }
  return out;
}

}  // namespace reflectica
