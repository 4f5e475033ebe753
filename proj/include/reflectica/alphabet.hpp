// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reflectica {

using SymbolId = std::uint16_t;

enum class SymbolKind { Logical, Predicate, Functional, Variable, QuoteComponent };

struct Symbol {
  SymbolId id = 0;
  std::string display;       // exactly one Unicode glyph, UTF-8 encoded
  std::string ascii_name;    // unique ASCII token, e.g. "top"
  std::optional<int> arity;  // absent exactly for the three quote components
  SymbolKind kind = SymbolKind::Functional;
};

/// A nonempty finite sequence of symbols. Terms, values and names are all
/// strings over the one alphabet; this is the universe element.
using Str = std::vector<SymbolId>;

/// Length-first, then id-lexicographic order. Every enumeration in the
/// interpreter that must be reproducible iterates in this order.
struct ShortLex {
  bool operator()(const Str& a, const Str& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

enum class TextMode { Unicode, Ascii };

struct TokenizeError : std::runtime_error {
  TokenizeError(std::size_t position, const std::string& message)
      : std::runtime_error(message), position(position) {}
  std::size_t position;  // codepoint offset into the input text
};

/// Ids of the fixed core symbols, resolved once at table construction.
struct CoreSymbols {
  SymbolId top = 0, bot = 0;
  SymbolId neg = 0, conj = 0, disj = 0, impl = 0;
  SymbolId eq = 0;
  SymbolId sharp = 0, flat = 0;
  SymbolId forall = 0, exists = 0;
  SymbolId cat = 0, zero = 0, succ = 0, dag = 0;
  SymbolId yields = 0, cond = 0, defd = 0, form = 0;
  SymbolId qo = 0, qc = 0, bar = 0;
};

/// The alphabet: an immutable core (logical connectives, predicates,
/// quote components, the Latin and Greek variables) plus user-registered
/// extensions. Construction validates uniqueness of ids, displays and
/// ASCII names; after that the table is safe to share across threads.
class SymbolTable {
 public:
  SymbolTable();

  const Symbol& symbol(SymbolId id) const { return symbols_.at(id); }
  std::size_t size() const { return symbols_.size(); }
  std::size_t core_size() const { return core_count_; }

  const Symbol* find_ascii(std::string_view token) const;
  const Symbol* find_display(std::string_view glyph) const;

  /// Registers a user symbol. Displays and names must be fresh (core
  /// symbols cannot be shadowed), the display must be a single glyph,
  /// variables must have arity 0, and quote components cannot be added.
  SymbolId register_symbol(const std::string& display, const std::string& ascii_name,
                           int arity, SymbolKind kind);

  const CoreSymbols& core() const { return core_; }

  bool is_variable(SymbolId id) const { return symbol(id).kind == SymbolKind::Variable; }
  bool is_quote_component(SymbolId id) const {
    return symbol(id).kind == SymbolKind::QuoteComponent;
  }
  std::optional<int> arity_of(SymbolId id) const { return symbol(id).arity; }

 private:
  SymbolId add(const std::string& display, const std::string& ascii_name,
               std::optional<int> arity, SymbolKind kind,
               const std::vector<std::string>& aliases = {});

  std::vector<Symbol> symbols_;
  std::map<std::string, SymbolId, std::less<>> by_display_;
  std::map<std::string, SymbolId, std::less<>> by_ascii_;  // names and aliases
  CoreSymbols core_;
  std::size_t core_count_ = 0;
};

/// Splits `text` into a symbol string. Whitespace and the punctuation
/// characters ( ) [ ] , are discarded; anything else must resolve against
/// the table. In Unicode mode every glyph is one symbol; in ASCII mode
/// tokens are letter runs, single digits or single marks, matched first
/// against ASCII names and then against single-character displays.
Str tokenize(std::string_view text, TextMode mode, const SymbolTable& table);

/// Inverse of tokenize: tokenize(render(x, m), m) == x for every x.
std::string render(const Str& x, TextMode mode, const SymbolTable& table);

/// True when the text contains a byte outside 7-bit ASCII; used to pick
/// the token mode for files and command-line input.
bool has_non_ascii(std::string_view text);

}  // namespace reflectica
