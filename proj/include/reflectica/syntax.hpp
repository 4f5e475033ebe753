// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflectica/alphabet.hpp"

namespace reflectica {

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message), position(position) {}
  std::size_t position;  // symbol index into the parsed string
};

/// A parsed term: either a canonical name, or a head symbol with as many
/// argument terms as its arity. The stored text always reconstructs
/// exactly from the shape, and no proper initial segment of it is a term.
class Term {
 public:
  /// Parses x as a term. At each position a canonical name is tried
  /// first; otherwise one symbol with an arity is consumed and its
  /// arguments are parsed recursively. Throws ParseError when x is not a
  /// term (trailing symbols, truncated input, quote symbol outside a
  /// canonical name).
  static Term parse(const Str& x, const SymbolTable& table);

  /// Like parse but signals failure by absence.
  static std::optional<Term> try_parse(const Str& x, const SymbolTable& table);

  /// The canonical name of `content`, as a term.
  static Term name_of(const Str& content, const SymbolTable& table);

  /// Compound with the given head; the number of arguments must equal the
  /// head's arity.
  static Term apply(SymbolId head, std::vector<Term> args, const SymbolTable& table);

  const Str& text() const { return text_; }
  std::size_t size() const { return text_.size(); }

  bool is_name() const { return is_name_; }
  const Str& name_content() const { return content_; }

  const Symbol& head() const { return table_->symbol(head_); }
  SymbolId head_id() const { return head_; }
  const std::vector<Term>& args() const { return args_; }

  const SymbolTable& table() const { return *table_; }

  /// The term itself plus all argument terms, recursively. Canonical
  /// names are atomic: their content is a string, not a subterm.
  std::vector<Term> subterms() const;

  bool operator==(const Term& other) const { return text_ == other.text_; }
  bool operator!=(const Term& other) const { return text_ != other.text_; }

 private:
  Term() = default;

  Str text_;
  bool is_name_ = false;
  Str content_;             // when is_name_
  SymbolId head_ = 0;       // when compound
  std::vector<Term> args_;  // when compound
  const SymbolTable* table_ = nullptr;
};

/// A term is a formula when its head symbol is a predicate or a logical
/// symbol. Canonical names are never formulas.
bool is_formula(const Term& t);

enum class BindingStatus { Free, Bound };

struct VariableOccurrence {
  std::size_t position = 0;  // symbol index into the term text
  BindingStatus status = BindingStatus::Free;
};

/// Classifies every occurrence of variable v in t. An occurrence is bound
/// when it lies inside a canonical name, inside the argument of the
/// variable-binding quote, or inside a quantifier over v (including the
/// occurrence right after the quantifier); the non-binding quote leaves
/// its argument's occurrences as they are.
std::vector<VariableOccurrence> occurrences(const Term& t, SymbolId v);

/// Replaces every free occurrence of v in phi by tau, literally. No
/// renaming is performed, so capture is possible; the result is always a
/// well-formed term.
Term substitute(const Term& phi, SymbolId v, const Term& tau);

/// All terms whose text has length <= max_len and uses only symbols from
/// pool, ordered by length and then lexicographically by symbol ids.
/// Canonical names appear exactly when the pool contains the quote
/// components they need.
std::vector<Term> enumerate_terms(const std::vector<SymbolId>& pool,
                                  std::size_t max_len, const SymbolTable& table);

}  // namespace reflectica
