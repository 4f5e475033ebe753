// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>

#include "reflectica/alphabet.hpp"

namespace reflectica {

// Canonical names quote a string between an escalating pair of quotes:
// level n uses n bars before the opener and n bars after the closer,
//   opener(n) = |…|⌈   closer(n) = ⌉|…|
// and the level chosen for a string is the least one whose closer does
// not occur inside it. That makes the name of every string unique and
// prefix-free, so a left-to-right scan can never misread one.

/// The least n such that closer(n) is not a substring of x.
std::size_t quote_level(const Str& x, const SymbolTable& table);

/// The canonical name of x: opener(quote_level(x)) + x + closer(quote_level(x)).
/// x must be nonempty.
Str make_name(const Str& x, const SymbolTable& table);

/// Recovers x from make_name(x). Returns nothing when c is not a canonical
/// name, including when the quote level is not minimal for the content.
std::optional<Str> try_decode(const Str& c, const SymbolTable& table);

struct NamePrefix {
  Str name;     // the full canonical name found at `from`
  Str content;  // the string it names
  std::size_t length = 0;
};

/// Looks for a canonical name starting at position `from` of x. Greedy and
/// unambiguous: at most one canonical name can begin at a given position.
std::optional<NamePrefix> scan_name_prefix(const Str& x, std::size_t from,
                                           const SymbolTable& table);

}  // namespace reflectica
