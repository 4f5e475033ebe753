// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "reflectica/naming.hpp"

#include <stdexcept>

namespace reflectica {

std::size_t quote_level(const Str& x, const SymbolTable& table) {
  const SymbolId qc = table.core().qc;
  const SymbolId bar = table.core().bar;
  // closer(n) occurs in x iff some qc is followed by at least n bars,
  // so the level is one more than the longest bar run after a qc.
  std::size_t level = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != qc) continue;
    std::size_t bars = 0;
    while (i + 1 + bars < x.size() && x[i + 1 + bars] == bar) ++bars;
    if (bars + 1 > level) level = bars + 1;
  }
  return level;
}

Str make_name(const Str& x, const SymbolTable& table) {
  if (x.empty()) throw std::invalid_argument("cannot name the empty string");
  const CoreSymbols& core = table.core();
  const std::size_t n = quote_level(x, table);
  Str name;
  name.reserve(x.size() + 2 * n + 2);
  name.insert(name.end(), n, core.bar);
  name.push_back(core.qo);
  name.insert(name.end(), x.begin(), x.end());
  name.push_back(core.qc);
  name.insert(name.end(), n, core.bar);
  return name;
}

std::optional<Str> try_decode(const Str& c, const SymbolTable& table) {
  const CoreSymbols& core = table.core();
  std::size_t bars = 0;
  while (bars < c.size() && c[bars] == core.bar) ++bars;
  // Shape must be bars, opener, content (>= 1 symbol), closer, bars.
  if (bars >= c.size() || c[bars] != core.qo) return std::nullopt;
  if (c.size() < 2 * bars + 3) return std::nullopt;
  Str content(c.begin() + bars + 1, c.end() - bars - 1);
  if (make_name(content, table) != c) return std::nullopt;
  return content;
}

std::optional<NamePrefix> scan_name_prefix(const Str& x, std::size_t from,
                                           const SymbolTable& table) {
  const CoreSymbols& core = table.core();
  std::size_t bars = 0;
  while (from + bars < x.size() && x[from + bars] == core.bar) ++bars;
  std::size_t open = from + bars;
  if (open >= x.size() || x[open] != core.qo) return std::nullopt;

  // Take content up to the first occurrence of the matching closer; the
  // prefix-freedom of canonical names makes this greedy cut the only
  // possible one.
  for (std::size_t j = open + 1; j + bars < x.size(); ++j) {
    if (x[j] != core.qc) continue;
    bool match = true;
    for (std::size_t k = 0; k < bars; ++k)
      if (x[j + 1 + k] != core.bar) {
        match = false;
        break;
      }
    if (!match) continue;
    if (j == open + 1) return std::nullopt;  // empty content
    Str content(x.begin() + open + 1, x.begin() + j);
    if (quote_level(content, table) != bars) return std::nullopt;  // not minimal
    std::size_t end = j + 1 + bars;
    NamePrefix result;
    result.name.assign(x.begin() + from, x.begin() + end);
    result.content = std::move(content);
    result.length = end - from;
    return result;
  }
  return std::nullopt;
}

}  // namespace reflectica
