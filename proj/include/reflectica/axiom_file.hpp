// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "reflectica/engine.hpp"

namespace reflectica {

// Axiom files are UTF-8 text, one entry per line:
//   # comment to end of line
//   axiom <formula-text>              -- asserts val(formula) = top
//   value <term-text> := <string-text> -- asserts val(term) = string
// The token mode of a file is chosen by inspection: any non-ASCII glyph
// outside comments selects Unicode mode, otherwise ASCII mode.

struct AxiomEntry {
  std::size_t line = 0;
  Judgment judgment;
};

struct AxiomFileError {
  std::size_t line = 0;
  std::string message;
};

struct AxiomFile {
  std::string path;
  TextMode mode = TextMode::Ascii;
  std::vector<AxiomEntry> entries;
  std::vector<AxiomFileError> errors;

  bool ok() const { return errors.empty(); }
};

/// Parses axiom-file text. Collects all errors instead of stopping at the
/// first one; entries are only meaningful when ok().
AxiomFile parse_axiom_text(const std::string& text, const std::string& path,
                           const SymbolTable& table);

/// Reads and parses the file at `path`. A missing or unreadable file is
/// reported as a line-0 error.
AxiomFile load_axiom_file(const std::string& path, const SymbolTable& table);

/// Asserts every entry into kb. All-or-nothing: on any conflict kb is
/// left exactly as it was and the conflicting entry is reported.
std::vector<AxiomFileError> apply_axiom_file(const AxiomFile& file, KnowledgeBase& kb);

}  // namespace reflectica
