// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "reflectica/axiom_file.hpp"
#include "reflectica/engine.hpp"

namespace reflectica {

// Exit statuses shared by the command line and the REPL:
//   0 defined / confirmed / clean scan
//   1 undefined within budget, or check mismatch
//   2 tokenize or parse error
//   3 inconsistency detected

struct SessionConfig {
  Budget budget;
  bool trace = false;
  bool force_ascii = false;
  std::vector<std::string> prelude_paths;
};

struct CommandResult {
  int status = 0;
  std::string out;
  std::string err;
};

/// One interactive or scripted session: a symbol table, a knowledge base
/// that accumulates loaded axioms, and the evaluation budget. Evaluation
/// never mutates the session; only axioms persist.
class Session {
 public:
  explicit Session(SessionConfig config);

  /// Errors from loading the configured prelude files; empty when fine.
  const std::vector<std::string>& startup_errors() const { return startup_errors_; }

  CommandResult eval_command(const std::string& text);
  CommandResult check_command(const std::string& term_text,
                              const std::string& value_text);
  CommandResult scan_command(const std::string& symbols_spec, std::size_t max_size);

  /// Handles one REPL line: a :directive or a term to evaluate. Sets
  /// `quit` on :quit.
  CommandResult repl_line(const std::string& line, bool& quit);

  SymbolTable& table() { return table_; }
  const KnowledgeBase& kb() const { return kb_; }
  SessionConfig& config() { return config_; }

  /// Resolves a --symbols specification ("prop", "default", or a
  /// comma-separated list of names or glyphs) against the table.
  std::vector<SymbolId> resolve_symbols(const std::string& spec) const;

 private:
  TextMode input_mode(const std::string& text) const;
  TextMode output_mode(TextMode in) const;
  std::string describe_witness(const InconsistencyWitness& w) const;

  SymbolTable table_;
  SessionConfig config_;
  KnowledgeBase kb_;
  std::vector<std::string> startup_errors_;
};

}  // namespace reflectica
