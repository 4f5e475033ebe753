// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: evaluate terms, check expected values, run the
// consistency scanner, or start an interactive session.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reflectica/session.hpp"

namespace {

using reflectica::CommandResult;
using reflectica::Session;
using reflectica::SessionConfig;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

int finish(const CommandResult& result) {
  if (!result.out.empty()) std::cout << result.out;
  if (!result.err.empty()) std::cerr << result.err;
  return result.status;
}

int run_repl(Session& session) {
  std::string line;
  bool quit = false;
  while (!quit) {
    std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    CommandResult result = session.repl_line(line, quit);
    if (!result.out.empty()) std::cout << result.out;
    if (!result.err.empty()) std::cerr << result.err;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflectica: an interpreter for a self-describing term language"};
  app.require_subcommand(1);

  SessionConfig config;
  app.add_option("--budget-steps", config.budget.max_steps,
                 "maximum rule firings per evaluation")
      ->capture_default_str();
  app.add_option("--budget-pool", config.budget.max_pool,
                 "maximum growth of the instantiation pool")
      ->capture_default_str();
  app.add_option("--witness-len", config.budget.max_witness_len,
                 "maximum length of existential witness terms")
      ->capture_default_str();
  app.add_flag("--trace", config.trace, "print the derivation tree");
  app.add_flag("--ascii", config.force_ascii, "ASCII token mode for input and output");
  app.add_option("--prelude", config.prelude_paths, "axiom file to load at startup")
      ->allow_extra_args(false);

  std::vector<std::string> eval_text;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a term");
  eval_cmd->add_option("text", eval_text, "term text")->required()->expected(-1);

  std::string check_term, check_value;
  auto* check_cmd = app.add_subcommand("check", "evaluate a term and compare");
  check_cmd->add_option("term", check_term, "term text")->required();
  check_cmd->add_option("value", check_value, "expected value text")->required();

  std::string scan_symbols = "default";
  std::size_t scan_max_size = 3;
  auto* scan_cmd = app.add_subcommand("scan", "consistency scan over small terms");
  scan_cmd->add_option("--symbols", scan_symbols,
                       "symbol set: prop, default, or a comma-separated list");
  scan_cmd->add_option("--max-size", scan_max_size, "maximum term length")
      ->capture_default_str();

  auto* repl_cmd = app.add_subcommand("repl", "interactive session");

  CLI11_PARSE(app, argc, argv);

  Session session(config);
  for (const std::string& e : session.startup_errors()) std::cerr << e << "\n";
  if (!session.startup_errors().empty()) return 2;

  if (*eval_cmd) return finish(session.eval_command(join(eval_text)));
  if (*check_cmd) return finish(session.check_command(check_term, check_value));
  if (*scan_cmd) return finish(session.scan_command(scan_symbols, scan_max_size));
  if (*repl_cmd) return run_repl(session);
  return 0;
}
