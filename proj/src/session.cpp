// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "reflectica/session.hpp"

#include <sstream>

namespace reflectica {

Session::Session(SessionConfig config)
    : config_(std::move(config)), kb_(table_) {
  for (const std::string& path : config_.prelude_paths) {
    AxiomFile file = load_axiom_file(path, table_);
    auto errors = apply_axiom_file(file, kb_);
    for (const AxiomFileError& e : errors)
      startup_errors_.push_back(path + ":" + std::to_string(e.line) + ": " + e.message);
  }
}

TextMode Session::input_mode(const std::string& text) const {
  if (config_.force_ascii) return TextMode::Ascii;
  return has_non_ascii(text) ? TextMode::Unicode : TextMode::Ascii;
}

TextMode Session::output_mode(TextMode in) const {
  return config_.force_ascii ? TextMode::Ascii : in;
}

std::string Session::describe_witness(const InconsistencyWitness& w) const {
  std::ostringstream os;
  os << "inconsistency: val(" << render(w.term.text(), TextMode::Ascii, table_)
     << ") derived as both " << render(w.first_value, TextMode::Ascii, table_)
     << " and " << render(w.second_value, TextMode::Ascii, table_) << "\n";
  os << "first derivation:\n";
  if (w.first) export_derivation(os, *w.first, table_, 1);
  os << "second derivation:\n";
  if (w.second) export_derivation(os, *w.second, table_, 1);
  return os.str();
}

CommandResult Session::eval_command(const std::string& text) {
  CommandResult result;
  TextMode in = input_mode(text);
  TextMode out = output_mode(in);
  try {
    Str str = tokenize(text, in, table_);
    Term term = Term::parse(str, table_);
    EvalResult eval = evaluate(term, kb_, config_.budget);
    std::ostringstream os;
    if (eval.value) {
      os << "val(" << render(term.text(), out, table_) << ") = "
         << render(*eval.value, out, table_) << "\n";
      if (config_.trace && eval.derivation)
        export_derivation(os, *eval.derivation, table_, 0);
      result.status = 0;
    } else {
      os << "undefined within budget ("
         << (eval.budget_exhausted ? "budget exhausted" : "saturation reached fixpoint")
         << ")\n";
      result.status = 1;
    }
    result.out = os.str();
  } catch (const TokenizeError& e) {
    result.status = 2;
    result.err = "token error at position " + std::to_string(e.position) + ": " + e.what() + "\n";
  } catch (const ParseError& e) {
    result.status = 2;
    result.err = "parse error at symbol " + std::to_string(e.position) + ": " + e.what() + "\n";
  } catch (const InconsistencyError& e) {
    result.status = 3;
    result.err = describe_witness(e.witness);
  }
  return result;
}

CommandResult Session::check_command(const std::string& term_text,
                                     const std::string& value_text) {
  CommandResult result;
  TextMode in = input_mode(term_text + " " + value_text);
  TextMode out = output_mode(in);
  try {
    Term term = Term::parse(tokenize(term_text, in, table_), table_);
    Str expected = tokenize(value_text, in, table_);
    EvalResult eval = evaluate(term, kb_, config_.budget);
    std::ostringstream os;
    if (!eval.value) {
      os << "undefined within budget ("
         << (eval.budget_exhausted ? "budget exhausted" : "saturation reached fixpoint")
         << "); expected " << render(expected, out, table_) << "\n";
      result.status = 1;
    } else if (*eval.value == expected) {
      os << "val(" << render(term.text(), out, table_) << ") = "
         << render(*eval.value, out, table_) << " (confirmed)\n";
      result.status = 0;
    } else {
      os << "val(" << render(term.text(), out, table_) << ") = "
         << render(*eval.value, out, table_) << " (expected "
         << render(expected, out, table_) << ")\n";
      result.status = 1;
    }
    result.out = os.str();
  } catch (const TokenizeError& e) {
    result.status = 2;
    result.err = "token error at position " + std::to_string(e.position) + ": " + e.what() + "\n";
  } catch (const ParseError& e) {
    result.status = 2;
    result.err = "parse error at symbol " + std::to_string(e.position) + ": " + e.what() + "\n";
  } catch (const InconsistencyError& e) {
    result.status = 3;
    result.err = describe_witness(e.witness);
  }
  return result;
}

std::vector<SymbolId> Session::resolve_symbols(const std::string& spec) const {
  const CoreSymbols& core = table_.core();
  if (spec == "prop")
    return {core.top, core.bot, core.neg, core.conj, core.disj, core.impl};
  if (spec == "default" || spec.empty())
    return {core.top, core.bot, core.neg,  core.conj, core.disj,
            core.impl, core.eq,  core.qo,  core.qc,   core.bar};
  std::vector<SymbolId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = item.find_last_not_of(" \t");
    item = item.substr(b, e - b + 1);
    const Symbol* s = table_.find_ascii(item);
    if (!s) s = table_.find_display(item);
    if (!s) throw std::invalid_argument("unknown symbol '" + item + "' in --symbols");
    out.push_back(s->id);
  }
  if (out.empty()) throw std::invalid_argument("--symbols resolved to an empty set");
  return out;
}

CommandResult Session::scan_command(const std::string& symbols_spec,
                                    std::size_t max_size) {
  CommandResult result;
  std::vector<SymbolId> pool;
  try {
    pool = resolve_symbols(symbols_spec);
  } catch (const std::invalid_argument& e) {
    result.status = 2;
    result.err = std::string(e.what()) + "\n";
    return result;
  }
  ScanReport report = consistency_scan(kb_, pool, max_size, config_.budget);
  std::ostringstream os;
  os << "terms: " << report.terms << "\n";
  os << "defined: " << report.defined << "\n";
  os << "undefined: " << report.undefined << "\n";
  os << "witnesses: " << report.witnesses.size() << "\n";
  if (report.budget_exhausted)
    os << "note: budget exhausted after " << report.steps_used
       << " steps; counts are a lower bound\n";
  for (const InconsistencyWitness& w : report.witnesses) os << describe_witness(w);
  result.out = os.str();
  result.status = report.witnesses.empty() ? 0 : 3;
  return result;
}

CommandResult Session::repl_line(const std::string& line, bool& quit) {
  quit = false;
  std::string trimmed = line;
  {
    std::size_t b = trimmed.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = trimmed.find_last_not_of(" \t\r");
    trimmed = trimmed.substr(b, e - b + 1);
  }
  if (trimmed.empty()) return {};

  if (trimmed[0] != ':') return eval_command(trimmed);

  std::string directive = trimmed.substr(0, trimmed.find_first_of(" \t"));
  std::string rest;
  if (directive.size() < trimmed.size()) {
    rest = trimmed.substr(directive.size());
    std::size_t b = rest.find_first_not_of(" \t");
    rest = b == std::string::npos ? "" : rest.substr(b);
  }

  CommandResult result;
  if (directive == ":quit" || directive == ":q") {
    quit = true;
    return result;
  }
  if (directive == ":trace") {
    if (rest == "on") config_.trace = true;
    else if (rest == "off") config_.trace = false;
    else {
      result.status = 2;
      result.err = "usage: :trace on|off\n";
      return result;
    }
    result.out = std::string("trace ") + (config_.trace ? "on" : "off") + "\n";
    return result;
  }
  if (directive == ":budget") {
    try {
      std::size_t steps = std::stoul(rest);
      if (steps == 0) throw std::invalid_argument("zero");
      config_.budget.max_steps = steps;
      result.out = "budget steps = " + std::to_string(steps) + "\n";
    } catch (const std::exception&) {
      result.status = 2;
      result.err = "usage: :budget <positive step count>\n";
    }
    return result;
  }
  if (directive == ":axiom") {
    if (rest.empty()) {
      result.status = 2;
      result.err = "usage: :axiom <formula>\n";
      return result;
    }
    try {
      TextMode in = input_mode(rest);
      Term formula = Term::parse(tokenize(rest, in, table_), table_);
      if (!is_formula(formula)) {
        result.status = 2;
        result.err = "axiom must be a formula\n";
        return result;
      }
      kb_.assert_axiom(Judgment{formula, Str{table_.core().top}});
      result.out = "axiom added: val(" +
                   render(formula.text(), output_mode(in), table_) + ") = " +
                   render(Str{table_.core().top}, output_mode(in), table_) + "\n";
    } catch (const TokenizeError& e) {
      result.status = 2;
      result.err = "token error at position " + std::to_string(e.position) + ": " + e.what() + "\n";
    } catch (const ParseError& e) {
      result.status = 2;
      result.err = "parse error at symbol " + std::to_string(e.position) + ": " + e.what() + "\n";
    } catch (const InconsistencyError& e) {
      result.status = 3;
      result.err = describe_witness(e.witness);
    }
    return result;
  }
  if (directive == ":load") {
    if (rest.empty()) {
      result.status = 2;
      result.err = "usage: :load <file>\n";
      return result;
    }
    AxiomFile file = load_axiom_file(rest, table_);
    auto errors = apply_axiom_file(file, kb_);
    if (errors.empty()) {
      result.out = "loaded " + std::to_string(file.entries.size()) + " axioms from " + rest + "\n";
    } else {
      result.status = 2;
      for (const AxiomFileError& e : errors)
        result.err += rest + ":" + std::to_string(e.line) + ": " + e.message + "\n";
    }
    return result;
  }

  result.status = 2;
  result.err = "unknown directive " + directive +
               " (try :load :axiom :budget :trace :quit)\n";
  return result;
}

}  // namespace reflectica
