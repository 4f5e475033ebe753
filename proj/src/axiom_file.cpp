// Part of the reflectica project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "reflectica/axiom_file.hpp"

#include <fstream>
#include <sstream>

namespace reflectica {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

AxiomFile parse_axiom_text(const std::string& text, const std::string& path,
                           const SymbolTable& table) {
  AxiomFile file;
  file.path = path;

  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(strip_comment(line));
  }

  file.mode = TextMode::Ascii;
  for (const std::string& line : lines)
    if (has_non_ascii(line)) {
      file.mode = TextMode::Unicode;
      break;
    }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string line = trim(lines[i]);
    if (line.empty()) continue;

    auto fail = [&](const std::string& message) {
      file.errors.push_back({line_no, message});
    };

    std::string keyword = line.substr(0, line.find_first_of(" \t"));
    std::string rest = trim(line.substr(keyword.size()));

    try {
      if (keyword == "axiom") {
        if (rest.empty()) {
          fail("axiom entry needs a formula");
          continue;
        }
        Term formula = Term::parse(tokenize(rest, file.mode, table), table);
        if (!is_formula(formula)) {
          fail("axiom entry is a term but not a formula");
          continue;
        }
        file.entries.push_back(
            {line_no, Judgment{formula, Str{table.core().top}}});
      } else if (keyword == "value") {
        auto sep = rest.find(":=");
        if (sep == std::string::npos) {
          fail("value entry needs ':=' between term and string");
          continue;
        }
        std::string term_text = trim(rest.substr(0, sep));
        std::string value_text = trim(rest.substr(sep + 2));
        Term term = Term::parse(tokenize(term_text, file.mode, table), table);
        Str value = tokenize(value_text, file.mode, table);
        file.entries.push_back({line_no, Judgment{term, value}});
      } else {
        fail("unknown entry '" + keyword + "' (expected 'axiom' or 'value')");
      }
    } catch (const TokenizeError& e) {
      fail(std::string("token error: ") + e.what());
    } catch (const ParseError& e) {
      fail(std::string("parse error: ") + e.what());
    }
  }
  return file;
}

AxiomFile load_axiom_file(const std::string& path, const SymbolTable& table) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    AxiomFile file;
    file.path = path;
    file.errors.push_back({0, "cannot open file '" + path + "'"});
    return file;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_axiom_text(buffer.str(), path, table);
}

std::vector<AxiomFileError> apply_axiom_file(const AxiomFile& file, KnowledgeBase& kb) {
  if (!file.ok()) return file.errors;
  KnowledgeBase staged = kb;
  for (const AxiomEntry& entry : file.entries) {
    try {
      staged.assert_axiom(entry.judgment);
    } catch (const InconsistencyError& e) {
      return {{entry.line, std::string("conflicts with an existing value: ") + e.what()}};
    }
  }
  kb = std::move(staged);
  return {};
}

}  // namespace reflectica
