#pragma once
// Fixture tables: one diagram per line, `name ; format-string [; key=value ...]`, `#` comments.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foxkit/diagram.hpp"

namespace foxkit {

// Accepts PD tokens, a braid word "B m: ...", or Conway notation "C(a1,...)" (numerator closure).
Diagram parse_diagram(const std::string& text);

struct FixtureEntry {
  std::string name;
  std::string source;
  std::map<std::string, std::string> fields;
  std::optional<Diagram> diagram;  // empty when parsing failed
  std::string error;
  int line = 0;
};

std::vector<FixtureEntry> parse_table(const std::string& text);
std::vector<FixtureEntry> load_table(const std::string& path);  // throws std::runtime_error on I/O failure

}  // namespace foxkit
