#include "foxkit/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "foxkit/rational.hpp"

namespace foxkit {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Diagram parse_diagram(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty diagram");
  if (text[0] == 'B') return braid_closure(parse_braid(text));
  if (text[0] == 'C') return numerator_closure(rational_tangle_diagram(parse_conway(text)));
  return parse_pd(text);
}

std::vector<FixtureEntry> parse_table(const std::string& text) {
  std::vector<FixtureEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    FixtureEntry e;
    e.line = lineno;
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
      auto semi = t.find(';', pos);
      parts.push_back(trim(t.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos)));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    e.name = parts[0];
    if (parts.size() < 2) {
      e.error = "missing diagram field";
      out.push_back(std::move(e));
      continue;
    }
    e.source = parts[1];
    for (std::size_t i = 2; i < parts.size(); ++i) {
      auto eq = parts[i].find('=');
      if (eq == std::string::npos) {
        e.error = "field without '=': " + parts[i];
        break;
      }
      e.fields[trim(parts[i].substr(0, eq))] = trim(parts[i].substr(eq + 1));
    }
    if (e.error.empty()) {
      try {
        e.diagram = parse_diagram(e.source);
        e.diagram->set_name(e.name);
      } catch (const std::exception& ex) {
        e.error = ex.what();
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FixtureEntry> load_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open fixture table " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_table(ss.str());
}

}  // namespace foxkit
