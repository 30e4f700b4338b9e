#include "spp/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

#include "spp/errors.hpp"

namespace spp {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (!quoted && (s[i] == '#' || s[i] == ';')) return s.substr(0, i);
  }
  return s;
}

}  // namespace

double ConfigFile::Section::get_double(const std::string& key) const {
  auto it = entries.find(key);
  if (it == entries.end()) throw config_error("missing key '" + key + "'", line);
  const std::string& v = it->second.value;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw config_error("key '" + key + "': not a number: '" + v + "'", it->second.line);
  return x;
}

long ConfigFile::Section::get_long(const std::string& key) const {
  auto it = entries.find(key);
  if (it == entries.end()) throw config_error("missing key '" + key + "'", line);
  const std::string& v = it->second.value;
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw config_error("key '" + key + "': not an integer: '" + v + "'", it->second.line);
  return x;
}

std::string ConfigFile::Section::get_string(const std::string& key) const {
  auto it = entries.find(key);
  if (it == entries.end()) throw config_error("missing key '" + key + "'", line);
  return it->second.value;
}

ConfigFile ConfigFile::parse(std::istream& in) {
  ConfigFile cf;
  Section* cur = nullptr;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw config_error("unterminated section header", lineno);
      const std::string inner = trim(line.substr(1, line.size() - 2));
      Section sec;
      sec.line = lineno;
      const auto q = inner.find('"');
      if (q == std::string::npos) {
        sec.kind = trim(inner);
      } else {
        sec.kind = trim(inner.substr(0, q));
        const auto q2 = inner.find('"', q + 1);
        if (q2 == std::string::npos) throw config_error("unterminated section name quote", lineno);
        sec.name = inner.substr(q + 1, q2 - q - 1);
        if (!trim(inner.substr(q2 + 1)).empty())
          throw config_error("trailing text after section name", lineno);
      }
      if (sec.kind.empty()) throw config_error("empty section kind", lineno);
      cf.sections.push_back(std::move(sec));
      cur = &cf.sections.back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw config_error("expected 'key = value'", lineno);
    if (cur == nullptr) throw config_error("key outside any section", lineno);
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error("empty key", lineno);
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    cur->entries[key] = Entry{value, lineno};
  }
  return cf;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'", 0);
  return parse(in);
}

const ConfigFile::Section* ConfigFile::find(const std::string& kind,
                                            const std::string& name) const {
  for (const auto& s : sections)
    if (s.kind == kind && (name.empty() || s.name == name)) return &s;
  return nullptr;
}

}  // namespace spp
