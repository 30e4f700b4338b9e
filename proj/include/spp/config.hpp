#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace spp {

/// Line-oriented key=value config with sections.
///
///   [material "silver"]
///   omega_p = 1.402e16
///   gamma   = 6.25e13
///
///   [sweep]
///   geometry = otto
///
/// '#' and ';' start comments. Section headers are either bare ([sweep]) or
/// carry a quoted name ([material "silver"]). Parse errors report line numbers.
struct ConfigFile {
  struct Entry {
    std::string value;
    int line = 0;
  };
  struct Section {
    std::string kind;  // "material", "sweep", ...
    std::string name;  // quoted part, may be empty
    std::map<std::string, Entry> entries;
    int line = 0;

    bool has(const std::string& key) const { return entries.count(key) != 0; }
    double get_double(const std::string& key) const;
    long get_long(const std::string& key) const;
    std::string get_string(const std::string& key) const;
  };

  std::vector<Section> sections;

  static ConfigFile parse(std::istream& in);
  static ConfigFile parse_file(const std::string& path);

  const Section* find(const std::string& kind, const std::string& name = "") const;
};

}  // namespace spp
