#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spp/config.hpp"
#include "spp/coupling.hpp"
#include "spp/materials.hpp"

namespace spp {

/// Grid and wavepacket parameters for the sweep commands. Defaults reproduce
/// the ranges plotted in the reference figures.
struct SweepConfig {
  std::string material = "silver";
  Geometry geometry = Geometry::Otto;
  double eps1 = 1.51;  // prism permittivity

  double omega_min = 1.0e15;
  double omega_max = 5.4e15;
  int omega_count = 200;

  double d_min = 1.0e-9;
  double d_max = 1.0e-4;
  int d_count = 200;

  double x_min = 0.0;
  double x_max = 1.0e-5;
  int x_count = 101;

  double delta_lambda = 10.0e-9;  // [m]
  double mu = 0.65;               // detector efficiency
  int n = 1;                      // excitation number
  int jobs = 1;

  std::string out_path;           // empty = stdout
  std::string format = "csv";     // csv | json

  void apply(const ConfigFile::Section& sweep_section);
  void validate() const;
};

struct RunManifest {
  std::string version;
  std::uint64_t digest;  // FNV-1a over the canonical parameter echo
  std::string command;
  std::string echo;      // canonical "key=value;..." parameter string

  static RunManifest make(const std::string& command, const SweepConfig& cfg);
  std::string digest_hex() const;
};

/// One output table; cells are pre-formatted strings so writing is byte-stable.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Scientific notation, 17 significant digits, byte-stable.
std::string format_sci(double v);

void write_table(std::ostream& os, const Table& t, const RunManifest& m, const std::string& format);

Table sweep_dispersion(const PermittivityModel& metal, const SweepConfig& cfg);
Table sweep_coupling_map(const PermittivityModel& metal, const SweepConfig& cfg);
Table sweep_optimize(const PermittivityModel& metal, const SweepConfig& cfg);
Table sweep_propagate(const PermittivityModel& metal, const SweepConfig& cfg);

}  // namespace spp
