#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ebcap/channels.hpp"
#include "ebcap/region.hpp"

namespace ebcap {

// Channel file schema:
//   { "dim_in": n, "dim_out": m,
//     "kraus": [ [ [[re,im], ...] per row, ... ] per operator ] }
KrausChannel load_channel(const std::string& path);
void save_channel(const std::string& path, const KrausChannel& ch);

// Sweep config schema: { "alphabet", "d0", "grid_schmidt", "grid_encoder",
//   "restarts", "seed", "iteration_cap", "min_points" }; missing keys take
// the SweepConfig defaults.
SweepConfig load_sweep_config(const std::string& path);

// Fixed 12-significant-digit formatting shared by every CSV emitter.
std::string format_sig(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::string& path, const CsvTable& table);

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);
std::string read_file(const std::string& path);

struct RunManifest {
  std::string command;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  std::map<std::string, std::int64_t> grid_sizes;
  std::map<std::string, std::string> input_digests;
  std::map<std::string, std::string> annotations;
  double wall_clock_seconds = 0.0;
};

RunManifest make_manifest(const std::string& command);
void write_manifest(const std::string& path, const RunManifest& m);

}  // namespace ebcap
