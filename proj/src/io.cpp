#include "ebcap/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ebcap/version.hpp"

namespace ebcap {

using nlohmann::json;

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return j;
}

Matrix matrix_from_json(const json& op, int rows, int cols,
                        const std::string& path) {
  if (!op.is_array() || static_cast<int>(op.size()) != rows)
    throw InvalidInput(path + ": Kraus operator row count mismatch");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = op.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw InvalidInput(path + ": Kraus operator column count mismatch");
    for (int c = 0; c < cols; ++c) {
      const json& e = row.at(c);
      if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() ||
          !e.at(1).is_number())
        throw InvalidInput(path + ": matrix entries must be [re, im] pairs");
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json op = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    op.push_back(std::move(row));
  }
  return op;
}

}  // namespace

KrausChannel load_channel(const std::string& path) {
  const json j = parse_file(path);
  if (!j.contains("dim_in") || !j.contains("dim_out") || !j.contains("kraus"))
    throw InvalidInput(path + ": need dim_in, dim_out, kraus");
  if (!j["dim_in"].is_number_integer() || !j["dim_out"].is_number_integer())
    throw InvalidInput(path + ": dimensions must be integers");
  const int din = j["dim_in"].get<int>();
  const int dout = j["dim_out"].get<int>();
  if (din < 1 || dout < 1) throw InvalidInput(path + ": dimensions must be positive");
  if (!j["kraus"].is_array() || j["kraus"].empty())
    throw InvalidInput(path + ": kraus must be a nonempty list");
  std::vector<Matrix> ops;
  for (const json& op : j["kraus"])
    ops.push_back(matrix_from_json(op, dout, din, path));
  try {
    return KrausChannel(din, dout, std::move(ops));
  } catch (const Error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void save_channel(const std::string& path, const KrausChannel& ch) {
  json j;
  j["dim_in"] = ch.dim_in();
  j["dim_out"] = ch.dim_out();
  j["kraus"] = json::array();
  for (const Matrix& k : ch.kraus_ops()) j["kraus"].push_back(matrix_to_json(k));
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw IoError("write failed for " + path);
}

SweepConfig load_sweep_config(const std::string& path) {
  const json j = parse_file(path);
  SweepConfig cfg;
  auto take_int = [&](const char* key, int& dst) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer()) throw InvalidInput(path + ": bad " + key);
    dst = j[key].get<int>();
  };
  take_int("alphabet", cfg.alphabet);
  take_int("d0", cfg.d0);
  take_int("grid_schmidt", cfg.grid_schmidt);
  take_int("grid_encoder", cfg.grid_encoder);
  take_int("restarts", cfg.restarts);
  take_int("min_points", cfg.min_points);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      throw InvalidInput(path + ": bad seed");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("iteration_cap")) {
    if (!j["iteration_cap"].is_number_integer())
      throw InvalidInput(path + ": bad iteration_cap");
    cfg.iteration_cap = j["iteration_cap"].get<long>();
  }
  if (cfg.alphabet < 1 || cfg.d0 < 1 || cfg.grid_schmidt < 2 ||
      cfg.grid_encoder < 2 || cfg.restarts < 0 || cfg.min_points < 1 ||
      cfg.iteration_cap < 1)
    throw InvalidInput(path + ": config values out of range");
  return cfg;
}

std::string format_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << (i ? "," : "") << table.header[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << row[i];
    out << "\n";
  }
  if (!out) throw IoError("write failed for " + path);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunManifest make_manifest(const std::string& command) {
  RunManifest m;
  m.command = command;
  m.tolerances = {{"tau_herm", kTolHermitian},
                  {"tau_tr", kTolTrace},
                  {"tau_psd", kTolPsd},
                  {"tau_num", kTolNum}};
  return m;
}

void write_manifest(const std::string& path, const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["version"] = kVersion;
  j["seed"] = m.seed;
  j["tolerances"] = m.tolerances;
  j["grid_sizes"] = m.grid_sizes;
  j["input_digests"] = m.input_digests;
  j["annotations"] = m.annotations;
  j["wall_clock_seconds"] = m.wall_clock_seconds;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace ebcap
