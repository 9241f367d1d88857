#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "ebcap/io.hpp"
#include "ebcap/rng.hpp"

using namespace ebcap;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
  const fs::path p = fs::temp_directory_path() / "ebcap_io_tests";
  fs::create_directories(p);
  return p;
}

void dump(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("channel roundtrip") {
  const fs::path path = tmp_dir() / "dep.json";
  const KrausChannel ch = depolarizing(0.7);
  save_channel(path.string(), ch);
  const KrausChannel back = load_channel(path.string());
  REQUIRE(back.dim_in() == 2);
  REQUIRE(back.dim_out() == 2);
  REQUIRE(back.kraus_ops().size() == ch.kraus_ops().size());
  for (std::size_t k = 0; k < ch.kraus_ops().size(); ++k)
    CHECK((back.kraus_ops()[k] - ch.kraus_ops()[k]).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("load_channel failure modes") {
  CHECK_THROWS_AS(load_channel((tmp_dir() / "nope.json").string()), IoError);

  const fs::path bad = tmp_dir() / "bad.json";
  dump(bad, "{ not json");
  CHECK_THROWS_AS(load_channel(bad.string()), InvalidInput);

  const fs::path missing = tmp_dir() / "missing.json";
  dump(missing, R"({"dim_in": 2, "kraus": []})");
  CHECK_THROWS_AS(load_channel(missing.string()), InvalidInput);

  // Half an identity: not trace preserving.
  const fs::path ntp = tmp_dir() / "ntp.json";
  dump(ntp, R"({"dim_in": 2, "dim_out": 2,
    "kraus": [[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]]})");
  CHECK_THROWS_AS(load_channel(ntp.string()), InvalidInput);

  const fs::path shape = tmp_dir() / "shape.json";
  dump(shape, R"({"dim_in": 2, "dim_out": 2,
    "kraus": [[[[1,0],[0,0]]]]})");
  CHECK_THROWS_AS(load_channel(shape.string()), InvalidInput);
}

TEST_CASE("load_sweep_config defaults and overrides") {
  const fs::path empty = tmp_dir() / "cfg_empty.json";
  dump(empty, "{}");
  const SweepConfig def = load_sweep_config(empty.string());
  CHECK(def.alphabet == 5);
  CHECK(def.d0 == 10);
  CHECK(def.grid_schmidt == 33);
  CHECK(def.grid_encoder == 6);
  CHECK(def.restarts == 64);
  CHECK(def.seed == 1);
  CHECK(def.iteration_cap == 200000);
  CHECK(def.min_points == 8);

  const fs::path part = tmp_dir() / "cfg_part.json";
  dump(part, R"({"alphabet": 3, "seed": 42, "iteration_cap": 500})");
  const SweepConfig cfg = load_sweep_config(part.string());
  CHECK(cfg.alphabet == 3);
  CHECK(cfg.seed == 42);
  CHECK(cfg.iteration_cap == 500);
  CHECK(cfg.d0 == 10);

  const fs::path bad = tmp_dir() / "cfg_bad.json";
  dump(bad, R"({"alphabet": 0})");
  CHECK_THROWS_AS(load_sweep_config(bad.string()), InvalidInput);

  const fs::path neg = tmp_dir() / "cfg_neg.json";
  dump(neg, R"({"min_points": -3})");
  CHECK_THROWS_AS(load_sweep_config(neg.string()), InvalidInput);

  CHECK_THROWS_AS(load_sweep_config((tmp_dir() / "absent.json").string()),
                  IoError);
}

TEST_CASE("format_sig") {
  CHECK(format_sig(0.0) == "0");
  CHECK(format_sig(1.0) == "1");
  CHECK(format_sig(0.5) == "0.5");
  CHECK(format_sig(1.0 / 3.0) == "0.333333333333");
  CHECK(format_sig(-2.25) == "-2.25");
}

TEST_CASE("fnv1a64") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64("a") != fnv1a64("b"));
  CHECK(fnv1a64_hex("hello").size() == 16);
}

TEST_CASE("write_csv bytes") {
  const fs::path path = tmp_dir() / "t.csv";
  CsvTable t;
  t.header = {"alpha", "R"};
  t.rows = {{"0", "1"}, {"0.5", "0"}};
  write_csv(path.string(), t);
  CHECK(read_file(path.string()) == "alpha,R\n0,1\n0.5,0\n");
}

TEST_CASE("manifest") {
  const fs::path path = tmp_dir() / "m.json";
  RunManifest m = make_manifest("unit-test");
  m.seed = 7;
  m.grid_sizes["grid"] = 12;
  m.input_digests["channel"] = fnv1a64_hex("x");
  m.annotations["note"] = "ok";
  m.wall_clock_seconds = 0.25;
  write_manifest(path.string(), m);

  const nlohmann::json j = nlohmann::json::parse(read_file(path.string()));
  CHECK(j.at("command") == "unit-test");
  CHECK(j.at("seed") == 7);
  CHECK(j.at("tolerances").at("tau_num") == doctest::Approx(1e-8));
  CHECK(j.at("tolerances").at("tau_psd") == doctest::Approx(1e-10));
  CHECK(j.at("tolerances").at("tau_herm") == doctest::Approx(1e-9));
  CHECK(j.at("tolerances").at("tau_tr") == doctest::Approx(1e-9));
  CHECK(j.at("grid_sizes").at("grid") == 12);
  CHECK(j.at("annotations").at("note") == "ok");
  CHECK(j.contains("version"));
  CHECK(j.at("wall_clock_seconds") == doctest::Approx(0.25));
}

}  // TEST_SUITE
