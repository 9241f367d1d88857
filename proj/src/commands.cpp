#include "ebcap/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "ebcap/depol.hpp"
#include "ebcap/io.hpp"
#include "ebcap/verify.hpp"

namespace ebcap {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class WallClock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string eb_annotation(double eps) {
  return eps >= 2.0 / 3.0
             ? "capacity region (channel is entanglement breaking)"
             : "inner bound only (channel not entanglement breaking)";
}

int classify(const Error& e) {
  if (dynamic_cast<const IoError*>(&e)) return kExitIoFailure;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return kExitBudget;
  if (dynamic_cast<const UnsupportedDimension*>(&e)) return kExitUnsupportedDim;
  return kExitBadInput;
}

json rate_json(const RatePoint& p) {
  return json{{"R", p.R}, {"Rprime", p.Rp}};
}

}  // namespace

int cmd_depol_region(double eps, int grid_size, const std::string& out) {
  WallClock clock;
  try {
    if (eps < 0.0 || eps > 1.0) throw InvalidInput("--eps must be in [0,1]");
    if (grid_size < 2) throw InvalidInput("--grid must be at least 2");

    const auto alphas = linspace(0.0, 0.5, grid_size);
    const RateFrontier spc = spc_frontier(eps, alphas);
    const GapReport gap = gap_report(eps, alphas);

    CsvTable t;
    t.header = {"alpha", "R", "Rprime"};
    for (int i = 0; i < grid_size; ++i)
      t.rows.push_back({format_sig(alphas[i]), format_sig(spc.points[i].R),
                        format_sig(spc.points[i].Rp)});
    write_csv(out, t);

    RunManifest m = make_manifest("depol-region");
    m.grid_sizes["alpha_grid"] = grid_size;
    m.annotations["eps"] = format_sig(eps);
    m.annotations["region_status"] = eb_annotation(eps);
    m.wall_clock_seconds = clock.seconds();
    write_manifest(out + ".manifest.json", m);

    std::printf("unassisted endpoint: R = %s\n",
                format_sig(unassisted_capacity(eps)).c_str());
    std::printf("assisted endpoint: Rprime = %s\n",
                format_sig(ea_capacity(eps)).c_str());
    std::printf("max gap over time division: %s (dominated=%s)\n",
                format_sig(gap.max_vertical_gap).c_str(),
                gap.dominated ? "true" : "false");
    std::printf("%s\n", eb_annotation(eps).c_str());
    return kExitOk;
  } catch (const Error& e) {
    std::fprintf(stderr, "depol-region: %s\n", e.what());
    return classify(e);
  }
}

int cmd_td_region(double eps, int grid_size, const std::string& out) {
  WallClock clock;
  try {
    if (eps < 0.0 || eps > 1.0) throw InvalidInput("--eps must be in [0,1]");
    if (grid_size < 2) throw InvalidInput("--grid must be at least 2");

    const auto lams = linspace(0.0, 1.0, grid_size);
    const RateFrontier td = time_division_frontier(eps, lams);

    CsvTable t;
    t.header = {"lambda", "R", "Rprime"};
    for (int i = 0; i < grid_size; ++i)
      t.rows.push_back({format_sig(lams[i]), format_sig(td.points[i].R),
                        format_sig(td.points[i].Rp)});
    write_csv(out, t);

    RunManifest m = make_manifest("td-region");
    m.grid_sizes["lambda_grid"] = grid_size;
    m.annotations["eps"] = format_sig(eps);
    m.annotations["region_status"] = eb_annotation(eps);
    m.wall_clock_seconds = clock.seconds();
    write_manifest(out + ".manifest.json", m);

    std::printf("time division between (%s, 0) and (0, %s)\n",
                format_sig(unassisted_capacity(eps)).c_str(),
                format_sig(ea_capacity(eps)).c_str());
    return kExitOk;
  } catch (const Error& e) {
    std::fprintf(stderr, "td-region: %s\n", e.what());
    return classify(e);
  }
}

int cmd_sweep(const std::string& channel_file, const std::string& config_file,
              const std::string& out) {
  WallClock clock;
  try {
    const KrausChannel ch = load_channel(channel_file);
    const SweepConfig cfg = load_sweep_config(config_file);
    const SweepResult res = frontier_sweep(ch, cfg);

    CsvTable t;
    t.header = {"R", "Rprime", "source"};
    for (std::size_t i = 0; i < res.frontier.points.size(); ++i)
      t.rows.push_back({format_sig(res.frontier.points[i].R),
                        format_sig(res.frontier.points[i].Rp),
                        res.point_sources[i]});
    for (const RatePoint& p : res.frontier.hull)
      t.rows.push_back({format_sig(p.R), format_sig(p.Rp), "hull"});
    write_csv(out, t);

    json hull = json::array();
    for (const SweepEntry& e : res.hull_entries) {
      json v;
      v["point"] = rate_json(e.pt);
      v["source"] = e.source;
      v["px"] = e.px.probs();
      v["schmidt"] = e.schmidt;
      json encs = json::array();
      for (const KrausChannel& f : e.encoders) {
        json ops = json::array();
        for (const Matrix& k : f.kraus_ops()) {
          json op = json::array();
          for (Eigen::Index r = 0; r < k.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < k.cols(); ++c)
              row.push_back({k(r, c).real(), k(r, c).imag()});
            op.push_back(std::move(row));
          }
          ops.push_back(std::move(op));
        }
        encs.push_back(std::move(ops));
      }
      v["encoders"] = std::move(encs);
      hull.push_back(std::move(v));
    }
    {
      std::ofstream hf(out + ".hull.json");
      if (!hf) throw IoError("cannot write " + out + ".hull.json");
      hf << hull.dump(2) << "\n";
    }

    RunManifest m = make_manifest("sweep");
    m.seed = cfg.seed;
    m.grid_sizes["schmidt_grid"] = cfg.grid_schmidt;
    m.grid_sizes["encoder_grid"] = cfg.grid_encoder;
    m.grid_sizes["restarts"] = cfg.restarts;
    m.grid_sizes["evaluations"] = res.evals;
    m.input_digests["channel"] = fnv1a64_hex(read_file(channel_file));
    m.input_digests["config"] = fnv1a64_hex(read_file(config_file));
    m.wall_clock_seconds = clock.seconds();
    write_manifest(out + ".manifest.json", m);

    std::printf("sweep: %ld evaluations, %zu points, %zu hull vertices\n",
                res.evals, res.frontier.points.size(),
                res.frontier.hull.size());
    return kExitOk;
  } catch (const Error& e) {
    std::fprintf(stderr, "sweep: %s\n", e.what());
    return classify(e);
  }
}

int cmd_check_eb(const std::string& channel_file) {
  try {
    const KrausChannel ch = load_channel(channel_file);
    const double min_eig = [&] {
      if (ch.dim_in() != 2 || ch.dim_out() != 2)
        throw UnsupportedDimension(
            "check-eb: PPT certification supports qubit -> qubit channels only");
      return choi_ppt_min_eigenvalue(ch);
    }();
    const EbStatus status = is_entanglement_breaking_qubit(ch);
    std::printf("%s min_pt_eigenvalue=%s\n",
                status == EbStatus::Breaking ? "Breaking" : "NotBreaking",
                format_sig(min_eig).c_str());
    return status == EbStatus::Breaking ? kExitOk : kExitNotBreaking;
  } catch (const Error& e) {
    std::fprintf(stderr, "check-eb: %s\n", e.what());
    return classify(e);
  }
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials) {
  try {
    if (trials < 1) throw InvalidInput("--trials must be at least 1");
    const auto results = run_suite(suite, seed, trials);
    bool all_passed = true;
    for (const PropertyResult& r : results) {
      std::printf("%s %-24s worst=%s%s%s\n", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), format_sig(r.worst_deviation).c_str(),
                  r.detail.empty() ? "" : " ", r.detail.c_str());
      all_passed = all_passed && r.passed;
    }
    std::printf("%zu properties, %s\n", results.size(),
                all_passed ? "all passed" : "FAILURES present");
    return all_passed ? kExitOk : kExitPropertyFailure;
  } catch (const Error& e) {
    std::fprintf(stderr, "verify: %s\n", e.what());
    return classify(e);
  }
}

int cmd_report(double eps, const std::string& out_dir) {
  WallClock clock;
  try {
    if (eps < 0.0 || eps > 1.0) throw InvalidInput("--eps must be in [0,1]");
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());

    const int grid = 512;
    const auto alphas = linspace(0.0, 0.5, grid);
    const auto lams = linspace(0.0, 1.0, grid);
    const RateFrontier spc = spc_frontier(eps, alphas);
    const RateFrontier td = time_division_frontier(eps, lams);
    const GapReport gap = gap_report(eps, alphas);
    const double c = unassisted_capacity(eps);
    const double cea = ea_capacity(eps);

    CsvTable spc_t;
    spc_t.header = {"alpha", "R", "Rprime"};
    for (int i = 0; i < grid; ++i)
      spc_t.rows.push_back({format_sig(alphas[i]), format_sig(spc.points[i].R),
                            format_sig(spc.points[i].Rp)});
    write_csv((fs::path(out_dir) / "spc.csv").string(), spc_t);

    CsvTable td_t;
    td_t.header = {"lambda", "R", "Rprime"};
    for (int i = 0; i < grid; ++i)
      td_t.rows.push_back({format_sig(lams[i]), format_sig(td.points[i].R),
                           format_sig(td.points[i].Rp)});
    write_csv((fs::path(out_dir) / "td.csv").string(), td_t);

    CsvTable comb;
    comb.header = {"R", "Rp_spc", "Rp_td"};
    for (double r : linspace(0.0, c, grid))
      comb.rows.push_back({format_sig(r),
                           format_sig(hull_interpolate(spc.hull, r)),
                           format_sig(td_rp_at(eps, r))});
    write_csv((fs::path(out_dir) / "combined.csv").string(), comb);

    json g;
    g["eps"] = eps;
    g["entanglement_breaking"] = eps >= 2.0 / 3.0;
    g["region_status"] = eb_annotation(eps);
    g["unassisted_capacity"] = c;
    g["ea_capacity"] = cea;
    g["max_vertical_gap"] = gap.max_vertical_gap;
    g["argmax_alpha"] = gap.argmax_alpha;
    g["dominated"] = gap.dominated;
    {
      std::ofstream gf(fs::path(out_dir) / "gap.json");
      if (!gf) throw IoError("cannot write gap.json in " + out_dir);
      gf << g.dump(2) << "\n";
    }

    RunManifest m = make_manifest("report");
    m.grid_sizes["alpha_grid"] = grid;
    m.grid_sizes["lambda_grid"] = grid;
    m.annotations["eps"] = format_sig(eps);
    m.annotations["region_status"] = eb_annotation(eps);
    m.wall_clock_seconds = clock.seconds();
    write_manifest((fs::path(out_dir) / "manifest.json").string(), m);

    std::printf("endpoints: (%s, 0) and (0, %s)\n", format_sig(c).c_str(),
                format_sig(cea).c_str());
    std::printf("max gap over time division: %s at alpha=%s (dominated=%s)\n",
                format_sig(gap.max_vertical_gap).c_str(),
                format_sig(gap.argmax_alpha).c_str(),
                gap.dominated ? "true" : "false");
    return kExitOk;
  } catch (const Error& e) {
    std::fprintf(stderr, "report: %s\n", e.what());
    return classify(e);
  }
}

}  // namespace ebcap
