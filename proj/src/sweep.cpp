#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

#include "ebcap/depol.hpp"
#include "ebcap/region.hpp"
#include "ebcap/rng.hpp"

namespace ebcap {

namespace {

Matrix euler_zyz(double phi, double theta, double psi) {
  Matrix rz1(2, 2), ry(2, 2), rz2(2, 2);
  const Complex i(0.0, 1.0);
  rz1 << std::exp(-i * (phi / 2.0)), 0.0, 0.0, std::exp(i * (phi / 2.0));
  ry << std::cos(theta / 2.0), -std::sin(theta / 2.0), std::sin(theta / 2.0),
      std::cos(theta / 2.0);
  rz2 << std::exp(-i * (psi / 2.0)), 0.0, 0.0, std::exp(i * (psi / 2.0));
  return rz1 * ry * rz2;
}

// A search candidate. Qubit candidates in the Euler family keep their
// parameter vector so local refinement can perturb them.
struct Candidate {
  std::vector<double> px;
  std::vector<double> schmidt;
  std::vector<Matrix> encoder_ops;  // one isometry per symbol
  std::string source;
  bool refinable = false;
  double alpha = 0.0;                            // schmidt = (1-a, a)
  std::vector<std::array<double, 3>> angles;     // per symbol
};

Candidate make_euler_candidate(double alpha,
                               std::vector<std::array<double, 3>> angles,
                               std::vector<double> px, std::string source) {
  Candidate c;
  c.alpha = alpha;
  c.angles = std::move(angles);
  c.px = std::move(px);
  c.schmidt = {1.0 - alpha, alpha};
  for (const auto& a : c.angles)
    c.encoder_ops.push_back(euler_zyz(a[0], a[1], a[2]));
  c.source = std::move(source);
  c.refinable = true;
  return c;
}

EncodingEnsemble to_ensemble(const Candidate& c, int da) {
  std::vector<KrausChannel> enc;
  const int d0 = static_cast<int>(c.schmidt.size());
  for (const Matrix& v : c.encoder_ops)
    enc.emplace_back(d0, da, std::vector<Matrix>{v});
  return EncodingEnsemble(ProbVec{c.px}, c.schmidt, std::move(enc));
}

RatePoint evaluate(const KrausChannel& ch, const Candidate& c) {
  return rectangle_corner(ch, to_ensemble(c, ch.dim_in()));
}

void parallel_for(int n, int workers, const std::function<void(int)>& body) {
  if (n <= 0) return;
  if (workers <= 1 || n == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int count = std::min(workers, n);
  pool.reserve(count);
  for (int w = 0; w < count; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

constexpr std::array<double, 3> kBitflipAngles = {0.0, M_PI, M_PI};

std::vector<Candidate> build_schedule(const KrausChannel& ch,
                                      const SweepConfig& cfg) {
  const int da = ch.dim_in();
  std::vector<Candidate> sched;

  if (da == 2) {
    // Superposition family: Schmidt weight grid with identity/bitflip pair.
    for (double a : linspace(0.0, 0.5, std::max(cfg.grid_schmidt, 2)))
      sched.push_back(make_euler_candidate(
          a, {{{0, 0, 0}}, {kBitflipAngles}}, {0.5, 0.5}, "structured"));

    // Coarse grid over the second encoder, identity first encoder.
    const auto alpha_coarse = linspace(0.0, 0.5, 9);
    const auto angle_grid =
        linspace(0.0, M_PI, std::max(cfg.grid_encoder, 2));
    for (double a : alpha_coarse)
      for (double phi : angle_grid)
        for (double theta : angle_grid)
          for (double psi : angle_grid)
            sched.push_back(make_euler_candidate(
                a, {{{0, 0, 0}}, {{phi, theta, psi}}}, {0.5, 0.5}, "grid"));
  }

  const int max_x = std::max(2, std::min(cfg.alphabet, 4));
  const int d0_eff = std::max(1, std::min(cfg.d0, da));
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng = Rng::child(cfg.seed, static_cast<std::uint64_t>(r));
    const int nx = rng.uniform_int(2, max_x);
    Candidate c;
    c.px = rng.random_simplex(nx);
    c.schmidt = rng.random_simplex(d0_eff);
    c.source = "restart";
    if (da == 2 && d0_eff == 2) {
      if (c.schmidt[1] > 0.5) std::swap(c.schmidt[0], c.schmidt[1]);
      c.alpha = c.schmidt[1];
      c.refinable = true;
      for (int x = 0; x < nx; ++x) {
        std::array<double, 3> a = {rng.uniform(0.0, 2.0 * M_PI),
                                   rng.uniform(0.0, M_PI),
                                   rng.uniform(0.0, 2.0 * M_PI)};
        c.angles.push_back(a);
        c.encoder_ops.push_back(euler_zyz(a[0], a[1], a[2]));
      }
    } else {
      for (int x = 0; x < nx; ++x)
        c.encoder_ops.push_back(rng.haar_isometry(da, d0_eff));
    }
    sched.push_back(std::move(c));
  }
  return sched;
}

// Derivative-free coordinate descent on w*R + (1-w)*Rp over the Euler
// parameters of one candidate. Evaluations append to `trace`.
Candidate refine(const KrausChannel& ch, Candidate c, RatePoint c_value,
                 double w, long budget,
                 std::vector<std::pair<Candidate, RatePoint>>& trace) {
  auto objective = [&](const RatePoint& p) { return w * p.R + (1.0 - w) * p.Rp; };
  long used = 0;
  auto eval = [&](const Candidate& cand) -> std::optional<double> {
    if (used >= budget) return std::nullopt;
    ++used;
    RatePoint p = evaluate(ch, cand);
    trace.emplace_back(cand, p);
    return objective(p);
  };

  auto rebuild = [](Candidate& cand) {
    cand.schmidt = {1.0 - cand.alpha, cand.alpha};
    cand.encoder_ops.clear();
    for (const auto& a : cand.angles)
      cand.encoder_ops.push_back(euler_zyz(a[0], a[1], a[2]));
  };

  double best = objective(c_value);
  double step_alpha = 0.05;
  double step_angle = 0.1;
  const int ncoord = 1 + 3 * static_cast<int>(c.angles.size());
  for (int round = 0; round < 8; ++round) {
    for (int k = 0; k < ncoord; ++k) {
      for (double sgn : {+1.0, -1.0}) {
        Candidate probe = c;
        probe.source = "refine";
        if (k == 0)
          probe.alpha = std::clamp(c.alpha + sgn * step_alpha, 0.0, 0.5);
        else
          probe.angles[(k - 1) / 3][(k - 1) % 3] += sgn * step_angle;
        rebuild(probe);
        auto val = eval(probe);
        if (!val) return c;
        if (*val > best + 1e-13) {
          best = *val;
          c = std::move(probe);
          break;
        }
      }
    }
    step_alpha *= 0.5;
    step_angle *= 0.5;
  }
  return c;
}

}  // namespace

int sweep_worker_count() {
  if (const char* env = std::getenv("EBCAP_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SweepResult frontier_sweep(const KrausChannel& ch, const SweepConfig& cfg) {
  if (ch.dim_in() < 1) throw DimensionMismatch("frontier_sweep: bad channel");
  const int workers = sweep_worker_count();

  std::vector<Candidate> sched = build_schedule(ch, cfg);
  const long phase1 =
      std::min<long>(static_cast<long>(sched.size()), cfg.iteration_cap);
  if (phase1 < cfg.min_points)
    throw BudgetExceeded("frontier_sweep: iteration cap " +
                         std::to_string(cfg.iteration_cap) + " admits only " +
                         std::to_string(phase1) + " corners, min_points is " +
                         std::to_string(cfg.min_points));
  sched.resize(static_cast<std::size_t>(phase1));

  std::vector<RatePoint> values(sched.size());
  parallel_for(static_cast<int>(sched.size()), workers,
               [&](int i) { values[i] = evaluate(ch, sched[i]); });
  long evals = phase1;

  // Local refinement: one slot per scalarization weight, each slot refines
  // the phase-1 incumbent for its weight within a fixed sub-budget.
  const int slots = 17;
  const long spare = cfg.iteration_cap - evals;
  const long per_slot = spare > 0 ? spare / slots : 0;
  std::vector<std::vector<std::pair<Candidate, RatePoint>>> traces(slots);
  if (per_slot > 0) {
    parallel_for(slots, workers, [&](int s) {
      const double w = static_cast<double>(s) / (slots - 1);
      int best_idx = -1;
      double best_val = -1.0;
      for (std::size_t i = 0; i < sched.size(); ++i) {
        if (!sched[i].refinable) continue;
        const double v = w * values[i].R + (1.0 - w) * values[i].Rp;
        if (v > best_val) {
          best_val = v;
          best_idx = static_cast<int>(i);
        }
      }
      if (best_idx >= 0)
        refine(ch, sched[best_idx], values[best_idx], w, per_slot, traces[s]);
    });
    for (const auto& t : traces) evals += static_cast<long>(t.size());
  }

  std::vector<Candidate> all = std::move(sched);
  std::vector<RatePoint> pts = std::move(values);
  for (auto& t : traces)
    for (auto& [cand, pt] : t) {
      all.push_back(std::move(cand));
      pts.push_back(pt);
    }

  SweepResult res;
  res.evals = evals;
  res.frontier.points = pts;
  res.point_sources.reserve(all.size());
  for (const Candidate& c : all) res.point_sources.push_back(c.source);
  const std::vector<std::size_t> hull_idx = convex_hull_upper_indices(pts);
  for (std::size_t i : hull_idx) {
    res.frontier.hull.push_back(pts[i]);
    const Candidate& c = all[i];
    SweepEntry entry{pts[i], c.source, ProbVec{c.px}, c.schmidt, {}};
    const int d0 = static_cast<int>(c.schmidt.size());
    for (const Matrix& v : c.encoder_ops)
      entry.encoders.emplace_back(d0, ch.dim_in(), std::vector<Matrix>{v});
    res.hull_entries.push_back(std::move(entry));
  }
  return res;
}

}  // namespace ebcap
