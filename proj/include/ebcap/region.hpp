#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ebcap/channels.hpp"
#include "ebcap/qnum.hpp"

namespace ebcap {

// Union variables of the rate region: auxiliary pmf p_X, Schmidt vector of
// the bipartite resource |phi_{G1 G2}>, and per-symbol encoders G1 -> A.
class EncodingEnsemble {
 public:
  EncodingEnsemble(ProbVec px, std::vector<double> schmidt,
                   std::vector<KrausChannel> encoders);

  const ProbVec& px() const { return px_; }
  const std::vector<double>& schmidt() const { return schmidt_; }
  const std::vector<KrausChannel>& encoders() const { return encoders_; }
  int alphabet() const { return static_cast<int>(px_.size()); }
  int d0() const { return static_cast<int>(schmidt_.size()); }
  int dA() const { return encoders_.front().dim_out(); }

 private:
  ProbVec px_;
  std::vector<double> schmidt_;
  std::vector<KrausChannel> encoders_;
};

// omega_{X G2 B} as a weighted list of G2 (x) B blocks.
struct CQState {
  ProbVec weights;
  std::vector<DensityMatrix> blocks;
  SubsystemDims block_dims;  // {d_G2, d_B}
};

struct RatePoint {
  double R = 0.0;
  double Rp = 0.0;
};

struct RateTriple {
  double IXB = 0.0;
  double IG2B_given_X = 0.0;
  double IXG2B = 0.0;
};

struct RateFrontier {
  std::vector<RatePoint> points;
  std::vector<RatePoint> hull;  // upper-right boundary, R increasing
};

struct SweepConfig {
  int alphabet = 5;
  int d0 = 10;
  int grid_schmidt = 33;
  int grid_encoder = 6;
  int restarts = 64;
  std::uint64_t seed = 1;
  long iteration_cap = 200000;
  int min_points = 8;
};

struct SweepEntry {
  RatePoint pt;
  std::string source;
  ProbVec px;
  std::vector<double> schmidt;
  std::vector<KrausChannel> encoders;
};

struct SweepResult {
  RateFrontier frontier;
  std::vector<std::string> point_sources;  // parallel to frontier.points
  std::vector<SweepEntry> hull_entries;    // one per hull vertex
  long evals = 0;
};

CQState output_cq_state(const KrausChannel& ch, const EncodingEnsemble& ens);

// (I(X;B), I(G2;B|X), I(X G2;B)); the third is computed independently from
// the block-diagonal joint state so the chain rule is a real cross-check.
RateTriple rate_triple(const KrausChannel& ch, const EncodingEnsemble& ens);

RatePoint rectangle_corner(const KrausChannel& ch, const EncodingEnsemble& ens);
std::pair<RatePoint, RatePoint> trapezoid_corners(const KrausChannel& ch,
                                                  const EncodingEnsemble& ens);

// Collapse X into an enlarged G2 so the rectangle corner lands on P1.
EncodingEnsemble relabel_for_trapezoid(const EncodingEnsemble& ens);

// Bernoulli(lam) switch between two strategies over a product resource.
EncodingEnsemble time_share(const EncodingEnsemble& ens1,
                            const EncodingEnsemble& ens2, double lam);

std::vector<RatePoint> convex_hull_upper(const std::vector<RatePoint>& points);
std::vector<std::size_t> convex_hull_upper_indices(
    const std::vector<RatePoint>& points);

// Piecewise-linear evaluation of a hull: flat extension to the left of the
// first vertex, zero beyond the right end.
double hull_interpolate(const std::vector<RatePoint>& hull, double R);

// Number of workers frontier_sweep will use (EBCAP_THREADS, else hardware).
int sweep_worker_count();

SweepResult frontier_sweep(const KrausChannel& ch, const SweepConfig& cfg);

}  // namespace ebcap
