#pragma once

#include <array>
#include <vector>

#include "ebcap/region.hpp"

namespace ebcap {

struct DepolParams {
  double eps;    // depolarization parameter in [0,1]
  double alpha;  // Schmidt weight in [0,1/2]

  DepolParams(double e, double a);
  bool eb() const { return eps >= 2.0 / 3.0; }
};

struct JointSpectrum {
  std::array<double, 4> p;
  std::vector<double> as_vector() const { return {p[0], p[1], p[2], p[3]}; }
};

JointSpectrum joint_output_spectrum(const DepolParams& params);
RatePoint closed_form_point(const DepolParams& params);
double unassisted_capacity(double eps);
double ea_capacity(double eps);

RateFrontier time_division_frontier(double eps,
                                    const std::vector<double>& lam_grid);
RateFrontier spc_frontier(double eps, const std::vector<double>& alpha_grid);

// Vertical excess of the superposition-coding hull over the time-division
// segment, maximized over hull vertices.
struct GapReport {
  double max_vertical_gap = 0.0;
  double argmax_alpha = 0.0;
  bool dominated = true;  // true when the gap never exceeds kTolGap
};

inline constexpr double kTolGap = 1e-6;

GapReport gap_report(double eps, const std::vector<double>& alpha_grid);

// Time-division boundary value at guaranteed rate R.
double td_rp_at(double eps, double R);

std::vector<double> linspace(double lo, double hi, int n);

// The explicit superposition ensemble behind the closed form: Schmidt
// vector (1-alpha, alpha), uniform binary X, encoders {identity, bitflip}.
EncodingEnsemble depol_ensemble(double alpha);

}  // namespace ebcap
