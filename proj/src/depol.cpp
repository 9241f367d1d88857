#include "ebcap/depol.hpp"

#include <algorithm>
#include <cmath>

namespace ebcap {

DepolParams::DepolParams(double e, double a) : eps(e), alpha(a) {
  if (eps < 0.0 || eps > 1.0) throw OutOfRange("DepolParams: eps outside [0,1]");
  if (alpha < 0.0 || alpha > 0.5)
    throw OutOfRange("DepolParams: alpha outside [0,1/2]");
}

JointSpectrum joint_output_spectrum(const DepolParams& params) {
  const double e = params.eps;
  const double a = params.alpha;
  double disc = e * e / 16.0 - (1.0 - a) * a * e * (1.0 - 0.75 * e) +
                (1.0 - e) / 4.0;
  if (disc < -kTolNum)
    throw OutOfRange("joint_output_spectrum: negative discriminant");
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);
  return JointSpectrum{{a * e / 2.0, (1.0 - a) * e / 2.0,
                        0.5 - e / 4.0 - root, 0.5 - e / 4.0 + root}};
}

RatePoint closed_form_point(const DepolParams& params) {
  const double conv = binary_convolution(params.alpha, params.eps / 2.0);
  const double r = 1.0 - h2(conv);
  const JointSpectrum spec = joint_output_spectrum(params);
  std::vector<double> p = spec.as_vector();
  for (double& v : p) v = std::clamp(v, 0.0, 1.0);
  const double rp = h2(params.alpha) + h2(conv) - shannon_entropy(ProbVec{p});
  return RatePoint{r, rp};
}

double unassisted_capacity(double eps) {
  return closed_form_point(DepolParams(eps, 0.0)).R;
}

double ea_capacity(double eps) {
  return closed_form_point(DepolParams(eps, 0.5)).Rp;
}

RateFrontier time_division_frontier(double eps,
                                    const std::vector<double>& lam_grid) {
  if (lam_grid.empty()) throw EmptyInput("time_division_frontier: empty grid");
  const double c = unassisted_capacity(eps);
  const double cea = ea_capacity(eps);
  RateFrontier f;
  for (double lam : lam_grid) {
    if (lam < 0.0 || lam > 1.0)
      throw OutOfRange("time_division_frontier: lambda outside [0,1]");
    f.points.push_back(RatePoint{(1.0 - lam) * c, lam * cea});
  }
  f.hull = convex_hull_upper(f.points);
  return f;
}

RateFrontier spc_frontier(double eps, const std::vector<double>& alpha_grid) {
  if (alpha_grid.empty()) throw EmptyInput("spc_frontier: empty grid");
  RateFrontier f;
  for (double a : alpha_grid)
    f.points.push_back(closed_form_point(DepolParams(eps, a)));
  f.hull = convex_hull_upper(f.points);
  return f;
}

double td_rp_at(double eps, double R) {
  const double c = unassisted_capacity(eps);
  const double cea = ea_capacity(eps);
  if (c <= 0.0) return R <= kTolNum ? cea : 0.0;
  if (R >= c) return 0.0;
  return cea * (1.0 - R / c);
}

GapReport gap_report(double eps, const std::vector<double>& alpha_grid) {
  std::vector<RatePoint> points;
  points.reserve(alpha_grid.size());
  for (double a : alpha_grid)
    points.push_back(closed_form_point(DepolParams(eps, a)));
  GapReport rep;
  // Both boundaries are piecewise linear over R, so the maximum vertical
  // excess is attained at a hull vertex.
  for (std::size_t i : convex_hull_upper_indices(points)) {
    const double gap = points[i].Rp - td_rp_at(eps, points[i].R);
    if (gap > rep.max_vertical_gap) {
      rep.max_vertical_gap = gap;
      rep.argmax_alpha = alpha_grid[i];
    }
  }
  rep.dominated = rep.max_vertical_gap <= kTolGap;
  return rep;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw OutOfRange("linspace: n < 1");
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  v[n - 1] = hi;
  return v;
}

EncodingEnsemble depol_ensemble(double alpha) {
  if (alpha < 0.0 || alpha > 0.5)
    throw OutOfRange("depol_ensemble: alpha outside [0,1/2]");
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  std::vector<KrausChannel> enc;
  enc.push_back(identity_channel(2));
  enc.emplace_back(2, 2, std::vector<Matrix>{x});
  return EncodingEnsemble(ProbVec{std::vector<double>{0.5, 0.5}},
                          std::vector<double>{1.0 - alpha, alpha},
                          std::move(enc));
}

}  // namespace ebcap
