#include "ebcap/region.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ebcap {

namespace {

PureState schmidt_state(const std::vector<double>& lambda) {
  const int d0 = static_cast<int>(lambda.size());
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d0) * d0);
  for (int i = 0; i < d0; ++i) {
    if (lambda[i] < -kTolPsd) throw InvalidState("schmidt vector: negative weight");
    v(i * d0 + i) = std::sqrt(std::max(lambda[i], 0.0));
  }
  return PureState(std::move(v));
}

}  // namespace

EncodingEnsemble::EncodingEnsemble(ProbVec px, std::vector<double> schmidt,
                                   std::vector<KrausChannel> encoders)
    : px_(std::move(px)), schmidt_(std::move(schmidt)),
      encoders_(std::move(encoders)) {
  if (encoders_.size() != px_.size())
    throw DimensionMismatch("EncodingEnsemble: one encoder per symbol required");
  if (schmidt_.empty()) throw InvalidState("EncodingEnsemble: empty Schmidt vector");
  double sum = 0.0;
  for (double l : schmidt_) {
    if (l < -kTolPsd) throw InvalidState("EncodingEnsemble: negative Schmidt weight");
    sum += l;
  }
  if (std::abs(sum - 1.0) > kTolTrace)
    throw InvalidState("EncodingEnsemble: Schmidt weights sum to " +
                       std::to_string(sum));
  const int d0 = static_cast<int>(schmidt_.size());
  const int da = encoders_.front().dim_out();
  for (const KrausChannel& f : encoders_) {
    if (f.dim_in() != d0)
      throw DimensionMismatch("EncodingEnsemble: encoder input != d0");
    if (f.dim_out() != da)
      throw DimensionMismatch("EncodingEnsemble: encoders disagree on dA");
  }
}

CQState output_cq_state(const KrausChannel& ch, const EncodingEnsemble& ens) {
  if (ch.dim_in() != ens.dA())
    throw DimensionMismatch("output_cq_state: channel input != encoder output");
  const int d0 = ens.d0();
  const DensityMatrix resource{schmidt_state(ens.schmidt())};
  const SubsystemDims g2g1{d0, d0};

  std::vector<DensityMatrix> blocks;
  blocks.reserve(ens.px().size());
  for (const KrausChannel& f : ens.encoders()) {
    DensityMatrix g2a = apply_on_factor(f, resource, g2g1, 1);
    blocks.push_back(
        apply_on_factor(ch, g2a, SubsystemDims{d0, ens.dA()}, 1));
  }
  return CQState{ens.px(), std::move(blocks),
                 SubsystemDims{d0, ch.dim_out()}};
}

RateTriple rate_triple(const KrausChannel& ch, const EncodingEnsemble& ens) {
  const CQState cq = output_cq_state(ch, ens);
  const int d0 = cq.block_dims.factor(0);
  const int db = cq.block_dims.factor(1);
  const int nx = static_cast<int>(cq.weights.size());

  Matrix avg_b = Matrix::Zero(db, db);
  double holevo_cond = 0.0;
  double ig2b_cond = 0.0;
  for (int x = 0; x < nx; ++x) {
    const double p = cq.weights.probs()[x];
    const DensityMatrix rho_b = partial_trace(cq.blocks[x], cq.block_dims, {1});
    avg_b += p * rho_b.entries();
    if (p > 0.0) {
      holevo_cond += p * entropy_vn(rho_b);
      ig2b_cond += p * mutual_info(cq.blocks[x], cq.block_dims);
    }
  }
  RateTriple t;
  t.IXB = entropy_vn(DensityMatrix(avg_b)) - holevo_cond;
  t.IG2B_given_X = ig2b_cond;

  // Independent route for I(XG2;B): block-diagonal joint state with X as
  // orthogonal flags, bipartite cut (X G2) vs B.
  const int joint_dim = nx * d0 * db;
  Matrix joint = Matrix::Zero(joint_dim, joint_dim);
  for (int x = 0; x < nx; ++x) {
    const double p = cq.weights.probs()[x];
    joint.block(x * d0 * db, x * d0 * db, d0 * db, d0 * db) =
        p * cq.blocks[x].entries();
  }
  t.IXG2B = mutual_info(DensityMatrix(std::move(joint)),
                        SubsystemDims{nx * d0, db});
  return t;
}

RatePoint rectangle_corner(const KrausChannel& ch, const EncodingEnsemble& ens) {
  const RateTriple t = rate_triple(ch, ens);
  return RatePoint{t.IXB, t.IG2B_given_X};
}

std::pair<RatePoint, RatePoint> trapezoid_corners(const KrausChannel& ch,
                                                  const EncodingEnsemble& ens) {
  const RateTriple t = rate_triple(ch, ens);
  return {RatePoint{t.IXB, t.IG2B_given_X}, RatePoint{0.0, t.IXG2B}};
}

EncodingEnsemble relabel_for_trapezoid(const EncodingEnsemble& ens) {
  const int nx = ens.alphabet();
  const int d0 = ens.d0();
  const int da = ens.dA();

  std::vector<double> schmidt_bar(static_cast<std::size_t>(nx) * d0);
  for (int x = 0; x < nx; ++x)
    for (int i = 0; i < d0; ++i)
      schmidt_bar[x * d0 + i] = ens.px().probs()[x] * ens.schmidt()[i];

  // Single encoder selecting the x block, then applying F^(x).
  std::vector<Matrix> kraus;
  for (int x = 0; x < nx; ++x) {
    Matrix select = Matrix::Zero(d0, nx * d0);
    select.block(0, x * d0, d0, d0) = Matrix::Identity(d0, d0);
    for (const Matrix& k : ens.encoders()[x].kraus_ops())
      kraus.push_back(k * select);
  }
  std::vector<KrausChannel> enc;
  enc.emplace_back(nx * d0, da, std::move(kraus));
  return EncodingEnsemble(ProbVec{std::vector<double>{1.0}},
                          std::move(schmidt_bar), std::move(enc));
}

EncodingEnsemble time_share(const EncodingEnsemble& ens1,
                            const EncodingEnsemble& ens2, double lam) {
  if (lam < 0.0 || lam > 1.0) throw OutOfRange("time_share: lam outside [0,1]");
  if (ens1.dA() != ens2.dA())
    throw DimensionMismatch("time_share: ensembles target different dA");
  const int d01 = ens1.d0();
  const int d02 = ens2.d0();
  const int da = ens1.dA();

  std::vector<double> px;
  for (double p : ens1.px().probs()) px.push_back((1.0 - lam) * p);
  for (double p : ens2.px().probs()) px.push_back(lam * p);

  std::vector<double> schmidt(static_cast<std::size_t>(d01) * d02);
  for (int i = 0; i < d01; ++i)
    for (int j = 0; j < d02; ++j)
      schmidt[i * d02 + j] = ens1.schmidt()[i] * ens2.schmidt()[j];

  // First-half encoders act on G1 of ens1 and trace out the ens2 factor;
  // second-half encoders do the opposite.
  std::vector<KrausChannel> enc;
  for (const KrausChannel& f : ens1.encoders()) {
    std::vector<Matrix> kraus;
    for (const Matrix& k : f.kraus_ops())
      for (int j = 0; j < d02; ++j) {
        Matrix pick = Matrix::Zero(d01, d01 * d02);
        for (int i = 0; i < d01; ++i) pick(i, i * d02 + j) = 1.0;
        kraus.push_back(k * pick);
      }
    enc.emplace_back(d01 * d02, da, std::move(kraus));
  }
  for (const KrausChannel& f : ens2.encoders()) {
    std::vector<Matrix> kraus;
    for (const Matrix& k : f.kraus_ops())
      for (int i = 0; i < d01; ++i) {
        Matrix pick = Matrix::Zero(d02, d01 * d02);
        for (int j = 0; j < d02; ++j) pick(j, i * d02 + j) = 1.0;
        kraus.push_back(k * pick);
      }
    enc.emplace_back(d01 * d02, da, std::move(kraus));
  }
  return EncodingEnsemble(ProbVec{std::move(px)}, std::move(schmidt),
                          std::move(enc));
}

namespace {

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
  return (a.R - o.R) * (b.Rp - o.Rp) - (a.Rp - o.Rp) * (b.R - o.R);
}

}  // namespace

std::vector<std::size_t> convex_hull_upper_indices(
    const std::vector<RatePoint>& points) {
  if (points.empty()) throw EmptyInput("convex_hull_upper: no points");
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].R != points[b].R) return points[a].R < points[b].R;
    if (points[a].Rp != points[b].Rp) return points[a].Rp > points[b].Rp;
    return a < b;
  });

  // Collapse duplicate R values (keep the highest Rp in each group), then
  // drop staircase-dominated points scanning right to left.
  constexpr double kTieTol = 1e-12;
  std::vector<std::size_t> dedup;
  for (std::size_t i : idx) {
    if (!dedup.empty() && points[i].R <= points[dedup.back()].R + kTieTol)
      continue;
    dedup.push_back(i);
  }
  std::vector<std::size_t> staircase;
  double best_rp = -1.0;
  for (std::size_t k = dedup.size(); k-- > 0;) {
    if (points[dedup[k]].Rp > best_rp + kTieTol) {
      staircase.push_back(dedup[k]);
      best_rp = points[dedup[k]].Rp;
    }
  }
  std::reverse(staircase.begin(), staircase.end());

  std::vector<std::size_t> hull;
  for (std::size_t i : staircase) {
    while (hull.size() >= 2 &&
           cross(points[hull[hull.size() - 2]], points[hull.back()],
                 points[i]) >= -1e-15)
      hull.pop_back();
    hull.push_back(i);
  }
  return hull;
}

std::vector<RatePoint> convex_hull_upper(const std::vector<RatePoint>& points) {
  std::vector<RatePoint> hull;
  for (std::size_t i : convex_hull_upper_indices(points)) hull.push_back(points[i]);
  return hull;
}

double hull_interpolate(const std::vector<RatePoint>& hull, double R) {
  if (hull.empty()) throw EmptyInput("hull_interpolate: empty hull");
  if (R <= hull.front().R) return hull.front().Rp;
  if (R > hull.back().R + kTolNum) return 0.0;
  if (R >= hull.back().R) return hull.back().Rp;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    if (R <= hull[k].R) {
      const double t = (R - hull[k - 1].R) / (hull[k].R - hull[k - 1].R);
      return hull[k - 1].Rp + t * (hull[k].Rp - hull[k - 1].Rp);
    }
  }
  return hull.back().Rp;
}

}  // namespace ebcap
