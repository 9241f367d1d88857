#include "ebcap/channels.hpp"

#include <cmath>

namespace ebcap {

KrausChannel::KrausChannel(int dim_in, int dim_out, std::vector<Matrix> kraus_ops)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus_ops)) {
  if (dim_in_ < 1 || dim_out_ < 1)
    throw DimensionMismatch("KrausChannel: dimensions must be positive");
  if (kraus_.empty()) throw EmptyInput("KrausChannel: no Kraus operators");
  Matrix acc = Matrix::Zero(dim_in_, dim_in_);
  for (const Matrix& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_)
      throw DimensionMismatch("KrausChannel: operator shape mismatch");
    acc += k.adjoint() * k;
  }
  const double dev =
      (acc - Matrix::Identity(dim_in_, dim_in_)).cwiseAbs().maxCoeff();
  if (dev > kTolNum)
    throw InvalidInput("KrausChannel: not trace preserving, deviation " +
                       std::to_string(dev));
}

MeasurePrepareChannel::MeasurePrepareChannel(std::vector<Matrix> povm,
                                             std::vector<DensityMatrix> prep_states)
    : povm_(std::move(povm)), prep_(std::move(prep_states)) {
  if (povm_.empty() || povm_.size() != prep_.size())
    throw InvalidPOVM("MeasurePrepareChannel: need one prep state per POVM element");
  const Eigen::Index d = povm_.front().rows();
  Matrix acc = Matrix::Zero(d, d);
  for (const Matrix& m : povm_) {
    if (m.rows() != d || m.cols() != d)
      throw InvalidPOVM("MeasurePrepareChannel: POVM element shape mismatch");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kTolHermitian)
      throw InvalidPOVM("MeasurePrepareChannel: POVM element not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kTolPsd)
      throw InvalidPOVM("MeasurePrepareChannel: POVM element not PSD");
    acc += m;
  }
  if ((acc - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > kTolNum)
    throw InvalidPOVM("MeasurePrepareChannel: POVM does not sum to identity");
  for (std::size_t i = 1; i < prep_.size(); ++i)
    if (prep_[i].dim() != prep_.front().dim())
      throw InvalidPOVM("MeasurePrepareChannel: prep state dimension mismatch");
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim_in())
    throw DimensionMismatch("apply: state dimension != channel input");
  Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (const Matrix& k : ch.kraus_ops()) out += k * rho.entries() * k.adjoint();
  return DensityMatrix(std::move(out));
}

DensityMatrix apply_on_factor(const KrausChannel& ch, const DensityMatrix& rho,
                              const SubsystemDims& dims, std::size_t target) {
  dims.check_ambient(rho.dim());
  if (target >= dims.count())
    throw DimensionMismatch("apply_on_factor: target out of range");
  if (dims.factor(target) != ch.dim_in())
    throw DimensionMismatch("apply_on_factor: target factor != channel input");

  int left = 1, right = 1;
  for (std::size_t f = 0; f < target; ++f) left *= dims.factor(f);
  for (std::size_t f = target + 1; f < dims.count(); ++f) right *= dims.factor(f);

  const Matrix il = Matrix::Identity(left, left);
  const Matrix ir = Matrix::Identity(right, right);
  const int out_dim = left * ch.dim_out() * right;
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (const Matrix& k : ch.kraus_ops()) {
    const Matrix big = tensor(tensor(il, k), ir);
    out += big * rho.entries() * big.adjoint();
  }
  return DensityMatrix(std::move(out));
}

ChoiMatrix choi(const KrausChannel& ch) {
  const PureState phi = maximally_entangled(ch.dim_in());
  const DensityMatrix phi_rho(phi);
  SubsystemDims dims{ch.dim_in(), ch.dim_in()};
  DensityMatrix out = apply_on_factor(ch, phi_rho, dims, 1);
  return ChoiMatrix{std::move(out), SubsystemDims{ch.dim_in(), ch.dim_out()}};
}

DensityMatrix apply_via_choi(const ChoiMatrix& c, const DensityMatrix& rho) {
  const int din = c.dims.factor(0);
  const int dout = c.dims.factor(1);
  if (rho.dim() != din)
    throw DimensionMismatch("apply_via_choi: state dimension mismatch");
  // apply(rho) = d_in * tr_ref[ (rho^T (x) 1) * Choi ]
  const Matrix big =
      tensor(rho.entries().transpose(), Matrix::Identity(dout, dout)) *
      c.state.entries();
  Matrix out = Matrix::Zero(dout, dout);
  for (int a = 0; a < dout; ++a)
    for (int b = 0; b < dout; ++b) {
      Complex acc = 0.0;
      for (int r = 0; r < din; ++r) acc += big(r * dout + a, r * dout + b);
      out(a, b) = static_cast<double>(din) * acc;
    }
  return DensityMatrix(std::move(out));
}

double choi_ppt_min_eigenvalue(const KrausChannel& ch) {
  const ChoiMatrix c = choi(ch);
  const Matrix pt = partial_transpose(c.state.entries(), c.dims, 1);
  const RealVector ev = eigvals_hermitian(pt);
  return ev(ev.size() - 1);
}

EbStatus is_entanglement_breaking_qubit(const KrausChannel& ch) {
  if (ch.dim_in() != 2 || ch.dim_out() != 2)
    throw UnsupportedDimension(
        "is_entanglement_breaking_qubit: PPT is decisive only for qubit -> qubit");
  return choi_ppt_min_eigenvalue(ch) >= -kTolNum ? EbStatus::Breaking
                                                 : EbStatus::NotBreaking;
}

KrausChannel depolarizing(double eps) {
  if (eps < 0.0 || eps > 1.0) throw OutOfRange("depolarizing: eps outside [0,1]");
  Matrix id = Matrix::Identity(2, 2);
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  std::vector<Matrix> kraus;
  kraus.push_back(std::sqrt(1.0 - 0.75 * eps) * id);
  const double w = std::sqrt(eps / 4.0);
  kraus.push_back(w * x);
  kraus.push_back(w * y);
  kraus.push_back(w * z);
  return KrausChannel(2, 2, std::move(kraus));
}

KrausChannel identity_channel(int d) {
  if (d < 1) throw OutOfRange("identity_channel: d < 1");
  return KrausChannel(d, d, {Matrix::Identity(d, d)});
}

KrausChannel measure_prepare_to_kraus(const MeasurePrepareChannel& mp) {
  const int din = mp.dim_in();
  const int dout = mp.dim_out();
  std::vector<Matrix> kraus;
  for (std::size_t y = 0; y < mp.povm().size(); ++y) {
    Eigen::SelfAdjointEigenSolver<Matrix> em(mp.povm()[y]);
    Eigen::SelfAdjointEigenSolver<Matrix> es(mp.prep_states()[y].entries());
    for (int k = 0; k < din; ++k) {
      const double m = std::max(em.eigenvalues()(k), 0.0);
      if (m <= kTolPsd) continue;
      for (int i = 0; i < dout; ++i) {
        const double s = std::max(es.eigenvalues()(i), 0.0);
        if (s <= kTolPsd) continue;
        kraus.push_back(std::sqrt(s * m) * es.eigenvectors().col(i) *
                        em.eigenvectors().col(k).adjoint());
      }
    }
  }
  if (kraus.empty()) throw InvalidPOVM("measure_prepare_to_kraus: empty channel");
  return KrausChannel(din, dout, std::move(kraus));
}

}  // namespace ebcap
