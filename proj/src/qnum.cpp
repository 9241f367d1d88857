#include "ebcap/qnum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ebcap {

namespace {

double log2_clamped(double x) { return std::log2(x); }

// -x log2 x with the 0 log 0 := 0 convention.
double plog(double x) { return x > 0.0 ? -x * log2_clamped(x) : 0.0; }

}  // namespace

SubsystemDims::SubsystemDims(std::initializer_list<int> dims)
    : SubsystemDims(std::vector<int>(dims)) {}

SubsystemDims::SubsystemDims(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DimensionMismatch("SubsystemDims: empty factor list");
  total_ = 1;
  for (int d : dims_) {
    if (d < 1) throw DimensionMismatch("SubsystemDims: factor dimension < 1");
    total_ *= d;
  }
}

SubsystemDims SubsystemDims::replaced(std::size_t i, int d) const {
  std::vector<int> out = dims_;
  out.at(i) = d;
  return SubsystemDims(std::move(out));
}

void SubsystemDims::check_ambient(int ambient) const {
  if (total_ != ambient)
    throw DimensionMismatch("SubsystemDims: factors multiply to " +
                            std::to_string(total_) + ", ambient is " +
                            std::to_string(ambient));
}

ProbVec::ProbVec(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidPmf("ProbVec: empty");
  double sum = 0.0;
  for (double p : probs_) {
    if (p < -kTolPsd) throw InvalidPmf("ProbVec: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kTolTrace)
    throw InvalidPmf("ProbVec: entries sum to " + std::to_string(sum));
}

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw InvalidState("PureState: empty vector");
  if (std::abs(amplitudes_.norm() - 1.0) > kTolTrace)
    throw InvalidState("PureState: not normalized");
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw InvalidState("DensityMatrix: not square");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kTolHermitian)
    throw InvalidState("DensityMatrix: not Hermitian");
  if (std::abs(entries_.trace().real() - 1.0) > kTolTrace ||
      std::abs(entries_.trace().imag()) > kTolTrace)
    throw InvalidState("DensityMatrix: trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kTolPsd)
    throw InvalidState("DensityMatrix: negative eigenvalue " +
                       std::to_string(es.eigenvalues().minCoeff()));
}

DensityMatrix::DensityMatrix(const PureState& psi)
    : entries_(psi.amplitudes() * psi.amplitudes().adjoint()) {}

RealVector eigvals_hermitian(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonHermitian("eigvals_hermitian: not square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kTolHermitian)
    throw NonHermitian("eigvals_hermitian: symmetry violated");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  RealVector v = es.eigenvalues();
  std::reverse(v.begin(), v.end());
  return v;
}

double entropy_vn(const DensityMatrix& rho) {
  RealVector ev = eigvals_hermitian(rho.entries());
  double h = 0.0;
  for (double lam : ev) h += plog(std::clamp(lam, 0.0, 1.0));
  return h;
}

double shannon_entropy(const ProbVec& p) {
  double h = 0.0;
  for (double x : p.probs()) h += plog(std::max(x, 0.0));
  return h;
}

double h2(double x) {
  if (x < 0.0 || x > 1.0) throw OutOfRange("h2: argument outside [0,1]");
  return plog(x) + plog(1.0 - x);
}

double binary_convolution(double a, double b) {
  if (a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0)
    throw OutOfRange("binary_convolution: argument outside [0,1]");
  return (1.0 - a) * b + a * (1.0 - b);
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

PureState tensor(const PureState& a, const PureState& b) {
  CVector out(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    out.segment(i * b.dim(), b.dim()) = a.amplitudes()(i) * b.amplitudes();
  return PureState(std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor(a.entries(), b.entries()));
}

namespace {

// Strides for row-major index composition, leftmost factor most significant.
std::vector<int> strides_of(const SubsystemDims& dims) {
  std::vector<int> s(dims.count());
  int acc = 1;
  for (std::size_t k = dims.count(); k-- > 0;) {
    s[k] = acc;
    acc *= dims.factor(k);
  }
  return s;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemDims& dims,
                            const std::vector<std::size_t>& keep) {
  dims.check_ambient(rho.dim());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= dims.count() || (k > 0 && keep[k] <= keep[k - 1]))
      throw DimensionMismatch("partial_trace: bad keep set");
  }
  std::vector<std::size_t> traced;
  for (std::size_t f = 0; f < dims.count(); ++f)
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

  const std::vector<int> strides = strides_of(dims);
  int dim_keep = 1, dim_traced = 1;
  for (std::size_t f : keep) dim_keep *= dims.factor(f);
  for (std::size_t f : traced) dim_traced *= dims.factor(f);

  // Offset of a composite sub-index within the ambient index, per group.
  auto offsets = [&](const std::vector<std::size_t>& group, int count) {
    std::vector<int> off(count, 0);
    for (int idx = 0; idx < count; ++idx) {
      int rem = idx, o = 0;
      for (std::size_t k = group.size(); k-- > 0;) {
        int d = dims.factor(group[k]);
        o += (rem % d) * strides[group[k]];
        rem /= d;
      }
      off[idx] = o;
    }
    return off;
  };
  const std::vector<int> keep_off = offsets(keep, dim_keep);
  const std::vector<int> tr_off = offsets(traced, dim_traced);

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  const Matrix& m = rho.entries();
  for (int a = 0; a < dim_keep; ++a)
    for (int b = 0; b < dim_keep; ++b) {
      Complex acc = 0.0;
      for (int c = 0; c < dim_traced; ++c)
        acc += m(keep_off[a] + tr_off[c], keep_off[b] + tr_off[c]);
      out(a, b) = acc;
    }
  return DensityMatrix(std::move(out));
}

double mutual_info(const DensityMatrix& rho_ab, const SubsystemDims& dims) {
  if (dims.count() != 2) throw DimensionMismatch("mutual_info: need two factors");
  dims.check_ambient(rho_ab.dim());
  const double ha = entropy_vn(partial_trace(rho_ab, dims, {0}));
  const double hb = entropy_vn(partial_trace(rho_ab, dims, {1}));
  const double hab = entropy_vn(rho_ab);
  return ha + hb - hab;
}

PureState maximally_entangled(int d) {
  if (d < 1) throw OutOfRange("maximally_entangled: d < 1");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(i * d + i) = amp;
  return PureState(std::move(v));
}

Matrix permute_factors(const Matrix& m, const SubsystemDims& dims,
                       const std::vector<std::size_t>& perm) {
  dims.check_ambient(static_cast<int>(m.rows()));
  if (perm.size() != dims.count())
    throw DimensionMismatch("permute_factors: permutation size mismatch");
  const std::vector<int> strides = strides_of(dims);

  std::vector<int> new_dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) new_dims[k] = dims.factor(perm[k]);
  SubsystemDims nd{new_dims};
  const std::vector<int> new_strides = strides_of(nd);

  // map[i_new] = ambient index in the old ordering
  std::vector<int> map(nd.total());
  for (int idx = 0; idx < nd.total(); ++idx) {
    int rem = idx, old = 0;
    for (std::size_t k = perm.size(); k-- > 0;) {
      int d = nd.factor(k);
      old += (rem % d) * strides[perm[k]];
      rem /= d;
    }
    map[idx] = old;
  }
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < nd.total(); ++i)
    for (int j = 0; j < nd.total(); ++j) out(i, j) = m(map[i], map[j]);
  return out;
}

Matrix partial_transpose(const Matrix& m, const SubsystemDims& dims,
                         std::size_t factor) {
  dims.check_ambient(static_cast<int>(m.rows()));
  if (factor >= dims.count())
    throw DimensionMismatch("partial_transpose: factor index out of range");
  const std::vector<int> strides = strides_of(dims);
  const int d = dims.factor(factor);
  const int stride = strides[factor];

  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    const int fi = (i / stride) % d;
    const int base_i = i - fi * stride;
    for (int j = 0; j < m.cols(); ++j) {
      const int fj = (j / stride) % d;
      const int base_j = j - fj * stride;
      out(base_i + fj * stride, base_j + fi * stride) = m(i, j);
    }
  }
  return out;
}

}  // namespace ebcap
