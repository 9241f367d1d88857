#ifndef EBCAP_QNUM_HPP
#define EBCAP_QNUM_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "ebcap/errors.hpp"

namespace ebcap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numerical tolerances. Rates are in bits throughout (all logs base 2).
inline constexpr double kTolHermitian = 1e-9;
inline constexpr double kTolTrace = 1e-9;
inline constexpr double kTolPsd = 1e-10;
inline constexpr double kTolNum = 1e-8;

/// Ordered factor dimensions of a tensor-product space. The leftmost factor
/// is the most significant in row-major index composition: a basis index of
/// the ambient space decomposes as i = ((i_0 * d_1 + i_1) * d_2 + i_2) ...
class SubsystemDims {
 public:
  SubsystemDims(std::initializer_list<int> dims);
  explicit SubsystemDims(std::vector<int> dims);

  std::size_t count() const { return dims_.size(); }
  int factor(std::size_t i) const { return dims_[i]; }
  int total() const { return total_; }
  const std::vector<int>& factors() const { return dims_; }

  /// Same list with factor `i` replaced by `d` (channel output bookkeeping).
  SubsystemDims replaced(std::size_t i, int d) const;

  /// Throws DimensionMismatch unless total() == ambient.
  void check_ambient(int ambient) const;

 private:
  std::vector<int> dims_;
  int total_;
};

/// Probability mass function: non-negative entries summing to 1 within
/// kTolTrace. Zero entries are allowed.
class ProbVec {
 public:
  explicit ProbVec(std::vector<double> probs);
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

/// Unit vector in C^dim.
class PureState {
 public:
  explicit PureState(CVector amplitudes);
  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const CVector& amplitudes() const { return amplitudes_; }

 private:
  CVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);
  explicit DensityMatrix(const PureState& psi);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

/// Eigenvalues of a Hermitian matrix in descending order.
/// Throws NonHermitian if the symmetry violation exceeds kTolHermitian.
RealVector eigvals_hermitian(const Matrix& m);

/// Von Neumann entropy H(rho) = -tr[rho log2 rho] in bits. Eigenvalues are
/// clamped to [0,1] to absorb round-off before taking logs.
double entropy_vn(const DensityMatrix& rho);

/// Shannon entropy -sum p_i log2 p_i in bits, with 0 log 0 := 0.
double shannon_entropy(const ProbVec& p);

/// Binary entropy h2(x) = -x log2 x - (1-x) log2 (1-x).
double h2(double x);

/// Binary convolution a*b = (1-a)b + a(1-b).
double binary_convolution(double a, double b);

/// Kronecker product.
Matrix tensor(const Matrix& a, const Matrix& b);
PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the kept factors (indices into `dims`, strictly
/// increasing). Keeping every factor returns the input.
DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemDims& dims,
                            const std::vector<std::size_t>& keep);

/// Quantum mutual information I(A;B) = H(A) + H(B) - H(AB) in bits.
/// `dims` must list exactly two factors.
double mutual_info(const DensityMatrix& rho_ab, const SubsystemDims& dims);

/// (1/sqrt(d)) sum_i |ii>, a state on C^d x C^d.
PureState maximally_entangled(int d);

/// Reorder tensor factors: entry perm[k] gives the old position of the
/// factor that ends up at position k.
Matrix permute_factors(const Matrix& m, const SubsystemDims& dims,
                       const std::vector<std::size_t>& perm);

/// Transpose one factor of a matrix on a tensor-product space.
Matrix partial_transpose(const Matrix& m, const SubsystemDims& dims,
                         std::size_t factor);

}  // namespace ebcap

#endif
