#include "ebcap/rng.hpp"

#include <cmath>

#include <Eigen/QR>

#include "ebcap/errors.hpp"

namespace ebcap {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::child(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = a ^ (index * 0x9e3779b97f4a7c15ULL + 0x63d51b5c4b1a9e2fULL);
  return Rng(splitmix64(s));
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double Rng::gaussian() {
  if (have_cached_gaussian_) {
    have_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  double u1 = 0.0;
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_gaussian_ = r * std::sin(theta);
  have_cached_gaussian_ = true;
  return r * std::cos(theta);
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw OutOfRange("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

std::vector<double> Rng::random_simplex(int n) {
  if (n < 1) throw OutOfRange("random_simplex: n < 1");
  std::vector<double> v(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double u = 0.0;
    while (u <= 0.0) u = uniform01();
    v[i] = -std::log(u);
    sum += v[i];
  }
  for (double& x : v) x /= sum;
  return v;
}

Matrix Rng::haar_unitary(int d) { return haar_isometry(d, d); }

Matrix Rng::haar_isometry(int d_out, int d_in) {
  if (d_out < d_in || d_in < 1)
    throw DimensionMismatch("haar_isometry: need d_out >= d_in >= 1");
  Matrix g(d_out, d_in);
  for (int i = 0; i < d_out; ++i)
    for (int j = 0; j < d_in; ++j) g(i, j) = Complex(gaussian(), gaussian());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d_out, d_in);
  Matrix r = q.adjoint() * g;
  // Fix the phase gauge so the distribution is Haar, not QR-biased.
  for (int j = 0; j < d_in; ++j) {
    Complex diag = r(j, j);
    double mag = std::abs(diag);
    Complex phase = mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

Matrix Rng::random_density(int d) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gaussian(), gaussian());
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

PureState Rng::random_pure(int d) {
  CVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(gaussian(), gaussian());
  v /= v.norm();
  return PureState(std::move(v));
}

}  // namespace ebcap
