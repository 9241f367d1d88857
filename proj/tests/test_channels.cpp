#include <cmath>

#include <doctest.h>

#include "ebcap/channels.hpp"
#include "ebcap/rng.hpp"
#include "ebcap/verify.hpp"

using namespace ebcap;

namespace {

DensityMatrix ket0() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  return DensityMatrix(m);
}

}  // namespace

TEST_SUITE("channels") {

TEST_CASE("KrausChannel validation") {
  Matrix half = 0.5 * Matrix::Identity(2, 2);
  CHECK_THROWS_AS(KrausChannel(2, 2, {half}), InvalidInput);
  CHECK_THROWS_AS(KrausChannel(2, 2, {}), EmptyInput);
  CHECK_THROWS_AS(KrausChannel(2, 2, {Matrix::Identity(3, 3)}),
                  DimensionMismatch);
}

TEST_CASE("apply") {
  Rng rng(23);
  const DensityMatrix rho{rng.random_density(2)};
  CHECK((apply(identity_channel(2), rho).entries() - rho.entries())
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  CHECK((apply(depolarizing(1.0), rho).entries() -
         0.5 * Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  const DensityMatrix out = apply(depolarizing(0.7), ket0());
  CHECK(out.entries()(0, 0).real() == doctest::Approx(0.65).epsilon(1e-12));
  CHECK(out.entries()(1, 1).real() == doctest::Approx(0.35).epsilon(1e-12));

  CHECK_THROWS_AS(apply(depolarizing(0.5), DensityMatrix{rng.random_density(3)}),
                  DimensionMismatch);
}

TEST_CASE("depolarizing is the affine map") {
  Rng rng(29);
  for (double eps : {0.0, 0.3, 2.0 / 3.0, 1.0}) {
    const DensityMatrix rho{rng.random_density(2)};
    const Matrix want =
        (1.0 - eps) * rho.entries() + eps * 0.5 * Matrix::Identity(2, 2);
    CHECK((apply(depolarizing(eps), rho).entries() - want)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(depolarizing(-0.1), OutOfRange);
  CHECK_THROWS_AS(depolarizing(1.1), OutOfRange);
}

TEST_CASE("apply_on_factor") {
  Rng rng(31);
  const DensityMatrix g{rng.random_density(2)};
  const DensityMatrix a{rng.random_density(2)};
  const DensityMatrix prod = tensor(g, a);
  const SubsystemDims dims{2, 2};

  CHECK((apply_on_factor(identity_channel(2), prod, dims, 1).entries() -
         prod.entries())
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  const KrausChannel dep = depolarizing(0.7);
  const Matrix want = tensor(g.entries(), apply(dep, a).entries());
  CHECK((apply_on_factor(dep, prod, dims, 1).entries() - want)
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  const DensityMatrix epr{maximally_entangled(2)};
  const RealVector ev =
      eigvals_hermitian(apply_on_factor(dep, epr, dims, 1).entries());
  CHECK(ev(0) == doctest::Approx(0.475).epsilon(1e-12));
  for (int i = 1; i < 4; ++i)
    CHECK(ev(i) == doctest::Approx(0.175).epsilon(1e-12));

  CHECK_THROWS_AS(apply_on_factor(dep, prod, dims, 2), DimensionMismatch);
  CHECK_THROWS_AS(apply_on_factor(dep, prod, SubsystemDims{4, 1}, 0),
                  DimensionMismatch);
}

TEST_CASE("choi") {
  const ChoiMatrix cid = choi(identity_channel(2));
  const RealVector ev = eigvals_hermitian(cid.state.entries());
  CHECK(ev(0) == doctest::Approx(1.0));
  CHECK(std::abs(ev(1)) < 1e-12);

  const ChoiMatrix cfull = choi(depolarizing(1.0));
  CHECK((cfull.state.entries() - 0.25 * Matrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  // Reference marginal is maximally mixed for every channel.
  Rng rng(37);
  for (int t = 0; t < 10; ++t) {
    const ChoiMatrix c = choi(random_qubit_channel(rng));
    CHECK((partial_trace(c.state, c.dims, {0}).entries() -
           0.5 * Matrix::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("choi reconstruction identity") {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const ChoiMatrix c = choi(ch);
    const DensityMatrix rho{rng.random_density(2)};
    CHECK((apply(ch, rho).entries() - apply_via_choi(c, rho).entries())
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("entanglement breaking certification") {
  CHECK(is_entanglement_breaking_qubit(depolarizing(0.7)) ==
        EbStatus::Breaking);
  CHECK(is_entanglement_breaking_qubit(depolarizing(0.5)) ==
        EbStatus::NotBreaking);
  CHECK(is_entanglement_breaking_qubit(depolarizing(2.0 / 3.0)) ==
        EbStatus::Breaking);

  CHECK(choi_ppt_min_eigenvalue(depolarizing(2.0 / 3.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(choi_ppt_min_eigenvalue(depolarizing(0.7)) ==
        doctest::Approx(0.75 * 0.7 - 0.5).epsilon(1e-12));

  CHECK_THROWS_AS(is_entanglement_breaking_qubit(identity_channel(3)),
                  UnsupportedDimension);
}

TEST_CASE("eb boundary scan") {
  const int n = 200;
  for (int i = 0; i < n; ++i) {
    const double eps = static_cast<double>(i) / (n - 1);
    const bool breaking =
        is_entanglement_breaking_qubit(depolarizing(eps)) == EbStatus::Breaking;
    if (std::abs(eps - 2.0 / 3.0) > 1.0 / (n - 1))
      CHECK(breaking == (eps >= 2.0 / 3.0));
  }
}

TEST_CASE("measure and prepare") {
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  std::vector<DensityMatrix> zprep{DensityMatrix(p0), DensityMatrix(p1)};
  const KrausChannel zz =
      measure_prepare_to_kraus(MeasurePrepareChannel({p0, p1}, zprep));

  CVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK((apply(zz, DensityMatrix(PureState(plus))).entries() -
         0.5 * Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  Rng rng(43);
  const DensityMatrix sigma{rng.random_density(2)};
  const KrausChannel constant = measure_prepare_to_kraus(
      MeasurePrepareChannel({Matrix::Identity(2, 2)}, {sigma}));
  const DensityMatrix rho{rng.random_density(2)};
  CHECK((apply(constant, rho).entries() - sigma.entries())
            .cwiseAbs()
            .maxCoeff() < 1e-10);

  // Tetrahedral POVM with aligned pure preparations certifies Breaking.
  std::vector<CVector> dirs;
  {
    CVector top(2);
    top << 1, 0;
    dirs.push_back(top);
    for (int k = 0; k < 3; ++k) {
      const double phase = 2.0 * M_PI * k / 3.0;
      CVector w(2);
      w << std::sqrt(1.0 / 3.0),
          std::sqrt(2.0 / 3.0) * Complex(std::cos(phase), std::sin(phase));
      dirs.push_back(w);
    }
  }
  std::vector<Matrix> povm;
  std::vector<DensityMatrix> prep;
  for (const CVector& v : dirs) {
    povm.push_back(0.5 * v * v.adjoint());
    prep.emplace_back(Matrix(v * v.adjoint()));
  }
  const KrausChannel sic =
      measure_prepare_to_kraus(MeasurePrepareChannel(povm, prep));
  CHECK(is_entanglement_breaking_qubit(sic) == EbStatus::Breaking);

  CHECK_THROWS_AS(MeasurePrepareChannel({p0}, zprep), InvalidPOVM);
  CHECK_THROWS_AS(MeasurePrepareChannel({p0, p0}, zprep), InvalidPOVM);
}

TEST_CASE("random measure-prepare channels always certify Breaking") {
  Rng rng(47);
  for (int t = 0; t < 15; ++t) {
    const Matrix u = rng.haar_unitary(2);
    const Matrix w = rng.haar_unitary(2);
    const double mix = rng.uniform01();
    std::vector<Matrix> povm{
        mix * u.col(0) * u.col(0).adjoint() +
            (1.0 - mix) * w.col(0) * w.col(0).adjoint(),
        mix * u.col(1) * u.col(1).adjoint() +
            (1.0 - mix) * w.col(1) * w.col(1).adjoint()};
    std::vector<DensityMatrix> prep;
    prep.emplace_back(rng.random_density(2));
    prep.emplace_back(rng.random_density(2));
    const KrausChannel ch =
        measure_prepare_to_kraus(MeasurePrepareChannel(povm, prep));
    CHECK(is_entanglement_breaking_qubit(ch) == EbStatus::Breaking);
  }
}

TEST_CASE("trace preservation on random channels") {
  Rng rng(53);
  for (int t = 0; t < 25; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const DensityMatrix rho{rng.random_density(2)};
    CHECK(apply(ch, rho).entries().trace().real() ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

}  // TEST_SUITE
