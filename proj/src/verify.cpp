#include "ebcap/verify.hpp"

#include <algorithm>
#include <cmath>

#include "ebcap/depol.hpp"
#include "ebcap/region.hpp"

namespace ebcap {

namespace {

Matrix pauli(int k) {
  Matrix m(2, 2);
  switch (k) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0); break;
    case 3: m << 1, 0, 0, -1; break;
    default: m = Matrix::Identity(2, 2);
  }
  return m;
}

}  // namespace

EncodingEnsemble random_qubit_ensemble(Rng& rng,
                                       const RandomEnsembleOptions& opt) {
  if (opt.balanced) {
    // Pauli-covariant ensemble: the average channel input is the maximally
    // mixed state for every base unitary V and Schmidt weight, so averaged
    // outputs coincide across independently sampled instances.
    const double alpha = rng.uniform(0.0, 0.5);
    const Matrix v = rng.haar_unitary(2);
    std::vector<KrausChannel> enc;
    for (int k = 0; k < 4; ++k)
      enc.emplace_back(2, 2, std::vector<Matrix>{pauli(k) * v});
    return EncodingEnsemble(ProbVec{std::vector<double>(4, 0.25)},
                            std::vector<double>{1.0 - alpha, alpha},
                            std::move(enc));
  }
  const int nx = rng.uniform_int(1, std::max(1, opt.max_alphabet));
  std::vector<KrausChannel> enc;
  for (int x = 0; x < nx; ++x) {
    if (rng.uniform01() < 1.0 / 3.0) {
      // General CPTP encoder via a Stinespring isometry with qubit environment.
      const Matrix v = rng.haar_isometry(4, 2);
      std::vector<Matrix> kraus{v.topRows(2), v.bottomRows(2)};
      enc.emplace_back(2, 2, std::move(kraus));
    } else {
      enc.emplace_back(2, 2, std::vector<Matrix>{rng.haar_unitary(2)});
    }
  }
  return EncodingEnsemble(ProbVec{rng.random_simplex(nx)},
                          rng.random_simplex(2), std::move(enc));
}

KrausChannel random_qubit_channel(Rng& rng) {
  const int denv = rng.uniform_int(1, 4);
  const Matrix v = rng.haar_isometry(2 * denv, 2);
  std::vector<Matrix> kraus;
  for (int e = 0; e < denv; ++e) {
    Matrix k(2, 2);
    for (int b = 0; b < 2; ++b)
      for (int j = 0; j < 2; ++j) k(b, j) = v(b * denv + e, j);
    kraus.push_back(std::move(k));
  }
  return KrausChannel(2, 2, std::move(kraus));
}

namespace {

using Runner = PropertyResult (*)(std::uint64_t, int);

PropertyResult make_result(const std::string& name, double worst, double bound,
                           const std::string& detail = "") {
  PropertyResult r;
  r.name = name;
  r.worst_deviation = worst;
  r.passed = worst <= bound;
  r.detail = detail;
  return r;
}

PropertyResult prop_mirror_lemma(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 1);
  double worst = 0.0;
  for (int d = 2; d <= 4; ++d) {
    const PureState phi = maximally_entangled(d);
    const Matrix id = Matrix::Identity(d, d);
    for (int t = 0; t < trials; ++t) {
      const Matrix u = rng.haar_unitary(d);
      const CVector lhs = tensor(id, u) * phi.amplitudes();
      const CVector rhs = tensor(u.transpose(), id) * phi.amplitudes();
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return make_result("mirror_lemma", worst, 1e-10);
}

PropertyResult prop_entropy_range(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 2);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int d = rng.uniform_int(2, 6);
    const DensityMatrix rho{rng.random_density(d)};
    const double h = entropy_vn(rho);
    worst = std::max(worst, -h);
    worst = std::max(worst, h - std::log2(static_cast<double>(d)));
    const DensityMatrix pure{rng.random_pure(d)};
    worst = std::max(worst, std::abs(entropy_vn(pure)));
  }
  return make_result("entropy_range", worst, kTolNum);
}

PropertyResult prop_subadditivity(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 3);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int da = rng.uniform_int(2, 3);
    const int db = rng.uniform_int(2, 3);
    const DensityMatrix rho{rng.random_density(da * db)};
    const SubsystemDims dims{da, db};
    worst = std::max(worst, -mutual_info(rho, dims));
  }
  return make_result("subadditivity", worst, kTolNum);
}

PropertyResult prop_ptrace_product(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 4);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int da = rng.uniform_int(2, 4);
    const int db = rng.uniform_int(2, 4);
    const DensityMatrix a{rng.random_density(da)};
    const DensityMatrix b{rng.random_density(db)};
    const DensityMatrix red = partial_trace(tensor(a, b), SubsystemDims{da, db}, {0});
    worst = std::max(worst,
                     (red.entries() - a.entries()).cwiseAbs().maxCoeff());
  }
  return make_result("ptrace_product", worst, kTolNum);
}

PropertyResult prop_binconv_assoc(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 5);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double a = rng.uniform01();
    const double b = rng.uniform01();
    const double c = rng.uniform01();
    worst = std::max(worst,
                     std::abs(binary_convolution(a, binary_convolution(b, c)) -
                              binary_convolution(binary_convolution(a, b), c)));
  }
  return make_result("binconv_assoc", worst, kTolNum);
}

PropertyResult prop_trace_preservation(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 6);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const DensityMatrix rho{rng.random_density(2)};
    const DensityMatrix out = apply(ch, rho);
    worst = std::max(worst, std::abs(out.entries().trace().real() - 1.0));
  }
  return make_result("trace_preservation", worst, kTolNum);
}

PropertyResult prop_choi_consistency(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 7);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const ChoiMatrix c = choi(ch);
    const DensityMatrix rho{rng.random_density(2)};
    const Matrix direct = apply(ch, rho).entries();
    const Matrix via = apply_via_choi(c, rho).entries();
    worst = std::max(worst, (direct - via).cwiseAbs().maxCoeff());
  }
  return make_result("choi_consistency", worst, kTolNum);
}

PropertyResult prop_mp_breaking(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 8);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    // Random qubit POVM from a Haar basis pair, random preparations.
    const Matrix u = rng.haar_unitary(2);
    const Matrix w = rng.haar_unitary(2);
    const double mix = rng.uniform01();
    std::vector<Matrix> povm;
    povm.push_back(mix * u.col(0) * u.col(0).adjoint() +
                   (1.0 - mix) * w.col(0) * w.col(0).adjoint());
    povm.push_back(mix * u.col(1) * u.col(1).adjoint() +
                   (1.0 - mix) * w.col(1) * w.col(1).adjoint());
    std::vector<DensityMatrix> prep;
    prep.emplace_back(rng.random_density(2));
    prep.emplace_back(rng.random_density(2));
    const KrausChannel ch =
        measure_prepare_to_kraus(MeasurePrepareChannel(povm, prep));
    const double min_eig = choi_ppt_min_eigenvalue(ch);
    worst = std::max(worst, -min_eig);
  }
  return make_result("mp_breaking", worst, kTolNum);
}

PropertyResult prop_chain_rule(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 9);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const EncodingEnsemble ens = random_qubit_ensemble(rng);
    const RateTriple tr = rate_triple(ch, ens);
    worst = std::max(worst, std::abs(tr.IXG2B - tr.IXB - tr.IG2B_given_X));
  }
  return make_result("chain_rule", worst, kTolNum);
}

PropertyResult prop_nonnegativity(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 10);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const EncodingEnsemble ens = random_qubit_ensemble(rng);
    const RateTriple tr = rate_triple(ch, ens);
    worst = std::max({worst, -tr.IXB, -tr.IG2B_given_X, -tr.IXG2B});
  }
  return make_result("nonnegativity", worst, kTolNum);
}

PropertyResult prop_lemma1_convexity(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 11);
  RandomEnsembleOptions opt;
  opt.balanced = true;
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const EncodingEnsemble e1 = random_qubit_ensemble(rng, opt);
    const EncodingEnsemble e2 = random_qubit_ensemble(rng, opt);
    const RatePoint p1 = rectangle_corner(ch, e1);
    const RatePoint p2 = rectangle_corner(ch, e2);
    for (int k = 0; k <= 10; ++k) {
      const double lam = k / 10.0;
      const RatePoint mix = rectangle_corner(ch, time_share(e1, e2, lam));
      worst = std::max(worst,
                       std::abs(mix.R - ((1 - lam) * p1.R + lam * p2.R)));
      worst = std::max(worst,
                       std::abs(mix.Rp - ((1 - lam) * p1.Rp + lam * p2.Rp)));
    }
  }
  return make_result("lemma1_convexity", worst, kTolNum);
}

PropertyResult prop_time_share_domination(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 12);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const EncodingEnsemble e1 = random_qubit_ensemble(rng);
    const EncodingEnsemble e2 = random_qubit_ensemble(rng);
    const RatePoint p1 = rectangle_corner(ch, e1);
    const RatePoint p2 = rectangle_corner(ch, e2);
    for (int k = 0; k <= 10; ++k) {
      const double lam = k / 10.0;
      const RatePoint mix = rectangle_corner(ch, time_share(e1, e2, lam));
      worst = std::max(worst, ((1 - lam) * p1.R + lam * p2.R) - mix.R);
      worst = std::max(worst,
                       std::abs(mix.Rp - ((1 - lam) * p1.Rp + lam * p2.Rp)));
    }
  }
  return make_result("time_share_domination", worst, kTolNum);
}

PropertyResult prop_lemma2_equivalence(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 13);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const EncodingEnsemble ens = random_qubit_ensemble(rng);
    const auto [p0, p1] = trapezoid_corners(ch, ens);
    const RatePoint re = rectangle_corner(ch, relabel_for_trapezoid(ens));
    worst = std::max(worst, std::abs(re.R - p1.R));
    worst = std::max(worst, std::abs(re.Rp - p1.Rp));
    (void)p0;
  }
  return make_result("lemma2_equivalence", worst, kTolNum);
}

PropertyResult prop_corollary1(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 14);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const EncodingEnsemble ens = random_qubit_ensemble(rng);
    const EncodingEnsemble rel = relabel_for_trapezoid(ens);
    const auto [p0, p1] = trapezoid_corners(ch, ens);
    for (int k = 0; k <= 10; ++k) {
      const double lam = k / 10.0;
      const RatePoint target{(1 - lam) * p0.R + lam * p1.R,
                             (1 - lam) * p0.Rp + lam * p1.Rp};
      const RatePoint got = rectangle_corner(ch, time_share(ens, rel, lam));
      worst = std::max(worst, target.R - got.R);
      worst = std::max(worst, target.Rp - got.Rp);
    }
  }
  return make_result("corollary1_domination", worst, kTolNum);
}

PropertyResult prop_data_processing(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 15);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const KrausChannel ch = random_qubit_channel(rng);
    const EncodingEnsemble ens = random_qubit_ensemble(rng);
    const double after = rate_triple(ch, ens).IXB;
    const double before = rate_triple(identity_channel(2), ens).IXB;
    worst = std::max(worst, after - before);
  }
  return make_result("data_processing", worst, kTolNum);
}

PropertyResult prop_formula_vs_numerics(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 16);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double eps = rng.uniform(2.0 / 3.0, 1.0);
    const double alpha = rng.uniform(0.0, 0.5);
    const RatePoint cf = closed_form_point(DepolParams(eps, alpha));
    const RateTriple tr = rate_triple(depolarizing(eps), depol_ensemble(alpha));
    worst = std::max(worst, std::abs(cf.R - tr.IXB));
    worst = std::max(worst, std::abs(cf.Rp - tr.IG2B_given_X));
  }
  return make_result("formula_vs_numerics", worst, kTolNum);
}

PropertyResult prop_spectrum_validity(std::uint64_t seed, int trials) {
  (void)seed;
  (void)trials;
  double worst = 0.0;
  for (double eps : linspace(0.0, 1.0, 100))
    for (double alpha : linspace(0.0, 0.5, 100)) {
      const JointSpectrum s = joint_output_spectrum(DepolParams(eps, alpha));
      double sum = 0.0;
      for (double p : s.p) {
        worst = std::max(worst, -p);
        worst = std::max(worst, p - 1.0);
        sum += p;
      }
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  return make_result("spectrum_validity", worst, kTolTrace);
}

PropertyResult prop_spectrum_degenerations(std::uint64_t seed, int trials) {
  (void)seed;
  const int n = std::max(trials, 20);
  double worst = 0.0;
  for (double eps : linspace(0.0, 1.0, n)) {
    const JointSpectrum s0 = joint_output_spectrum(DepolParams(eps, 0.0));
    std::vector<double> want0 = {0.0, eps / 2.0, 0.0, 1.0 - eps / 2.0};
    std::vector<double> got0 = s0.as_vector();
    std::sort(want0.begin(), want0.end());
    std::sort(got0.begin(), got0.end());
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(got0[i] - want0[i]));

    const JointSpectrum s1 = joint_output_spectrum(DepolParams(eps, 0.5));
    std::vector<double> want1 = {eps / 4.0, eps / 4.0, eps / 4.0,
                                 1.0 - 0.75 * eps};
    std::vector<double> got1 = s1.as_vector();
    std::sort(want1.begin(), want1.end());
    std::sort(got1.begin(), got1.end());
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(got1[i] - want1[i]));

    // Cross-check against a direct eigendecomposition of the joint output.
    for (double alpha : {0.0, 0.5}) {
      CVector amp = CVector::Zero(4);
      amp(0) = std::sqrt(1.0 - alpha);
      amp(3) = std::sqrt(alpha);
      const DensityMatrix joint = apply_on_factor(
          depolarizing(eps), DensityMatrix(PureState(amp)), SubsystemDims{2, 2}, 1);
      RealVector ev = eigvals_hermitian(joint.entries());
      std::vector<double> got(ev.data(), ev.data() + 4);
      std::vector<double> want =
          joint_output_spectrum(DepolParams(eps, alpha)).as_vector();
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(got[i] - want[i]));
    }
  }
  return make_result("spectrum_degenerations", worst, 1e-10);
}

PropertyResult prop_input_entropy_constraint(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 17);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double alpha = rng.uniform(0.0, 0.5);
    const double eps = rng.uniform01();
    const CQState cq = output_cq_state(depolarizing(eps), depol_ensemble(alpha));
    for (const DensityMatrix& block : cq.blocks) {
      const DensityMatrix g2 = partial_trace(block, cq.block_dims, {0});
      const RealVector ev = eigvals_hermitian(g2.entries());
      worst = std::max(worst, std::abs(ev(0) - std::max(1.0 - alpha, alpha)));
      worst = std::max(worst, std::abs(ev(1) - std::min(1.0 - alpha, alpha)));
    }
  }
  return make_result("input_entropy_constraint", worst, kTolNum);
}

PropertyResult prop_endpoint_monotone(std::uint64_t seed, int trials) {
  (void)seed;
  const int n = std::max(trials, 50);
  double worst = 0.0;
  double prev_c = 2.0, prev_cea = 3.0;
  for (double eps : linspace(0.0, 1.0, n)) {
    const double c = unassisted_capacity(eps);
    const double cea = ea_capacity(eps);
    worst = std::max(worst, c - prev_c);
    worst = std::max(worst, cea - prev_cea);
    worst = std::max(worst, c - cea);
    prev_c = c;
    prev_cea = cea;
  }
  return make_result("endpoint_monotone", worst, kTolNum);
}

PropertyResult prop_r_monotone_alpha(std::uint64_t seed, int trials) {
  Rng rng = Rng::child(seed, 18);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double eps = rng.uniform01();
    double prev = 2.0;
    for (double alpha : linspace(0.0, 0.5, 64)) {
      const double r = closed_form_point(DepolParams(eps, alpha)).R;
      worst = std::max(worst, r - prev);
      prev = r;
    }
  }
  return make_result("r_monotone_alpha", worst, kTolNum);
}

PropertyResult prop_eb_boundary(std::uint64_t seed, int trials) {
  (void)seed;
  (void)trials;
  const auto grid = linspace(0.0, 1.0, 200);
  const double step = 1.0 / 199.0;
  int mismatches = 0;
  for (double eps : grid) {
    const bool breaking =
        is_entanglement_breaking_qubit(depolarizing(eps)) == EbStatus::Breaking;
    const bool expected = eps >= 2.0 / 3.0;
    if (breaking != expected && std::abs(eps - 2.0 / 3.0) > step) ++mismatches;
  }
  return make_result("eb_boundary", static_cast<double>(mismatches), 0.0,
                     "mismatches outside one grid step of 2/3");
}

const std::vector<std::pair<std::string, Runner>> kLemmaProps = {
    {"mirror_lemma", prop_mirror_lemma},
    {"entropy_range", prop_entropy_range},
    {"subadditivity", prop_subadditivity},
    {"ptrace_product", prop_ptrace_product},
    {"binconv_assoc", prop_binconv_assoc},
    {"trace_preservation", prop_trace_preservation},
    {"choi_consistency", prop_choi_consistency},
    {"mp_breaking", prop_mp_breaking},
    {"chain_rule", prop_chain_rule},
    {"nonnegativity", prop_nonnegativity},
    {"lemma1_convexity", prop_lemma1_convexity},
    {"time_share_domination", prop_time_share_domination},
    {"lemma2_equivalence", prop_lemma2_equivalence},
    {"corollary1_domination", prop_corollary1},
    {"data_processing", prop_data_processing},
};

const std::vector<std::pair<std::string, Runner>> kDepolProps = {
    {"formula_vs_numerics", prop_formula_vs_numerics},
    {"spectrum_validity", prop_spectrum_validity},
    {"spectrum_degenerations", prop_spectrum_degenerations},
    {"input_entropy_constraint", prop_input_entropy_constraint},
    {"endpoint_monotone", prop_endpoint_monotone},
    {"r_monotone_alpha", prop_r_monotone_alpha},
    {"eb_boundary", prop_eb_boundary},
};

}  // namespace

std::vector<std::string> verify_suites() { return {"lemmas", "depol", "all"}; }

std::vector<PropertyResult> run_suite(const std::string& suite,
                                      std::uint64_t seed, int trials) {
  if (trials < 1) throw InvalidInput("run_suite: trials must be >= 1");
  std::vector<std::pair<std::string, Runner>> props;
  if (suite == "lemmas" || suite == "all")
    props.insert(props.end(), kLemmaProps.begin(), kLemmaProps.end());
  if (suite == "depol" || suite == "all")
    props.insert(props.end(), kDepolProps.begin(), kDepolProps.end());
  if (props.empty()) throw InvalidInput("run_suite: unknown suite " + suite);
  std::vector<PropertyResult> out;
  out.reserve(props.size());
  for (const auto& [name, fn] : props) out.push_back(fn(seed, trials));
  return out;
}

}  // namespace ebcap
