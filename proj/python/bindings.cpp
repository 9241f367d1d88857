#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ebcap/depol.hpp"
#include "ebcap/io.hpp"
#include "ebcap/region.hpp"
#include "ebcap/verify.hpp"
#include "ebcap/version.hpp"

namespace py = pybind11;
using namespace ebcap;

namespace {

std::vector<std::size_t> to_sizes(const std::vector<int>& v) {
  std::vector<std::size_t> out;
  for (int x : v) {
    if (x < 0) throw OutOfRange("factor indices must be non-negative");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "capacity regions of entanglement-breaking channels under "
            "unreliable entanglement assistance";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "EbcapError");

  // qnum
  m.def("h2", &h2, py::arg("x"));
  m.def("binary_convolution", &binary_convolution, py::arg("a"), py::arg("b"));
  m.def("shannon_entropy",
        [](const std::vector<double>& p) { return shannon_entropy(ProbVec{p}); },
        py::arg("probs"));
  m.def("entropy_vn",
        [](const Matrix& rho) { return entropy_vn(DensityMatrix(rho)); },
        py::arg("rho"));
  m.def("eigvals_hermitian",
        [](const Matrix& h) {
          const RealVector v = eigvals_hermitian(h);
          return std::vector<double>(v.data(), v.data() + v.size());
        },
        py::arg("matrix"));
  m.def("tensor",
        [](const Matrix& a, const Matrix& b) { return tensor(a, b); },
        py::arg("a"), py::arg("b"));
  m.def("partial_trace",
        [](const Matrix& rho, const std::vector<int>& dims,
           const std::vector<int>& keep) {
          return partial_trace(DensityMatrix(rho), SubsystemDims{dims},
                               to_sizes(keep))
              .entries();
        },
        py::arg("rho"), py::arg("dims"), py::arg("keep"));
  m.def("mutual_info",
        [](const Matrix& rho, const std::vector<int>& dims) {
          return mutual_info(DensityMatrix(rho), SubsystemDims{dims});
        },
        py::arg("rho"), py::arg("dims"));
  m.def("maximally_entangled",
        [](int d) { return CVector(maximally_entangled(d).amplitudes()); },
        py::arg("d"));

  // channels
  py::class_<KrausChannel>(m, "KrausChannel")
      .def(py::init<int, int, std::vector<Matrix>>(), py::arg("dim_in"),
           py::arg("dim_out"), py::arg("kraus_ops"))
      .def_property_readonly("dim_in", &KrausChannel::dim_in)
      .def_property_readonly("dim_out", &KrausChannel::dim_out)
      .def_property_readonly("kraus_ops", &KrausChannel::kraus_ops);
  m.def("apply",
        [](const KrausChannel& ch, const Matrix& rho) {
          return apply(ch, DensityMatrix(rho)).entries();
        },
        py::arg("channel"), py::arg("rho"));
  m.def("choi",
        [](const KrausChannel& ch) { return choi(ch).state.entries(); },
        py::arg("channel"));
  m.def("choi_ppt_min_eigenvalue", &choi_ppt_min_eigenvalue, py::arg("channel"));
  m.def("is_entanglement_breaking_qubit",
        [](const KrausChannel& ch) {
          return is_entanglement_breaking_qubit(ch) == EbStatus::Breaking
                     ? "Breaking"
                     : "NotBreaking";
        },
        py::arg("channel"));
  m.def("depolarizing", &depolarizing, py::arg("eps"));
  m.def("identity_channel", &identity_channel, py::arg("d"));

  // region
  py::class_<EncodingEnsemble>(m, "EncodingEnsemble")
      .def(py::init([](const std::vector<double>& px,
                       const std::vector<double>& schmidt,
                       const std::vector<KrausChannel>& encoders) {
             return EncodingEnsemble(ProbVec{px}, schmidt, encoders);
           }),
           py::arg("px"), py::arg("schmidt"), py::arg("encoders"))
      .def_property_readonly(
          "px", [](const EncodingEnsemble& e) { return e.px().probs(); })
      .def_property_readonly(
          "schmidt", [](const EncodingEnsemble& e) { return e.schmidt(); })
      .def_property_readonly(
          "encoders", [](const EncodingEnsemble& e) { return e.encoders(); });
  m.def("rate_triple",
        [](const KrausChannel& ch, const EncodingEnsemble& ens) {
          const RateTriple t = rate_triple(ch, ens);
          return py::make_tuple(t.IXB, t.IG2B_given_X, t.IXG2B);
        },
        py::arg("channel"), py::arg("ensemble"));
  m.def("rectangle_corner",
        [](const KrausChannel& ch, const EncodingEnsemble& ens) {
          const RatePoint p = rectangle_corner(ch, ens);
          return py::make_tuple(p.R, p.Rp);
        },
        py::arg("channel"), py::arg("ensemble"));
  m.def("trapezoid_corners",
        [](const KrausChannel& ch, const EncodingEnsemble& ens) {
          const auto [p0, p1] = trapezoid_corners(ch, ens);
          return py::make_tuple(py::make_tuple(p0.R, p0.Rp),
                                py::make_tuple(p1.R, p1.Rp));
        },
        py::arg("channel"), py::arg("ensemble"));
  m.def("relabel_for_trapezoid", &relabel_for_trapezoid, py::arg("ensemble"));
  m.def("time_share", &time_share, py::arg("ens1"), py::arg("ens2"),
        py::arg("lam"));
  m.def("convex_hull_upper",
        [](const std::vector<std::pair<double, double>>& pts) {
          std::vector<RatePoint> points;
          for (const auto& [r, rp] : pts) points.push_back(RatePoint{r, rp});
          std::vector<std::pair<double, double>> out;
          for (const RatePoint& p : convex_hull_upper(points))
            out.emplace_back(p.R, p.Rp);
          return out;
        },
        py::arg("points"));

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init<>())
      .def_readwrite("alphabet", &SweepConfig::alphabet)
      .def_readwrite("d0", &SweepConfig::d0)
      .def_readwrite("grid_schmidt", &SweepConfig::grid_schmidt)
      .def_readwrite("grid_encoder", &SweepConfig::grid_encoder)
      .def_readwrite("restarts", &SweepConfig::restarts)
      .def_readwrite("seed", &SweepConfig::seed)
      .def_readwrite("iteration_cap", &SweepConfig::iteration_cap)
      .def_readwrite("min_points", &SweepConfig::min_points);
  m.def("frontier_sweep",
        [](const KrausChannel& ch, const SweepConfig& cfg) {
          const SweepResult res = frontier_sweep(ch, cfg);
          std::vector<std::pair<double, double>> pts, hull;
          for (const RatePoint& p : res.frontier.points)
            pts.emplace_back(p.R, p.Rp);
          for (const RatePoint& p : res.frontier.hull)
            hull.emplace_back(p.R, p.Rp);
          py::dict out;
          out["points"] = pts;
          out["hull"] = hull;
          out["evals"] = res.evals;
          return out;
        },
        py::arg("channel"), py::arg("config"));

  // depol
  m.def("joint_output_spectrum",
        [](double eps, double alpha) {
          return joint_output_spectrum(DepolParams(eps, alpha)).as_vector();
        },
        py::arg("eps"), py::arg("alpha"));
  m.def("closed_form_point",
        [](double eps, double alpha) {
          const RatePoint p = closed_form_point(DepolParams(eps, alpha));
          return py::make_tuple(p.R, p.Rp);
        },
        py::arg("eps"), py::arg("alpha"));
  m.def("unassisted_capacity", &unassisted_capacity, py::arg("eps"));
  m.def("ea_capacity", &ea_capacity, py::arg("eps"));
  m.def("depol_ensemble", &depol_ensemble, py::arg("alpha"));
  m.def("gap_report",
        [](double eps, int grid) {
          const GapReport g = gap_report(eps, linspace(0.0, 0.5, grid));
          py::dict out;
          out["max_vertical_gap"] = g.max_vertical_gap;
          out["argmax_alpha"] = g.argmax_alpha;
          out["dominated"] = g.dominated;
          return out;
        },
        py::arg("eps"), py::arg("grid") = 512);

  // io
  m.def("load_channel", &load_channel, py::arg("path"));
  m.def("save_channel", &save_channel, py::arg("path"), py::arg("channel"));

  // verify
  m.def("run_suite",
        [](const std::string& suite, std::uint64_t seed, int trials) {
          py::list out;
          for (const PropertyResult& r : run_suite(suite, seed, trials)) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["worst_deviation"] = r.worst_deviation;
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 1, py::arg("trials") = 25);
}
