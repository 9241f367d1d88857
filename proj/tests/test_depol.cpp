#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "ebcap/depol.hpp"
#include "ebcap/region.hpp"
#include "ebcap/rng.hpp"

using namespace ebcap;

namespace {

constexpr double kC07 = 0.06593194462450902;
constexpr double kCea07 = 0.16969880807858306;

}  // namespace

TEST_SUITE("depol") {

TEST_CASE("DepolParams validation") {
  CHECK_THROWS_AS(DepolParams(-0.1, 0.2), OutOfRange);
  CHECK_THROWS_AS(DepolParams(1.1, 0.2), OutOfRange);
  CHECK_THROWS_AS(DepolParams(0.7, -0.01), OutOfRange);
  CHECK_THROWS_AS(DepolParams(0.7, 0.51), OutOfRange);
  CHECK(DepolParams(2.0 / 3.0, 0.1).eb());
  CHECK(!DepolParams(0.6, 0.1).eb());
}

TEST_CASE("joint_output_spectrum frozen values") {
  const auto s = joint_output_spectrum(DepolParams(0.7, 0.3));
  CHECK(s.p[0] == doctest::Approx(0.105).epsilon(1e-12));
  CHECK(s.p[1] == doctest::Approx(0.245).epsilon(1e-12));
  CHECK(s.p[2] == doctest::Approx(0.135791120715755).epsilon(1e-11));
  CHECK(s.p[3] == doctest::Approx(0.514208879284245).epsilon(1e-11));
  double sum = 0;
  for (double v : s.p) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("joint_output_spectrum degenerations") {
  for (double eps : {2.0 / 3.0, 0.75, 0.9, 1.0}) {
    const auto s0 = joint_output_spectrum(DepolParams(eps, 0.0));
    CHECK(std::abs(s0.p[0]) < 1e-12);
    CHECK(s0.p[1] == doctest::Approx(eps / 2.0).epsilon(1e-12));
    CHECK(std::abs(s0.p[2]) < 1e-12);
    CHECK(s0.p[3] == doctest::Approx(1.0 - eps / 2.0).epsilon(1e-12));

    const auto sh = joint_output_spectrum(DepolParams(eps, 0.5));
    CHECK(sh.p[0] == doctest::Approx(eps / 4.0).epsilon(1e-12));
    CHECK(sh.p[1] == doctest::Approx(eps / 4.0).epsilon(1e-12));
    CHECK(sh.p[2] == doctest::Approx(eps / 4.0).epsilon(1e-11));
    CHECK(sh.p[3] == doctest::Approx(1.0 - 0.75 * eps).epsilon(1e-11));
  }
  // Fully depolarizing: product of diag(1-a, a) with the maximally mixed
  // qubit, independent of the encoder.
  const auto s1 = joint_output_spectrum(DepolParams(1.0, 0.3));
  std::vector<double> got = s1.as_vector();
  std::sort(got.begin(), got.end());
  CHECK(got[0] == doctest::Approx(0.15).epsilon(1e-11));
  CHECK(got[1] == doctest::Approx(0.15).epsilon(1e-11));
  CHECK(got[2] == doctest::Approx(0.35).epsilon(1e-11));
  CHECK(got[3] == doctest::Approx(0.35).epsilon(1e-11));
}

TEST_CASE("closed_form_point frozen values") {
  const RatePoint p0 = closed_form_point(DepolParams(0.7, 0.0));
  CHECK(p0.R == doctest::Approx(kC07).epsilon(1e-12));
  CHECK(std::abs(p0.Rp) < 1e-12);

  const RatePoint ph = closed_form_point(DepolParams(0.7, 0.5));
  CHECK(std::abs(ph.R) < 1e-12);
  CHECK(ph.Rp == doctest::Approx(kCea07).epsilon(1e-12));

  const RatePoint pq = closed_form_point(DepolParams(0.7, 0.25));
  CHECK(pq.R == doctest::Approx(0.01629173737681433).epsilon(1e-11));
  CHECK(pq.Rp == doctest::Approx(0.1350116252077398).epsilon(1e-11));
}

TEST_CASE("capacities") {
  CHECK(unassisted_capacity(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ea_capacity(0.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(unassisted_capacity(1.0)) < 1e-12);
  CHECK(std::abs(ea_capacity(1.0)) < 1e-12);
  CHECK(unassisted_capacity(0.7) == doctest::Approx(kC07).epsilon(1e-12));
  CHECK(ea_capacity(0.7) == doctest::Approx(kCea07).epsilon(1e-12));
  CHECK(ea_capacity(0.7) > unassisted_capacity(0.7));
}

TEST_CASE("time_division_frontier") {
  const auto fr = time_division_frontier(0.7, linspace(0.0, 1.0, 33));
  REQUIRE(fr.points.size() == 33);
  CHECK(fr.points.front().R == doctest::Approx(kC07).epsilon(1e-12));
  CHECK(std::abs(fr.points.front().Rp) < 1e-12);
  CHECK(std::abs(fr.points.back().R) < 1e-12);
  CHECK(fr.points.back().Rp == doctest::Approx(kCea07).epsilon(1e-12));
  // Straight line collapses to its two endpoints.
  REQUIRE(fr.hull.size() == 2);
  CHECK(std::abs(fr.hull[0].R) < 1e-12);
  CHECK(fr.hull[1].R == doctest::Approx(kC07).epsilon(1e-12));

  const RatePoint mid = fr.points[16];
  CHECK(mid.R == doctest::Approx(kC07 / 2.0).epsilon(1e-12));
  CHECK(mid.Rp == doctest::Approx(kCea07 / 2.0).epsilon(1e-12));

  CHECK_THROWS_AS(time_division_frontier(0.7, {}), EmptyInput);
  CHECK_THROWS_AS(time_division_frontier(0.7, {1.2}), OutOfRange);
}

TEST_CASE("td_rp_at") {
  CHECK(td_rp_at(0.7, 0.0) == doctest::Approx(kCea07).epsilon(1e-12));
  CHECK(std::abs(td_rp_at(0.7, kC07)) < 1e-12);
  CHECK(td_rp_at(0.7, kC07 / 2) == doctest::Approx(kCea07 / 2).epsilon(1e-12));
  CHECK(std::abs(td_rp_at(0.7, kC07 + 0.01)) < 1e-12);
  CHECK(std::abs(td_rp_at(1.0, 0.0)) < 1e-12);
}

TEST_CASE("spc_frontier endpoints") {
  const auto fr = spc_frontier(0.7, linspace(0.0, 0.5, 65));
  REQUIRE(fr.points.size() == 65);
  CHECK(fr.points.front().R == doctest::Approx(kC07).epsilon(1e-12));
  CHECK(std::abs(fr.points.front().Rp) < 1e-12);
  CHECK(std::abs(fr.points.back().R) < 1e-12);
  CHECK(fr.points.back().Rp == doctest::Approx(kCea07).epsilon(1e-12));
  CHECK(fr.hull.size() >= 2);
  for (const RatePoint& p : fr.points)
    CHECK(hull_interpolate(fr.hull, p.R) >= p.Rp - 1e-9);
}

TEST_CASE("gap_report") {
  const GapReport g = gap_report(0.7, linspace(0.0, 0.5, 257));
  CHECK(g.max_vertical_gap > kTolGap);
  CHECK(!g.dominated);
  CHECK(g.argmax_alpha > 0.0);
  CHECK(g.argmax_alpha < 0.5);
  CHECK(g.max_vertical_gap == doctest::Approx(0.0133).epsilon(0.05));

  const GapReport g1 = gap_report(1.0, linspace(0.0, 0.5, 65));
  CHECK(g1.max_vertical_gap <= kTolGap);
  CHECK(g1.dominated);

  const GapReport gb = gap_report(2.0 / 3.0, linspace(0.0, 0.5, 257));
  CHECK(gb.max_vertical_gap > 1e-3);
  CHECK(!gb.dominated);
}

TEST_CASE("depol_ensemble matches the closed form") {
  Rng rng(83);
  for (int t = 0; t < 12; ++t) {
    const double eps = 2.0 / 3.0 + rng.uniform01() / 3.0;
    const double alpha = 0.5 * rng.uniform01();
    const RatePoint want = closed_form_point(DepolParams(eps, alpha));
    const RatePoint got =
        rectangle_corner(depolarizing(eps), depol_ensemble(alpha));
    CHECK(got.R == doctest::Approx(want.R).epsilon(1e-9));
    CHECK(got.Rp == doctest::Approx(want.Rp).epsilon(1e-9));
  }
  CHECK_THROWS_AS(depol_ensemble(0.6), OutOfRange);
}

TEST_CASE("linspace") {
  const auto v = linspace(0.0, 1.0, 5);
  REQUIRE(v.size() == 5);
  CHECK(v[0] == doctest::Approx(0.0));
  CHECK(v[2] == doctest::Approx(0.5));
  CHECK(v[4] == 1.0);
  const auto w = linspace(0.3, 0.3, 1);
  REQUIRE(w.size() == 1);
  CHECK(w[0] == doctest::Approx(0.3));
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), OutOfRange);
}

}  // TEST_SUITE
