#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <memory>
#include <vector>

#include "dzeros/blaschke.hpp"
#include "dzeros/circle_sets.hpp"
#include "dzeros/util.hpp"
#include "dzeros/zerosets.hpp"

using namespace dzeros;

namespace {

// zeros on the ray through angle zero with explicit 1 - r values
ZeroSequence ray_zeros(std::vector<double> omr) {
  auto data = std::make_shared<std::vector<double>>(std::move(omr));
  return ZeroSequence(
      [data](std::uint64_t n) { return make_zero(0.0, (*data)[std::size_t(n - 1)]); },
      data->size(), "ray");
}

}  // namespace

TEST_CASE("decay profiles invert") {
  DecayProfile p = DecayProfile::power(3.0);
  CHECK(p(2.0) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(p(0.5) == 1.0);  // clamped to the left edge of the domain
  CHECK(p.inverse(0.125) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.inverse(5.0) == 1.0);
  CHECK_THROWS_AS(p.inverse(0.0), std::domain_error);
  CHECK_THROWS_AS(DecayProfile::power(2.0), std::domain_error);

  DecayProfile e = DecayProfile::exponential(2.0);
  CHECK(e(3.0) == doctest::Approx(std::exp(-6.0)).epsilon(1e-15));
  CHECK(e.inverse(std::exp(-6.0)) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(e.inverse(1.5) == 0.0);
  CHECK_THROWS_AS(DecayProfile::exponential(0.0), std::domain_error);
}

TEST_CASE("gauge families evaluate and clip") {
  ModulusOmega p2 = ModulusOmega::power(2.0);
  CHECK(p2(0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(p2(3.0) == 4.0);  // arguments clip at 2
  CHECK(p2(0.0) == 0.0);
  CHECK_THROWS_AS(p2(-0.1), std::domain_error);
  CHECK(p2.log_at_log(10.0) == doctest::Approx(-20.0).epsilon(1e-15));
  CHECK(p2.log_at_log(-5.0) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(p2.at_log(std::log(2.0)) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(ModulusOmega::power(0.0), std::domain_error);

  ModulusOmega ei = ModulusOmega::exp_inv(0.5);
  CHECK(ei(1.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(ei(0.0) == 0.0);
  CHECK(ei.log_at_log(100.0) == doctest::Approx(-2.0 * std::exp(50.0)).epsilon(1e-13));
  CHECK_THROWS_AS(ModulusOmega::exp_inv(1.0), std::domain_error);

  ModulusOmega ls = ModulusOmega::log_square();
  CHECK(ls(std::exp(-2.0)) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ls(0.9) == 1.0);
  CHECK(ls(0.0) == 0.0);
  CHECK(ls.log_at_log(4.0) == doctest::Approx(-2.0 * std::log(4.0)).epsilon(1e-15));
  CHECK(ls.log_at_log(0.5) == 0.0);

  ModulusOmega ll = ModulusOmega::exp_loglog_square();
  CHECK(ll(std::exp(-1.0)) == 1.0);
  CHECK(ll(std::exp(-std::exp(1.0))) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(ll(0.0) == 0.0);

  // the two slow gauges cross at log(1/t) = e^2
  double tc = std::exp(-std::exp(2.0));
  CHECK(ll(tc) == doctest::Approx(ls(tc)).epsilon(1e-12));
  for (double t : {1e-5, 1e-8, 1e-12}) CHECK(ll(t) < ls(t));
  CHECK(ll(1e-2) > ls(1e-2));
}

TEST_CASE("tabulated and capacity-derived gauges") {
  ModulusOmega tab = ModulusOmega::tabulated({{0.0, 0.0}, {1.0, 0.5}, {2.0, 1.0}});
  CHECK(tab(0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(tab(1.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(tab(3.0) == 1.0);
  CHECK_THROWS_AS(ModulusOmega::tabulated({{0.1, 0.0}, {1.0, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(ModulusOmega::tabulated({{0.0, 0.0}, {1.0, 0.5}, {2.0, 0.4}}),
                  std::invalid_argument);

  // cap(t) = t/4 with psi = e^{-x} gives omega(t) = exp(-4/t) on the samples
  DecayProfile psi = DecayProfile::exponential(1.0);
  std::vector<std::pair<double, double>> curve;
  for (double t = 0.0625; t <= 2.0; t *= 2.0) curve.push_back({t, t / 4.0});
  CHECK(gauge_from_capacity(psi, curve, 0.5) == doctest::Approx(std::exp(-8.0)).epsilon(1e-12));
  ModulusOmega oc = ModulusOmega::from_capacity(psi, curve);
  CHECK(oc(0.5) == doctest::Approx(std::exp(-8.0)).epsilon(1e-12));
  CHECK(oc(0.0) == 0.0);
  // below the sampled range the gauge closes linearly
  double w0 = oc(0.0625);
  CHECK(oc(0.03125) == doctest::Approx(0.5 * w0).epsilon(1e-12));
  CHECK(oc.log_at_log(40.0) ==
        doctest::Approx(std::log(w0) - (40.0 - std::log(1.0 / 0.0625))).epsilon(1e-12));

  CHECK_THROWS_AS(gauge_from_capacity(psi, {{0.5, 0.2}, {0.25, 0.3}}, 0.3),
                  std::invalid_argument);
  CHECK_THROWS_AS(gauge_from_capacity(psi, {{0.25, 0.3}, {0.5, 0.2}}, 0.3),
                  std::invalid_argument);
  CHECK_THROWS_AS(gauge_from_capacity(psi, {}, 0.3), std::invalid_argument);
}

TEST_CASE("tail integrals match closed forms") {
  CHECK(omega_tail_integral(ModulusOmega::power(2.0), 0.5) ==
        doctest::Approx(1.5).epsilon(1e-12));
  CHECK(omega_tail_integral(ModulusOmega::power(2.0), 1e-8) ==
        doctest::Approx(2.0 - 1e-8).epsilon(1e-12));
  CHECK(omega_tail_integral(ModulusOmega::power(1.0), 1e-6) ==
        doctest::Approx(std::log(2e6)).epsilon(1e-12));
  CHECK(omega_tail_integral(ModulusOmega::power(0.5), 1e-4) ==
        doctest::Approx(2.0 * (100.0 - std::sqrt(0.5))).epsilon(1e-11));
  CHECK(omega_tail_integral(ModulusOmega::power(2.0), 0.25, 1.0) ==
        doctest::Approx(0.75).epsilon(1e-12));

  CHECK(omega_tail_integral(ModulusOmega::log_square(), std::exp(-10.0)) ==
        doctest::Approx(292.62384260176826).epsilon(1e-10));
  CHECK(omega_tail_integral(ModulusOmega::exp_inv(0.5), 0.01) ==
        doctest::Approx(0.29346783711335596).epsilon(1e-10));

  CHECK(omega_tail_integral(ModulusOmega::power(2.0), 2.0) == 0.0);
  CHECK_THROWS_AS(omega_tail_integral(ModulusOmega::power(2.0), 0.0), std::domain_error);
  CHECK_THROWS_AS(omega_tail_integral(ModulusOmega::power(2.0), 0.5, 3.0), std::domain_error);
}

TEST_CASE("regularity report separates growing ratios") {
  std::vector<double> grid;
  for (int j = 1; j <= 40; ++j) grid.push_back(std::pow(2.0, -j));

  // omega(t) = t has ratio log(2/delta)/2, growing forever
  RegularityReport lin = omega_regularity(ModulusOmega::power(1.0), grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(lin.ratio[i] == doctest::Approx(0.5 * std::log(2.0 / grid[i])).epsilon(1e-10));
  CHECK(lin.growth_slope == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(lin.pass);

  RegularityReport mid = omega_regularity(ModulusOmega::power(1.5), grid);
  CHECK(mid.pass);
  CHECK(mid.sup_ratio == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-3));

  RegularityReport sq = omega_regularity(ModulusOmega::power(2.0), grid);
  CHECK(sq.pass);
  CHECK(sq.ratio.back() == doctest::Approx(2.0).epsilon(1e-6));

  CHECK(omega_regularity(ModulusOmega::log_square(), grid).pass);

  CHECK_THROWS_AS(omega_regularity(ModulusOmega::power(1.0), {}), std::domain_error);
  CHECK_THROWS_AS(omega_regularity(ModulusOmega::power(1.0), {0.5, 0.5}), std::domain_error);
  CHECK_THROWS_AS(omega_regularity(ModulusOmega::power(1.0), {0.5, -0.1}), std::domain_error);
}

TEST_CASE("shapiro-shields partial sums") {
  ZeroSequence fast(
      [](std::uint64_t n) { return make_zero_log(0.3, std::exp2(double(n))); }, 256, "fast");
  PartialSumSeries s = shapiro_shields_sum(fast, 256);
  CHECK(s.verdict == Verdict::converges);
  CHECK(s.total() == doctest::Approx(1.0).epsilon(1e-9));

  ZeroSequence slow(
      [](std::uint64_t n) { return make_zero_log(0.3, std::log(double(n) + 1.0)); }, 1 << 16,
      "slow");
  CHECK(shapiro_shields_sum(slow, 1 << 16).verdict == Verdict::diverges);

  ZeroSequence origin([](std::uint64_t) { return make_zero(0.0, 1.0); }, 4, "origin");
  CHECK_THROWS_AS(shapiro_shields_sum(origin, 4), std::domain_error);
}

TEST_CASE("radial tail sums and extreme radii") {
  // omega = t^2 gives the closed form term (1-r)(2 - 2(1-r))
  std::vector<double> omr;
  double expected = 0.0;
  for (int n = 1; n <= 40; ++n) {
    omr.push_back(std::pow(2.0, -n));
    expected += omr.back() * (2.0 - 2.0 * omr.back());
  }
  PartialSumSeries s = omega_radial_sum(ray_zeros(omr), ModulusOmega::power(2.0), 64);
  CHECK(s.total() == doctest::Approx(expected).epsilon(5e-3));

  // log(1/(1-r)) = 5000 underflows 1-r yet keeps a finite slow-gauge term;
  // scaled comparisons keep the tolerance relative for tiny magnitudes
  ZeroSequence deep([](std::uint64_t) { return make_zero_log(0.0, 5000.0); }, 1, "deep");
  PartialSumSeries d = omega_radial_sum(deep, ModulusOmega::log_square(), 1);
  CHECK(d.total() * 1e8 == doctest::Approx(2.0013554465283154).epsilon(1e-6));

  ZeroSequence mid([](std::uint64_t) { return make_zero_log(0.0, 800.0); }, 1, "mid");
  PartialSumSeries m = omega_radial_sum(mid, ModulusOmega::log_square(), 1);
  CHECK(m.total() * 1e7 == doctest::Approx(7.8457116183460695).epsilon(1e-6));

  // a fast gauge genuinely underflows out there
  CHECK(omega_radial_sum(deep, ModulusOmega::power(2.0), 1).total() == 0.0);
}

TEST_CASE("distance sums against a point target") {
  CircleSet one = CircleSet::points({0.0});
  std::vector<double> omr;
  for (int n = 1; n <= 64; ++n) omr.push_back(std::pow(2.0, -n));
  ZeroSequence seq = ray_zeros(omr);

  // on the ray d(z, E) = 1 - r exactly, so omega = t^2 sums 4 (1-r)^2
  PartialSumSeries plain = omega_distance_sum(seq, one, ModulusOmega::power(2.0), 64);
  CHECK(plain.verdict == Verdict::converges);
  CHECK(plain.total() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

  PartialSumSeries withtail =
      omega_distance_integral_sum(seq, one, ModulusOmega::power(2.0), 64);
  CHECK(withtail.total() == doctest::Approx(8.0 / 3.0).epsilon(5e-3));
  CHECK(withtail.total() > plain.total());
}

TEST_CASE("argument power sums") {
  ZeroSequence seq(
      [](std::uint64_t n) { return make_zero(1.0 / double(n), 0.5); }, 4096, "angles");
  CircleSet one = CircleSet::points({0.0});
  PartialSumSeries s = argument_power_sum(seq, one, 2.0, 4096);
  CHECK(s.total() == doctest::Approx(0.92477101535060472).epsilon(1e-12));
  CHECK(s.verdict == Verdict::converges);
  CHECK_THROWS_AS(argument_power_sum(seq, one, 0.0, 16), std::domain_error);
}

TEST_CASE("exponential inverse-distance sums") {
  CircleSet one = CircleSet::points({0.0});
  ZeroSequence seq = ray_zeros({0.5, 0.25});
  PartialSumSeries s = exp_inverse_distance_sum(seq, one, 0.5, 2);
  double expected = std::exp(-2.0 / std::sqrt(0.5)) + std::exp(-2.0 / std::sqrt(0.25));
  CHECK(s.total() == doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(exp_inverse_distance_sum(seq, one, 0.0, 2), std::domain_error);
  CHECK_THROWS_AS(exp_inverse_distance_sum(seq, one, 1.0, 2), std::domain_error);
}

TEST_CASE("neighborhood integral sums against direct quadrature") {
  CircleSet one = CircleSet::points({0.0});
  PartialSumSeries s = neighborhood_integral_sum(ray_zeros({0.3, 0.1}), one, 0.3, 2);
  CHECK(s.total() == doctest::Approx(0.43289571228963655 + 0.35745215484628975).epsilon(2e-3));

  // a zero far from the set sees an empty inner integral and contributes 1
  ZeroSequence far([](std::uint64_t) { return make_zero(3.14159, 0.5); }, 1, "far");
  CHECK(neighborhood_integral_sum(far, one, 0.3, 1).total() == 1.0);

  CHECK_THROWS_AS(neighborhood_integral_sum(far, one, 0.5, 1), std::domain_error);
  CHECK_THROWS_AS(neighborhood_integral_sum(far, one, 0.0, 1), std::domain_error);
}

TEST_CASE("gap closed forms for the distance integral") {
  double pi = 3.14159265358979323846;
  CircleSet two = CircleSet::points({0.0, pi});
  DistanceIntegralReport rep = inverse_distance_integral(two, 0.5);
  CHECK(rep.series == doctest::Approx(2.0 * std::sqrt(pi)).epsilon(1e-12));
  CHECK(rep.integral == doctest::Approx(8.0 * std::sqrt(pi / 2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(inverse_distance_integral(two, 0.0), std::domain_error);
  CHECK_THROWS_AS(inverse_distance_integral(two, 1.0), std::domain_error);
  CHECK_THROWS_AS(inverse_distance_integral(CircleSet(), 0.5), std::domain_error);
  CantorSpec tri = CantorSpec::perfect_symmetric(1.0 / 3.0, 3);
  CHECK_THROWS_AS(inverse_distance_integral(cantor_level(tri, 3), 0.5), std::domain_error);
}

TEST_CASE("inverse-measure power check on thin and fat sets") {
  std::vector<double> grid;
  for (int k = 0; k <= 12; ++k) grid.push_back(std::pow(10.0, -k));

  InverseMeasureCheck thin = inverse_measure_power_check(CircleSet::points({0.0}), 0.2, grid);
  CHECK(thin.pass);
  CHECK(thin.precondition_ok);
  for (std::size_t i = 1; i < thin.value.size(); ++i) CHECK(thin.value[i] >= thin.value[i - 1]);

  CantorSpec tri = CantorSpec::perfect_symmetric(1.0 / 3.0, 3);
  InverseMeasureCheck fat = inverse_measure_power_check(cantor_level(tri, 3), 0.2, grid);
  CHECK_FALSE(fat.precondition_ok);

  CHECK_THROWS_AS(inverse_measure_power_check(CircleSet::points({0.0}), 0.0, grid),
                  std::domain_error);
  CHECK_THROWS_AS(inverse_measure_power_check(CircleSet::points({0.0}), 0.2, {0.5, 0.1}),
                  std::domain_error);
  CHECK_THROWS_AS(inverse_measure_power_check(CircleSet::points({0.0}), 0.2, {1.5, 0.5, 0.1}),
                  std::domain_error);
}

TEST_CASE("argument assignment rides endpoint rays") {
  CantorSpec tri = CantorSpec::perfect_symmetric(1.0 / 3.0, 4);
  CircleSet set = cantor_level(tri, 2);
  std::vector<double> rays = set.endpoint_angles();
  REQUIRE(rays.size() == 7);  // the construction keeps both circle extremes, 0 == 2 pi

  ZeroSequence seq = assign_arguments([](std::uint64_t) { return 2.3; }, set, 20, "probe");
  CHECK(seq.size() == 20);
  CHECK(seq.label() == "probe");
  CHECK(seq.at(1).theta == doctest::Approx(rays[0]).epsilon(1e-15));
  CHECK(seq.at(8).theta == doctest::Approx(rays[0]).epsilon(1e-15));
  CHECK(seq.at(4).theta == doctest::Approx(rays[3]).epsilon(1e-15));
  for (std::uint64_t n = 1; n <= 20; ++n) {
    Zero z = seq.at(n);
    CHECK(set.distance(z.point()) == doctest::Approx(z.one_minus_r).epsilon(1e-13));
  }

  CHECK_THROWS_AS(assign_arguments([](std::uint64_t) { return 1.0; }, CircleSet(), 4),
                  std::domain_error);
}

TEST_CASE("hausdorff gap between angle sets") {
  double pi = 3.14159265358979323846;
  CHECK(hausdorff_gap({0.0}, {0.5 * pi}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(hausdorff_gap({0.0, pi}, {0.1, pi}) ==
        doctest::Approx(2.0 * std::sin(0.05)).epsilon(1e-12));
  // nearest neighbour wraps through angle zero
  double wrap = 2.0 * pi - 6.2 + 0.05;
  CHECK(hausdorff_gap({6.2}, {0.05}) == doctest::Approx(2.0 * std::sin(0.5 * wrap)).epsilon(1e-12));
  CHECK(hausdorff_gap({1.0}, {1.0, 2.0}) == doctest::Approx(chord_of_angle(1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(hausdorff_gap({}, {1.0}), std::domain_error);
}

TEST_CASE("cluster family enumeration") {
  ClusterFamily fam = cluster_points(0.5, 4096);
  CHECK(fam.seq.size() == 4096);

  // anti-diagonal order: (2,2), (2,3), (3,2), (2,4), ...
  CHECK(fam.seq.at(1).abs_log_one_minus_r == doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(fam.seq.at(1).one_minus_r == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  CHECK(fam.seq.at(2).one_minus_r == doctest::Approx(1.0 / 108.0).epsilon(1e-13));
  CHECK(fam.seq.at(3).one_minus_r == doctest::Approx(1.0 / 108.0).epsilon(1e-13));
  CHECK(fam.seq.at(4).abs_log_one_minus_r == doctest::Approx(10.0 * std::log(2.0)).epsilon(1e-14));

  // the target set holds the accumulation angles eps_n = n^{-3} and zero
  CHECK(fam.set.distance(std::polar(1.0, 0.0)) == 0.0);
  CHECK(fam.set.distance(std::polar(1.0, 1.0)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(fam.set.distance(std::polar(1.0, 0.125)) == doctest::Approx(0.0).epsilon(1e-15));

  PartialSumSeries b = blaschke_sum(fam.seq, 4096);
  CHECK(b.verdict == Verdict::converges);
  CHECK(b.total() == doctest::Approx(0.084847532084790033).epsilon(1e-12));

  CHECK_THROWS_AS(cluster_points(0.0, 16), std::domain_error);
  CHECK_THROWS_AS(cluster_points(1.0, 16), std::domain_error);
}

TEST_CASE("cluster verdicts at moderate depth") {
  ClusterReport rep = cluster_report(0.5, 0.55, std::uint64_t(1) << 14);
  CHECK(rep.blaschke.verdict == Verdict::converges);
  CHECK(rep.exp_inv.verdict == Verdict::converges);
  CHECK(rep.argument.verdict == Verdict::diverges);
}

TEST_CASE("cantor center zeros sit at interval centers") {
  CantorSpec tri = CantorSpec::perfect_symmetric(1.0 / 3.0, 8);
  std::vector<int> skipped;
  ZeroSequence seq = cantor_center_sequence(tri, 4, &skipped);
  CHECK(skipped == std::vector<int>{1, 2});
  CHECK(seq.size() == 24);  // 2^3 + 2^4

  std::vector<Arc> lvl3 = cantor_level(tri, 3).arcs();
  std::vector<Arc> lvl4 = cantor_level(tri, 4).arcs();
  REQUIRE(lvl3.size() == 8);
  for (std::size_t j = 0; j < 8; ++j) {
    double center = lvl3[j].theta_start + 0.5 * tri.ell[3];
    CHECK(seq.at(j + 1).theta == doctest::Approx(center).epsilon(1e-13));
  }
  for (std::size_t j = 0; j < 16; ++j) {
    double center = lvl4[j].theta_start + 0.5 * tri.ell[4];
    CHECK(seq.at(8 + j + 1).theta == doctest::Approx(center).epsilon(1e-13));
  }

  // each level radius solves (1-r) log(1/(1-r)) = ell_k^2
  for (std::uint64_t n : {std::uint64_t(1), std::uint64_t(9)}) {
    Zero z = seq.at(n);
    double ell = tri.ell[n == 1 ? 3 : 4];
    CHECK(z.one_minus_r * z.abs_log_one_minus_r == doctest::Approx(ell * ell).epsilon(1e-11));
  }

  CHECK_THROWS_AS(cantor_center_sequence(tri, 0), std::domain_error);
  CHECK_THROWS_AS(cantor_center_sequence(tri, 9), std::domain_error);
}

TEST_CASE("center radius equation at a known value") {
  CantorSpec spec = CantorSpec::from_lengths({6.283185307179586, 0.1, 1e-3});
  std::vector<int> skipped;
  ZeroSequence seq = cantor_center_sequence(spec, 2, &skipped);
  CHECK(skipped.empty());
  // level 2: x log(1/x) = 1e-6
  CHECK(seq.at(3).one_minus_r == doctest::Approx(6.0144917127939751e-8).epsilon(1e-10));
}

TEST_CASE("cantor center report on the triadic family") {
  CantorSpec tri = CantorSpec::perfect_symmetric(1.0 / 3.0, 400);
  CantorCenterReport rep = cantor_center_report(tri, 16, std::uint64_t(1) << 18, 20);

  CHECK(rep.skipped_levels == std::vector<int>{1, 2});
  CHECK(rep.used_levels.front() == 3);
  CHECK(rep.used_levels.back() == 16);
  CHECK(rep.ratio_sup == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  CHECK(rep.depth_log_sum.verdict == Verdict::converges);
  CHECK(rep.depth_log_sum.total() == doctest::Approx(0.3593475109268739).epsilon(1e-9));
  CHECK(rep.inv_log_sum.verdict == Verdict::diverges);
  CHECK(rep.comparison.verdict == Verdict::converges);
  CHECK(rep.comparison.total() == doctest::Approx(11.279547886959267).epsilon(1e-9));

  CHECK(rep.blaschke.verdict == Verdict::converges);
  CHECK(rep.shapiro.verdict == Verdict::diverges);
  CHECK(rep.square_gauge.verdict == Verdict::converges);

  CHECK(rep.lambda_floor > 0.0);
  CHECK(rep.frostman_at.size() == 20);
  CHECK(rep.frostman_exceeds);
  for (double v : rep.frostman_at) CHECK(v > 10.0 * rep.lambda_floor);
}

TEST_CASE("iterated log report certifies the slow radial sums") {
  IteratedLogReport rep = iterated_log_report(1.0, 6, std::uint64_t(1) << 14);
  CHECK(rep.set.arcs().size() == 64);
  CHECK(rep.seq.size() == std::uint64_t(1) << 14);

  CHECK(rep.radial.verdict == Verdict::converges);
  CHECK_FALSE(rep.radial.certificate.empty());
  CHECK(rep.inv_log_sq.verdict == Verdict::converges);
  CHECK_FALSE(rep.inv_log_sq.certificate.empty());
  CHECK(rep.shapiro.verdict == Verdict::diverges);
  CHECK(rep.shapiro.certificate.empty());

  // radii follow log(1/(1-r_n)) = sqrt(n) log^2(n+2)
  double l5 = std::sqrt(5.0) * std::pow(std::log(7.0), 2);
  CHECK(rep.seq.at(5).abs_log_one_minus_r == doctest::Approx(l5).epsilon(1e-14));
}
