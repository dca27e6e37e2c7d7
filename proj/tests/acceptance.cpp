// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. Tolerances are pinned next to each check.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dzeros/blaschke.hpp"
#include "dzeros/capacity.hpp"
#include "dzeros/circle_sets.hpp"
#include "dzeros/dirichlet.hpp"
#include "dzeros/util.hpp"
#include "dzeros/zerosets.hpp"

using namespace dzeros;
using cd = std::complex<double>;

namespace {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

// 1. norm identity D(Bf) = D(f) + boundary term on randomized products,
//    plus D(B) = #zeros for plain products
Check c1_product_norm_identity() {
  const double kRelTol = 1e-6;       // per-case relative error
  const double kPlainTol = 1e-8;     // |D(B) - #zeros|
  const double kTimeLimit = 60.0;    // seconds for the whole criterion
  double t_start = now_seconds();

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> n_zeros(1, 8);
  std::uniform_int_distribution<int> degree(0, 16);

  double max_rel = 0.0;
  for (int i = 0; i < 200; ++i) {
    int k = n_zeros(rng);
    std::vector<Zero> zeros;
    for (int j = 0; j < k; ++j) zeros.push_back(make_zero(angle(rng), 1.0 - radius(rng)));
    int d = degree(rng);
    std::vector<cd> cs;
    for (int j = 0; j <= d; ++j) cs.emplace_back(coeff(rng), coeff(rng));
    auto rep = carleson_check(zeros, PowerSeries(std::move(cs)));
    max_rel = std::max(max_rel, rep.rel_error);
  }

  double max_plain = 0.0;
  for (int k = 1; k <= 8; ++k) {
    std::vector<Zero> zeros;
    for (int j = 0; j < k; ++j) zeros.push_back(make_zero(angle(rng), 1.0 - radius(rng)));
    double d = dirichlet_norm(product_series(zeros));
    max_plain = std::max(max_plain, std::abs(d - double(k)));
  }

  double elapsed = now_seconds() - t_start;
  bool pass = max_rel <= kRelTol && max_plain <= kPlainTol && elapsed <= kTimeLimit;
  return {"product-norm-identity", pass,
          fmt("200 products max rel %.2e (tol 1e-6); plain-product norm err %.2e (tol 1e-8); "
              "%.1fs (limit 60s)",
              max_rel, max_plain, elapsed)};
}

// 2. kernel and fourier energy forms agree; uniform measure has zero energy;
//    energies stay nonnegative
Check c2_energy_forms() {
  const double kAgreeTol = 1e-4;
  const double kUniformTol = 1e-10;

  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> n_cells(3, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // cell widths stay above 0.09 so 4096 fourier terms resolve every cell
  // and the dropped-tail bracket sits well inside the 1e-4 budget
  double max_diff = 0.0, min_energy = 1e300;
  for (int i = 0; i < 50; ++i) {
    int m = n_cells(rng);
    double sector = kTwoPi / m;
    std::vector<MeasureCell> cells;
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      double start = j * sector + unit(rng) * 0.25 * sector;
      double width = (0.3 + 0.5 * unit(rng)) * 0.5 * sector;
      double w = 0.1 + 0.9 * unit(rng);
      cells.push_back({Arc(start, start + width), w});
      total += w;
    }
    for (auto& c : cells) c.weight /= total;
    auto mu = DiscreteMeasure::from_cells(std::move(cells));
    double ek = energy_kernel(mu);
    double ef = energy_fourier(mu, 4096).value();
    max_diff = std::max(max_diff, std::abs(ek - ef));
    min_energy = std::min({min_energy, ek, ef});
  }

  // uniform measure: every fourier coefficient vanishes, so the computed
  // series (not the bracket cushion) is the right zero witness
  auto uni = DiscreteMeasure::uniform_on(CircleSet::full_circle(), 8);
  double eu =
      std::max(std::abs(energy_kernel(uni)), std::abs(energy_fourier(uni, 4096).partial));

  bool pass = max_diff <= kAgreeTol && eu <= kUniformTol && min_energy >= -1e-8;
  return {"energy-form-agreement", pass,
          fmt("50 measures max |kernel-fourier| %.2e (tol 1e-4); uniform energy %.2e "
              "(tol 1e-10); min energy %.2e (>= -1e-8)",
              max_diff, eu, min_energy)};
}

// 3. equilibrium solver hits the closed-form semicircle energy and the
//    neighborhood capacities respect the reciprocal-integral bound
Check c3_equilibrium() {
  const double kArcRelTol = 0.02;
  const double kKkt = 1e-6;

  double target = std::log(1.0 / std::sin(kPi / 4.0));
  EquilibriumOptions opt;
  opt.n_cells = 200;
  auto semi = equilibrium_measure(CircleSet::from_arcs({Arc(0.0, kPi)}), opt);
  double arc_rel = std::abs(semi.energy - target) / target;
  bool arc_ok = arc_rel <= kArcRelTol && semi.kkt_residual <= kKkt;

  // concentrated sets at small t: the regime the bound addresses
  struct Pair {
    CircleSet set;
    std::vector<double> ts;
  };
  std::vector<Pair> pairs;
  pairs.push_back({CircleSet::points({0.0, 0.3, 0.6}), {0.05, 0.01, 0.001}});
  pairs.push_back({CircleSet::point(1.0), {0.05, 0.001}});
  pairs.push_back({CircleSet::points({0.0, 0.2}), {0.01}});

  EquilibriumOptions nopt;
  nopt.n_cells = 96;
  int tested = 0, held = 0;
  double max_kkt = 0.0;
  for (const auto& p : pairs) {
    for (double t : p.ts) {
      auto res = equilibrium_measure(p.set.neighborhood(t), nopt);
      double cap = 1.0 / res.energy;
      double ub = capacity_upper_bound(p.set, t);
      ++tested;
      if (cap <= ub) ++held;
      max_kkt = std::max(max_kkt, res.kkt_residual);
    }
  }

  bool pass = arc_ok && held == tested && max_kkt <= kKkt;
  return {"equilibrium-solver", pass,
          fmt("semicircle energy rel err %.4f (tol 0.02), kkt %.1e; capacity bound held on "
              "%d/%d (E,t) pairs, max kkt %.1e (tol 1e-6)",
              arc_rel, semi.kkt_residual, held, tested, max_kkt)};
}

// 4. coefficient Dirichlet norm matches disk quadrature; monomials exact
Check c4_norm_oracle() {
  const double kRelTol = 1e-6;
  const double kMonoTol = 1e-12;

  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> degree(1, 32);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  double max_rel = 0.0;
  for (int i = 0; i < 20; ++i) {
    int d = degree(rng);
    std::vector<cd> cs;
    for (int j = 0; j <= d; ++j) cs.emplace_back(coeff(rng), coeff(rng));
    PowerSeries f(std::move(cs));
    double dn = dirichlet_norm(f);
    double da = dirichlet_area(f);
    max_rel = std::max(max_rel, std::abs(dn - da) / std::max(1.0, dn));
  }

  double max_mono = 0.0;
  for (int k = 0; k <= 32; ++k) {
    double dn = dirichlet_norm(PowerSeries::monomial(k));
    max_mono = std::max(max_mono, std::abs(dn - double(k)));
  }

  bool pass = max_rel <= kRelTol && max_mono <= kMonoTol;
  return {"norm-oracle", pass,
          fmt("20 polynomials deg<=32 max rel gap %.2e (tol 1e-6); monomial norm err %.2e "
              "(tol 1e-12)",
              max_rel, max_mono)};
}

// 5. outer function: cos theta log-modulus reproduces e^z; distance-power
//    modulus on a level-8 nested set is reconstructed away from the set
Check c5_outer_reconstruction() {
  const double kCoeffTol = 1e-10;
  const double kModulusRelTol = 0.05;
  const double kMeanTol = 1e-10;

  auto smooth = sample_log_modulus([](double t) { return std::exp(std::cos(t)); }, 256);
  auto ez = outer_function(smooth.log_values, 32);
  double max_coeff = 0.0, fact = 1.0;
  for (int n = 0; n < 32; ++n) {
    if (n > 0) fact *= n;
    max_coeff = std::max(max_coeff, std::abs(ez.coeffs()[n] - cd(1.0 / fact)));
  }

  auto spec = CantorSpec::perfect_symmetric(1.0 / 3.0, 8);
  auto E = cantor_level(spec, 8);
  const double alpha = 0.5;
  const int M = 4096;
  auto mod = [&](double t) { return std::pow(E.distance_angle(t), alpha); };
  auto samples = sample_log_modulus(mod, M);
  auto f = outer_function(samples.log_values, 2048);

  double r = 1.0 - 1e-3;
  double max_mod_rel = 0.0;
  int checked = 0;
  for (int j = 0; j < M; ++j) {
    double th = kTwoPi * j / M;
    double d = E.distance_angle(th);
    if (d < 0.1) continue;
    double want = std::pow(d, alpha);
    double got = std::abs(f.evaluate(std::polar(r, th)));
    max_mod_rel = std::max(max_mod_rel, std::abs(got - want) / want);
    ++checked;
  }

  double mean_log = 0.0;
  for (double lv : samples.log_values) mean_log += lv;
  mean_log /= M;
  double a0_err = std::abs(f.coeffs()[0] - cd(std::exp(mean_log)));

  bool pass = max_coeff <= kCoeffTol && max_mod_rel <= kModulusRelTol && a0_err <= kMeanTol &&
              checked > 0;
  return {"outer-reconstruction", pass,
          fmt("e^z coeff err %.2e (tol 1e-10); modulus rel err %.4f at %d far points "
              "(tol 0.05); a0 vs geometric mean %.2e (tol 1e-10)",
              max_coeff, max_mod_rel, checked, a0_err)};
}

// 6. regularity ratio: t^{3/2} bounded, t grows with slope 1/2 in log(1/delta)
Check c6_regularity_borderline() {
  const double kSlope = 0.5;
  const double kSlopeRelTol = 0.10;

  std::vector<double> grid;
  for (int j = 1; j <= 40; ++j) grid.push_back(std::pow(2.0, -j));

  auto good = omega_regularity(ModulusOmega::power(1.5), grid);
  auto bad = omega_regularity(ModulusOmega::power(1.0), grid);
  double slope_rel = std::abs(bad.growth_slope - kSlope) / kSlope;

  bool pass = good.pass && !bad.pass && slope_rel <= kSlopeRelTol;
  return {"gauge-regularity-borderline", pass,
          fmt("t^1.5 pass=%d sup ratio %.3f; t fails with slope %.4f vs 0.5 "
              "(rel err %.3f, tol 0.10)",
              int(good.pass), good.sup_ratio, bad.growth_slope, slope_rel)};
}

// 7. double-indexed cluster family at 2^20 terms: Blaschke and
//    exp-inverse-distance sums converge, the argument-power sum diverges
Check c7_cluster_triple() {
  auto rep = cluster_report(0.5, 0.55, std::uint64_t(1) << 20);
  bool pass = rep.blaschke.verdict == Verdict::converges &&
              rep.exp_inv.verdict == Verdict::converges &&
              rep.argument.verdict == Verdict::diverges;
  return {"cluster-verdict-triple", pass,
          fmt("blaschke %s, exp-inverse %s, argument-power %s (want converges/converges/"
              "diverges at 2^20 terms)",
              to_string(rep.blaschke.verdict), to_string(rep.exp_inv.verdict),
              to_string(rep.argument.verdict))};
}

// 8. center-zero construction over the ratio-1/3 nested set: level criteria,
//    comparison series, per-zero sums, and the kernel floor at sampled points
Check c8_center_suite() {
  auto spec = CantorSpec::perfect_symmetric(1.0 / 3.0, 400);
  auto rep = cantor_center_report(spec, 24, std::uint64_t(1) << 20, 20);

  bool ratio_ok = rep.ratio_sup < 0.5;
  bool depth_ok = rep.depth_log_sum.verdict == Verdict::converges;
  bool invlog_ok = rep.inv_log_sum.verdict == Verdict::diverges;
  bool blaschke_ok = rep.blaschke.verdict == Verdict::converges &&
                     rep.comparison.verdict == Verdict::converges;
  bool shapiro_ok = rep.shapiro.verdict == Verdict::diverges;
  bool gauge_ok = rep.square_gauge.verdict == Verdict::converges;
  bool frostman_ok = rep.frostman_exceeds && rep.frostman_at.size() == 20;

  bool pass = ratio_ok && depth_ok && invlog_ok && blaschke_ok && shapiro_ok && gauge_ok &&
              frostman_ok;
  return {"center-construction-suite", pass,
          fmt("ratio sup %.4f<1/2:%d; depth-log %s; inv-log %s; blaschke+comparison %d; "
              "shapiro %s; square gauge %s; kernel floor exceeded at %zu/20 samples:%d",
              rep.ratio_sup, int(ratio_ok), to_string(rep.depth_log_sum.verdict),
              to_string(rep.inv_log_sum.verdict), int(blaschke_ok),
              to_string(rep.shapiro.verdict), to_string(rep.square_gauge.verdict),
              rep.frostman_at.size(), int(frostman_ok))};
}

// 9. layer-cake identity for the boundary log integral
Check c9_distribution_identity() {
  const double kStepTol = 1e-6;
  const double kSmoothTol = 1e-4;
  const int M = 1 << 14;

  std::vector<double> step(M);
  for (int j = 0; j < M; ++j) step[j] = (kTwoPi * j / M) < kPi ? 3.0 : 1.0;
  auto rs = log_integral_identity_check(step);

  std::vector<double> smooth(M);
  for (int j = 0; j < M; ++j) smooth[j] = std::exp(1.0 + std::cos(kTwoPi * j / M));
  auto rm = log_integral_identity_check(smooth);

  bool pass = rs.abs_diff <= kStepTol && rm.abs_diff <= kSmoothTol;
  return {"distribution-identity", pass,
          fmt("step gap %.2e (tol 1e-6); smooth gap %.2e (tol 1e-4) at M=2^14", rs.abs_diff,
              rm.abs_diff)};
}

// 10. saturating composition: D(f) <= (4/e^2) D(phi) for |Im phi| < pi/4
Check c10_composition_bound() {
  const double kFactor = 4.0 / std::exp(2.0);
  const double kSlack = 1e-8;

  std::mt19937_64 rng(50);
  std::uniform_int_distribution<int> degree(1, 12);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.3, 0.9);

  int ok = 0;
  double worst = -1e300;
  for (int i = 0; i < 50; ++i) {
    int d = degree(rng);
    std::vector<cd> cs;
    double l1 = 0.0;
    for (int j = 0; j <= d; ++j) {
      cs.emplace_back(coeff(rng), coeff(rng));
      l1 += std::abs(cs.back());
    }
    double s = scale(rng) * (kPi / 4.0) / l1;
    for (auto& c : cs) c *= s;
    auto rep = saturating_composition(PowerSeries(std::move(cs)));
    double slack = rep.area_f - kFactor * rep.area_phi;
    worst = std::max(worst, slack);
    if (slack <= kSlack && rep.max_abs_im_phi < kPi / 4.0) ++ok;
  }

  bool pass = ok == 50;
  return {"composition-bound", pass,
          fmt("50 compositions, %d/50 obey D(f) <= (4/e^2) D(phi); worst slack %.2e "
              "(tol 1e-8)",
              ok, worst)};
}

// 11. slow-gauge pipeline: the double-log-square gauge sits below the
//     log-square gauge to the crossover, and the square-root-log radii keep
//     the weighted radial sum finite while the inverse-log sum diverges
Check c11_slow_gauge_pipeline() {
  auto slow = ModulusOmega::exp_loglog_square();
  auto ref = ModulusOmega::log_square();
  double t_star = std::exp(-std::exp(2.0));
  double max_ratio = 0.0;
  for (int j = 0; j <= 200; ++j) {
    double u = double(j) / 200.0;
    double t = std::exp(std::log(1e-12) * (1.0 - u) + std::log(t_star) * u);
    max_ratio = std::max(max_ratio, slow(t) / ref(t));
  }
  bool gauge_ok = max_ratio <= 1.0 + 1e-12;

  auto rep = iterated_log_report(1.0, 12, std::uint64_t(1) << 20);
  bool radial_ok = rep.radial.verdict == Verdict::converges;
  bool shapiro_ok = rep.shapiro.verdict == Verdict::diverges;

  bool pass = gauge_ok && radial_ok && shapiro_ok;
  return {"slow-gauge-pipeline", pass,
          fmt("gauge ratio max %.6f <= 1 on [1e-12, e^{-e^2}]:%d; radial sum %s (certified: "
              "%s), inverse-log %s at 2^20",
              max_ratio, int(gauge_ok), to_string(rep.radial.verdict),
              rep.radial.certificate.empty() ? "no" : "yes", to_string(rep.shapiro.verdict))};
}

}  // namespace

int main() {
  std::vector<Check> results;
  results.push_back(c1_product_norm_identity());
  results.push_back(c2_energy_forms());
  results.push_back(c3_equilibrium());
  results.push_back(c4_norm_oracle());
  results.push_back(c5_outer_reconstruction());
  results.push_back(c6_regularity_borderline());
  results.push_back(c7_cluster_triple());
  results.push_back(c8_center_suite());
  results.push_back(c9_distribution_identity());
  results.push_back(c10_composition_bound());
  results.push_back(c11_slow_gauge_pipeline());

  int fails = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Check& c = results[i];
    if (!c.pass) ++fails;
    std::printf("[%s] %02zu %s: %s\n", c.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                c.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", results.size(), fails);
  return fails;
}
