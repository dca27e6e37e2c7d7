#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dzeros/blaschke.hpp"
#include "dzeros/capacity.hpp"
#include "dzeros/circle_sets.hpp"
#include "dzeros/dirichlet.hpp"
#include "dzeros/json_io.hpp"
#include "dzeros/util.hpp"
#include "dzeros/zerosets.hpp"

namespace fs = std::filesystem;
using dzeros::io::ojson;

namespace {

dzeros::VerdictPolicy policy_from(const ojson& cfg) {
  dzeros::VerdictPolicy p;
  if (cfg.contains("policy")) {
    const ojson& j = cfg.at("policy");
    p.eps_conv = j.value("eps_conv", p.eps_conv);
    p.eps_div = j.value("eps_div", p.eps_div);
    p.slope_min = j.value("slope_min", p.slope_min);
  }
  return p;
}

void write_report(const fs::path& out, const std::string& name, const ojson& j) {
  dzeros::io::write_text(out / name, dzeros::io::dump(j));
}

// ---------------------------------------------------------------- cantor ---

int cmd_cantor(const ojson& cfg, const fs::path& out) {
  dzeros::CantorSpec spec = dzeros::io::cantor_spec_from_json(cfg.at("spec"));
  int n_max = cfg.value("n_max", spec.depth);
  if (n_max < 1 || n_max > spec.depth)
    throw std::invalid_argument("n_max must lie in [1, depth]");
  int level = cfg.value("level", std::min(spec.depth, 10));
  if (level < 0 || level > spec.depth || level > 26)
    throw std::invalid_argument("level must lie in [0, min(depth, 26)]");

  auto rep = dzeros::cantor_criteria(spec, n_max, policy_from(cfg));
  dzeros::CircleSet set = dzeros::cantor_level(spec, level);

  ojson set_doc;
  set_doc["level"] = level;
  set_doc["arc_count"] = set.arcs().size();
  set_doc["set"] = dzeros::io::to_json(set);
  write_report(out, "set.json", set_doc);

  ojson crit;
  crit["spec"] = dzeros::io::to_json(spec);
  crit["n_max"] = n_max;
  crit["measure_sum"] = dzeros::io::to_json(rep.measure_sum);
  crit["capacity_sum"] = dzeros::io::to_json(rep.capacity_sum);
  crit["carleson_sum"] = dzeros::io::to_json(rep.carleson_sum);
  crit["measure_gap"] = dzeros::io::num(rep.measure_gap);
  crit["measure_zero"] = rep.measure_zero;
  crit["capacity_zero"] = rep.capacity_zero;
  crit["carleson_set"] = rep.carleson_set;
  write_report(out, "criteria.json", crit);

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < rep.measure_sum.cutoffs.size(); ++i)
    rows.push_back({double(rep.measure_sum.cutoffs[i]), rep.measure_sum.sums[i],
                    rep.capacity_sum.sums[i], rep.carleson_sum.sums[i]});
  dzeros::io::write_csv(out / "sums.csv", {"n", "measure_sum", "capacity_sum", "carleson_sum"},
                        rows);
  return 0;
}

// -------------------------------------------------------------- capacity ---

int cmd_capacity(const ojson& cfg, const fs::path& out) {
  dzeros::CircleSet set = dzeros::io::set_from_json(cfg.at("set"));
  if (set.empty()) throw std::invalid_argument("set is empty");
  std::vector<double> t_grid;
  for (const auto& t : cfg.at("t_grid")) t_grid.push_back(t.get<double>());
  if (t_grid.empty()) throw std::invalid_argument("t_grid is empty");
  for (double t : t_grid)
    if (!(t > 0.0)) throw std::invalid_argument("t_grid values must be positive");

  dzeros::EquilibriumOptions opt;
  if (cfg.contains("solver")) {
    const ojson& s = cfg.at("solver");
    opt.n_cells = s.value("n_cells", opt.n_cells);
    opt.max_iter = s.value("max_iter", opt.max_iter);
    opt.tol = s.value("tol", opt.tol);
    opt.polish = s.value("polish", opt.polish);
  }
  double kkt_tol = cfg.value("kkt_tol", 1e-6);
  // the reciprocal-integral bound assumes the base set has measure zero
  bool bound_applicable = set.measure() <= 1e-9;

  std::vector<std::vector<double>> rows;
  ojson entries = ojson::array();
  bool all_converged = true;
  bool any_violation = false;
  for (double t : t_grid) {
    dzeros::CircleSet nb = set.neighborhood(t);
    double ub = dzeros::capacity_upper_bound(set, t);
    ojson e;
    e["t"] = dzeros::io::num(t);
    if (nb.is_full_circle()) {
      double cap = std::numeric_limits<double>::infinity();
      rows.push_back({t, cap, ub});
      e["capacity"] = dzeros::io::num(cap);
      e["upper_bound"] = dzeros::io::num(ub);
      e["full_circle"] = true;
      e["bound_violated"] = false;
      entries.push_back(std::move(e));
      continue;
    }
    auto res = dzeros::equilibrium_measure(nb, opt);
    double cap = res.energy > 0.0 ? 1.0 / res.energy : std::numeric_limits<double>::infinity();
    bool converged = res.kkt_residual <= kkt_tol;
    bool violated = bound_applicable && std::isfinite(cap) && cap > ub * (1.0 + 1e-6);
    all_converged = all_converged && converged;
    any_violation = any_violation || violated;
    rows.push_back({t, cap, ub});
    e["capacity"] = dzeros::io::num(cap);
    e["upper_bound"] = dzeros::io::num(ub);
    e["full_circle"] = false;
    e["energy"] = dzeros::io::num(res.energy);
    e["kkt_residual"] = dzeros::io::num(res.kkt_residual);
    e["iterations"] = res.iterations;
    e["polished"] = res.polished;
    e["solver_converged"] = converged;
    e["bound_violated"] = violated;
    entries.push_back(std::move(e));
  }
  dzeros::io::write_csv(out / "capacity.csv", {"t", "capacity", "upper_bound"}, rows);

  ojson diag;
  diag["set_measure"] = dzeros::io::num(set.measure());
  diag["arc_count"] = set.arcs().size();
  diag["kkt_tol"] = dzeros::io::num(kkt_tol);
  diag["bound_applicable"] = bound_applicable;
  diag["n_cells"] = opt.n_cells;
  diag["all_converged"] = all_converged;
  diag["any_bound_violation"] = any_violation;
  diag["entries"] = std::move(entries);
  write_report(out, "diagnostics.json", diag);

  if (!all_converged) {
    std::cerr << "dzeros capacity: equilibrium solver missed the KKT tolerance on some t;"
                 " best iterates written\n";
    return 3;
  }
  return 0;
}

// --------------------------------------------------------- carleson-check ---

dzeros::PowerSeries series_from_json(const ojson& j) {
  std::vector<std::complex<double>> coeffs;
  for (const auto& c : j) {
    if (c.is_number()) {
      coeffs.emplace_back(c.get<double>(), 0.0);
    } else if (c.is_array() && c.size() == 2) {
      coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    } else {
      throw std::invalid_argument("coefficients: expected numbers or [re, im] pairs");
    }
  }
  return dzeros::PowerSeries(std::move(coeffs));
}

int cmd_carleson(const ojson& cfg, const fs::path& out, std::uint64_t seed) {
  if (cfg.contains("suite")) {
    const ojson& s = cfg.at("suite");
    int count = s.value("count", 200);
    int max_zeros = s.value("max_zeros", 8);
    double max_radius = s.value("max_radius", 0.9);
    int max_degree = s.value("max_degree", 16);
    double tol = cfg.value("tolerance", 1e-6);
    if (count < 1 || max_zeros < 1 || max_degree < 0 || !(max_radius > 0.0 && max_radius < 1.0))
      throw std::invalid_argument("suite parameters out of range");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, dzeros::kTwoPi);
    std::uniform_real_distribution<double> radius(0.0, max_radius);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_int_distribution<int> n_zeros(1, max_zeros);
    std::uniform_int_distribution<int> degree(0, max_degree);

    double max_rel = 0.0, sum_rel = 0.0;
    ojson cases = ojson::array();
    for (int i = 0; i < count; ++i) {
      int k = n_zeros(rng);
      std::vector<dzeros::Zero> zeros;
      for (int j = 0; j < k; ++j) zeros.push_back(dzeros::make_zero(angle(rng), 1.0 - radius(rng)));
      int d = degree(rng);
      std::vector<std::complex<double>> coeffs;
      for (int j = 0; j <= d; ++j) coeffs.emplace_back(coeff(rng), coeff(rng));
      auto rep = dzeros::carleson_check(zeros, dzeros::PowerSeries(std::move(coeffs)));
      max_rel = std::max(max_rel, rep.rel_error);
      sum_rel += rep.rel_error;
      ojson c;
      c["zeros"] = k;
      c["degree"] = d;
      c["rel_error"] = dzeros::io::num(rep.rel_error);
      cases.push_back(std::move(c));
    }
    bool pass = max_rel <= tol;
    ojson doc;
    doc["mode"] = "suite";
    doc["count"] = count;
    doc["seed"] = seed;
    doc["tolerance"] = dzeros::io::num(tol);
    doc["max_rel_error"] = dzeros::io::num(max_rel);
    doc["mean_rel_error"] = dzeros::io::num(sum_rel / count);
    doc["pass"] = pass;
    doc["cases"] = std::move(cases);
    write_report(out, "report.json", doc);
    if (!pass) {
      std::cerr << "dzeros carleson-check: max relative error " << dzeros::fmt17(max_rel)
                << " exceeds tolerance\n";
      return 3;
    }
    return 0;
  }

  std::vector<dzeros::Zero> zeros = dzeros::io::zeros_from_json(cfg.at("zeros"));
  if (zeros.empty()) throw std::invalid_argument("zeros list is empty");
  dzeros::PowerSeries f = series_from_json(cfg.at("coefficients"));
  double tol = cfg.value("tolerance", 1e-6);
  int grid_size = cfg.value("grid_size", 0);

  double min_gap = 1.0;
  for (const auto& z : zeros) min_gap = std::min(min_gap, z.one_minus_r);
  if (!(min_gap > 0.0)) throw std::invalid_argument("a zero lies on the boundary circle");
  int required = int(std::ceil(64.0 / min_gap));
  if (grid_size != 0 && grid_size < required) {
    std::cerr << "dzeros carleson-check: boundary grid too coarse, need at least " << required
              << " samples\n";
    return 3;
  }

  auto rep = dzeros::carleson_check(zeros, f, grid_size);
  bool pass = rep.rel_error <= tol;
  ojson doc;
  doc["mode"] = "single";
  doc["zero_count"] = zeros.size();
  doc["degree"] = f.degree();
  doc["lhs"] = dzeros::io::num(rep.lhs);
  doc["rhs"] = dzeros::io::num(rep.base + rep.boundary);
  doc["base"] = dzeros::io::num(rep.base);
  doc["boundary"] = dzeros::io::num(rep.boundary);
  doc["rel_error"] = dzeros::io::num(rep.rel_error);
  doc["tolerance"] = dzeros::io::num(tol);
  doc["pass"] = pass;
  write_report(out, "report.json", doc);
  if (!pass) {
    std::cerr << "dzeros carleson-check: relative error " << dzeros::fmt17(rep.rel_error)
              << " exceeds tolerance\n";
    return 3;
  }
  return 0;
}

// ----------------------------------------------------------------- zeros ---

std::vector<double> tail_angles(const dzeros::ZeroSequence& seq, std::uint64_t n_used,
                                std::uint64_t window) {
  std::vector<double> angles;
  std::uint64_t lo = n_used > window ? n_used - window + 1 : 1;
  for (std::uint64_t n = lo; n <= n_used; ++n) angles.push_back(seq.at(n).theta);
  return angles;
}

void emit_sequence(const fs::path& out, const std::string& gen, const dzeros::ZeroSequence& seq,
                   std::uint64_t emit) {
  ojson doc;
  doc["generator"] = gen;
  doc["label"] = seq.label();
  doc["size"] = seq.size();
  emit = std::min<std::uint64_t>(emit, seq.size());
  doc["emitted"] = emit;
  doc["zeros"] = dzeros::io::to_json(seq.materialize(emit));
  write_report(out, "sequence.json", doc);
}

int cmd_zeros(const ojson& cfg, const fs::path& out) {
  std::string gen = cfg.at("generator").get<std::string>();
  ojson params = cfg.value("params", ojson::object());
  std::uint64_t emit = cfg.value("emit", std::uint64_t(256));
  std::uint64_t window = cfg.value("tail_window", std::uint64_t(256));
  auto policy = policy_from(cfg);

  ojson doc;
  doc["generator"] = gen;
  doc["params"] = params;
  ojson conditions;

  if (gen == "cluster") {
    double gamma = params.value("gamma", 0.5);
    double alpha = params.value("alpha", 0.55);
    std::uint64_t n_terms = params.value("n_terms", std::uint64_t(65536));
    auto rep = dzeros::cluster_report(gamma, alpha, n_terms);
    emit_sequence(out, gen, rep.family.seq, emit);
    conditions["blaschke_sum"] = dzeros::io::to_json(rep.blaschke);
    conditions["exp_inverse_distance_sum"] = dzeros::io::to_json(rep.exp_inv);
    conditions["argument_power_sum"] = dzeros::io::to_json(rep.argument);
    doc["size"] = rep.family.seq.size();
    doc["conditions"] = std::move(conditions);
    doc["accumulation_set"] = dzeros::io::to_json(rep.family.set);
    doc["tail_hausdorff_gap"] = dzeros::io::num(dzeros::hausdorff_gap(
        tail_angles(rep.family.seq, rep.family.seq.size(), window),
        rep.family.set.endpoint_angles()));
    write_report(out, "report.json", doc);
    return 0;
  }

  if (gen == "cantor-centers") {
    dzeros::CantorSpec spec = dzeros::io::cantor_spec_from_json(params.at("spec"));
    int levels = params.value("levels", std::min(spec.depth, 16));
    std::uint64_t n_max = params.value("n_max", std::uint64_t(262144));
    int n_samples = params.value("n_samples", 20);
    auto rep = dzeros::cantor_center_report(spec, levels, n_max, n_samples);
    auto seq = dzeros::cantor_center_sequence(spec, levels);
    emit_sequence(out, gen, seq, emit);
    conditions["level_depth_log_sum"] = dzeros::io::to_json(rep.depth_log_sum);
    conditions["level_inverse_log_sum"] = dzeros::io::to_json(rep.inv_log_sum);
    conditions["level_square_comparison_sum"] = dzeros::io::to_json(rep.comparison);
    conditions["blaschke_sum"] = dzeros::io::to_json(rep.blaschke);
    conditions["inverse_log_sum"] = dzeros::io::to_json(rep.shapiro);
    conditions["square_gauge_distance_sum"] = dzeros::io::to_json(rep.square_gauge);
    doc["size"] = seq.size();
    doc["conditions"] = std::move(conditions);
    doc["skipped_levels"] = rep.skipped_levels;
    doc["used_levels"] = rep.used_levels;
    ojson lr = ojson::array();
    for (double v : rep.level_radius) lr.push_back(dzeros::io::num(v));
    doc["level_radius"] = std::move(lr);
    doc["ratio_sup"] = dzeros::io::num(rep.ratio_sup);
    doc["lambda_floor"] = dzeros::io::num(rep.lambda_floor);
    ojson fr = ojson::array();
    for (double v : rep.frostman_at) fr.push_back(dzeros::io::num(v));
    doc["frostman_at"] = std::move(fr);
    doc["frostman_exceeds"] = rep.frostman_exceeds;
    dzeros::CircleSet E = dzeros::cantor_level(spec, std::min(levels, 18));
    doc["tail_hausdorff_gap"] = dzeros::io::num(dzeros::hausdorff_gap(
        tail_angles(seq, std::min<std::uint64_t>(n_max, seq.size()), window),
        E.endpoint_angles()));
    write_report(out, "report.json", doc);
    return 0;
  }

  if (gen == "iterated-log") {
    double s = params.value("s", 1.0);
    int depth = params.value("depth", 20);
    std::uint64_t n_terms = params.value("n_terms", std::uint64_t(262144));
    auto rep = dzeros::iterated_log_report(s, depth, n_terms);
    emit_sequence(out, gen, rep.seq, emit);
    conditions["radial_gauge_tail_sum"] = dzeros::io::to_json(rep.radial);
    conditions["inverse_log_square_sum"] = dzeros::io::to_json(rep.inv_log_sq);
    conditions["inverse_log_sum"] = dzeros::io::to_json(rep.shapiro);
    doc["size"] = rep.seq.size();
    doc["conditions"] = std::move(conditions);
    doc["set"] = dzeros::io::to_json(rep.set);
    doc["tail_hausdorff_gap"] = dzeros::io::num(dzeros::hausdorff_gap(
        tail_angles(rep.seq, std::min<std::uint64_t>(n_terms, rep.seq.size()), window),
        rep.set.endpoint_angles()));
    write_report(out, "report.json", doc);
    return 0;
  }

  if (gen == "assigned") {
    dzeros::CircleSet set = dzeros::io::set_from_json(params.at("set"));
    const ojson& law = params.at("law");
    if (law.at("kind").get<std::string>() != "poly-log")
      throw std::invalid_argument("law kind must be poly-log");
    double c = law.value("c", 1.0);
    double p = law.value("p", 1.0);
    double q = law.value("q", 0.0);
    if (!(c > 0.0) || p < 0.0 || q < 0.0)
      throw std::invalid_argument("law needs c > 0, p >= 0, q >= 0");
    std::uint64_t n_max = params.value("n_max", std::uint64_t(65536));
    auto abs_log = [c, p, q](std::uint64_t n) {
      double x = double(n);
      return c * std::pow(x, p) * std::pow(std::log(x + 2.0), q);
    };
    auto seq = dzeros::assign_arguments(abs_log, set, n_max);
    emit_sequence(out, gen, seq, emit);
    auto bl = dzeros::blaschke_sum(seq, n_max, policy);
    if (p > 0.0) {
      bl.verdict = dzeros::Verdict::converges;
      bl.certificate =
          "terms exp(-c n^p log^q(n+2)) with p > 0; finite by the integral test";
    }
    auto ss = dzeros::shapiro_shields_sum(seq, n_max, policy);
    // terms are 1/(c n^p log^q(n+2)); the integral test settles every case
    if (p > 1.0 || (p == 1.0 && q > 1.0)) {
      ss.verdict = dzeros::Verdict::converges;
      ss.certificate = "terms 1/(c n^p log^q(n+2)) with p > 1 or (p = 1, q > 1);"
                       " finite by the integral test";
    } else {
      ss.verdict = dzeros::Verdict::diverges;
      ss.certificate = "terms 1/(c n^p log^q(n+2)) with p < 1 or (p = 1, q <= 1);"
                       " infinite by the integral test";
    }
    conditions["blaschke_sum"] = dzeros::io::to_json(bl);
    conditions["inverse_log_sum"] = dzeros::io::to_json(ss);
    dzeros::ModulusOmega omega = params.contains("gauge")
                                     ? dzeros::io::gauge_from_json(params.at("gauge"))
                                     : dzeros::ModulusOmega::power(2.0);
    conditions["gauge_distance_sum"] =
        dzeros::io::to_json(dzeros::omega_distance_sum(seq, set, omega, n_max, policy));
    doc["size"] = seq.size();
    doc["conditions"] = std::move(conditions);
    doc["set"] = dzeros::io::to_json(set);
    doc["tail_hausdorff_gap"] = dzeros::io::num(
        dzeros::hausdorff_gap(tail_angles(seq, n_max, window), set.endpoint_angles()));
    write_report(out, "report.json", doc);
    return 0;
  }

  if (gen == "explicit") {
    std::vector<dzeros::Zero> zeros = dzeros::io::zeros_from_json(params.at("zeros"));
    if (zeros.empty()) throw std::invalid_argument("zeros list is empty");
    auto seq = dzeros::ZeroSequence::from_zeros(zeros);
    std::uint64_t n_max = seq.size();
    emit_sequence(out, gen, seq, emit);
    conditions["blaschke_sum"] = dzeros::io::to_json(dzeros::blaschke_sum(seq, n_max, policy));
    conditions["inverse_log_sum"] =
        dzeros::io::to_json(dzeros::shapiro_shields_sum(seq, n_max, policy));
    if (params.contains("set")) {
      dzeros::CircleSet set = dzeros::io::set_from_json(params.at("set"));
      dzeros::ModulusOmega omega = params.contains("gauge")
                                       ? dzeros::io::gauge_from_json(params.at("gauge"))
                                       : dzeros::ModulusOmega::power(2.0);
      conditions["gauge_distance_sum"] =
          dzeros::io::to_json(dzeros::omega_distance_sum(seq, set, omega, n_max, policy));
      doc["tail_hausdorff_gap"] = dzeros::io::num(
          dzeros::hausdorff_gap(tail_angles(seq, n_max, window), set.endpoint_angles()));
    }
    doc["size"] = seq.size();
    doc["conditions"] = std::move(conditions);
    write_report(out, "report.json", doc);
    return 0;
  }

  throw std::invalid_argument("unknown generator: " + gen);
}

// ----------------------------------------------------------- exceptional ---

int cmd_exceptional(const ojson& cfg, const fs::path& out) {
  std::vector<dzeros::Zero> zeros;
  if (cfg.contains("sequence"))
    zeros = dzeros::io::zeros_from_json(
        dzeros::io::read_json_file(cfg.at("sequence").get<std::string>()));
  else
    zeros = dzeros::io::zeros_from_json(cfg.at("zeros"));
  if (cfg.contains("n_max")) {
    std::uint64_t n_max = cfg.at("n_max").get<std::uint64_t>();
    if (n_max < zeros.size()) zeros.resize(n_max);
  }
  if (zeros.empty()) throw std::invalid_argument("zeros list is empty");

  std::vector<double> lambdas;
  for (const auto& l : cfg.at("lambda_grid")) lambdas.push_back(l.get<double>());
  if (lambdas.empty()) throw std::invalid_argument("lambda_grid is empty");
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    if (!(lambdas[i] > 0.0) || (i > 0 && lambdas[i] <= lambdas[i - 1]))
      throw std::invalid_argument("lambda_grid must be positive and increasing");
  int grid_size = cfg.value("grid_size", 4096);

  std::vector<std::vector<double>> rows;
  std::vector<double> measures;
  for (double lam : lambdas) {
    auto rep = dzeros::exceptional_level_set(zeros, lam, grid_size);
    measures.push_back(rep.measure);
    rows.push_back({lam, rep.measure});
  }
  dzeros::io::write_csv(out / "levels.csv", {"lambda", "measure"}, rows);

  // layer cake: integral of the kernel sum equals the integral of the
  // level-set measure over lambda; m(0+) = 2 pi whenever some term is live
  std::size_t live = 0;
  for (const auto& z : zeros)
    if (z.one_minus_r > 0.0) ++live;
  double m0 = live ? dzeros::kTwoPi : 0.0;
  double layer_cake = 0.5 * (m0 + measures.front()) * lambdas.front();
  for (std::size_t i = 1; i < lambdas.size(); ++i)
    layer_cake += 0.5 * (measures[i - 1] + measures[i]) * (lambdas[i] - lambdas[i - 1]);
  double exact = dzeros::kTwoPi * double(live);

  // integral of log+ of the kernel sum: same measures weighted by 1/lambda
  // over [1, lambda_max]
  double log_plus = 0.0;
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    double a = lambdas[i - 1], b = lambdas[i];
    if (b <= 1.0) continue;
    double lo = std::max(a, 1.0);
    double ma = measures[i - 1], mb = measures[i];
    double mlo = a == b ? ma : ma + (mb - ma) * (lo - a) / (b - a);
    log_plus += 0.5 * (mlo / lo + mb / b) * (b - lo);
  }

  auto seq = dzeros::ZeroSequence::from_zeros(zeros);
  auto cover = dzeros::exceptional_cover_bound(seq, seq.size());
  ojson cov;
  cov["tail_start"] = cover.tail_start;
  ojson cb = ojson::array();
  for (double v : cover.capacity_bound) cb.push_back(dzeros::io::num(v));
  cov["capacity_bound"] = std::move(cb);
  ojson cs = ojson::array();
  for (double v : cover.carleson_sum) cs.push_back(dzeros::io::num(v));
  cov["carleson_sum"] = std::move(cs);
  cov["vacuous"] = cover.vacuous;

  ojson doc;
  doc["zero_count"] = zeros.size();
  doc["grid_size"] = grid_size;
  ojson lg = ojson::array();
  for (double v : lambdas) lg.push_back(dzeros::io::num(v));
  doc["lambda"] = std::move(lg);
  ojson mg = ojson::array();
  for (double v : measures) mg.push_back(dzeros::io::num(v));
  doc["measure"] = std::move(mg);
  doc["layer_cake_integral"] = dzeros::io::num(layer_cake);
  doc["kernel_integral_exact"] = dzeros::io::num(exact);
  doc["log_plus_integral"] = dzeros::io::num(log_plus);
  doc["cover"] = std::move(cov);
  write_report(out, "report.json", doc);
  return 0;
}

int run(const std::string& name, const std::string& config, const std::string& out_dir,
        std::uint64_t seed) {
  ojson cfg = dzeros::io::read_json_file(config);
  fs::path out(out_dir);
  fs::create_directories(out);
  if (name == "cantor") return cmd_cantor(cfg, out);
  if (name == "capacity") return cmd_capacity(cfg, out);
  if (name == "carleson-check") return cmd_carleson(cfg, out, seed);
  if (name == "zeros") return cmd_zeros(cfg, out);
  if (name == "exceptional") return cmd_exceptional(cfg, out);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tv = std::getenv("DZEROS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(tv, &end, 10);
    if (*tv == '\0' || (end && *end != '\0') || v < 1) {
      std::cerr << "dzeros: DZEROS_THREADS must be a positive integer\n";
      return 2;
    }
  }

  CLI::App app{"diagnostics for zero sets of Dirichlet-space functions"};
  app.require_subcommand(1);
  std::string config, out_dir = ".";
  std::uint64_t seed = 1;

  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"cantor", "nested-interval set: criteria report and partial-sum curves"},
      {"capacity", "equilibrium capacity of neighborhoods against the cover bound"},
      {"carleson-check", "norm identity for multiplying by a finite zero product"},
      {"zeros", "zero-sequence generators and their condition suite"},
      {"exceptional", "level sets of the boundary kernel sum and tail covers"}};
  for (const auto& [name, desc] : cmds) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->add_option("--config", config, "JSON config path")->required();
    c->add_option("--out", out_dir, "output directory (default .)");
    c->add_option("--seed", seed, "seed for randomized suites (default 1)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    return run(name, config, out_dir, seed);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "dzeros: config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dzeros: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "dzeros: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "dzeros: " << e.what() << "\n";
    return 3;
  }
}
