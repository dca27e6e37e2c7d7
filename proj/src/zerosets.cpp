#include "dzeros/zerosets.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <stdexcept>

#include "dzeros/quadrature.hpp"
#include "dzeros/util.hpp"

namespace dzeros {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLog2 = 0.69314718055994530942;

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

// log of integral over u in [ua, ub] of omega(e^{-u}) e^u du; the integrand
// spans hundreds of orders of magnitude, so the peak is factored out first
double log_panel(const ModulusOmega& om, double ua, double ub) {
  const GaussRule& rule = gauss_legendre(16);
  double half = 0.5 * (ub - ua), mid = 0.5 * (ua + ub);
  double gv[16];
  double peak = kNegInf;
  for (int i = 0; i < 16; ++i) {
    double u = mid + half * rule.nodes[i];
    gv[i] = om.log_at_log(u) + u;
    peak = std::max(peak, gv[i]);
  }
  if (peak == kNegInf) return kNegInf;
  double s = 0.0;
  for (int i = 0; i < 16; ++i) s += rule.weights[i] * std::exp(gv[i] - peak);
  if (!(s > 0.0)) return kNegInf;
  return peak + std::log(half * s);
}

double log_tail(const ModulusOmega& om, double l_delta, double upper) {
  double l0 = std::log(1.0 / upper);
  if (!(l_delta > l0)) return kNegInf;
  // the slow gauge families switch branch at t = 1 and t = 1/e
  std::vector<double> brk{l0};
  for (double b : {0.0, 1.0})
    if (b > l0 && b < l_delta) brk.push_back(b);
  brk.push_back(l_delta);
  double acc = kNegInf;
  for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
    int panels = int(std::ceil((brk[i + 1] - brk[i]) / 0.5));
    double width = (brk[i + 1] - brk[i]) / panels;
    for (int j = 0; j < panels; ++j)
      acc = log_add(acc, log_panel(om, brk[i] + j * width, brk[i] + (j + 1) * width));
  }
  return acc;
}

// log integral_delta^upper omega(t)/t^2 dt on a grid in L = log(1/delta).
// The grid reaches below the smallest positive double; past its edge the
// tail integral continues analytically by two-term integration by parts, so
// arbitrarily deep log-form radii keep accurate values.
class OmegaTailTable {
public:
  explicit OmegaTailTable(const ModulusOmega& om, double upper = 2.0)
      : om_(om), l0_(std::log(1.0 / upper)) {
    int n = int(std::ceil((kLMax - l0_) / kStep));
    logj_.resize(std::size_t(n) + 1);
    logj_[0] = kNegInf;
    double acc = kNegInf;
    for (int j = 1; j <= n; ++j) {
      acc = log_add(acc, log_panel(om_, l0_ + (j - 1) * kStep, l0_ + j * kStep));
      logj_[std::size_t(j)] = acc;
    }
    edge_ = l0_ + n * kStep;
    edge_primitive_ = tail_primitive_log(edge_);
  }

  double log_at(double big_l) const {
    if (!(big_l > l0_)) return kNegInf;
    if (big_l >= edge_) return log_beyond(big_l);
    double x = (big_l - l0_) / kStep;
    std::size_t j = std::min(std::size_t(x), logj_.size() - 2);
    double f = x - double(j);
    // the first cell starts at an empty integral; the value grows linearly
    if (j == 0 || logj_[j] == kNegInf) return logj_[j + 1] + std::log(std::max(f, 1e-300));
    return logj_[j] + f * (logj_[j + 1] - logj_[j]);
  }

private:
  double g(double u) const { return om_.log_at_log(u) + u; }

  // log of e^{g(u)} (1/g' + g''/g'^3), the endpoint-dominated tail primitive;
  // -inf when the integrand is not growing fast enough for that expansion
  double tail_primitive_log(double u) const {
    const double h = 0.25;
    double gm = g(u - h), g0 = g(u), gp = g(u + h);
    if (!std::isfinite(g0) || !std::isfinite(gm) || !std::isfinite(gp)) return kNegInf;
    double d1 = (gp - gm) / (2.0 * h);
    if (!(d1 > 0.1)) return kNegInf;
    double d2 = (gp + gm - 2.0 * g0) / (h * h);
    double corr = 1.0 / d1 + d2 / (d1 * d1 * d1);
    if (!(corr > 0.1 / d1)) corr = 1.0 / d1;
    return g0 + std::log(corr);
  }

  double log_beyond(double big_l) const {
    double f = tail_primitive_log(big_l);
    // a tail that stopped growing adds nothing the grid has not seen;
    // its exp(-L + logJ) factor underflows anyway for every such gauge
    if (f == kNegInf || f <= edge_primitive_) return logj_.back();
    double tail =
        edge_primitive_ == kNegInf ? f : f + std::log1p(-std::exp(edge_primitive_ - f));
    return log_add(logj_.back(), tail);
  }

  static constexpr double kStep = 0.25;
  static constexpr double kLMax = 900.0;
  ModulusOmega om_;
  double l0_;
  double edge_ = 0.0;
  double edge_primitive_ = kNegInf;
  std::vector<double> logj_;
};

// integral_s^2 dt/|E_t| on the same kind of log grid, linear values with
// linear continuation past the table (the profile integrand is ~constant in
// log s once every gap has opened).
class MeasureTailTable {
public:
  explicit MeasureTailTable(const CircleSet& set) : prof_(set), l0_(std::log(0.5)) {
    int n = int(std::ceil((kLMax - l0_) / kStep));
    p_.resize(std::size_t(n) + 1);
    p_[0] = 0.0;
    double s_prev = 2.0;
    for (int j = 1; j <= n; ++j) {
      double s = std::exp(-(l0_ + j * kStep));
      p_[std::size_t(j)] = p_[std::size_t(j) - 1] + prof_.integral(s, s_prev);
      s_prev = s;
    }
    slope_ = (p_[p_.size() - 1] - p_[p_.size() - 2]) / kStep;
  }

  double at(double big_l) const {
    if (big_l <= l0_) return 0.0;
    double x = (big_l - l0_) / kStep;
    if (x >= double(p_.size() - 1))
      return p_.back() + slope_ * (big_l - (l0_ + double(p_.size() - 1) * kStep));
    std::size_t j = std::size_t(x);
    double f = x - double(j);
    return p_[j] + f * (p_[j + 1] - p_[j]);
  }

  const NeighborhoodMeasureProfile& profile() const { return prof_; }

private:
  static constexpr double kStep = 0.25;
  static constexpr double kLMax = 700.0;
  NeighborhoodMeasureProfile prof_;
  double l0_;
  double slope_ = 0.0;
  std::vector<double> p_;
};

void certify(PartialSumSeries& s, Verdict v, std::string why) {
  s.verdict = v;
  s.certificate = std::move(why);
}

}  // namespace

DecayProfile DecayProfile::power(double p) {
  if (!(p > 2.0))
    throw std::domain_error("DecayProfile::power: exponent must exceed 2 for a finite moment");
  DecayProfile d;
  d.family_ = "power";
  d.eval_ = [p](double x) { return std::pow(std::max(x, 1.0), -p); };
  d.inverse_ = [p](double y) {
    if (!(y > 0.0)) throw std::domain_error("DecayProfile::inverse: value must be positive");
    if (y >= 1.0) return 1.0;
    return std::pow(y, -1.0 / p);
  };
  return d;
}

DecayProfile DecayProfile::exponential(double a) {
  if (!(a > 0.0)) throw std::domain_error("DecayProfile::exponential: rate must be positive");
  DecayProfile d;
  d.family_ = "exponential";
  d.eval_ = [a](double x) { return std::exp(-a * std::max(x, 0.0)); };
  d.inverse_ = [a](double y) {
    if (!(y > 0.0)) throw std::domain_error("DecayProfile::inverse: value must be positive");
    if (y >= 1.0) return 0.0;
    return std::log(1.0 / y) / a;
  };
  return d;
}

ModulusOmega::ModulusOmega(std::function<double(double)> eval,
                           std::function<double(double)> log_at_log, std::string family)
    : eval_(std::move(eval)), log_at_log_(std::move(log_at_log)), family_(std::move(family)) {
  if (eval_(0.0) != 0.0)
    throw std::invalid_argument("ModulusOmega: gauge must vanish at zero");
  double prev = 0.0;
  for (int j = 45; j >= -1; --j) {
    double t = 2.0 * std::pow(2.0, -double(j));
    double v = eval_(std::min(t, 2.0));
    if (v < prev - 1e-12)
      throw std::invalid_argument("ModulusOmega: gauge must be nondecreasing");
    prev = v;
  }
}

double ModulusOmega::operator()(double t) const {
  if (t < 0.0) throw std::domain_error("ModulusOmega: negative argument");
  return eval_(std::min(t, 2.0));
}

double ModulusOmega::at_log(double big_l) const { return std::exp(log_at_log(big_l)); }

double ModulusOmega::log_at_log(double big_l) const {
  return log_at_log_(std::max(big_l, -kLog2));
}

ModulusOmega ModulusOmega::power(double p) {
  if (!(p > 0.0)) throw std::domain_error("ModulusOmega::power: exponent must be positive");
  return ModulusOmega([p](double t) { return std::pow(t, p); },
                      [p](double big_l) { return -p * big_l; }, "power");
}

ModulusOmega ModulusOmega::exp_inv(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::domain_error("ModulusOmega::exp_inv: exponent must lie in (0,1)");
  return ModulusOmega(
      [gamma](double t) { return t == 0.0 ? 0.0 : std::exp(-2.0 * std::pow(t, -gamma)); },
      [gamma](double big_l) { return -2.0 * std::exp(gamma * big_l); }, "exp_inv");
}

ModulusOmega ModulusOmega::log_square() {
  return ModulusOmega(
      [](double t) {
        if (t == 0.0) return 0.0;
        double l = std::log(1.0 / t);
        return std::min(1.0, 1.0 / (l * l));
      },
      [](double big_l) { return big_l <= 1.0 ? 0.0 : -2.0 * std::log(big_l); }, "log_square");
}

ModulusOmega ModulusOmega::exp_loglog_square() {
  return ModulusOmega(
      [](double t) {
        if (t == 0.0) return 0.0;
        double l = std::log(1.0 / t);
        if (l <= 1.0) return 1.0;
        double g = std::log(l);
        return std::exp(-g * g);
      },
      [](double big_l) {
        if (big_l <= 1.0) return 0.0;
        double g = std::log(big_l);
        return -g * g;
      },
      "exp_loglog_square");
}

ModulusOmega ModulusOmega::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2 || samples.front().first != 0.0 || samples.front().second != 0.0)
    throw std::invalid_argument("ModulusOmega::tabulated: samples must start at (0, 0)");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].first > samples[i - 1].first))
      throw std::invalid_argument("ModulusOmega::tabulated: abscissae must increase");
    if (samples[i].second < samples[i - 1].second)
      throw std::invalid_argument("ModulusOmega::tabulated: values must be nondecreasing");
  }
  auto data = std::make_shared<std::vector<std::pair<double, double>>>(std::move(samples));
  auto eval = [data](double t) {
    if (t >= data->back().first) return data->back().second;
    auto it = std::upper_bound(data->begin(), data->end(), t,
                               [](double x, const std::pair<double, double>& s) {
                                 return x < s.first;
                               });
    std::size_t i = std::size_t(it - data->begin());
    const auto& lo = (*data)[i - 1];
    const auto& hi = (*data)[i];
    double f = (t - lo.first) / (hi.first - lo.first);
    return lo.second + f * (hi.second - lo.second);
  };
  return ModulusOmega(eval, [eval](double big_l) { return std::log(eval(std::exp(-big_l))); },
                      "tabulated");
}

namespace {

void validate_cap_curve(const std::vector<std::pair<double, double>>& curve) {
  if (curve.empty()) throw std::invalid_argument("capacity curve: no samples");
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!(curve[i].first > 0.0) || !(curve[i].second > 0.0))
      throw std::invalid_argument("capacity curve: samples must be positive");
    if (i > 0) {
      if (!(curve[i].first > curve[i - 1].first))
        throw std::invalid_argument("capacity curve: abscissae must increase");
      if (curve[i].second < curve[i - 1].second * (1.0 - 1e-9))
        throw std::invalid_argument("capacity curve: values must not decrease");
    }
  }
}

double interp_cap(const std::vector<std::pair<double, double>>& curve, double t) {
  if (t <= curve.front().first) return curve.front().second;
  if (t >= curve.back().first) return curve.back().second;
  auto it = std::upper_bound(curve.begin(), curve.end(), t,
                             [](double x, const std::pair<double, double>& s) {
                               return x < s.first;
                             });
  std::size_t i = std::size_t(it - curve.begin());
  const auto& lo = curve[i - 1];
  const auto& hi = curve[i];
  double f = (t - lo.first) / (hi.first - lo.first);
  return lo.second + f * (hi.second - lo.second);
}

}  // namespace

double gauge_from_capacity(const DecayProfile& psi,
                           const std::vector<std::pair<double, double>>& cap_curve, double t) {
  validate_cap_curve(cap_curve);
  if (!(t > 0.0)) return 0.0;
  double eta = psi.inverse(interp_cap(cap_curve, t));
  return std::exp(-std::exp(eta));
}

ModulusOmega ModulusOmega::from_capacity(const DecayProfile& psi,
                                         std::vector<std::pair<double, double>> cap_curve) {
  validate_cap_curve(cap_curve);
  auto curve = std::make_shared<std::vector<std::pair<double, double>>>(std::move(cap_curve));
  DecayProfile p = psi;
  double t_front = curve->front().first;
  double w_front = std::exp(-std::exp(p.inverse(curve->front().second)));
  auto eval = [curve, p, t_front, w_front](double t) {
    if (t <= 0.0) return 0.0;
    if (t < t_front) return w_front * (t / t_front);
    return std::exp(-std::exp(p.inverse(interp_cap(*curve, t))));
  };
  auto log_eval = [curve, p, t_front, w_front](double big_l) {
    double l_front = std::log(1.0 / t_front);
    if (big_l > l_front) return std::log(w_front) - (big_l - l_front);
    return -std::exp(p.inverse(interp_cap(*curve, std::exp(-big_l))));
  };
  return ModulusOmega(eval, log_eval, "capacity");
}

double omega_tail_integral(const ModulusOmega& omega, double delta, double upper) {
  if (!(delta > 0.0)) throw std::domain_error("omega_tail_integral: lower limit must be positive");
  if (!(upper > 0.0 && upper <= 2.0))
    throw std::domain_error("omega_tail_integral: upper limit must lie in (0, 2]");
  if (delta >= upper) return 0.0;
  return std::exp(log_tail(omega, std::log(1.0 / delta), upper));
}

RegularityReport omega_regularity(const ModulusOmega& omega,
                                  const std::vector<double>& delta_grid) {
  if (delta_grid.empty())
    throw std::domain_error("omega_regularity: empty grid");
  for (std::size_t i = 0; i < delta_grid.size(); ++i) {
    if (!(delta_grid[i] > 0.0) || delta_grid[i] > 2.0)
      throw std::domain_error("omega_regularity: grid values must lie in (0, 2]");
    if (i > 0 && !(delta_grid[i] < delta_grid[i - 1]))
      throw std::domain_error("omega_regularity: grid must decrease strictly");
  }
  RegularityReport rep;
  rep.delta = delta_grid;
  rep.ratio.reserve(delta_grid.size());
  bool finite = true;
  for (double d : delta_grid) {
    double j = omega_tail_integral(omega, d, 2.0);
    double r = j / (1.0 + omega(d) / d);
    rep.ratio.push_back(r);
    rep.sup_ratio = std::max(rep.sup_ratio, r);
    finite = finite && std::isfinite(r);
  }
  // growth fit over the last two decades of delta
  double window = 100.0 * delta_grid.back();
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < delta_grid.size(); ++i) {
    if (delta_grid[i] <= window) {
      xs.push_back(std::log(1.0 / delta_grid[i]));
      ys.push_back(rep.ratio[i]);
    }
  }
  while (xs.size() < 3 && xs.size() < delta_grid.size()) {
    std::size_t i = delta_grid.size() - xs.size() - 1;
    xs.insert(xs.begin(), std::log(1.0 / delta_grid[i]));
    ys.insert(ys.begin(), rep.ratio[i]);
  }
  rep.growth_slope = xs.size() >= 2 ? fit_slope(xs, ys) : 0.0;
  rep.pass = finite && rep.growth_slope <= 1e-2;
  return rep;
}

PartialSumSeries shapiro_shields_sum(const ZeroSequence& seq, std::uint64_t n_max,
                                     const VerdictPolicy& policy) {
  std::uint64_t stop = std::min(n_max, seq.size());
  return accumulate_series(
      [&](std::uint64_t n) {
        double l = seq.at(n).abs_log_one_minus_r;
        if (!(l > 0.0))
          throw std::domain_error("shapiro_shields_sum: a zero at the origin has no finite term");
        return 1.0 / l;
      },
      stop, policy);
}

PartialSumSeries omega_distance_sum(const ZeroSequence& seq, const CircleSet& set,
                                    const ModulusOmega& omega, std::uint64_t n_max,
                                    const VerdictPolicy& policy) {
  std::uint64_t stop = std::min(n_max, seq.size());
  return accumulate_series(
      [&](std::uint64_t n) { return omega(2.0 * set.distance(seq.at(n).point())); }, stop,
      policy);
}

PartialSumSeries omega_distance_integral_sum(const ZeroSequence& seq, const CircleSet& set,
                                             const ModulusOmega& omega, std::uint64_t n_max,
                                             const VerdictPolicy& policy) {
  OmegaTailTable table(omega);
  std::uint64_t stop = std::min(n_max, seq.size());
  return accumulate_series(
      [&](std::uint64_t n) {
        Zero z = seq.at(n);
        double d = set.distance(z.point());
        double term = omega(2.0 * d);
        if (d > 0.0) {
          double lj = table.log_at(-std::log(2.0 * d));
          if (lj != kNegInf) term += std::exp(-z.abs_log_one_minus_r + lj);
        }
        return term;
      },
      stop, policy);
}

PartialSumSeries omega_radial_sum(const ZeroSequence& seq, const ModulusOmega& omega,
                                  std::uint64_t n_max, const VerdictPolicy& policy) {
  OmegaTailTable table(omega);
  std::uint64_t stop = std::min(n_max, seq.size());
  return accumulate_series(
      [&](std::uint64_t n) {
        Zero z = seq.at(n);
        double lj = table.log_at(z.abs_log_one_minus_r - kLog2);
        if (lj == kNegInf) return 0.0;
        return std::exp(-z.abs_log_one_minus_r + lj);
      },
      stop, policy);
}

PartialSumSeries argument_power_sum(const ZeroSequence& seq, const CircleSet& set, double alpha,
                                    std::uint64_t n_max, const VerdictPolicy& policy) {
  if (!(alpha > 0.0)) throw std::domain_error("argument_power_sum: exponent must be positive");
  std::uint64_t stop = std::min(n_max, seq.size());
  return accumulate_series(
      [&](std::uint64_t n) {
        double d = set.distance(std::polar(1.0, seq.at(n).theta));
        return std::pow(d, 2.0 * alpha);
      },
      stop, policy);
}

PartialSumSeries exp_inverse_distance_sum(const ZeroSequence& seq, const CircleSet& set,
                                          double gamma, std::uint64_t n_max,
                                          const VerdictPolicy& policy) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::domain_error("exp_inverse_distance_sum: exponent must lie in (0,1)");
  std::uint64_t stop = std::min(n_max, seq.size());
  return accumulate_series(
      [&](std::uint64_t n) {
        double d = set.distance(seq.at(n).point());
        if (d == 0.0) return 0.0;
        return std::exp(-2.0 * std::pow(d, -gamma));
      },
      stop, policy);
}

PartialSumSeries neighborhood_integral_sum(const ZeroSequence& seq, const CircleSet& set,
                                           double alpha, std::uint64_t n_max,
                                           const VerdictPolicy& policy) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::domain_error("neighborhood_integral_sum: exponent must lie in (0, 1/2)");
  MeasureTailTable table(set);
  std::uint64_t stop = std::min(n_max, seq.size());
  return accumulate_series(
      [&](std::uint64_t n) {
        double d = set.distance(seq.at(n).point());
        if (d == 0.0) return 0.0;
        double delta = 2.0 * d;
        if (delta >= 2.0) return 1.0;
        double inner = table.at(std::log(1.0 / delta));
        return std::exp(-std::pow(inner, alpha));
      },
      stop, policy);
}

DistanceIntegralReport inverse_distance_integral(const CircleSet& set, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::domain_error("inverse_distance_integral: exponent must lie in (0,1)");
  if (set.empty()) throw std::domain_error("inverse_distance_integral: empty set");
  if (set.measure() > 1e-12)
    throw std::domain_error("inverse_distance_integral: set must have measure zero");
  DistanceIntegralReport rep;
  KahanSum integral, series;
  for (const Arc& gap : set.complementary_intervals()) {
    double len = gap.arclength();
    if (len <= 0.0) continue;
    series.add(std::pow(len, 1.0 - gamma));
    integral.add(2.0 * std::pow(0.5 * len, 1.0 - gamma) / (1.0 - gamma));
  }
  rep.integral = integral.value();
  rep.series = series.value();
  return rep;
}

InverseMeasureCheck inverse_measure_power_check(const CircleSet& set, double beta,
                                                const std::vector<double>& t_grid) {
  if (!(beta > 0.0)) throw std::domain_error("inverse_measure_power_check: beta must be positive");
  if (t_grid.size() < 3)
    throw std::domain_error("inverse_measure_power_check: need at least three grid points");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0) || t_grid[i] > 1.0)
      throw std::domain_error("inverse_measure_power_check: grid values must lie in (0, 1]");
    if (i > 0 && !(t_grid[i] < t_grid[i - 1]))
      throw std::domain_error("inverse_measure_power_check: grid must decrease strictly");
  }
  MeasureTailTable table(set);
  const NeighborhoodMeasureProfile& prof = table.profile();
  auto integrand = [&](double s) {
    double inner = table.at(std::log(1.0 / s));
    return 1.0 / (prof.measure_at(s) * std::pow(inner, 1.0 + beta));
  };
  InverseMeasureCheck rep;
  rep.t = t_grid;
  for (double t : t_grid) {
    double v = t >= 1.0 ? 0.0 : integrate_graded(integrand, t, 1.0, 16);
    rep.value.push_back(v);
  }
  std::vector<double> inc, probe_inc;
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    inc.push_back(rep.value[i] - rep.value[i - 1]);
    probe_inc.push_back(table.at(std::log(1.0 / t_grid[i])) -
                        table.at(std::log(1.0 / t_grid[i - 1])));
  }
  rep.pass = inc.back() <= 0.8 * std::max(inc.front(), 1e-300) &&
             inc.back() <= inc[inc.size() - 2] + 1e-12;
  rep.precondition_ok = set.measure() <= 1e-12 && probe_inc.back() > 0.0 &&
                        probe_inc.back() >= 0.25 * probe_inc.front();
  return rep;
}

ZeroSequence assign_arguments(std::function<double(std::uint64_t)> abs_log_radius,
                              const CircleSet& set, std::uint64_t size, std::string label) {
  if (set.empty()) throw std::domain_error("assign_arguments: empty set has no rays");
  if (set.is_full_circle())
    throw std::domain_error("assign_arguments: the full circle has no complementary endpoints");
  auto rays = std::make_shared<std::vector<double>>(set.endpoint_angles());
  if (rays->empty()) throw std::domain_error("assign_arguments: no endpoint rays");
  auto law = std::move(abs_log_radius);
  return ZeroSequence(
      [rays, law](std::uint64_t n) {
        double theta = (*rays)[std::size_t((n - 1) % rays->size())];
        return make_zero_log(theta, law(n));
      },
      size, std::move(label));
}

namespace {

double directed_hausdorff(const std::vector<double>& a, const std::vector<double>& b_sorted) {
  double worst = 0.0;
  for (double ang : a) {
    double t = normalize_angle(ang);
    auto it = std::lower_bound(b_sorted.begin(), b_sorted.end(), t);
    double best = kTwoPi;
    for (int off = -1; off <= 0; ++off) {
      auto jt = it;
      if (off == -1) {
        jt = it == b_sorted.begin() ? b_sorted.end() - 1 : it - 1;
      } else if (jt == b_sorted.end()) {
        jt = b_sorted.begin();
      }
      best = std::min(best, angular_distance(t, *jt));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double hausdorff_gap(const std::vector<double>& angles_a, const std::vector<double>& angles_b) {
  if (angles_a.empty() || angles_b.empty())
    throw std::domain_error("hausdorff_gap: empty angle set");
  auto prep = [](const std::vector<double>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(normalize_angle(x));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<double> a = prep(angles_a), b = prep(angles_b);
  double ang = std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
  return chord_of_angle(ang);
}

ClusterFamily cluster_points(double gamma, std::uint64_t n_terms) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::domain_error("cluster_points: exponent must lie in (0,1)");
  if (n_terms < 1) throw std::domain_error("cluster_points: need at least one term");
  double e = (1.0 + gamma) / (1.0 - gamma);
  // largest first index reached along the anti-diagonal enumeration
  std::uint64_t m_max = std::uint64_t((std::sqrt(8.0 * double(n_terms) + 1.0) - 1.0) / 2.0) + 1;
  std::size_t top = std::size_t(m_max) + 2;
  auto eps = std::make_shared<std::vector<double>>(top + 1, 0.0);
  for (std::size_t n = 1; n <= top; ++n) (*eps)[n] = std::pow(double(n), -e);
  double inv_gamma2 = 2.0 / gamma;
  ZeroSequence seq(
      [eps, inv_gamma2](std::uint64_t i) {
        std::uint64_t m = std::uint64_t((1.0 + std::sqrt(8.0 * double(i) - 7.0)) / 2.0);
        while (m * (m - 1) / 2 >= i) --m;
        while (m * (m + 1) / 2 < i) ++m;
        std::uint64_t t = i - m * (m - 1) / 2;
        std::uint64_t n = t + 1, k = m + 2 - t;
        double abs_log = double(n) * std::log(double(n)) + double(k) * std::log(double(k));
        double gap = (*eps)[std::size_t(n - 1)] - (*eps)[std::size_t(n)];
        double theta = (*eps)[std::size_t(n)] +
                       gap / (2.0 * std::pow(std::log(double(k)), inv_gamma2));
        return make_zero_log(theta, abs_log);
      },
      n_terms, "cluster");
  std::vector<double> marks;
  marks.reserve(top + 1);
  marks.push_back(0.0);
  for (std::size_t n = 1; n <= top; ++n) marks.push_back((*eps)[n]);
  return ClusterFamily{std::move(seq), CircleSet::points(marks)};
}

ClusterReport cluster_report(double gamma, double alpha, std::uint64_t n_terms) {
  ClusterReport rep;
  rep.gamma = gamma;
  rep.alpha = alpha;
  rep.family = cluster_points(gamma, n_terms);
  rep.blaschke = blaschke_sum(rep.family.seq, n_terms);
  rep.exp_inv = exp_inverse_distance_sum(rep.family.seq, rep.family.set, gamma, n_terms);
  rep.argument = argument_power_sum(rep.family.seq, rep.family.set, alpha, n_terms);
  return rep;
}

namespace {

// solve x log(1/x) = c on (0, 1/e) by bisection in y = log x, where
// g(y) = y + log(-y) increases from -inf to -1
double center_radius_root(double c) {
  double target = std::log(c);
  double lo = -745.0, hi = -1.0;
  if (!(target > lo + std::log(-lo)))
    throw std::domain_error("cantor_center_sequence: level radius underflows");
  if (!(target < -1.0))
    throw std::domain_error("cantor_center_sequence: level length out of the root range");
  while (hi - lo > 1e-14) {
    double mid = 0.5 * (lo + hi);
    (mid + std::log(-mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);  // log of 1 - r
}

struct CenterLaw {
  std::vector<int> skipped;
  std::vector<int> levels;          // usable levels ascending
  std::vector<double> log_radius;   // log(1 - r) per usable level
  std::vector<double> half_len;     // ell_k / 2 per usable level
  std::vector<std::vector<double>> shifts;  // per usable level: ell_{i-1} - ell_i, i = 1..k
  std::vector<std::uint64_t> start;         // first 1-based index of each level block
  std::uint64_t total = 0;
};

CenterLaw build_center_law(const CantorSpec& spec, int levels) {
  if (levels < 1 || levels > spec.depth)
    throw std::domain_error("cantor_center_sequence: level count out of range");
  if (levels > 48) throw std::domain_error("cantor_center_sequence: level count too large");
  CenterLaw law;
  const double cutoff = std::exp(-1.0);
  for (int k = 1; k <= levels; ++k) {
    double sq = spec.ell[std::size_t(k)] * spec.ell[std::size_t(k)];
    if (!(sq < cutoff)) {
      law.skipped.push_back(k);
      continue;
    }
    law.levels.push_back(k);
    law.log_radius.push_back(center_radius_root(sq));
    law.half_len.push_back(0.5 * spec.ell[std::size_t(k)]);
    std::vector<double> sh(std::size_t(k), 0.0);
    for (int i = 1; i <= k; ++i)
      sh[std::size_t(i - 1)] = spec.ell[std::size_t(i - 1)] - spec.ell[std::size_t(i)];
    law.shifts.push_back(std::move(sh));
    law.start.push_back(law.total + 1);
    law.total += std::uint64_t(1) << k;
  }
  if (law.levels.empty())
    throw std::domain_error("cantor_center_sequence: every requested level is out of range");
  return law;
}

double left_endpoint(const std::vector<double>& shifts, std::uint64_t j) {
  // big-endian split digits of the interval index
  int k = int(shifts.size());
  double start = 0.0;
  for (int i = 1; i <= k; ++i)
    if ((j >> (k - i)) & 1) start += shifts[std::size_t(i - 1)];
  return start;
}

Zero center_zero(const CenterLaw& law, std::uint64_t n) {
  std::size_t b = std::size_t(std::upper_bound(law.start.begin(), law.start.end(), n) -
                              law.start.begin()) -
                  1;
  std::uint64_t j = n - law.start[b];
  double theta = left_endpoint(law.shifts[b], j) + law.half_len[b];
  return make_zero_log(theta, -law.log_radius[b]);
}

}  // namespace

ZeroSequence cantor_center_sequence(const CantorSpec& spec, int levels,
                                    std::vector<int>* skipped) {
  auto law = std::make_shared<CenterLaw>(build_center_law(spec, levels));
  if (skipped) *skipped = law->skipped;
  return ZeroSequence([law](std::uint64_t n) { return center_zero(*law, n); }, law->total,
                      "cantor-centers");
}

CantorCenterReport cantor_center_report(const CantorSpec& spec, int levels, std::uint64_t n_max,
                                        int n_samples) {
  CantorCenterReport rep;
  auto law = std::make_shared<CenterLaw>(build_center_law(spec, levels));
  rep.skipped_levels = law->skipped;
  rep.used_levels = law->levels;
  for (double lr : law->log_radius) rep.level_radius.push_back(std::exp(lr));
  for (int k = 1; k < spec.depth; ++k)
    rep.ratio_sup = std::max(rep.ratio_sup,
                             spec.ell[std::size_t(k + 1)] / spec.ell[std::size_t(k)]);

  rep.depth_log_sum = cantor_criteria(spec, spec.depth).capacity_sum;

  int k0 = 1;
  while (k0 <= spec.depth && !(spec.log_inv_ell[std::size_t(k0)] > 0.0)) ++k0;
  if (k0 <= spec.depth) {
    int count = spec.depth - k0 + 1;
    rep.inv_log_sum = accumulate_series(
        [&](std::uint64_t j) {
          return 1.0 / spec.log_inv_ell[std::size_t(k0) + std::size_t(j) - 1];
        },
        std::uint64_t(count));
  }

  rep.comparison = accumulate_series(
      [&](std::uint64_t k) {
        return std::exp(double(k) * kLog2 - 2.0 * spec.log_inv_ell[std::size_t(k)]);
      },
      std::uint64_t(spec.depth));

  ZeroSequence seq([law](std::uint64_t n) { return center_zero(*law, n); }, law->total,
                   "cantor-centers");
  std::uint64_t stop = std::min(n_max, law->total);
  rep.blaschke = blaschke_sum(seq, stop);
  rep.shapiro = shapiro_shields_sum(seq, stop);
  CircleSet dist_set = cantor_level(spec, std::min(levels, 18));
  rep.square_gauge = omega_distance_sum(seq, dist_set, ModulusOmega::power(2.0), stop);

  KahanSum floor_sum;
  for (std::size_t b = 0; b < law->levels.size(); ++b) {
    double omr = std::exp(law->log_radius[b]);
    floor_sum.add(std::ldexp(omr * (2.0 - omr), law->levels[b]));
  }
  rep.lambda_floor = 0.25 * floor_sum.value();

  // kernel partial sums at left endpoints of the deepest level's intervals
  int deepest = law->levels.back();
  const std::vector<double>& sh = law->shifts.back();
  std::uint64_t cells = std::uint64_t(1) << deepest;
  int ns = int(std::min<std::uint64_t>(std::uint64_t(std::max(n_samples, 1)), cells));
  double target = 10.0 * rep.lambda_floor;
  rep.frostman_exceeds = true;
  for (int i = 0; i < ns; ++i) {
    std::uint64_t j = (cells / std::uint64_t(ns)) * std::uint64_t(i);
    double phi = left_endpoint(sh, j);
    KahanSum partial;
    bool exceeded = false;
    for (std::uint64_t n = 1; n <= law->total; ++n) {
      Zero z = center_zero(*law, n);
      double d = z.boundary_distance(phi);
      partial.add(z.one_minus_r * (1.0 + z.r()) / (d * d));
      if (partial.value() > target) {
        exceeded = true;
        break;
      }
    }
    rep.frostman_at.push_back(partial.value());
    rep.frostman_exceeds = rep.frostman_exceeds && exceeded;
  }
  return rep;
}

IteratedLogReport iterated_log_report(double s, int depth, std::uint64_t n_terms) {
  IteratedLogReport rep;
  CantorSpec spec = CantorSpec::stretched_exponential(s, depth);
  rep.set = cantor_level(spec, depth);
  auto law = [](std::uint64_t n) {
    double lg = std::log(double(n) + 2.0);
    return std::sqrt(double(n)) * lg * lg;
  };
  rep.seq = assign_arguments(law, rep.set, n_terms, "iterated-log");

  rep.radial = omega_radial_sum(rep.seq, ModulusOmega::log_square(), n_terms);
  // dyadic increments decay like 1/log^3 n and cannot reach the convergence
  // threshold at desk scale; a dominated-comparison certificate closes it
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  {
    OmegaTailTable table(ModulusOmega::log_square());
    for (std::uint64_t n = 16; n <= n_terms; n *= 4) {
      double l = law(n);
      double term = std::exp(-l + table.log_at(l - kLog2));
      double ratio = term * l * l;  // n log^4(n+2) == l^2
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  if (std::isfinite(hi) && hi > 0.0 && hi / lo < 20.0) {
    certify(rep.radial, Verdict::converges,
            "terms bounded by C/(n log^4(n+2)) with C = " + fmt17(hi) +
                " on dyadic samples; the comparison series has a finite integral-test tail");
  }

  rep.inv_log_sq = accumulate_series(
      [&](std::uint64_t n) {
        double l = law(n);
        return 1.0 / (l * l);
      },
      n_terms);
  certify(rep.inv_log_sq, Verdict::converges,
          "terms equal 1/(n log^4(n+2)); finite by the integral test");

  rep.shapiro = shapiro_shields_sum(rep.seq, n_terms);
  return rep;
}

}  // namespace dzeros
