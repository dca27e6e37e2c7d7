#include "dzeros/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dzeros/quadrature.hpp"
#include "dzeros/util.hpp"

namespace dzeros {

namespace {

constexpr double kCoeffCap = 1e100;

void check_magnitude(const std::vector<std::complex<double>>& coeffs) {
  for (const auto& c : coeffs)
    if (!(std::abs(c) < kCoeffCap))
      throw std::overflow_error("PowerSeries: coefficient magnitude exceeded 1e100");
}

}  // namespace

PowerSeries::PowerSeries(std::vector<std::complex<double>> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  check_magnitude(coeffs_);
}

PowerSeries PowerSeries::monomial(int k, std::complex<double> a) {
  if (k < 0) throw std::domain_error("PowerSeries::monomial: negative exponent");
  std::vector<std::complex<double>> c(k + 1, 0.0);
  c[k] = a;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::times(const PowerSeries& other) const {
  std::vector<std::complex<double>> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::scaled(std::complex<double> a) const {
  std::vector<std::complex<double>> out = coeffs_;
  for (auto& c : out) c *= a;
  return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::derivative() const {
  if (coeffs_.size() <= 1) return PowerSeries({0.0});
  std::vector<std::complex<double>> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = double(k) * coeffs_[k];
  return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::exponential(int n_terms) const {
  if (n_terms < 1) throw std::domain_error("PowerSeries::exponential: need at least one term");
  std::vector<std::complex<double>> f(n_terms, 0.0);
  const auto& g = coeffs_;
  f[0] = std::exp(g[0]);
  for (int n = 1; n < n_terms; ++n) {
    std::complex<double> acc = 0.0;
    int kmax = std::min<int>(n, int(g.size()) - 1);
    for (int k = 1; k <= kmax; ++k) acc += double(k) * g[k] * f[n - k];
    f[n] = acc / double(n);
    if (!(std::abs(f[n]) < kCoeffCap))
      throw std::overflow_error("PowerSeries::exponential: coefficients diverge");
  }
  return PowerSeries(std::move(f));
}

std::complex<double> PowerSeries::evaluate(std::complex<double> z) const {
  if (std::abs(z) > 1.0 + 1e-12)
    throw std::domain_error("PowerSeries::evaluate: point outside the closed disk");
  std::complex<double> acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

double dirichlet_norm(const PowerSeries& f) {
  KahanSum s;
  const auto& c = f.coeffs();
  for (std::size_t k = 1; k < c.size(); ++k) s.add(double(k) * std::norm(c[k]));
  return s.value();
}

double dirichlet_area(const PowerSeries& f, double r_max, int n_radial, int n_angular) {
  if (!(r_max > 0.0 && r_max <= 1.0))
    throw std::domain_error("dirichlet_area: radius must lie in (0, 1]");
  PowerSeries d = f.derivative();
  int deg = d.degree();
  if (n_angular == 0) n_angular = 2 * deg + 16;
  // the angular trapezoid rule is exact once n_angular exceeds 2*deg
  auto ring = [&](double r) {
    KahanSum s;
    for (int j = 0; j < n_angular; ++j) {
      double th = kTwoPi * j / n_angular;
      s.add(std::norm(d.evaluate(std::polar(r, th))));
    }
    return r * s.value() * (kTwoPi / n_angular);
  };
  return integrate_gl(ring, 0.0, r_max, n_radial) / kPi;
}

BoundaryGrid BoundaryGrid::from_function(const std::function<std::complex<double>(double)>& f,
                                         int size) {
  if (size < 4 || (size & (size - 1)) != 0)
    throw std::domain_error("BoundaryGrid: size must be a power of two, at least 4");
  BoundaryGrid g;
  g.size = size;
  g.values.resize(size);
  for (int j = 0; j < size; ++j) g.values[j] = f(kTwoPi * j / size);
  return g;
}

double BoundaryGrid::angle(int j) const { return kTwoPi * j / size; }

std::complex<double> BoundaryGrid::fourier_coefficient(std::int64_t n) const {
  if (size == 0 || int(values.size()) != size)
    throw std::domain_error("BoundaryGrid: inconsistent sample count");
  KahanSum re, im;
  for (int j = 0; j < size; ++j) {
    std::complex<double> t = values[j] * std::polar(1.0, -double(n) * kTwoPi * j / size);
    re.add(t.real());
    im.add(t.imag());
  }
  return {re.value() / size, im.value() / size};
}

ClippedLogModulus sample_log_modulus(const std::function<double(double)>& modulus, int size) {
  if (size < 4 || (size & (size - 1)) != 0)
    throw std::domain_error("sample_log_modulus: size must be a power of two, at least 4");
  ClippedLogModulus out;
  out.clip_floor = kTwoPi / size;
  out.log_values.resize(size);
  for (int j = 0; j < size; ++j) {
    double w = modulus(kTwoPi * j / size);
    if (!(w >= 0.0)) throw std::domain_error("sample_log_modulus: modulus must be nonnegative");
    if (w < out.clip_floor) {
      w = out.clip_floor;
      ++out.clipped_count;
    }
    out.log_values[j] = std::log(w);
  }
  return out;
}

PowerSeries outer_function(std::span<const double> log_modulus, int n_coeffs) {
  const int M = int(log_modulus.size());
  if (M < 4 || (M & (M - 1)) != 0)
    throw std::domain_error("outer_function: need a power-of-two sample count, at least 4");
  if (n_coeffs < 1 || n_coeffs > M / 2)
    throw std::domain_error("outer_function: coefficient count must lie in [1, size/2]");
  std::vector<std::complex<double>> g(n_coeffs, 0.0);
  for (int n = 0; n < n_coeffs; ++n) {
    KahanSum re, im;
    for (int j = 0; j < M; ++j) {
      double ang = -n * kTwoPi * j / M;
      re.add(log_modulus[j] * std::cos(ang));
      im.add(log_modulus[j] * std::sin(ang));
    }
    std::complex<double> c(re.value() / M, im.value() / M);
    g[n] = (n == 0) ? c : 2.0 * c;
  }
  return PowerSeries(std::move(g)).exponential(n_coeffs);
}

CompositionReport saturating_composition(const PowerSeries& phi, double r_max, int n_terms) {
  if (n_terms == 0) n_terms = std::max(64, 8 * (phi.degree() + 1));
  CompositionReport rep;
  PowerSeries inner = phi.exponential(n_terms).scaled(-0.5 * std::sqrt(2.0));
  rep.f = inner.exponential(n_terms);
  rep.area_phi = dirichlet_area(phi, r_max);
  rep.area_f = dirichlet_area(rep.f, r_max);
  rep.bound_factor = 2.0 * std::exp(-2.0);

  PowerSeries dphi = phi.derivative();
  PowerSeries df = rep.f.derivative();
  const int M = 1024;
  double max_im = 0.0, slack = -1e308;
  for (int j = 0; j < M; ++j) {
    std::complex<double> z = std::polar(r_max, kTwoPi * j / M);
    max_im = std::max(max_im, std::fabs(phi.evaluate(z).imag()));
    double lhs = std::norm(df.evaluate(z));
    double rhs = rep.bound_factor * std::norm(dphi.evaluate(z));
    slack = std::max(slack, lhs - rhs);
  }
  rep.max_abs_im_phi = max_im;
  rep.pointwise_slack = slack;
  rep.pointwise_bound_ok = max_im <= 0.25 * kPi + 1e-12 && slack <= 1e-10;
  return rep;
}

double distribution_function(std::span<const double> magnitudes, double lambda) {
  if (magnitudes.empty()) throw std::domain_error("distribution_function: no samples");
  std::size_t count = 0;
  for (double m : magnitudes)
    if (m > lambda) ++count;
  return kTwoPi * double(count) / double(magnitudes.size());
}

LogIntegralReport log_integral_identity_check(std::span<const double> magnitudes) {
  if (magnitudes.empty()) throw std::domain_error("log_integral_identity_check: no samples");
  double lo = 1e308, hi = 0.0;
  KahanSum lhs;
  for (double m : magnitudes) {
    if (!(m >= 1.0))
      throw std::domain_error("log_integral_identity_check: magnitudes must be >= 1");
    lhs.add(std::log(m));
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  LogIntegralReport rep;
  rep.lhs = lhs.value() * kTwoPi / double(magnitudes.size());
  std::vector<double> sorted(magnitudes.begin(), magnitudes.end());
  std::sort(sorted.begin(), sorted.end());
  auto m_of = [&](double lambda) {
    auto it = std::upper_bound(sorted.begin(), sorted.end(), lambda);
    return kTwoPi * double(sorted.end() - it) / double(sorted.size());
  };
  rep.rhs = (hi <= 1.0) ? 0.0
                        : integrate_adaptive([&](double l) { return m_of(l) / l; }, 1.0, hi,
                                             1e-10, 48);
  rep.abs_diff = std::fabs(rep.lhs - rep.rhs);
  return rep;
}

}  // namespace dzeros
