#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace dzeros {

// Truncated power series sum a_k z^k with complex coefficients.
class PowerSeries {
public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<std::complex<double>> coeffs);
  static PowerSeries monomial(int k, std::complex<double> a = 1.0);

  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
  int degree() const { return int(coeffs_.size()) - 1; }

  PowerSeries times(const PowerSeries& other) const;
  PowerSeries scaled(std::complex<double> a) const;
  PowerSeries derivative() const;
  // exp of this series truncated to n_terms coefficients
  PowerSeries exponential(int n_terms) const;

  std::complex<double> evaluate(std::complex<double> z) const;  // |z| <= 1

private:
  std::vector<std::complex<double>> coeffs_;
};

// sum_k k |a_k|^2
double dirichlet_norm(const PowerSeries& f);

// Area integral of |f'|^2 over the disk of radius r_max, divided by pi.
// n_angular = 0 picks a grid exact for the series degree.
double dirichlet_area(const PowerSeries& f, double r_max = 1.0, int n_radial = 64,
                      int n_angular = 0);

// Uniformly sampled boundary values; size must be a power of two, at least 4.
struct BoundaryGrid {
  int size = 0;
  std::vector<std::complex<double>> values;

  static BoundaryGrid from_function(const std::function<std::complex<double>(double)>& f,
                                    int size);
  double angle(int j) const;
  std::complex<double> fourier_coefficient(std::int64_t n) const;
};

// Boundary log-modulus samples with small values clipped at 2*pi/size.
struct ClippedLogModulus {
  std::vector<double> log_values;
  double clip_floor = 0.0;
  int clipped_count = 0;
};

ClippedLogModulus sample_log_modulus(const std::function<double(double)>& modulus, int size);

// Analytic completion: exp(c_0 + 2 sum_{n>=1} c_n z^n) with c_n the Fourier
// coefficients of the sampled log-modulus; n_coeffs <= size/2.
PowerSeries outer_function(std::span<const double> log_modulus, int n_coeffs);

struct CompositionReport {
  PowerSeries f;              // exp(-(sqrt2/2) exp(phi))
  double area_phi = 0.0;      // Dirichlet area of phi on the r_max disk
  double area_f = 0.0;
  double max_abs_im_phi = 0.0;
  double bound_factor = 0.0;  // 2/e^2
  bool pointwise_bound_ok = false;
  double pointwise_slack = 0.0;  // max of |f'|^2 - factor |phi'|^2 on the circle
};

// With |Im phi| <= pi/4 the derivative of f = exp(-(sqrt2/2) e^phi) obeys
// |f'|^2 <= (2/e^2) |phi'|^2 pointwise, so area_f <= (2/e^2) area_phi.
CompositionReport saturating_composition(const PowerSeries& phi, double r_max = 0.999,
                                         int n_terms = 0);

// arclength of the superlevel set {|f| > lambda} for sampled magnitudes
double distribution_function(std::span<const double> magnitudes, double lambda);

struct LogIntegralReport {
  double lhs = 0.0;  // integral of log|f| over the circle
  double rhs = 0.0;  // integral of m(lambda)/lambda over lambda >= 1
  double abs_diff = 0.0;
};

// Both sides of the layer-cake identity for the sampled boundary magnitudes;
// requires every magnitude >= 1.
LogIntegralReport log_integral_identity_check(std::span<const double> magnitudes);

}  // namespace dzeros
