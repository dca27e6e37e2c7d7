#include "dzeros/util.hpp"

#include <cstdio>

namespace dzeros {

namespace {

double pairwise_rec(const double* xs, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += xs[i];
    return s;
  }
  std::size_t h = n / 2;
  return pairwise_rec(xs, h) + pairwise_rec(xs + h, n - h);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) { return pairwise_rec(xs.data(), xs.size()); }

double fit_slope(std::span<const double> xs, std::span<const double> ys) {
  std::size_t n = xs.size();
  if (n < 2 || ys.size() != n) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) return 0.0;
  return sxy / sxx;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  // fmod can land exactly on 2*pi after the correction
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

double angular_distance(double a, double b) {
  double d = std::fabs(normalize_angle(a) - normalize_angle(b));
  return d > kPi ? kTwoPi - d : d;
}

}  // namespace dzeros
