#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dzeros {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

// Compensated accumulator. Sequential order, so results are reproducible
// run to run; the compensation keeps long condition-sum prefixes from
// drifting at the 1e-9 verdict scale.
class KahanSum {
public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }
  void reset() { s_ = 0.0; c_ = 0.0; }

private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Pairwise reduction of a buffer. Deterministic tree order independent of
// chunking; preferred for grid reductions (trapezoid sums, energies).
double pairwise_sum(std::span<const double> xs);

// Least-squares slope of ys against xs.
double fit_slope(std::span<const double> xs, std::span<const double> ys);

// Shortest-format decimal with 17 significant digits; round-trips doubles.
std::string fmt17(double x);

// Angle reduced to [0, 2*pi).
double normalize_angle(double theta);

// Angular distance folded to [0, pi].
double angular_distance(double a, double b);

// Chord length subtended by an angular separation.
inline double chord_of_angle(double delta) { return 2.0 * std::sin(0.5 * std::fabs(delta)); }

}  // namespace dzeros
