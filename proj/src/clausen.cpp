#include "dzeros/clausen.hpp"

#include <array>
#include <cmath>

#include "dzeros/util.hpp"

namespace dzeros {

namespace {

constexpr int kTerms = 32;

struct Coeffs {
  // a[n] multiplies theta^(2n+3) in cl2, b[n] multiplies theta^(2n+4) in cl3
  std::array<double, kTerms> a{};
  std::array<double, kTerms> b{};
};

double even_zeta(int m) {
  // zeta(m) for even m >= 2; exact constants for the slow-converging cases
  if (m == 2) return kPi * kPi / 6.0;
  if (m == 4) return std::pow(kPi, 4) / 90.0;
  if (m == 6) return std::pow(kPi, 6) / 945.0;
  double s = 1.0;
  for (int k = 2; k < 300; ++k) {
    double t = std::pow(double(k), -m);
    s += t;
    if (t < 1e-18 * s) break;
  }
  return s;
}

Coeffs build_coeffs() {
  // |B_2n|/(2n)! = 2 zeta(2n)/(2 pi)^(2n) keeps the table cancellation-free
  Coeffs c;
  for (int i = 0; i < kTerms; ++i) {
    int n = i + 1;
    double ratio = 2.0 * even_zeta(2 * n) / std::pow(kTwoPi, 2 * n);
    c.a[i] = ratio / (2.0 * n * (2.0 * n + 1.0));
    c.b[i] = c.a[i] / (2.0 * n + 2.0);
  }
  return c;
}

const Coeffs& coeffs() {
  static const Coeffs c = build_coeffs();
  return c;
}

double fold_to_pi(double x, bool& flipped) {
  double t = std::fmod(std::fabs(x), kTwoPi);
  flipped = false;
  if (t > kPi) {
    t = kTwoPi - t;
    flipped = true;
  }
  return t;
}

}  // namespace

double cl2(double x) {
  bool flipped;
  double t = fold_to_pi(x, flipped);
  double sign = (x < 0.0) ? -1.0 : 1.0;
  if (flipped) sign = -sign;
  if (t == 0.0) return 0.0;
  const Coeffs& c = coeffs();
  double t2 = t * t;
  double s = 0.0;
  for (int i = kTerms - 1; i >= 0; --i) s = (s + c.a[i]) * t2;
  // s = sum a_n t^(2n), series value needs extra factor t
  return sign * (t - t * std::log(t) + s * t);
}

double cl3(double x) {
  bool flipped;
  double t = fold_to_pi(x, flipped);
  if (t == 0.0) return kZeta3;
  const Coeffs& c = coeffs();
  double t2 = t * t;
  double s = 0.0;
  for (int i = kTerms - 1; i >= 0; --i) s = (s + c.b[i]) * t2;
  return kZeta3 + 0.5 * t2 * std::log(t) - 0.75 * t2 - s * t2;
}

}  // namespace dzeros
