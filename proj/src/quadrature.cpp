#include "dzeros/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace dzeros {

namespace {

GaussRule build_rule(int n) {
  // Newton on P_n from Chebyshev guesses; symmetric pairs filled together.
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double pi = 3.14159265358979323846;
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order) {
  const GaussRule& r = gauss_legendre(order);
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return s * half;
}

double integrate_panels(const std::function<double(double)>& f, std::span<const double> pts,
                        int order) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += integrate_gl(f, pts[i], pts[i + 1], order);
  return s;
}

double integrate_graded(const std::function<double(double)>& f, double a, double b, int order) {
  if (!(a > 0.0) || !(b > a)) throw std::domain_error("integrate_graded: need 0 < a < b");
  std::vector<double> pts;
  pts.push_back(a);
  for (double t = 2.0 * a; t < b; t *= 2.0) pts.push_back(t);
  pts.push_back(b);
  return integrate_panels(f, pts, order);
}

namespace {

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(fa, flm, fm, m - a);
  double right = simpson(fm, frm, fb, b - m);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_depth) {
  if (b <= a) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  return adapt(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, max_depth);
}

}  // namespace dzeros
