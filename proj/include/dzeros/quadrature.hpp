#pragma once

#include <functional>
#include <span>
#include <vector>

namespace dzeros {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule of order n (n nodes). Cached per n; thread-compatible
// for distinct n after first use in a single-threaded warmup.
const GaussRule& gauss_legendre(int n);

// Integral of f over [a, b] with a single Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int order);

// Composite rule over consecutive panels [pts[0], pts[1]], [pts[1], pts[2]], ...
double integrate_panels(const std::function<double(double)>& f, std::span<const double> pts,
                        int order);

// Geometric grading from a toward b (ratio 2 per panel), then GL per panel.
// Suited to integrands whose scale of variation is proportional to t.
double integrate_graded(const std::function<double(double)>& f, double a, double b, int order);

// Adaptive Simpson with absolute tolerance; recursion depth capped so that
// jump discontinuities cost O(depth) refinement instead of nontermination.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_depth = 44);

}  // namespace dzeros
