#include "dzeros/capacity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dzeros/clausen.hpp"
#include "dzeros/quadrature.hpp"
#include "dzeros/util.hpp"

namespace dzeros {

DiscreteMeasure DiscreteMeasure::from_cells(std::vector<MeasureCell> cells) {
  for (const MeasureCell& c : cells)
    if (!(c.weight >= 0.0)) throw std::domain_error("DiscreteMeasure: negative cell weight");
  DiscreteMeasure mu;
  mu.cells_ = std::move(cells);
  return mu;
}

DiscreteMeasure DiscreteMeasure::uniform_on(const CircleSet& set, int n_cells) {
  if (set.empty()) throw std::domain_error("DiscreteMeasure::uniform_on: empty set");
  if (n_cells < 1) throw std::domain_error("DiscreteMeasure::uniform_on: need at least one cell");
  double total = set.measure();
  if (total == 0.0) throw std::domain_error("DiscreteMeasure::uniform_on: set has measure zero");
  std::vector<MeasureCell> cells;
  for (const Arc& a : set.arcs()) {
    double len = a.arclength();
    if (len == 0.0) continue;
    int k = std::max(1, int(std::lround(double(n_cells) * len / total)));
    double h = len / k;
    for (int j = 0; j < k; ++j) {
      MeasureCell c;
      c.arc = Arc(a.theta_start + j * h, a.theta_start + (j + 1) * h);
      c.weight = (len / total) / k;
      cells.push_back(c);
    }
  }
  return from_cells(std::move(cells));
}

double DiscreteMeasure::total_mass() const {
  KahanSum s;
  for (const MeasureCell& c : cells_) s.add(c.weight);
  return s.value();
}

bool DiscreteMeasure::has_point_mass() const {
  for (const MeasureCell& c : cells_)
    if (c.arc.arclength() == 0.0 && c.weight > 0.0) return true;
  return false;
}

std::complex<double> DiscreteMeasure::fourier_coefficient(std::int64_t n) const {
  if (n == 0) return {total_mass(), 0.0};
  std::complex<double> acc{0.0, 0.0};
  for (const MeasureCell& c : cells_) {
    double h = 0.5 * c.arc.arclength();
    double mid = c.arc.midpoint();
    double sinc = (h == 0.0) ? 1.0 : std::sin(double(n) * h) / (double(n) * h);
    acc += c.weight * sinc * std::polar(1.0, -double(n) * mid);
  }
  return acc;
}

EnergyEstimate energy_fourier(const DiscreteMeasure& mu, int n_terms) {
  if (n_terms < 1) throw std::domain_error("energy_fourier: need at least one term");
  if (mu.has_point_mass())
    throw std::domain_error("energy_fourier: point masses have infinite energy");
  // |mu_hat(n)| <= C/n once every cell has positive width
  double C = 0.0;
  for (const MeasureCell& c : mu.cells()) {
    double h = 0.5 * c.arc.arclength();
    if (h > 0.0) C += c.weight / h;
  }
  KahanSum s;
  for (int n = 1; n <= n_terms; ++n) {
    double a = std::norm(mu.fourier_coefficient(n));
    s.add(a / double(n));
  }
  EnergyEstimate est;
  est.partial = s.value();
  est.tail_bound = C * C / (2.0 * double(n_terms) * double(n_terms));
  return est;
}

namespace {

// integral of log(1/|e^{ia} - e^{ib}|) over [a1,a2] x [b1,b2]
double kernel_block_exact(double a1, double a2, double b1, double b2) {
  return cl3(a1 - b1) + cl3(a2 - b2) - cl3(a2 - b1) - cl3(a1 - b2);
}

double kernel_block_gl(double a1, double a2, double b1, double b2, int order) {
  const GaussRule& rule = gauss_legendre(order);
  double ca = 0.5 * (a1 + a2), ha = 0.5 * (a2 - a1);
  double cb = 0.5 * (b1 + b2), hb = 0.5 * (b2 - b1);
  KahanSum acc;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double alpha = ca + ha * rule.nodes[i];
    KahanSum inner;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      double beta = cb + hb * rule.nodes[j];
      inner.add(rule.weights[j] * std::log(1.0 / (2.0 * std::fabs(std::sin(0.5 * (alpha - beta))))));
    }
    acc.add(rule.weights[i] * inner.value());
  }
  return ha * hb * acc.value();
}

double cell_gap(const Arc& a, const Arc& b) {
  // angular separation of the two closed arcs
  double d1 = angular_distance(a.theta_start, b.theta_start);
  double d2 = angular_distance(a.theta_start, b.theta_end);
  double d3 = angular_distance(a.theta_end, b.theta_start);
  double d4 = angular_distance(a.theta_end, b.theta_end);
  double d = std::min(std::min(d1, d2), std::min(d3, d4));
  if (b.contains_angle(a.theta_start) || b.contains_angle(a.theta_end) ||
      a.contains_angle(b.theta_start) || a.contains_angle(b.theta_end))
    return 0.0;
  return d;
}

}  // namespace

double energy_kernel(const DiscreteMeasure& mu, int quad_order) {
  if (quad_order < 2) throw std::domain_error("energy_kernel: quadrature order must be >= 2");
  if (mu.has_point_mass())
    throw std::domain_error("energy_kernel: point masses have infinite energy");
  const auto& cells = mu.cells();
  std::size_t m = cells.size();
  KahanSum acc;
  for (std::size_t i = 0; i < m; ++i) {
    const Arc& A = cells[i].arc;
    double wa = cells[i].weight, la = A.arclength();
    if (wa == 0.0) continue;
    acc.add(wa * wa / (la * la) * (2.0 * kZeta3 - 2.0 * cl3(la)));
    for (std::size_t j = i + 1; j < m; ++j) {
      const Arc& B = cells[j].arc;
      double wb = cells[j].weight, lb = B.arclength();
      if (wb == 0.0) continue;
      double block;
      if (cell_gap(A, B) >= std::max(la, lb)) {
        block = kernel_block_gl(A.theta_start, A.theta_end, B.theta_start, B.theta_end, quad_order);
      } else {
        block = kernel_block_exact(A.theta_start, A.theta_end, B.theta_start, B.theta_end);
      }
      acc.add(2.0 * wa * wb / (la * lb) * block);
    }
  }
  return acc.value();
}

double arc_equilibrium_energy(double arclength) {
  if (!(arclength > 0.0 && arclength <= kTwoPi))
    throw std::domain_error("arc_equilibrium_energy: arclength must lie in (0, 2*pi]");
  return std::log(1.0 / std::sin(0.25 * arclength));
}

double arc_capacity_bound(double diameter) {
  if (!(diameter > 0.0 && diameter <= 2.0))
    throw std::domain_error("arc_capacity_bound: diameter must lie in (0, 2]");
  double beta = 2.0 * std::asin(0.5 * diameter);  // enclosing arc angle
  return 1.0 / std::log(1.0 / std::sin(0.5 * beta * 0.5));
}

namespace {

void project_simplex(std::vector<double>& w) {
  // Euclidean projection onto the probability simplex
  std::vector<double> u = w;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  int k = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    double t = (css - 1.0) / double(i + 1);
    if (u[i] - t > 0.0) {
      theta = t;
      k = int(i) + 1;
    }
  }
  (void)k;
  for (double& x : w) x = std::max(0.0, x - theta);
}

}  // namespace

EquilibriumResult equilibrium_measure(const CircleSet& set, const EquilibriumOptions& opt) {
  if (set.empty()) throw std::domain_error("equilibrium_measure: empty set");
  if (set.measure() == 0.0)
    throw std::domain_error("equilibrium_measure: set of isolated points has no equilibrium");
  DiscreteMeasure grid = DiscreteMeasure::uniform_on(set, opt.n_cells);
  const auto& cells = grid.cells();
  const int m = int(cells.size());

  // energy form: I(w) = w^T K w with exact per-pair blocks
  Eigen::MatrixXd K(m, m);
  for (int i = 0; i < m; ++i) {
    const Arc& A = cells[i].arc;
    double la = A.arclength();
    K(i, i) = (2.0 * kZeta3 - 2.0 * cl3(la)) / (la * la);
    for (int j = i + 1; j < m; ++j) {
      const Arc& B = cells[j].arc;
      double lb = B.arclength();
      double block =
          kernel_block_exact(A.theta_start, A.theta_end, B.theta_start, B.theta_end);
      K(i, j) = K(j, i) = block / (la * lb);
    }
  }

  Eigen::VectorXd w = Eigen::VectorXd::Constant(m, 1.0 / m);
  // Lipschitz constant of the gradient from a few power iterations
  Eigen::VectorXd pv = Eigen::VectorXd::Ones(m).normalized();
  double lam = 1.0;
  for (int it = 0; it < 60; ++it) {
    pv = (K * pv).eval();
    lam = pv.norm();
    if (lam == 0.0) break;
    pv /= lam;
  }
  double step = 1.0 / std::max(2.0 * lam, 1e-12);

  auto energy_of = [&](const Eigen::VectorXd& x) { return x.dot(K * x); };
  Eigen::VectorXd y = w, w_prev = w;
  double t_mom = 1.0;
  double f_prev = energy_of(w);
  int iters = 0;
  std::vector<double> tmp(m);
  for (; iters < opt.max_iter; ++iters) {
    Eigen::VectorXd g = 2.0 * (K * y);
    Eigen::VectorXd cand = y - step * g;
    for (int i = 0; i < m; ++i) tmp[i] = cand[i];
    project_simplex(tmp);
    for (int i = 0; i < m; ++i) cand[i] = tmp[i];
    double f = energy_of(cand);
    if (f > f_prev) {
      // momentum restart
      y = w;
      t_mom = 1.0;
      Eigen::VectorXd g2 = 2.0 * (K * y);
      cand = y - step * g2;
      for (int i = 0; i < m; ++i) tmp[i] = cand[i];
      project_simplex(tmp);
      for (int i = 0; i < m; ++i) cand[i] = tmp[i];
      f = energy_of(cand);
    }
    double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_mom * t_mom));
    y = cand + ((t_mom - 1.0) / t_next) * (cand - w);
    w_prev = w;
    w = cand;
    t_mom = t_next;
    if (std::fabs(f_prev - f) <= opt.tol * std::max(1.0, std::fabs(f)) && iters > 32) {
      f_prev = f;
      break;
    }
    f_prev = f;
  }

  bool polished = false;
  if (opt.polish) {
    std::vector<int> sup;
    for (int i = 0; i < m; ++i)
      if (w[i] > 1e-12) sup.push_back(i);
    const int ns = int(sup.size());
    if (ns > 0) {
      Eigen::MatrixXd Ks(ns, ns);
      for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b) Ks(a, b) = K(sup[a], sup[b]);
      Ks.diagonal().array() += 1e-13;
      Eigen::LLT<Eigen::MatrixXd> llt(Ks);
      if (llt.info() == Eigen::Success) {
        Eigen::VectorXd v = llt.solve(Eigen::VectorXd::Ones(ns));
        double mass = v.sum();
        if (mass > 0.0 && v.minCoeff() >= 0.0) {
          Eigen::VectorXd wp = Eigen::VectorXd::Zero(m);
          for (int a = 0; a < ns; ++a) wp[sup[a]] = v[a] / mass;
          if (energy_of(wp) <= f_prev) {
            w = wp;
            f_prev = energy_of(wp);
            polished = true;
          }
        }
      }
    }
  }

  // KKT check: the potential is constant on the support, no smaller off it
  Eigen::VectorXd pot = K * w;
  double level = w.dot(pot);
  double viol = 0.0;
  for (int i = 0; i < m; ++i) {
    if (w[i] > 1e-12)
      viol = std::max(viol, std::fabs(pot[i] - level));
    else
      viol = std::max(viol, std::max(0.0, level - pot[i]));
  }

  EquilibriumResult res;
  std::vector<MeasureCell> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    MeasureCell c = cells[i];
    c.weight = w[i];
    out.push_back(c);
  }
  res.measure = DiscreteMeasure::from_cells(std::move(out));
  res.energy = f_prev;
  res.kkt_residual = viol / std::max(1.0, std::fabs(level));
  res.iterations = iters;
  res.polished = polished;
  return res;
}

double capacity(const CircleSet& set, const EquilibriumOptions& opt) {
  if (set.empty()) return 0.0;
  if (set.is_full_circle()) return std::numeric_limits<double>::infinity();
  if (set.measure() == 0.0) return 0.0;  // finitely many points
  double I = equilibrium_measure(set, opt).energy;
  if (I <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / I;
}

double capacity_upper_bound(const CircleSet& set, double t) {
  double J = inverse_measure_integral(set, t, 2.0);
  if (J <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / J;
}

}  // namespace dzeros
