#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dzeros/circle_sets.hpp"

namespace dzeros {

// Weighted cell of a measure on the circle: the weight spreads uniformly over
// the arc. A degenerate arc is a point mass.
struct MeasureCell {
  Arc arc;
  double weight = 0.0;
};

class DiscreteMeasure {
public:
  DiscreteMeasure() = default;
  static DiscreteMeasure from_cells(std::vector<MeasureCell> cells);
  // splits each arc of the set into cells and distributes mass by arclength
  static DiscreteMeasure uniform_on(const CircleSet& set, int n_cells = 256);

  const std::vector<MeasureCell>& cells() const { return cells_; }
  double total_mass() const;
  bool has_point_mass() const;

  // integral of e^{-i n theta}, closed form per cell
  std::complex<double> fourier_coefficient(std::int64_t n) const;

private:
  std::vector<MeasureCell> cells_;
};

// Partial sum of sum_{n>=1} |mu_hat(n)|^2 / n plus a rigorous bound on the
// dropped tail; value() splits the bracket down the middle.
struct EnergyEstimate {
  double partial = 0.0;
  double tail_bound = 0.0;
  double value() const { return partial + 0.5 * tail_bound; }
};

EnergyEstimate energy_fourier(const DiscreteMeasure& mu, int n_terms = 16384);

// Double integral of log(1/|z - w|) against mu x mu. Cell pairs closer than
// a cell width (and all diagonal blocks) use closed-form antiderivatives;
// well-separated pairs use tensor Gauss-Legendre of the given order.
double energy_kernel(const DiscreteMeasure& mu, int quad_order = 32);

// Equilibrium energy of a single arc, log(1/sin(len/4)).
double arc_equilibrium_energy(double arclength);

// Capacity bound for any set of chordal diameter d: the enclosing arc's
// capacity 1/log(1/sin(asin(d/2)/2)).
double arc_capacity_bound(double diameter);

struct EquilibriumOptions {
  int n_cells = 256;
  int max_iter = 20000;
  double tol = 1e-13;  // relative flatness of the objective before stopping
  bool polish = true;  // active-set solve after the projected gradient phase
};

struct EquilibriumResult {
  DiscreteMeasure measure;
  double energy = 0.0;
  double kkt_residual = 0.0;  // relative flatness of the potential on the support
  int iterations = 0;
  bool polished = false;
};

// Minimizes the logarithmic energy over probability measures on the cell
// discretization of the set.
EquilibriumResult equilibrium_measure(const CircleSet& set, const EquilibriumOptions& opt = {});

// Reciprocal of the equilibrium energy; 0 for empty or finite sets, infinity
// for the full circle.
double capacity(const CircleSet& set, const EquilibriumOptions& opt = {});

// Reciprocal of the integral of ds/|E_s| from t to 2.
double capacity_upper_bound(const CircleSet& set, double t);

}  // namespace dzeros
