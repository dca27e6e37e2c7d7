#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "dzeros/partial_sums.hpp"

namespace dzeros {

// Closed arc of the unit circle. theta_start lies in [0, 2*pi); theta_end is
// stored unwrapped in [theta_start, theta_start + 2*pi], so an arc crossing
// angle 0 has theta_end > 2*pi. A degenerate arc (single point) has zero
// arclength; the full circle has arclength 2*pi.
struct Arc {
  double theta_start = 0.0;
  double theta_end = 0.0;

  Arc() = default;
  Arc(double start, double end);

  double arclength() const { return theta_end - theta_start; }
  double midpoint() const { return 0.5 * (theta_start + theta_end); }
  bool contains_angle(double phi) const;
};

// Finite union of closed arcs in canonical form: arcs crossing 0 are split at
// 0, then sorted by start angle, with overlapping or touching arcs merged
// (except across angle 0, where the split is kept for canonical ordering).
class CircleSet {
public:
  CircleSet() = default;
  static CircleSet from_arcs(std::vector<Arc> arcs);
  static CircleSet full_circle();
  static CircleSet point(double theta);
  static CircleSet points(const std::vector<double>& thetas);

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }
  bool is_full_circle() const;
  double measure() const;

  bool contains_angle(double phi) const;

  // Euclidean (chordal) distance from a point of the closed unit disk.
  double distance(std::complex<double> z) const;
  double distance_angle(double phi) const;  // point e^{i phi}

  // Closed chordal t-neighborhood intersected with the circle.
  CircleSet neighborhood(double t) const;

  // Maximal open arcs of the complement, sorted by start angle.
  std::vector<Arc> complementary_intervals() const;

  // Endpoint angles of all arcs (one angle per degenerate arc), sorted,
  // deduplicated; these are the ray directions used for argument assignment.
  std::vector<double> endpoint_angles() const;

private:
  std::vector<Arc> arcs_;
};

// Nested interval lengths of a generalized Cantor construction on the circle:
// ell[0] = 2*pi and each level-(n-1) interval of length ell[n-1] splits into
// two of length ell[n] around a removed middle gap lambda[n] > 0.
struct CantorSpec {
  std::vector<double> ell;          // ell[0..depth]
  std::vector<double> log_inv_ell;  // log(1/ell[n]), kept exact for generated specs
  int depth = 0;

  static CantorSpec perfect_symmetric(double ratio, int depth);
  static CantorSpec from_lengths(std::vector<double> lengths);
  // lengths ell_n = 2*pi*exp(-2^n/n^s), adjusted where the raw formula would
  // break the middle-gap invariant (ell_n <- min(formula, ell_{n-1}/3)).
  static CantorSpec stretched_exponential(double s, int depth);

  double lambda(int n) const;  // removed gap at level n, 1 <= n <= depth
  void validate() const;
};

// Level-k set of the construction: 2^k closed arcs (stored split at 0).
CircleSet cantor_level(const CantorSpec& spec, int k);

// Sum of |I| log(1/|I|) over complementary intervals, largest first.
PartialSumSeries carleson_criterion(const CircleSet& set, const VerdictPolicy& policy = {});
// Same criterion in Cantor form: terms 2^n lambda_n log(1/lambda_n).
PartialSumSeries carleson_criterion(const CantorSpec& spec, int n_max,
                                    const VerdictPolicy& policy = {});

// Closed-form arclength of the chordal s-neighborhood, plus the integral
// of ds/|E_s| with panel breaks where complementary gaps close.
class NeighborhoodMeasureProfile {
public:
  explicit NeighborhoodMeasureProfile(const CircleSet& set);
  double measure_at(double s) const;
  double integral(double t, double t_max) const;

private:
  double measure_open(double x) const;  // x = arclength removed per open gap

  std::vector<double> gaps_;        // complementary gap widths, ascending
  std::vector<double> gap_suffix_;  // suffix sums of gaps_
};

double inverse_measure_integral(const CircleSet& set, double t, double t_max = 2.0);

struct CantorCriteriaReport {
  PartialSumSeries measure_sum;    // sum 2^{n-1} lambda_n, limit 2*pi iff |E| = 0
  PartialSumSeries capacity_sum;   // sum 2^{-n} log(1/ell_n), divergence iff cap E = 0
  PartialSumSeries carleson_sum;   // sum 2^n lambda_n log(1/lambda_n)
  double measure_gap = 0.0;        // 2*pi minus the measure_sum total
  bool measure_zero = false;
  bool capacity_zero = false;
  bool carleson_set = false;
};

CantorCriteriaReport cantor_criteria(const CantorSpec& spec, int n_max,
                                     const VerdictPolicy& policy = {});

}  // namespace dzeros
