#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dzeros/circle_sets.hpp"
#include "dzeros/dirichlet.hpp"
#include "dzeros/partial_sums.hpp"

namespace dzeros {

// Zero of modulus 1 - one_minus_r at angle theta. The distance to the circle
// is stored directly so moduli like 1 - n^{-n} survive; abs_log_one_minus_r
// carries log(1/(1-r)) even when one_minus_r underflows to zero.
struct Zero {
  double theta = 0.0;
  double one_minus_r = 0.0;
  double abs_log_one_minus_r = 0.0;

  double r() const { return 1.0 - one_minus_r; }
  std::complex<double> point() const { return std::polar(r(), theta); }
  // chordal distance to e^{i phi}, stable near the circle
  double boundary_distance(double phi) const;
};

Zero make_zero(double theta, double one_minus_r);
// from L = log(1/(1-r)); 1 - r may underflow to zero, the log form stays exact
Zero make_zero_log(double theta, double abs_log_one_minus_r);

// Lazily indexed family of zeros; index is 1-based.
class ZeroSequence {
public:
  using Generator = std::function<Zero(std::uint64_t)>;

  ZeroSequence() = default;
  ZeroSequence(Generator gen, std::uint64_t size, std::string label);
  static ZeroSequence from_zeros(std::vector<Zero> zeros, std::string label = "explicit");
  static ZeroSequence from_points(const std::vector<std::complex<double>>& pts,
                                  std::string label = "points");

  std::uint64_t size() const { return size_; }
  const std::string& label() const { return label_; }
  Zero at(std::uint64_t n) const;
  void for_each(std::uint64_t n_max,
                const std::function<void(std::uint64_t, const Zero&)>& fn) const;
  std::vector<Zero> materialize(std::uint64_t n_max) const;

private:
  Generator gen_;
  std::uint64_t size_ = 0;
  std::string label_;
};

// Partial sums of sum (1 - r_n).
PartialSumSeries blaschke_sum(const ZeroSequence& seq, std::uint64_t n_max,
                              const VerdictPolicy& policy = {});

// Finite product of disk automorphism factors vanishing at the given zeros.
std::complex<double> evaluate_product(const std::vector<Zero>& zeros, std::complex<double> z);

// Exact power series of the product: each factor expands through a geometric
// series truncated below 1e-18.
PowerSeries product_series(const std::vector<Zero>& zeros);

// Partial sums of sum (1 - |z_n|^2)/|e^{i phi} - z_n|^2.
PartialSumSeries frostman_sum(const ZeroSequence& seq, double phi, std::uint64_t n_max,
                              const VerdictPolicy& policy = {});

// Trivial floor of the kernel sum: |e^{i phi} - z_n| <= 2 gives
// F(phi) >= sum (1 - |z_n|^2)/4 at every boundary angle.
double lambda0(const ZeroSequence& seq, std::uint64_t n_max);

// sum (1 - |z_n|^2)/|zeta - z_n|^2 at zeta = e^{i phi}
double boundary_kernel_sum(const std::vector<Zero>& zeros, double phi);

struct LevelSetReport {
  CircleSet set;        // union of grid cells where the kernel sum exceeds lambda
  double measure = 0.0;
  int flagged = 0;
  int grid_size = 0;
};

LevelSetReport exceptional_level_set(const std::vector<Zero>& zeros, double lambda,
                                     int grid_size = 4096);

// (1/2pi) integral of the kernel sum times |f|^2 over the circle; the grid
// must resolve the sharpest zero, size >= 64/(min one_minus_r).
double carleson_rhs(const std::vector<Zero>& zeros, std::span<const double> magnitudes);

struct CarlesonCheckReport {
  double lhs = 0.0;       // Dirichlet norm of B f
  double base = 0.0;      // Dirichlet norm of f
  double boundary = 0.0;  // kernel-sum boundary integral
  double rel_error = 0.0;
};

// Norm identity for multiplying by the zero product: lhs = base + boundary.
CarlesonCheckReport carleson_check(const std::vector<Zero>& zeros, const PowerSeries& f,
                                   int grid_size = 0);

// Arc around the zero of chord (one_minus_r * log(1/one_minus_r))^{1/2}.
Arc frostman_arc(const Zero& z);

struct CoverBoundReport {
  std::vector<std::uint64_t> tail_start;  // cover uses zeros with index >= tail_start
  std::vector<double> capacity_bound;     // sum of per-arc capacity bounds
  std::vector<double> carleson_sum;       // sum of |I| log(1/|I|) over the cover
  bool vacuous = false;                   // some arc filled the circle
};

// Tail covers of the set where the zeros crowd the boundary: capacity and
// interval-length sums over the frostman arcs with index >= N at dyadic N.
CoverBoundReport exceptional_cover_bound(const ZeroSequence& seq, std::uint64_t n_max);

}  // namespace dzeros
