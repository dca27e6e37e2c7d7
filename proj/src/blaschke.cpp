#include "dzeros/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "dzeros/util.hpp"

namespace dzeros {

double Zero::boundary_distance(double phi) const {
  double rr = r();
  double s = std::sin(0.5 * (phi - theta));
  double d2 = one_minus_r * one_minus_r + 4.0 * rr * s * s;
  return std::sqrt(std::max(d2, 0.0));
}

Zero make_zero(double theta, double one_minus_r) {
  if (!(one_minus_r > 0.0 && one_minus_r <= 1.0))
    throw std::domain_error("make_zero: 1 - r must lie in (0, 1]");
  Zero z;
  z.theta = normalize_angle(theta);
  z.one_minus_r = one_minus_r;
  // -log form stays finite for subnormal 1 - r where 1/(1 - r) overflows
  z.abs_log_one_minus_r = -std::log(one_minus_r);
  return z;
}

Zero make_zero_log(double theta, double abs_log_one_minus_r) {
  if (!(abs_log_one_minus_r >= 0.0))
    throw std::domain_error("make_zero_log: log(1/(1-r)) must be nonnegative");
  Zero z;
  z.theta = normalize_angle(theta);
  z.one_minus_r = std::exp(-abs_log_one_minus_r);
  z.abs_log_one_minus_r = abs_log_one_minus_r;
  return z;
}

ZeroSequence::ZeroSequence(Generator gen, std::uint64_t size, std::string label)
    : gen_(std::move(gen)), size_(size), label_(std::move(label)) {
  if (!gen_) throw std::invalid_argument("ZeroSequence: missing generator");
}

ZeroSequence ZeroSequence::from_zeros(std::vector<Zero> zeros, std::string label) {
  auto owned = std::make_shared<std::vector<Zero>>(std::move(zeros));
  std::uint64_t n = owned->size();
  return ZeroSequence([owned](std::uint64_t i) { return (*owned)[i - 1]; }, n, std::move(label));
}

ZeroSequence ZeroSequence::from_points(const std::vector<std::complex<double>>& pts,
                                       std::string label) {
  std::vector<Zero> zs;
  zs.reserve(pts.size());
  for (const auto& p : pts) {
    double rho = std::abs(p);
    if (!(rho < 1.0)) throw std::domain_error("ZeroSequence: zeros must lie inside the disk");
    zs.push_back(make_zero(std::atan2(p.imag(), p.real()), 1.0 - rho));
  }
  return from_zeros(std::move(zs), std::move(label));
}

Zero ZeroSequence::at(std::uint64_t n) const {
  if (n < 1 || n > size_) throw std::out_of_range("ZeroSequence: index out of range");
  return gen_(n);
}

void ZeroSequence::for_each(std::uint64_t n_max,
                            const std::function<void(std::uint64_t, const Zero&)>& fn) const {
  std::uint64_t stop = std::min(n_max, size_);
  for (std::uint64_t n = 1; n <= stop; ++n) {
    Zero z = gen_(n);
    fn(n, z);
  }
}

std::vector<Zero> ZeroSequence::materialize(std::uint64_t n_max) const {
  std::vector<Zero> out;
  out.reserve(std::min<std::uint64_t>(n_max, size_));
  for_each(n_max, [&](std::uint64_t, const Zero& z) { out.push_back(z); });
  return out;
}

PartialSumSeries blaschke_sum(const ZeroSequence& seq, std::uint64_t n_max,
                              const VerdictPolicy& policy) {
  std::uint64_t stop = std::min(n_max, seq.size());
  return accumulate_series([&](std::uint64_t n) { return seq.at(n).one_minus_r; }, stop, policy);
}

std::complex<double> evaluate_product(const std::vector<Zero>& zeros, std::complex<double> z) {
  if (std::abs(z) > 1.0 + 1e-12)
    throw std::domain_error("evaluate_product: point outside the closed disk");
  std::complex<double> acc = 1.0;
  for (const Zero& zr : zeros) {
    double r = zr.r();
    if (r == 0.0) {
      acc *= z;
      continue;
    }
    std::complex<double> a = std::polar(r, zr.theta);
    acc *= std::polar(1.0, -zr.theta) * (a - z) / (1.0 - std::conj(a) * z);
  }
  return acc;
}

namespace {

std::vector<std::complex<double>> factor_series(const Zero& zr) {
  double r = zr.r();
  if (r == 0.0) return {0.0, 1.0};
  if (!(zr.one_minus_r > 1e-6)) {
    throw std::domain_error(
        "product_series: zero with 1 - r = " + fmt17(zr.one_minus_r) +
        " needs more than a million geometric terms; keep 1 - r above 1e-6");
  }
  double spread = zr.one_minus_r * (1.0 + r);  // 1 - r^2
  int K = 2 + int(std::ceil(std::log(1e18 * spread) / std::log(1.0 / r)));
  K = std::max(K, 2);
  std::vector<std::complex<double>> c(K + 1);
  c[0] = r;
  std::complex<double> abar = std::polar(r, -zr.theta);
  std::complex<double> tail = -std::polar(1.0, -zr.theta) * spread;
  for (int k = 1; k <= K; ++k) {
    c[k] = tail;
    tail *= abar;
  }
  return c;
}

void trim_below(std::vector<std::complex<double>>& c, double floor) {
  std::size_t n = c.size();
  while (n > 1 && std::abs(c[n - 1]) < floor) --n;
  c.resize(n);
}

}  // namespace

PowerSeries product_series(const std::vector<Zero>& zeros) {
  std::vector<std::complex<double>> acc{1.0};
  for (const Zero& zr : zeros) {
    auto f = factor_series(zr);
    std::vector<std::complex<double>> next(acc.size() + f.size() - 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += acc[i] * f[j];
    trim_below(next, 1e-18);
    acc = std::move(next);
  }
  return PowerSeries(std::move(acc));
}

PartialSumSeries frostman_sum(const ZeroSequence& seq, double phi, std::uint64_t n_max,
                              const VerdictPolicy& policy) {
  std::uint64_t stop = std::min(n_max, seq.size());
  return accumulate_series(
      [&](std::uint64_t n) {
        Zero z = seq.at(n);
        double d = z.boundary_distance(phi);
        if (d == 0.0)
          throw std::domain_error("frostman_sum: a sequence zero sits on the circle at phi");
        double spread = z.one_minus_r * (1.0 + z.r());
        return spread / (d * d);
      },
      stop, policy);
}

double lambda0(const ZeroSequence& seq, std::uint64_t n_max) {
  KahanSum s;
  seq.for_each(n_max,
               [&](std::uint64_t, const Zero& z) { s.add(z.one_minus_r * (1.0 + z.r())); });
  return 0.25 * s.value();
}

double boundary_kernel_sum(const std::vector<Zero>& zeros, double phi) {
  KahanSum s;
  for (const Zero& z : zeros) {
    double d = z.boundary_distance(phi);
    double spread = z.one_minus_r * (1.0 + z.r());
    if (d == 0.0) throw std::domain_error("boundary_kernel_sum: evaluation at a boundary zero");
    s.add(spread / (d * d));
  }
  return s.value();
}

LevelSetReport exceptional_level_set(const std::vector<Zero>& zeros, double lambda,
                                     int grid_size) {
  if (grid_size < 8) throw std::domain_error("exceptional_level_set: grid too small");
  LevelSetReport rep;
  rep.grid_size = grid_size;
  std::vector<bool> flag(grid_size);
  double h = kTwoPi / grid_size;
  for (int j = 0; j < grid_size; ++j) {
    double F = boundary_kernel_sum(zeros, j * h);
    // closed level set, with slack so an exactly-attained level counts
    flag[j] = F >= lambda * (1.0 - 1e-12);
    if (flag[j]) ++rep.flagged;
  }
  rep.measure = rep.flagged * h;
  std::vector<Arc> arcs;
  int j = 0;
  while (j < grid_size) {
    if (!flag[j]) {
      ++j;
      continue;
    }
    int start = j;
    while (j < grid_size && flag[j]) ++j;
    arcs.push_back(Arc((start - 0.5) * h, (j - 0.5) * h));
  }
  // merge a run crossing the seam
  rep.set = CircleSet::from_arcs(std::move(arcs));
  return rep;
}

double carleson_rhs(const std::vector<Zero>& zeros, std::span<const double> magnitudes) {
  if (zeros.empty()) return 0.0;
  double min_gap = 1.0;
  for (const Zero& z : zeros) min_gap = std::min(min_gap, z.one_minus_r);
  if (!(min_gap > 0.0)) throw std::domain_error("carleson_rhs: zero lies on the boundary");
  std::size_t required = std::size_t(std::ceil(64.0 / min_gap));
  if (magnitudes.size() < required)
    throw std::domain_error("carleson_rhs: boundary grid too coarse, need at least " +
                            std::to_string(required) + " samples");
  const std::size_t M = magnitudes.size();
  KahanSum total;
  for (const Zero& z : zeros) {
    double spread = z.one_minus_r * (1.0 + z.r());
    KahanSum inner;
    for (std::size_t j = 0; j < M; ++j) {
      double d = z.boundary_distance(kTwoPi * double(j) / double(M));
      inner.add(magnitudes[j] * magnitudes[j] / (d * d));
    }
    total.add(spread * inner.value());
  }
  return total.value() / double(M);
}

CarlesonCheckReport carleson_check(const std::vector<Zero>& zeros, const PowerSeries& f,
                                   int grid_size) {
  CarlesonCheckReport rep;
  PowerSeries B = product_series(zeros);
  rep.lhs = dirichlet_norm(B.times(f));
  rep.base = dirichlet_norm(f);
  if (grid_size == 0) {
    double min_gap = 1.0;
    for (const Zero& z : zeros) min_gap = std::min(min_gap, z.one_minus_r);
    double need = std::max(1024.0, 64.0 / min_gap);
    grid_size = 1024;
    while (grid_size < need) grid_size *= 2;
  }
  std::vector<double> mags(grid_size);
  for (int j = 0; j < grid_size; ++j)
    mags[j] = std::abs(f.evaluate(std::polar(1.0, kTwoPi * double(j) / grid_size)));
  rep.boundary = carleson_rhs(zeros, mags);
  rep.rel_error = std::fabs(rep.lhs - rep.base - rep.boundary) / std::max(1.0, std::fabs(rep.lhs));
  return rep;
}

Arc frostman_arc(const Zero& z) {
  double c2 = z.one_minus_r * z.abs_log_one_minus_r;
  double c = std::sqrt(std::max(c2, 0.0));
  if (c >= 2.0) return Arc(0.0, kTwoPi);
  double half = std::asin(0.5 * c);
  return Arc(z.theta - half, z.theta + half);
}

CoverBoundReport exceptional_cover_bound(const ZeroSequence& seq, std::uint64_t n_max) {
  std::uint64_t stop = std::min(n_max, seq.size());
  if (stop < 1) throw std::domain_error("exceptional_cover_bound: empty sequence");
  if (stop > (std::uint64_t(1) << 24))
    throw std::domain_error("exceptional_cover_bound: tail table too large");
  std::vector<double> cap_term(stop), car_term(stop);
  for (std::uint64_t n = 1; n <= stop; ++n) {
    Zero z = seq.at(n);
    Arc I = frostman_arc(z);
    double len = I.arclength();
    if (len >= kTwoPi) {
      CoverBoundReport rep;
      rep.vacuous = true;
      return rep;
    }
    if (len <= 0.0) {
      cap_term[n - 1] = 0.0;
      car_term[n - 1] = 0.0;
    } else {
      // enclosing arc of an arc is itself
      cap_term[n - 1] = 1.0 / std::log(1.0 / std::sin(0.25 * len));
      car_term[n - 1] = len * std::log(1.0 / len);
    }
  }
  CoverBoundReport rep;
  rep.tail_start = dyadic_cutoffs(stop);
  std::vector<double> cap_suffix(stop + 1, 0.0), car_suffix(stop + 1, 0.0);
  for (std::uint64_t n = stop; n >= 1; --n) {
    cap_suffix[n - 1] = cap_suffix[n] + cap_term[n - 1];
    car_suffix[n - 1] = car_suffix[n] + car_term[n - 1];
  }
  for (std::uint64_t start : rep.tail_start) {
    rep.capacity_bound.push_back(cap_suffix[start - 1]);
    rep.carleson_sum.push_back(car_suffix[start - 1]);
  }
  return rep;
}

}  // namespace dzeros
