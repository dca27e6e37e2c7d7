#include "dzeros/circle_sets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dzeros/quadrature.hpp"
#include "dzeros/util.hpp"

namespace dzeros {

Arc::Arc(double start, double end) {
  double len = end - start;
  if (len < 0.0) {
    len = std::fmod(len, kTwoPi) + kTwoPi;
  } else if (len > kTwoPi) {
    double r = std::fmod(len, kTwoPi);
    len = (r == 0.0) ? kTwoPi : r;
  }
  theta_start = normalize_angle(start);
  theta_end = theta_start + len;
}

bool Arc::contains_angle(double phi) const {
  double p = normalize_angle(phi);
  if (p >= theta_start && p <= theta_end) return true;
  p += kTwoPi;
  return p >= theta_start && p <= theta_end;
}

CircleSet CircleSet::from_arcs(std::vector<Arc> arcs) {
  CircleSet out;
  if (arcs.empty()) return out;
  // split wrap-around arcs at angle 0
  std::vector<Arc> flat;
  flat.reserve(arcs.size() + 4);
  for (const Arc& a : arcs) {
    if (a.arclength() >= kTwoPi) {
      out.arcs_.assign(1, Arc(0.0, kTwoPi));
      return out;
    }
    if (a.theta_end > kTwoPi) {
      Arc left(0.0, 0.0), right(0.0, 0.0);
      right.theta_start = a.theta_start;
      right.theta_end = kTwoPi;
      left.theta_start = 0.0;
      left.theta_end = a.theta_end - kTwoPi;
      flat.push_back(right);
      flat.push_back(left);
    } else {
      flat.push_back(a);
    }
  }
  std::sort(flat.begin(), flat.end(), [](const Arc& x, const Arc& y) {
    return x.theta_start < y.theta_start || (x.theta_start == y.theta_start && x.theta_end < y.theta_end);
  });
  std::vector<Arc>& merged = out.arcs_;
  for (const Arc& a : flat) {
    if (!merged.empty() && a.theta_start <= merged.back().theta_end) {
      merged.back().theta_end = std::max(merged.back().theta_end, a.theta_end);
    } else {
      merged.push_back(a);
    }
  }
  if (merged.size() == 1 && merged.front().arclength() >= kTwoPi - 1e-15) {
    merged.front() = Arc(0.0, kTwoPi);
  }
  return out;
}

CircleSet CircleSet::full_circle() {
  CircleSet s;
  s.arcs_.assign(1, Arc(0.0, kTwoPi));
  return s;
}

CircleSet CircleSet::point(double theta) {
  double t = normalize_angle(theta);
  CircleSet s;
  Arc a;
  a.theta_start = t;
  a.theta_end = t;
  s.arcs_.assign(1, a);
  return s;
}

CircleSet CircleSet::points(const std::vector<double>& thetas) {
  std::vector<Arc> arcs;
  arcs.reserve(thetas.size());
  for (double t : thetas) {
    double n = normalize_angle(t);
    Arc a;
    a.theta_start = n;
    a.theta_end = n;
    arcs.push_back(a);
  }
  return from_arcs(std::move(arcs));
}

bool CircleSet::is_full_circle() const {
  return arcs_.size() == 1 && arcs_.front().arclength() >= kTwoPi - 1e-15;
}

double CircleSet::measure() const {
  KahanSum s;
  for (const Arc& a : arcs_) s.add(a.arclength());
  return std::min(s.value(), kTwoPi);
}

bool CircleSet::contains_angle(double phi) const {
  double p = normalize_angle(phi);
  for (const Arc& a : arcs_) {
    if (p >= a.theta_start && p <= a.theta_end) return true;
    if (p == 0.0 && a.theta_end >= kTwoPi) return true;
  }
  return false;
}

namespace {

// |z - e^{i psi}| with z = rho e^{i phi}, stable near the circle
double point_to_circle_point(double rho, double phi, double psi) {
  double s = std::sin(0.5 * (phi - psi));
  double d2 = (1.0 - rho) * (1.0 - rho) + 4.0 * rho * s * s;
  return std::sqrt(std::max(d2, 0.0));
}

double point_to_arc(double rho, double phi, const Arc& a) {
  if (a.contains_angle(phi)) return std::fabs(1.0 - rho);
  double d1 = point_to_circle_point(rho, phi, a.theta_start);
  double d2 = point_to_circle_point(rho, phi, a.theta_end);
  return std::min(d1, d2);
}

}  // namespace

double CircleSet::distance(std::complex<double> z) const {
  if (arcs_.empty()) throw std::domain_error("CircleSet::distance: empty set");
  double rho = std::abs(z);
  if (rho > 1.0 + 1e-12) throw std::domain_error("CircleSet::distance: point outside closed disk");
  if (rho == 0.0) return 1.0;
  double phi = normalize_angle(std::atan2(z.imag(), z.real()));
  std::size_t m = arcs_.size();
  if (m <= 16) {
    double best = 4.0;
    for (const Arc& a : arcs_) best = std::min(best, point_to_arc(rho, phi, a));
    return best;
  }
  // arcs are sorted by start angle; the chordal distance is minimized on an
  // arc adjacent in angle, so probing a few neighbors suffices
  std::size_t lo = 0, hi = m;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (arcs_[mid].theta_start <= phi)
      lo = mid + 1;
    else
      hi = mid;
  }
  double best = 4.0;
  for (long off = -2; off <= 1; ++off) {
    std::size_t idx = (lo + m + static_cast<std::size_t>(off + static_cast<long>(m))) % m;
    best = std::min(best, point_to_arc(rho, phi, arcs_[idx]));
  }
  return best;
}

double CircleSet::distance_angle(double phi) const {
  return distance(std::polar(1.0, phi));
}

CircleSet CircleSet::neighborhood(double t) const {
  if (t < 0.0) throw std::domain_error("CircleSet::neighborhood: negative radius");
  if (arcs_.empty()) return CircleSet();
  if (t == 0.0) return *this;
  if (t >= 2.0) return full_circle();
  double alpha = 2.0 * std::asin(0.5 * t);
  std::vector<Arc> dilated;
  dilated.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    if (a.arclength() + 2.0 * alpha >= kTwoPi) return full_circle();
    dilated.push_back(Arc(a.theta_start - alpha, a.theta_end + alpha));
  }
  return from_arcs(std::move(dilated));
}

std::vector<Arc> CircleSet::complementary_intervals() const {
  std::vector<Arc> gaps;
  if (arcs_.empty()) {
    gaps.push_back(Arc(0.0, kTwoPi));
    return gaps;
  }
  if (is_full_circle()) return gaps;
  std::size_t m = arcs_.size();
  for (std::size_t i = 0; i < m; ++i) {
    double gap_start = arcs_[i].theta_end;
    double gap_end = (i + 1 < m) ? arcs_[i + 1].theta_start : arcs_[0].theta_start + kTwoPi;
    if (gap_end - gap_start > 0.0) gaps.push_back(Arc(gap_start, gap_end));
  }
  std::sort(gaps.begin(), gaps.end(),
            [](const Arc& x, const Arc& y) { return x.theta_start < y.theta_start; });
  return gaps;
}

std::vector<double> CircleSet::endpoint_angles() const {
  std::vector<double> out;
  out.reserve(2 * arcs_.size());
  for (const Arc& a : arcs_) {
    out.push_back(normalize_angle(a.theta_start));
    if (a.arclength() > 0.0) out.push_back(normalize_angle(a.theta_end));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CantorSpec CantorSpec::perfect_symmetric(double ratio, int depth) {
  if (!(ratio > 0.0 && ratio < 0.5))
    throw std::domain_error("CantorSpec::perfect_symmetric: ratio must lie in (0, 1/2)");
  if (depth < 0) throw std::domain_error("CantorSpec::perfect_symmetric: negative depth");
  CantorSpec s;
  s.depth = depth;
  s.ell.resize(depth + 1);
  s.log_inv_ell.resize(depth + 1);
  double log_inv_ratio = std::log(1.0 / ratio);
  for (int n = 0; n <= depth; ++n) {
    s.ell[n] = kTwoPi * std::pow(ratio, n);
    s.log_inv_ell[n] = n * log_inv_ratio - std::log(kTwoPi);
  }
  s.validate();
  return s;
}

CantorSpec CantorSpec::from_lengths(std::vector<double> lengths) {
  if (lengths.empty()) throw std::domain_error("CantorSpec: empty length list");
  if (std::fabs(lengths[0] - kTwoPi) > 1e-9)
    throw std::domain_error("CantorSpec: ell_0 must equal the full circumference");
  lengths[0] = kTwoPi;
  CantorSpec s;
  s.depth = static_cast<int>(lengths.size()) - 1;
  s.ell = std::move(lengths);
  s.log_inv_ell.resize(s.ell.size());
  for (std::size_t i = 0; i < s.ell.size(); ++i) s.log_inv_ell[i] = std::log(1.0 / s.ell[i]);
  s.validate();
  return s;
}

CantorSpec CantorSpec::stretched_exponential(double s_exp, int depth) {
  if (!(s_exp > 0.0 && s_exp <= 1.0))
    throw std::domain_error("CantorSpec::stretched_exponential: s must lie in (0, 1]");
  if (depth < 1) throw std::domain_error("CantorSpec::stretched_exponential: depth must be >= 1");
  CantorSpec s;
  s.depth = depth;
  s.ell.resize(depth + 1);
  s.log_inv_ell.resize(depth + 1);
  s.ell[0] = kTwoPi;
  s.log_inv_ell[0] = -std::log(kTwoPi);
  const double log3 = std::log(3.0);
  for (int n = 1; n <= depth; ++n) {
    double f = std::pow(2.0, n) / std::pow(double(n), s_exp);
    double raw_log_inv = f - std::log(kTwoPi);
    // keep the middle gap positive where the raw formula is not yet decreasing
    double patched_log_inv = std::max(raw_log_inv, s.log_inv_ell[n - 1] + log3);
    s.log_inv_ell[n] = patched_log_inv;
    s.ell[n] = std::exp(-patched_log_inv);
    if (s.ell[n] <= 0.0)
      throw std::domain_error("CantorSpec::stretched_exponential: depth exceeds double range");
  }
  s.validate();
  return s;
}

double CantorSpec::lambda(int n) const {
  if (n < 1 || n > depth) throw std::out_of_range("CantorSpec::lambda: level out of range");
  return ell[n - 1] - 2.0 * ell[n];
}

void CantorSpec::validate() const {
  if (static_cast<int>(ell.size()) != depth + 1 || ell.size() != log_inv_ell.size())
    throw std::invalid_argument("CantorSpec: inconsistent lengths");
  for (int n = 0; n <= depth; ++n)
    if (!(ell[n] > 0.0)) throw std::domain_error("CantorSpec: lengths must be positive");
  for (int n = 1; n <= depth; ++n)
    if (!(ell[n - 1] - 2.0 * ell[n] > 0.0))
      throw std::domain_error("CantorSpec: middle gap must stay positive at every level");
}

CircleSet cantor_level(const CantorSpec& spec, int k) {
  if (k < 0 || k > spec.depth) throw std::out_of_range("cantor_level: level out of range");
  if (k > 26) throw std::domain_error("cantor_level: level too deep to materialize");
  if (k == 0) return CircleSet::full_circle();
  std::vector<double> starts{0.0};
  for (int j = 0; j < k; ++j) {
    std::vector<double> next;
    next.reserve(starts.size() * 2);
    double shift = spec.ell[j] - spec.ell[j + 1];
    for (double a : starts) {
      next.push_back(a);
      next.push_back(a + shift);
    }
    starts = std::move(next);
  }
  std::vector<Arc> arcs;
  arcs.reserve(starts.size());
  for (double a : starts) arcs.push_back(Arc(a, a + spec.ell[k]));
  return CircleSet::from_arcs(std::move(arcs));
}

namespace {

// Signed head terms are allowed: a gap of length >= 1 contributes a negative
// |I| log(1/|I|) term, which does not affect the convergence question.
PartialSumSeries accumulate_signed(const std::vector<double>& terms, const VerdictPolicy& policy) {
  PartialSumSeries out;
  out.cutoffs = dyadic_cutoffs(terms.size());
  KahanSum acc;
  std::size_t next = 0;
  for (std::size_t n = 1; n <= terms.size(); ++n) {
    acc.add(terms[n - 1]);
    if (n == out.cutoffs[next]) {
      out.sums.push_back(acc.value());
      ++next;
    }
  }
  VerdictDiagnostics d;
  out.verdict = assess_verdict(out.cutoffs, out.sums, policy, &d);
  out.last_increment = d.last_increment;
  out.growth_slope = d.growth_slope;
  return out;
}

}  // namespace

PartialSumSeries carleson_criterion(const CircleSet& set, const VerdictPolicy& policy) {
  std::vector<Arc> gaps = set.complementary_intervals();
  std::vector<double> lens;
  lens.reserve(gaps.size());
  for (const Arc& g : gaps) lens.push_back(g.arclength());
  std::sort(lens.begin(), lens.end(), std::greater<double>());
  std::vector<double> terms;
  terms.reserve(lens.size());
  for (double L : lens) terms.push_back(L * std::log(1.0 / L));
  if (terms.empty()) terms.push_back(0.0);
  return accumulate_signed(terms, policy);
}

PartialSumSeries carleson_criterion(const CantorSpec& spec, int n_max,
                                    const VerdictPolicy& policy) {
  if (n_max < 1 || n_max > spec.depth)
    throw std::out_of_range("carleson_criterion: level range exceeds spec depth");
  std::vector<double> terms;
  terms.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    double lam = spec.lambda(n);
    terms.push_back(std::pow(2.0, n) * lam * std::log(1.0 / lam));
  }
  return accumulate_signed(terms, policy);
}

NeighborhoodMeasureProfile::NeighborhoodMeasureProfile(const CircleSet& set) {
  if (set.empty()) throw std::domain_error("NeighborhoodMeasureProfile: empty set");
  for (const Arc& g : set.complementary_intervals()) gaps_.push_back(g.arclength());
  std::sort(gaps_.begin(), gaps_.end());
  gap_suffix_.assign(gaps_.size() + 1, 0.0);
  for (std::size_t i = gaps_.size(); i-- > 0;) gap_suffix_[i] = gap_suffix_[i + 1] + gaps_[i];
}

double NeighborhoodMeasureProfile::measure_open(double x) const {
  auto it = std::upper_bound(gaps_.begin(), gaps_.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - gaps_.begin());
  double open = gap_suffix_[idx] - x * static_cast<double>(gaps_.size() - idx);
  return std::min(kTwoPi, kTwoPi - open);
}

double NeighborhoodMeasureProfile::measure_at(double s) const {
  if (s < 0.0) throw std::domain_error("NeighborhoodMeasureProfile: negative radius");
  if (s >= 2.0) return kTwoPi;
  // each still-open gap loses arclength twice the dilation angle
  return measure_open(4.0 * std::asin(0.5 * s));
}

double NeighborhoodMeasureProfile::integral(double t, double t_max) const {
  if (!(t > 0.0)) throw std::domain_error("inverse_measure_integral: lower limit must be positive");
  if (!(t_max <= 2.0) || !(t <= t_max))
    throw std::domain_error("inverse_measure_integral: need 0 < t <= t_max <= 2");
  if (t == t_max) return 0.0;
  // substitute s = 2 sin(u/2): the set measure is piecewise linear in u and
  // the square-root behavior of ds/du at s = 2 disappears
  double u_lo = 2.0 * std::asin(0.5 * t);
  double u_hi = 2.0 * std::asin(0.5 * t_max);
  std::vector<double> pts;
  pts.push_back(u_lo);
  for (double g : gaps_) {
    double u = 0.5 * g;  // dilation angle closing this gap
    if (u > u_lo && u < u_hi && u > pts.back() + 1e-15) pts.push_back(u);
  }
  pts.push_back(u_hi);
  // geometric filler keeps panels short where the integrand varies on scale u
  std::vector<double> fine;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    fine.push_back(pts[i]);
    for (double x = 2.0 * pts[i]; x < pts[i + 1]; x *= 2.0) fine.push_back(x);
  }
  fine.push_back(pts.back());
  auto f = [this](double u) { return std::cos(0.5 * u) / measure_open(2.0 * u); };
  return integrate_panels(f, fine, 16);
}

double inverse_measure_integral(const CircleSet& set, double t, double t_max) {
  return NeighborhoodMeasureProfile(set).integral(t, t_max);
}

CantorCriteriaReport cantor_criteria(const CantorSpec& spec, int n_max,
                                     const VerdictPolicy& policy) {
  if (n_max < 1 || n_max > spec.depth)
    throw std::out_of_range("cantor_criteria: level range exceeds spec depth");
  CantorCriteriaReport rep;
  rep.measure_sum = accumulate_series(
      [&](std::uint64_t n) { return std::pow(2.0, double(n) - 1.0) * spec.lambda(int(n)); },
      n_max, policy);
  rep.measure_gap = kTwoPi - rep.measure_sum.total();
  rep.measure_zero = rep.measure_gap <= 1e-6;

  std::vector<double> cap_terms;
  cap_terms.reserve(n_max);
  for (int n = 1; n <= n_max; ++n)
    cap_terms.push_back(std::pow(2.0, -n) * spec.log_inv_ell[n]);
  {
    PartialSumSeries cap;
    cap.cutoffs = dyadic_cutoffs(n_max);
    KahanSum acc;
    std::size_t next = 0;
    for (int n = 1; n <= n_max; ++n) {
      acc.add(cap_terms[n - 1]);
      if (std::uint64_t(n) == cap.cutoffs[next]) {
        cap.sums.push_back(acc.value());
        ++next;
      }
    }
    VerdictDiagnostics d;
    cap.verdict = assess_verdict(cap.cutoffs, cap.sums, policy, &d);
    cap.last_increment = d.last_increment;
    cap.growth_slope = d.growth_slope;
    rep.capacity_sum = std::move(cap);
  }
  rep.capacity_zero = rep.capacity_sum.verdict == Verdict::diverges;

  rep.carleson_sum = carleson_criterion(spec, n_max, policy);
  rep.carleson_set = rep.carleson_sum.verdict == Verdict::converges;
  return rep;
}

}  // namespace dzeros
