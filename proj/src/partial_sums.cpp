#include "dzeros/partial_sums.hpp"

#include <cmath>
#include <stdexcept>

#include "dzeros/util.hpp"

namespace dzeros {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::converges: return "converges";
    case Verdict::diverges: return "diverges";
    default: return "inconclusive";
  }
}

std::vector<std::uint64_t> dyadic_cutoffs(std::uint64_t n_max) {
  std::vector<std::uint64_t> cs;
  for (std::uint64_t c = 1; c < n_max; c *= 2) cs.push_back(c);
  if (n_max >= 1) cs.push_back(n_max);
  return cs;
}

Verdict assess_verdict(const std::vector<std::uint64_t>& cutoffs, const std::vector<double>& sums,
                       const VerdictPolicy& policy, VerdictDiagnostics* diag) {
  if (cutoffs.size() != sums.size()) throw std::invalid_argument("assess_verdict: size mismatch");
  std::size_t m = sums.size();
  VerdictDiagnostics d;
  if (m >= 2) d.last_increment = sums[m - 1] - sums[m - 2];
  // slope of log(sum) vs log(cutoff) over the trailing four cutoffs
  if (m >= 3) {
    std::vector<double> xs, ys;
    std::size_t first = m >= 4 ? m - 4 : 0;
    for (std::size_t i = first; i < m; ++i) {
      if (sums[i] > 0.0 && cutoffs[i] > 0) {
        xs.push_back(std::log(double(cutoffs[i])));
        ys.push_back(std::log(sums[i]));
      }
    }
    d.growth_slope = fit_slope(xs, ys);
  }
  if (diag) *diag = d;
  if (m < 3) return Verdict::inconclusive;
  double inc1 = sums[m - 1] - sums[m - 2];
  double inc2 = sums[m - 2] - sums[m - 3];
  if (inc1 < policy.eps_conv && inc2 < policy.eps_conv) return Verdict::converges;
  if (inc1 >= policy.eps_div && d.growth_slope >= policy.slope_min) return Verdict::diverges;
  return Verdict::inconclusive;
}

PartialSumSeries accumulate_series(const std::function<double(std::uint64_t)>& term,
                                   std::uint64_t n_max, const VerdictPolicy& policy) {
  if (n_max == 0) throw std::domain_error("accumulate_series: empty range");
  PartialSumSeries out;
  out.cutoffs = dyadic_cutoffs(n_max);
  out.sums.reserve(out.cutoffs.size());
  KahanSum acc;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    double t = term(n);
    if (t < 0.0) throw std::domain_error("accumulate_series: negative term");
    acc.add(t);
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

}  // namespace dzeros
