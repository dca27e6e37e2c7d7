#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dzeros {

enum class Verdict { converges, diverges, inconclusive };

const char* to_string(Verdict v);

// Numerical evidence thresholds. A sum is declared convergent when the last
// two doubling increments drop below eps_conv; declared divergent when the
// last doubling adds at least eps_div and the log-log growth slope over the
// trailing cutoffs stays above slope_min. Everything else is inconclusive.
struct VerdictPolicy {
  double eps_conv = 1e-9;
  double eps_div = 1e-3;
  double slope_min = 5e-3;
};

struct VerdictDiagnostics {
  double last_increment = 0.0;
  double growth_slope = 0.0;
};

Verdict assess_verdict(const std::vector<std::uint64_t>& cutoffs, const std::vector<double>& sums,
                       const VerdictPolicy& policy, VerdictDiagnostics* diag = nullptr);

// Partial sums of a nonnegative-term series at dyadic cutoffs 1,2,4,...,N
// (N itself always included). `certificate` records an analytic comparison
// argument when one overrides or confirms the numerical verdict.
struct PartialSumSeries {
  std::vector<std::uint64_t> cutoffs;
  std::vector<double> sums;
  Verdict verdict = Verdict::inconclusive;
  double last_increment = 0.0;
  double growth_slope = 0.0;
  std::string certificate;

  double total() const { return sums.empty() ? 0.0 : sums.back(); }
};

// term(n) is 1-based. Negative terms throw: every condition sum handled here
// is a series of nonnegative quantities.
PartialSumSeries accumulate_series(const std::function<double(std::uint64_t)>& term,
                                   std::uint64_t n_max, const VerdictPolicy& policy = {});

std::vector<std::uint64_t> dyadic_cutoffs(std::uint64_t n_max);

}  // namespace dzeros
