#pragma once

#include <cstdint>

namespace dmincut::stats {

/// P[X <= k] for X ~ Binomial(trials, p).
double binomial_cdf(std::uint64_t k, std::uint64_t trials, double p);

/// One-sided test of H0: success probability >= p0 against "it is lower".
/// Returns P[X <= successes] under p0; reject H0 when below alpha.
double binomial_lower_tail_p_value(std::uint64_t successes, std::uint64_t trials, double p0);

/// 1 / C(n, 2): the contraction algorithm's per-trial lower bound on
/// producing a particular min cut.
double karger_success_bound(std::uint64_t n);

/// Smallest c with P[Poisson(mean) <= c] >= confidence.
std::uint64_t poisson_upper_quantile(double mean, double confidence);

}  // namespace dmincut::stats
