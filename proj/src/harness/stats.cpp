#include "dmincut/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmincut::stats {

double binomial_cdf(std::uint64_t k, std::uint64_t trials, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability outside [0,1]");
  if (k >= trials) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  const double n = static_cast<double>(trials);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double total = 0.0;
  for (std::uint64_t i = 0; i <= k; ++i) {
    const double x = static_cast<double>(i);
    const double log_term = std::lgamma(n + 1) - std::lgamma(x + 1) - std::lgamma(n - x + 1) +
                            x * log_p + (n - x) * log_q;
    total += std::exp(log_term);
  }
  return std::min(1.0, total);
}

double binomial_lower_tail_p_value(std::uint64_t successes, std::uint64_t trials, double p0) {
  return binomial_cdf(successes, trials, p0);
}

double karger_success_bound(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("success bound needs n >= 2");
  return 2.0 / (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::uint64_t poisson_upper_quantile(double mean, double confidence) {
  if (mean < 0.0) throw std::invalid_argument("negative Poisson mean");
  double term = std::exp(-mean);
  double cdf = term;
  std::uint64_t c = 0;
  while (cdf < confidence) {
    ++c;
    term *= mean / static_cast<double>(c);
    cdf += term;
  }
  return c;
}

}  // namespace dmincut::stats
