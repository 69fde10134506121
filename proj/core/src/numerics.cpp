#include "pnr/numerics.hpp"

#include <stdexcept>

namespace pnr {

double binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return std::round(c);
}

double binomial_pmf(int n, int k, double p) {
    if (n < 0 || k < 0 || k > n) return 0.0;
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binomial_pmf: p must be in [0, 1]");
    if (p == 0.0) return k == 0 ? 1.0 : 0.0;
    if (p == 1.0) return k == n ? 1.0 : 0.0;
    if (n == 0) return 1.0;
    double log_pmf = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                     k * std::log(p) + (n - k) * std::log1p(-p);
    return std::exp(log_pmf);
}

} // namespace pnr
