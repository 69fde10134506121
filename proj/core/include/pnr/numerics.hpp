#pragma once

#include <cmath>
#include <cstdint>

namespace pnr {

/// Neumaier-compensated accumulator. `max_term` tracks the largest |term| so
/// callers can bound the cancellation error of alternating sums.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    double max_term = 0.0;

    void add(double x) {
        if (std::abs(x) > max_term) max_term = std::abs(x);
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

/// Binomial coefficient as a double; exact while below 2^53.
double binomial_coefficient(int n, int k);

/// Binomial pmf C(n,k) p^k (1-p)^(n-k) with exact handling of p in {0, 1}.
double binomial_pmf(int n, int k, double p);

} // namespace pnr
