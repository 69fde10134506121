#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracles {

double exp_series(double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= x / k;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double poisson_pmf_series(double mu, int m) {
    if (mu == 0.0) return m == 0 ? 1.0 : 0.0;
    double numer = 1.0;
    for (int k = 1; k <= m; ++k) numer *= mu / k;
    return numer / exp_series(mu);
}

std::vector<double> brute_spatial_column(int M, double eta, double dark, int m, int n) {
    std::vector<double> clicks_dist(M + 1, 0.0);
    const double weight = std::pow(static_cast<double>(M), -m);
    std::vector<int> seq(m, 0);
    std::vector<int> occupancy(M);
    std::vector<double> poly;
    while (true) {
        std::fill(occupancy.begin(), occupancy.end(), 0);
        for (int photon = 0; photon < m; ++photon) ++occupancy[seq[photon]];
        // Click-count distribution for this placement: product of independent
        // per-element Bernoullis.
        poly.assign(1, 1.0);
        for (int e = 0; e < M; ++e) {
            const double c = 1.0 - (1.0 - dark) * std::pow(1.0 - eta, occupancy[e]);
            poly.push_back(0.0);
            for (int k = static_cast<int>(poly.size()) - 1; k >= 1; --k)
                poly[k] = poly[k] * (1.0 - c) + poly[k - 1] * c;
            poly[0] *= 1.0 - c;
        }
        for (int k = 0; k <= M; ++k) clicks_dist[k] += weight * poly[k];
        // next placement sequence
        int pos = m - 1;
        while (pos >= 0 && seq[pos] == M - 1) {
            seq[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[pos];
    }
    std::vector<double> out(n + 1, 0.0);
    for (int k = 0; k <= M; ++k) out[std::min(k, n)] += clicks_dist[k];
    return out;
}

std::vector<std::vector<int>> occupancies(int M, int m) {
    std::vector<std::vector<int>> result;
    std::vector<int> current(M, 0);
    auto rec = [&](auto&& self, int index, int remaining) -> void {
        if (index == M - 1) {
            current[index] = remaining;
            result.push_back(current);
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            current[index] = take;
            self(self, index + 1, remaining - take);
        }
    };
    rec(rec, 0, m);
    return result;
}

namespace {

double binom(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

} // namespace

std::vector<double> loop_one_pass_column(double exit_prob, double eta, double dark, int m) {
    double p_click = 0.0;
    for (int a = 0; a <= m; ++a) {
        const double f_bin =
            binom(m, a) * std::pow(exit_prob, a) * std::pow(1.0 - exit_prob, m - a);
        p_click += f_bin * (1.0 - (1.0 - dark) * std::pow(1.0 - eta, a));
    }
    return {1.0 - p_click, p_click};
}

double single_click_poisson_desired(double eta, double mu) {
    return 1.0 - (exp_series(-eta * mu) - exp_series(-mu));
}

} // namespace oracles
