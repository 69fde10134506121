#include "pnr/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "pnr/parallel.hpp"

namespace pnr {

SweepGrid::SweepGrid(std::string parameter_, std::vector<double> values_)
    : parameter(std::move(parameter_)), values(std::move(values_)) {
    for (size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw std::invalid_argument("SweepGrid: values must be strictly increasing");
}

ThresholdResult eta_threshold(const DetectorConfig& family, int n, double q,
                              const DistributionSet& set, double tol,
                              const TruncationPolicy& policy) {
    if (!(tol > 0.0)) throw std::invalid_argument("eta_threshold: tol must be > 0");
    ThresholdResult result;
    result.target_q = q;

    auto quality_at = [&](double eta) {
        ++result.evaluations;
        return evaluate_quality(with_eta(family, eta), n, set, policy).value;
    };

    if (quality_at(1.0) < q)
        throw NoSolutionError("eta_threshold: quality at eta=1 is below the target q");

    // Monotonicity pre-scan over 11 equally spaced efficiencies.
    constexpr int kPreScan = 11;
    std::vector<double> scan(kPreScan);
    for (int i = 0; i < kPreScan; ++i) scan[i] = quality_at(i / static_cast<double>(kPreScan - 1));
    bool monotone = true;
    for (int i = 1; i < kPreScan; ++i)
        if (scan[i] < scan[i - 1] - 1e-9) monotone = false;

    if (!monotone) {
        // Exhaustive scan at the requested resolution.
        result.used_grid_fallback = true;
        const int steps = static_cast<int>(std::ceil(1.0 / tol));
        for (int i = 0; i <= steps; ++i) {
            const double eta = std::min(1.0, i * tol);
            if (quality_at(eta) >= q) {
                result.threshold = eta;
                result.bracket_lo = std::max(0.0, eta - tol);
                result.bracket_hi = eta;
                return result;
            }
        }
        throw NoSolutionError("eta_threshold: no efficiency reaches the target q");
    }

    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < kPreScan; ++i) {
        const double eta = i / static_cast<double>(kPreScan - 1);
        if (scan[i] < q)
            lo = std::max(lo, eta);
        else
            hi = std::min(hi, eta);
    }
    if (hi == 0.0 || scan[0] >= q) {
        result.threshold = result.bracket_lo = result.bracket_hi = 0.0;
        return result;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (quality_at(mid) >= q)
            hi = mid;
        else
            lo = mid;
    }
    result.threshold = hi;
    result.bracket_lo = lo;
    result.bracket_hi = hi;
    return result;
}

double approx_min_elements(int n, double eta, double q) {
    if (n < 1) throw std::invalid_argument("approx_min_elements: n must be >= 1");
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("approx_min_elements: eta must be in (0, 1]");
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("approx_min_elements: q must be in (0, 1)");
    const double denom = n * std::log(eta) - std::log(q);
    if (!(denom > 0.0))
        throw NoSolutionError("approx_min_elements: infeasible, quality cannot exceed eta^n");
    return 0.5 * n * n / denom;
}

int min_elements(int n, double eta, double q, const DistributionSet& set,
                 const TruncationPolicy& policy) {
    if (n < 1) throw std::invalid_argument("min_elements: n must be >= 1");
    if (eta < 1.0) {
        const double denom = n * std::log(eta) - std::log(q);
        if (!(denom > 0.0))
            throw NoSolutionError(
                "min_elements: infeasible, Q_n <= eta^n < q for every element count");
    }
    constexpr int kCap = 4096;

    auto quality_at = [&](int M) {
        SpatialArrayConfig config(M, ClickModel(eta, 0.0));
        return evaluate_quality(DetectorConfig{config}, n, set, policy).value;
    };

    // Doubling search for a feasible M, tracking monotonicity along the way.
    int lo = std::max(n, 1);
    double q_lo = quality_at(lo);
    if (q_lo >= q) return lo;
    int hi = lo;
    double prev = q_lo;
    bool monotone = true;
    while (true) {
        if (hi >= kCap)
            throw NoSolutionError("min_elements: no element count up to 4096 reaches the target");
        hi = std::min(kCap, hi * 2);
        const double q_hi = quality_at(hi);
        if (q_hi < prev - 1e-12) monotone = false;
        prev = q_hi;
        if (q_hi >= q) break;
    }
    if (!monotone) {
        // Quality failed the growth pre-check; fall back to a linear scan.
        for (int M = lo + 1; M <= hi; ++M)
            if (quality_at(M) >= q) return M;
        throw NoSolutionError("min_elements: scan found no feasible element count");
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (quality_at(mid) >= q)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::vector<DarkSweepPoint> dark_sweep(const DetectorConfig& family,
                                       const std::vector<int>& n_list, const SweepGrid& grid,
                                       const DistributionSet& set,
                                       const TruncationPolicy& policy) {
    for (double p : grid.values)
        if (!(p >= 0.0 && p < 1.0))
            throw std::invalid_argument("dark_sweep: dark-count grid must lie within [0, 1)");
    std::vector<DarkSweepPoint> table(grid.values.size() * n_list.size());
    parallel_for(0, static_cast<int>(table.size()), [&](int idx) {
        const size_t gi = static_cast<size_t>(idx) / n_list.size();
        const size_t ni = static_cast<size_t>(idx) % n_list.size();
        DarkSweepPoint& point = table[idx];
        point.dark_prob = grid.values[gi];
        point.n = n_list[ni];
        point.quality =
            evaluate_quality(with_dark_prob(family, point.dark_prob), point.n, set, policy);
    });
    return table;
}

int max_resolvable(const DetectorConfig& config, const DistributionSet& set, double q,
                   const TruncationPolicy& policy) {
    const int n_cap = max_output_class(config);
    int best = 0;
    for (int n = 1; n <= n_cap; ++n) {
        if (evaluate_quality(config, n, set, policy).value >= q)
            best = n;
        else
            break; // quality is non-increasing in n
    }
    return best;
}

} // namespace pnr
