#include "pnr/quality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pnr {

namespace {

// Correct-classification coefficients: R[m] = P[m][m] for m <= n, P[n][m] above.
std::vector<double> correct_class_row(const ResponseMatrix& matrix, int n) {
    std::vector<double> r(matrix.m_max() + 1);
    for (int m = 0; m <= matrix.m_max(); ++m) r[m] = m <= n ? matrix.at(m, m) : matrix.at(n, m);
    return r;
}

void require_collapsed_at(const ResponseMatrix& matrix, int n) {
    if (matrix.n_out() != n)
        throw std::invalid_argument("quality: matrix is collapsed at n=" +
                                    std::to_string(matrix.n_out()) + ", expected n=" +
                                    std::to_string(n));
    if (matrix.m_max() < n)
        throw std::invalid_argument("quality: matrix must tabulate columns up to n");
}

// Objective sum_{m} R[m] * Poisson(mu; m) over the tabulated range.
double poisson_objective(const std::vector<double>& r, double mu) {
    if (mu == 0.0) return r[0];
    double term = std::exp(-mu);
    double acc = r[0] * term;
    for (size_t m = 1; m < r.size(); ++m) {
        term *= mu / static_cast<double>(m);
        acc += r[m] * term;
    }
    return acc;
}

bool tail_probe_passes(const ResponseMatrix& matrix, int n, int probe_len) {
    const int m_hi = matrix.m_max();
    const int m_lo = std::max(n + 1, m_hi - probe_len + 1);
    for (int m = m_lo + 1; m <= m_hi; ++m)
        if (matrix.at(n, m) < matrix.at(n, m - 1) - 1e-12) return false;
    return true;
}

} // namespace

std::string describe(const DistributionSet& set) {
    if (std::holds_alternative<AllDistributions>(set)) return "full";
    if (const auto* p = std::get_if<PoissonFamily>(&set)) {
        std::ostringstream os;
        os << "poisson(mu_max=";
        if (p->mu_max)
            os << *p->mu_max;
        else
            os << "n";
        os << ")";
        return os.str();
    }
    const auto& hull = std::get<FiniteHull>(set);
    return "hull(" + std::to_string(hull.bases.size()) + " bases)";
}

double desired_probability(const ResponseMatrix& matrix, const PhotonDistribution& d,
                           double tail_tol, double* truncation_bound) {
    const int n = matrix.n_out();
    const double tail = d.tail_mass_above(matrix.m_max());
    if (tail >= tail_tol)
        throw TruncationError("desired_probability: input mass " + std::to_string(tail) +
                              " beyond m_max=" + std::to_string(matrix.m_max()) +
                              " exceeds tail_tol");
    if (truncation_bound) *truncation_bound = tail;
    // Fock inputs hit a single tabulated entry; return it exactly.
    if (d.is_fock()) {
        const int m = static_cast<int>(d.parameter());
        return m <= n ? matrix.at(m, m) : matrix.at(n, m);
    }
    const auto r = correct_class_row(matrix, n);
    double acc = 0.0;
    for (int m = 0; m <= matrix.m_max(); ++m) {
        const double p = d.pmf(m);
        if (p != 0.0) acc += r[m] * p;
    }
    return acc;
}

QualityResult quality_full_set(const ResponseMatrix& matrix, int n,
                               const TruncationPolicy& policy) {
    require_collapsed_at(matrix, n);
    QualityResult result;
    result.n = n;
    result.truncation_bound = 0.0;

    double best = matrix.at(0, 0);
    int best_m = 0;
    for (int m = 1; m <= n; ++m)
        if (matrix.at(m, m) < best) {
            best = matrix.at(m, m);
            best_m = m;
        }
    for (int m = n + 1; m <= matrix.m_max(); ++m)
        if (matrix.at(n, m) < best) {
            best = matrix.at(n, m);
            best_m = m;
        }
    result.value = best;
    result.witness = {Witness::Kind::fock, static_cast<double>(best_m)};
    // The infimum over m > n is trusted only if the absorbing row keeps rising
    // at the end of the tabulated range.
    result.tail_verified =
        matrix.tail_monotone_verified() || tail_probe_passes(matrix, n, policy.monotone_probe_len);
    return result;
}

QualityResult quality_poisson(const ResponseMatrix& matrix, int n, double mu_max,
                              const TruncationPolicy& policy) {
    require_collapsed_at(matrix, n);
    if (!(mu_max >= 0.0)) throw std::invalid_argument("quality_poisson: mu_max must be >= 0");

    QualityResult result;
    result.n = n;
    result.tail_verified = true;

    const double tail = PhotonDistribution::poisson(mu_max).tail_mass_above(matrix.m_max());
    if (tail >= policy.tail_tol)
        throw TruncationError("quality_poisson: Poisson(mu_max) mass beyond m_max=" +
                              std::to_string(matrix.m_max()) + " exceeds tail_tol");
    result.truncation_bound = tail;

    const auto r = correct_class_row(matrix, n);
    if (mu_max == 0.0) {
        result.value = r[0];
        result.witness = {Witness::Kind::poisson_mean, 0.0};
        return result;
    }

    // Global grid scan; the objective can have interior minima when dark
    // counts shift the worst case.
    const int grid_points = 401;
    const double step = mu_max / (grid_points - 1);
    double best_val = poisson_objective(r, 0.0);
    int best_idx = 0;
    for (int i = 1; i < grid_points; ++i) {
        const double v = poisson_objective(r, i * step);
        if (v < best_val) {
            best_val = v;
            best_idx = i;
        }
    }

    // Golden-section refinement inside the bracketing grid interval.
    double lo = std::max(0.0, (best_idx - 1) * step);
    double hi = std::min(mu_max, (best_idx + 1) * step);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = poisson_objective(r, x1);
    double f2 = poisson_objective(r, x2);
    while (hi - lo > 1e-6) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = poisson_objective(r, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = poisson_objective(r, x2);
        }
    }
    const double mu_star = 0.5 * (lo + hi);
    const double refined = poisson_objective(r, mu_star);
    if (refined <= best_val) {
        result.value = refined;
        result.witness = {Witness::Kind::poisson_mean, mu_star};
    } else {
        result.value = best_val;
        result.witness = {Witness::Kind::poisson_mean, best_idx * step};
    }
    return result;
}

QualityResult quality_finite_hull(const ResponseMatrix& matrix, int n,
                                  const std::vector<PhotonDistribution>& bases,
                                  const TruncationPolicy& policy) {
    require_collapsed_at(matrix, n);
    if (bases.empty()) throw std::invalid_argument("quality_finite_hull: empty base set");
    QualityResult result;
    result.n = n;
    result.tail_verified = true;
    double worst_tail = 0.0;
    for (size_t i = 0; i < bases.size(); ++i) {
        double tail = 0.0;
        const double v = desired_probability(matrix, bases[i], policy.tail_tol, &tail);
        worst_tail = std::max(worst_tail, tail);
        if (i == 0 || v < result.value) {
            result.value = v;
            result.witness = {Witness::Kind::base_index, static_cast<double>(i)};
        }
    }
    result.truncation_bound = worst_tail;
    return result;
}

int resolve_m_max(const DetectorConfig& config, int n, const DistributionSet& set,
                  const TruncationPolicy& policy) {
    if (policy.m_max_override) return *policy.m_max_override;
    if (const auto* p = std::get_if<PoissonFamily>(&set)) {
        const double mu = p->mu_max.value_or(static_cast<double>(n));
        return std::max(poisson_tail_cutoff(mu, policy.tail_tol), n + 1);
    }
    return policy.resolve_m_max(effective_elements(config), n);
}

QualityResult evaluate_quality(const DetectorConfig& config, int n, const DistributionSet& set,
                               const TruncationPolicy& policy) {
    TruncationPolicy resolved = policy;
    resolved.m_max_override = resolve_m_max(config, n, set, policy);
    const ResponseMatrix matrix = build_response(config, n, resolved);
    return evaluate_quality(matrix, n, set, policy);
}

QualityResult evaluate_quality(const ResponseMatrix& matrix, int n, const DistributionSet& set,
                               const TruncationPolicy& policy) {
    if (std::holds_alternative<AllDistributions>(set))
        return quality_full_set(matrix, n, policy);
    if (const auto* p = std::get_if<PoissonFamily>(&set))
        return quality_poisson(matrix, n, p->mu_max.value_or(static_cast<double>(n)), policy);
    return quality_finite_hull(matrix, n, std::get<FiniteHull>(set).bases, policy);
}

} // namespace pnr
