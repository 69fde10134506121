#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pnr/detector.hpp"
#include "pnr/quality.hpp"

namespace pnr {

/// Raised when an inverse problem provably has no solution (e.g. the target
/// quality is unreachable at unit efficiency, or the feasibility bound
/// q <= eta^n is violated).
class NoSolutionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An ordered sweep over one named parameter.
struct SweepGrid {
    std::string parameter;
    std::vector<double> values;

    SweepGrid() = default;
    SweepGrid(std::string parameter_, std::vector<double> values_);
};

struct ThresholdResult {
    double threshold = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int evaluations = 0;
    double target_q = 0.0;
    /// True when the monotonicity pre-scan failed and the solver fell back to
    /// an exhaustive grid scan at the requested tolerance.
    bool used_grid_fallback = false;
};

/// Smallest efficiency eta such that Q_n >= q for the given detector family
/// (the config's eta is treated as free). An 11-point pre-scan verifies that
/// quality rises with eta before bisection is trusted.
ThresholdResult eta_threshold(const DetectorConfig& family, int n, double q,
                              const DistributionSet& set, double tol = 1e-3,
                              const TruncationPolicy& policy = {});

/// Smallest spatial-array element count M with Q_n >= q at the given
/// efficiency, by doubling search then bisection. The doubling upper bound is
/// capped at 4096.
int min_elements(int n, double eta, double q, const DistributionSet& set,
                 const TruncationPolicy& policy = {});

/// Leading-order element-count estimate n^2 / (2 (n ln eta - ln q)).
double approx_min_elements(int n, double eta, double q);

struct DarkSweepPoint {
    double dark_prob = 0.0;
    int n = 0;
    QualityResult quality;
};

/// Quality table over a dark-count grid, in grid-major then n order. No
/// bisection is ever attempted over the dark-count axis: quality is not
/// monotone in it.
std::vector<DarkSweepPoint> dark_sweep(const DetectorConfig& family,
                                       const std::vector<int>& n_list, const SweepGrid& grid,
                                       const DistributionSet& set,
                                       const TruncationPolicy& policy = {});

/// Largest n with Q_n >= q (0 if even n = 1 fails); well defined because
/// quality is non-increasing in n.
int max_resolvable(const DetectorConfig& config, const DistributionSet& set, double q,
                   const TruncationPolicy& policy = {});

} // namespace pnr
