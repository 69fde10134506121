#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pnr/detector.hpp"
#include "pnr/distributions.hpp"
#include "pnr/response_matrix.hpp"
#include "pnr/truncation.hpp"

namespace pnr {

/// Raised when a distribution carries more mass beyond the tabulated m_max
/// than the truncation tolerance allows.
class TruncationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Families of input photon-number distributions the worst case is taken over.
struct AllDistributions {};
/// Poisson distributions with mean in [0, mu_max]; an unset mu_max defaults to
/// the output class n under evaluation.
struct PoissonFamily {
    std::optional<double> mu_max;
};
/// The convex hull of a finite list of base distributions. The hull infimum
/// equals the minimum over the bases, so only the bases are evaluated.
struct FiniteHull {
    std::vector<PhotonDistribution> bases;
};
using DistributionSet = std::variant<AllDistributions, PoissonFamily, FiniteHull>;

std::string describe(const DistributionSet& set);

/// The worst-case input achieving (or approaching) the quality infimum.
struct Witness {
    enum class Kind { fock, poisson_mean, base_index };
    Kind kind = Kind::fock;
    double value = 0.0;
};

struct QualityResult {
    double value = 0.0;
    Witness witness;
    double truncation_bound = 0.0;
    int n = 0;
    /// False when the monotone-tail probe of the absorbing row failed, i.e.
    /// the truncated infimum over m > n is not certified.
    bool tail_verified = true;
};

/// Probability that the detector described by `matrix` (collapsed at n) reports
/// the correct class for inputs drawn from d:
///   sum_{m <= n} P[m][m] p(m) + sum_{n < m <= m_max} P[n][m] p(m).
/// The neglected tail contributes at most d's mass above m_max, which is
/// reported in truncation_bound and must stay below policy.tail_tol.
double desired_probability(const ResponseMatrix& matrix, const PhotonDistribution& d,
                           double tail_tol = 1e-12, double* truncation_bound = nullptr);

/// Worst case over all distributions: the minimum of the diagonal entries up
/// to n and of the absorbing row beyond n. The witness is a Fock number. The
/// result is flagged unverified when the absorbing row fails the monotone
/// probe over the last monotone_probe_len tabulated columns.
QualityResult quality_full_set(const ResponseMatrix& matrix, int n,
                               const TruncationPolicy& policy = {});

/// Worst case over Poisson inputs with mean in [0, mu_max]: dense grid scan
/// (step <= mu_max/400) followed by golden-section refinement to 1e-6 in mu.
QualityResult quality_poisson(const ResponseMatrix& matrix, int n, double mu_max,
                              const TruncationPolicy& policy = {});

/// Worst case over the convex hull of the given bases, which reduces to the
/// minimum over the bases themselves.
QualityResult quality_finite_hull(const ResponseMatrix& matrix, int n,
                                  const std::vector<PhotonDistribution>& bases,
                                  const TruncationPolicy& policy = {});

/// m_max needed to evaluate `set` against a detector at output class n.
int resolve_m_max(const DetectorConfig& config, int n, const DistributionSet& set,
                  const TruncationPolicy& policy);

/// Builds the response with the set-appropriate truncation and evaluates the
/// quality in one step.
QualityResult evaluate_quality(const DetectorConfig& config, int n, const DistributionSet& set,
                               const TruncationPolicy& policy = {});

/// Quality of an already-built matrix over `set`.
QualityResult evaluate_quality(const ResponseMatrix& matrix, int n, const DistributionSet& set,
                               const TruncationPolicy& policy = {});

} // namespace pnr
