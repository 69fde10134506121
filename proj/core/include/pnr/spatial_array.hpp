#pragma once

#include <vector>

#include "pnr/click_model.hpp"
#include "pnr/response_matrix.hpp"
#include "pnr/truncation.hpp"

namespace pnr {

/// A uniformly illuminated array of M identical click detectors.
struct SpatialArrayConfig {
    int elements = 1;
    ClickModel click;

    SpatialArrayConfig() = default;
    SpatialArrayConfig(int elements_, ClickModel click_) : elements(elements_), click(click_) {
        if (elements < 1)
            throw std::invalid_argument("SpatialArrayConfig: elements must be >= 1");
    }
};

/// Probability of one particular occupancy vector when the m = sum(occupancy)
/// photons land independently and equiprobably on the M elements:
/// m! / (M^m * prod_i occupancy[i]!). The occupancies of fixed total m form a
/// probability distribution (they sum to 1), which pins the m! numerator.
double placement_probability(int M, const std::vector<int>& occupancy);

/// Exact response of an M-element array, collapsed at output class n.
/// Entry (k, m) for k < n is Pr(exactly k elements click | m photons); row n
/// is Pr(>= n clicks | m). Built from the silent-set identity
///   Pr(a fixed set of j elements stays silent | m) = (1-p_d)^j (1 - j*eta/M)^m
/// by inclusion-exclusion:
///   Pr(k clicks | m) = C(M,k) * sum_{i=0..k} (-1)^i C(k,i) * S(M-k+i).
/// The alternating sum cancels catastrophically for large binomials, so
/// entries switch to 256-bit arithmetic whenever the predicted roundoff
/// exceeds 1e-14 (always for M > 40).
ResponseMatrix spatial_response(const SpatialArrayConfig& config, int n,
                                const TruncationPolicy& policy = {});

/// Closed form for the all-detected diagonal at p_d = 0:
/// M! / (M^m (M-m)!) * eta^m. Requires m <= M.
double diagonal_closed_form(int M, double eta, int m);

} // namespace pnr
