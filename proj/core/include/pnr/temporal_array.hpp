#pragma once

#include "pnr/click_model.hpp"
#include "pnr/response_matrix.hpp"
#include "pnr/truncation.hpp"

namespace pnr {

/// A fiber-coupler time-multiplexed detector with M effective segments
/// (a power of two) and per-coupler efficiency eta_c. Its output statistics
/// equal those of an M-element spatial array at a derated efficiency.
struct TemporalArrayConfig {
    int effective_segments = 2;
    double coupler_efficiency = 1.0;
    ClickModel click;

    TemporalArrayConfig() = default;
    TemporalArrayConfig(int segments, double eta_c, ClickModel click_)
        : effective_segments(segments), coupler_efficiency(eta_c), click(click_) {
        if (segments < 2 || (segments & (segments - 1)) != 0)
            throw std::invalid_argument(
                "TemporalArrayConfig: effective_segments must be a power of two >= 2");
        if (!(eta_c >= 0.0 && eta_c <= 1.0))
            throw std::invalid_argument(
                "TemporalArrayConfig: coupler_efficiency must be in [0, 1]");
    }
};

/// Efficiency after the log2(M) coupler stages: eta_c^(log2 M) * eta.
double effective_efficiency(double eta_c, int M, double eta);

/// Response of the temporal array: a spatial array with M elements at the
/// effective efficiency, with temporal provenance recorded in the source.
ResponseMatrix temporal_response(const TemporalArrayConfig& config, int n,
                                 const TruncationPolicy& policy = {});

} // namespace pnr
