#pragma once

#include <optional>
#include <stdexcept>

namespace pnr {

/// Controls the finite truncation of the (in principle unbounded) input photon
/// number. Producers tabulate columns m = 0..m_max; m_max comes from the
/// override if present, otherwise from the per-detector default
/// max(4 * effective elements, n + 50). Poisson-restricted evaluations use
/// the tail cutoff of the largest mean instead.
struct TruncationPolicy {
    std::optional<int> m_max_override;
    double tail_tol = 1e-12;
    int monotone_probe_len = 16;

    TruncationPolicy() = default;
    TruncationPolicy(std::optional<int> m_max, double tol, int probe_len)
        : m_max_override(m_max), tail_tol(tol), monotone_probe_len(probe_len) {
        if (!(tail_tol > 0.0))
            throw std::invalid_argument("TruncationPolicy: tail_tol must be > 0");
        if (monotone_probe_len < 2)
            throw std::invalid_argument("TruncationPolicy: monotone_probe_len must be >= 2");
    }

    int resolve_m_max(int effective_elements, int n) const {
        if (m_max_override) return *m_max_override;
        return std::max(4 * effective_elements, n + 50);
    }
};

} // namespace pnr
