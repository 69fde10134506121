#pragma once

#include "pnr/click_model.hpp"
#include "pnr/response_matrix.hpp"
#include "pnr/truncation.hpp"

namespace pnr {

/// A loop-multiplexed detector: photons circulate in a fiber loop, each pass
/// exits toward the single click detector with probability exit_prob, survives
/// the loop with probability loop_survival, for at most max_loops passes.
struct LoopDetectorConfig {
    double exit_prob = 0.5;
    double loop_survival = 1.0;
    int max_loops = 1;
    ClickModel click;

    LoopDetectorConfig() = default;
    LoopDetectorConfig(double exit_prob_, double loop_survival_, int max_loops_,
                       ClickModel click_)
        : exit_prob(exit_prob_), loop_survival(loop_survival_), max_loops(max_loops_),
          click(click_) {
        if (!(exit_prob > 0.0 && exit_prob <= 1.0))
            throw std::invalid_argument("LoopDetectorConfig: exit_prob must be in (0, 1]");
        if (!(loop_survival >= 0.0 && loop_survival <= 1.0))
            throw std::invalid_argument("LoopDetectorConfig: loop_survival must be in [0, 1]");
        if (max_loops < 1)
            throw std::invalid_argument("LoopDetectorConfig: max_loops must be >= 1");
    }
};

/// Response of the loop detector via the pass recursion
///   P^(l)[k][m] = sum_{a,b} Bin(exit_prob; a of m) Bin(loop_survival; b of m-a)
///                 * ( Pr(click | a) P^(l-1)[k-1][b]
///                   + Pr(no click | a) P^(l-1)[k][b] ),
/// with base case P^(0)[k][m] = [k == 0] (a photon still in the loop after the
/// last pass is never reported). Each pass is one detection window, so dark
/// counts apply once per pass. Click counts are clamped at n via an absorbing
/// class; requires n <= max_loops since each pass yields at most one click.
ResponseMatrix loop_response(const LoopDetectorConfig& config, int n,
                             const TruncationPolicy& policy = {});

} // namespace pnr
