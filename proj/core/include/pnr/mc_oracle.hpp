#pragma once

#include <cstdint>
#include <vector>

#include "pnr/detector.hpp"
#include "pnr/response_matrix.hpp"

namespace pnr {

/// Per-trial counter-based random stream: every (seed, trial) pair owns an
/// independent deterministic sequence, so histograms are bit-identical across
/// thread counts.
class TrialRng {
  public:
    TrialRng(uint64_t seed, uint64_t trial);
    uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double next_unit();
    /// Uniform integer in [0, bound).
    int next_below(int bound);
    /// Number of successes in `tries` Bernoulli(p) draws.
    int next_binomial(int tries, double p);

  private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

/// One stochastic-simulation request.
struct McRun {
    uint64_t trials = 1;
    uint64_t seed = 0;
    DetectorConfig config;
    int m = 0; // input photon number

    McRun(uint64_t trials_, uint64_t seed_, DetectorConfig config_, int m_);
};

struct McHistogram {
    std::vector<uint64_t> counts; // output classes 0..n
    uint64_t trials = 0;
    std::vector<double> std_err; // binomial standard error per class
    int n = 0;
    int m = 0;

    double frequency(int k) const { return static_cast<double>(counts[k]) / trials; }
};

/// Simulates the spatial array (temporal configs are mapped to their
/// effective-efficiency spatial equivalent): photons land uniformly at random,
/// each element clicks per the click model, counts are clamped at n.
McHistogram simulate_spatial(const McRun& run, int n);

/// Simulates the loop detector pass by pass: exits are Binomial(exit_prob),
/// survivors Binomial(loop_survival), one detection window per pass.
McHistogram simulate_loop(const McRun& run, int n);

/// Dispatches on the config variant.
McHistogram simulate(const McRun& run, int n);

struct ZReport {
    std::vector<double> z; // per output class
    std::vector<bool> flagged;
    double threshold = 5.0;
    bool any_flagged = false;
    int n = 0;
    int m = 0;
};

/// Per-class z-scores of the empirical frequencies against one analytic
/// response column, using binomial standard errors.
ZReport compare(const ResponseMatrix& analytic, int m, const McHistogram& empirical,
                double threshold = 5.0);

} // namespace pnr
