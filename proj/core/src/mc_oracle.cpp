#include "pnr/mc_oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pnr/parallel.hpp"

namespace pnr {

namespace {

// SplitMix64 finalizer; full-period mixing of a 64-bit word.
uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct Accumulator {
    std::vector<uint64_t> counts;
};

McHistogram run_trials(const McRun& run, int n,
                       const std::function<int(TrialRng&)>& one_trial) {
    const int workers = std::max(1, worker_count());
    std::vector<Accumulator> partial(workers);
    for (auto& p : partial) p.counts.assign(n + 1, 0);

    const uint64_t total = run.trials;
    const uint64_t chunk = (total + workers - 1) / workers;
    parallel_for(0, workers, [&](int w) {
        const uint64_t lo = static_cast<uint64_t>(w) * chunk;
        const uint64_t hi = std::min(total, lo + chunk);
        auto& counts = partial[w].counts;
        for (uint64_t t = lo; t < hi; ++t) {
            TrialRng rng(run.seed, t);
            int k = one_trial(rng);
            counts[std::min(k, n)] += 1;
        }
    });

    McHistogram hist;
    hist.n = n;
    hist.m = run.m;
    hist.trials = total;
    hist.counts.assign(n + 1, 0);
    for (const auto& p : partial)
        for (int k = 0; k <= n; ++k) hist.counts[k] += p.counts[k];
    hist.std_err.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double f = hist.frequency(k);
        hist.std_err[k] = std::sqrt(std::max(0.0, f * (1.0 - f) / total));
    }
    return hist;
}

} // namespace

TrialRng::TrialRng(uint64_t seed, uint64_t trial)
    : key_(mix64(seed ^ mix64(trial * kGolden + 0x6A09E667F3BCC909ULL))) {}

uint64_t TrialRng::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double TrialRng::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

int TrialRng::next_below(int bound) {
    return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                             static_cast<unsigned __int128>(bound)) >>
                            64);
}

int TrialRng::next_binomial(int tries, double p) {
    if (p <= 0.0) return 0;
    int successes = 0;
    for (int i = 0; i < tries; ++i)
        if (next_unit() < p) ++successes;
    return successes;
}

McRun::McRun(uint64_t trials_, uint64_t seed_, DetectorConfig config_, int m_)
    : trials(trials_), seed(seed_), config(std::move(config_)), m(m_) {
    if (trials < 1) throw std::invalid_argument("McRun: trials must be >= 1");
    if (m < 0) throw std::invalid_argument("McRun: m must be >= 0");
}

McHistogram simulate_spatial(const McRun& run, int n) {
    SpatialArrayConfig config(1, ClickModel(1.0, 0.0));
    if (const auto* s = std::get_if<SpatialArrayConfig>(&run.config)) {
        config = *s;
    } else if (const auto* t = std::get_if<TemporalArrayConfig>(&run.config)) {
        const double eta_eff =
            effective_efficiency(t->coupler_efficiency, t->effective_segments, t->click.eta);
        config = SpatialArrayConfig(t->effective_segments,
                                    ClickModel(eta_eff, t->click.dark_prob));
    } else {
        throw std::invalid_argument("simulate_spatial: config is not an array detector");
    }
    if (n > config.elements)
        throw std::invalid_argument("simulate_spatial: n exceeds the element count");

    const int M = config.elements;
    const double eta = config.click.eta;
    const double dark = config.click.dark_prob;
    const int m = run.m;

    return run_trials(run, n, [=](TrialRng& rng) {
        // Occupancy of the elements hit this trial; at most m are distinct.
        thread_local std::vector<int> hit_index, hit_count;
        hit_index.clear();
        hit_count.clear();
        for (int photon = 0; photon < m; ++photon) {
            const int e = rng.next_below(M);
            bool found = false;
            for (size_t i = 0; i < hit_index.size(); ++i)
                if (hit_index[i] == e) {
                    ++hit_count[i];
                    found = true;
                    break;
                }
            if (!found) {
                hit_index.push_back(e);
                hit_count.push_back(1);
            }
        }
        int clicks = 0;
        for (size_t i = 0; i < hit_index.size(); ++i) {
            const double p_click = 1.0 - (1.0 - dark) * std::pow(1.0 - eta, hit_count[i]);
            if (rng.next_unit() < p_click) ++clicks;
        }
        if (dark > 0.0)
            clicks += rng.next_binomial(M - static_cast<int>(hit_index.size()), dark);
        return clicks;
    });
}

McHistogram simulate_loop(const McRun& run, int n) {
    const auto* config = std::get_if<LoopDetectorConfig>(&run.config);
    if (!config) throw std::invalid_argument("simulate_loop: config is not a loop detector");
    if (n > config->max_loops)
        throw std::invalid_argument("simulate_loop: n exceeds max_loops");

    const double T = config->exit_prob;
    const double survival = config->loop_survival;
    const int passes = config->max_loops;
    const double eta = config->click.eta;
    const double dark = config->click.dark_prob;
    const int m = run.m;

    return run_trials(run, n, [=](TrialRng& rng) {
        int in_loop = m;
        int clicks = 0;
        for (int pass = 0; pass < passes; ++pass) {
            if (in_loop == 0 && dark == 0.0) break;
            const int exited = rng.next_binomial(in_loop, T);
            const double p_click = 1.0 - (1.0 - dark) * std::pow(1.0 - eta, exited);
            if (p_click > 0.0 && rng.next_unit() < p_click) ++clicks;
            in_loop = rng.next_binomial(in_loop - exited, survival);
        }
        return clicks;
    });
}

McHistogram simulate(const McRun& run, int n) {
    if (std::holds_alternative<LoopDetectorConfig>(run.config)) return simulate_loop(run, n);
    return simulate_spatial(run, n);
}

ZReport compare(const ResponseMatrix& analytic, int m, const McHistogram& empirical,
                double threshold) {
    if (m != empirical.m)
        throw std::invalid_argument("compare: analytic column and histogram disagree on m");
    if (analytic.n_out() != empirical.n)
        throw std::invalid_argument("compare: analytic matrix and histogram disagree on n");
    if (m > analytic.m_max())
        throw std::invalid_argument("compare: column m is not tabulated");

    ZReport report;
    report.threshold = threshold;
    report.n = empirical.n;
    report.m = m;
    const double trials = static_cast<double>(empirical.trials);
    for (int k = 0; k <= empirical.n; ++k) {
        const double p = analytic.at(k, m);
        const double f = empirical.frequency(k);
        const double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / trials);
        double z;
        if (se == 0.0)
            z = (f == p) ? 0.0 : std::numeric_limits<double>::infinity();
        else
            z = (f - p) / se;
        report.z.push_back(z);
        const bool flag = std::abs(z) > threshold;
        report.flagged.push_back(flag);
        if (flag) report.any_flagged = true;
    }
    return report;
}

} // namespace pnr
