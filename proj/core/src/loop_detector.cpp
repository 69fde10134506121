#include "pnr/loop_detector.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "pnr/numerics.hpp"

namespace pnr {

namespace {

// Lower-triangular table t[n][k] = Bin(p; k successes of n tries).
std::vector<std::vector<double>> binomial_table(int n_max, double p) {
    std::vector<std::vector<double>> t(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        t[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) t[n][k] = binomial_pmf(n, k, p);
    }
    return t;
}

std::string describe_loop(const LoopDetectorConfig& c, int n, int m_max) {
    std::ostringstream os;
    os << "loop(T=" << c.exit_prob << ",survival=" << c.loop_survival
       << ",loops=" << c.max_loops << ",eta=" << c.click.eta << ",dark=" << c.click.dark_prob
       << ",n=" << n << ",m_max=" << m_max << ")";
    return os.str();
}

} // namespace

ResponseMatrix loop_response(const LoopDetectorConfig& config, int n,
                             const TruncationPolicy& policy) {
    const int l = config.max_loops;
    if (n < 0 || n > l)
        throw std::invalid_argument(
            "loop_response: requires n <= max_loops (one click per pass at most)");
    const int m_max = policy.resolve_m_max(l, n);

    if (n == 0) { // single ">= 0" class
        ResponseMatrix trivial(0, m_max, describe_loop(config, 0, m_max));
        for (int m = 0; m <= m_max; ++m) trivial.at(0, m) = 1.0;
        trivial.set_tail_monotone_verified(true);
        return trivial;
    }

    const auto exit_table = binomial_table(m_max, config.exit_prob);
    const auto survive_table = binomial_table(m_max, config.loop_survival);
    std::vector<double> click(m_max + 1);
    for (int a = 0; a <= m_max; ++a) click[a] = click_probability(config.click, a);

    // state[k][m]: probability of (clamped) output k over the remaining passes
    // given m photons currently entering the splitting circuit.
    std::vector<std::vector<double>> state(n + 1, std::vector<double>(m_max + 1, 0.0));
    for (int m = 0; m <= m_max; ++m) state[0][m] = 1.0; // after the last pass: no output

    std::vector<std::vector<double>> smoothed(n + 1, std::vector<double>(m_max + 1));
    std::vector<std::vector<double>> next(n + 1, std::vector<double>(m_max + 1));

    for (int pass = 1; pass <= l; ++pass) {
        // Loop-survival smoothing: smoothed[k][s] = E[state[k][Bin(survival; s)]].
        for (int k = 0; k <= n; ++k)
            for (int s = 0; s <= m_max; ++s) {
                double acc = 0.0;
                for (int b = 0; b <= s; ++b) acc += survive_table[s][b] * state[k][b];
                smoothed[k][s] = acc;
            }
        for (int m = 0; m <= m_max; ++m) {
            for (int k = 0; k <= n; ++k) {
                double acc = 0.0;
                for (int a = 0; a <= m; ++a) {
                    const int s = m - a;
                    double on_click;
                    if (k == 0)
                        on_click = 0.0;
                    else if (k == n && n >= 1)
                        on_click = smoothed[n - 1][s] + smoothed[n][s];
                    else
                        on_click = smoothed[k - 1][s];
                    acc += exit_table[m][a] *
                           (click[a] * on_click + (1.0 - click[a]) * smoothed[k][s]);
                }
                next[k][m] = acc;
            }
        }
        std::swap(state, next);
    }

    ResponseMatrix out(n, m_max, describe_loop(config, n, m_max));
    for (int m = 0; m <= m_max; ++m) {
        for (int k = 0; k <= n; ++k) {
            double v = state[k][m];
            if (config.click.dark_prob == 0.0 && k > m) v = 0.0;
            out.at(k, m) = v;
        }
    }
    bool monotone = true;
    for (int m = 1; m <= m_max; ++m)
        if (out.at(n, m) < out.at(n, m - 1) - 1e-12) monotone = false;
    out.set_tail_monotone_verified(monotone);
    return out;
}

} // namespace pnr
