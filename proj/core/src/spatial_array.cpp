#include "pnr/spatial_array.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "pnr/numerics.hpp"
#include "pnr/parallel.hpp"

namespace pnr {

namespace {

constexpr int kBigPrecisionBits = 256;
// Entries whose predicted cancellation error exceeds this switch to GMP.
constexpr double kRescueThreshold = 1e-14;
// Above this M the binomial weights always force the high-precision path.
constexpr int kDoubleSafeElements = 40;

// Pr(a fixed set of j elements stays silent | m photons), double precision.
double silent_set_prob(int M, double eta, double dark, int j, int m) {
    double base = 1.0 - (static_cast<double>(j) * eta) / M;
    if (base < 0.0) base = 0.0; // roundoff guard; the true value is >= 0
    return std::pow(1.0 - dark, j) * std::pow(base, m);
}

struct BigColumnScratch {
    std::vector<mpf_class> silent; // S(j) for j = j_lo..M
    int j_lo = 0;
    bool ready = false;
};

void fill_big_silent(BigColumnScratch& scratch, int M, double eta, double dark, int m, int n) {
    scratch.j_lo = std::max(0, M - n + 1);
    scratch.silent.clear();
    scratch.silent.reserve(M - scratch.j_lo + 1);
    mpf_class eta_b(eta, kBigPrecisionBits);
    mpf_class dark_c(1.0 - dark, kBigPrecisionBits);
    for (int j = scratch.j_lo; j <= M; ++j) {
        mpf_class base(1.0, kBigPrecisionBits);
        base -= (eta_b * j) / M;
        if (base < 0) base = 0;
        mpf_class sp(0, kBigPrecisionBits), dp(0, kBigPrecisionBits);
        mpf_pow_ui(sp.get_mpf_t(), base.get_mpf_t(), static_cast<unsigned long>(m));
        mpf_pow_ui(dp.get_mpf_t(), dark_c.get_mpf_t(), static_cast<unsigned long>(j));
        scratch.silent.push_back(sp * dp);
    }
    scratch.ready = true;
}

double big_entry(BigColumnScratch& scratch, int M, double eta, double dark, int m, int k, int n) {
    if (!scratch.ready) fill_big_silent(scratch, M, eta, dark, m, n);
    mpf_class acc(0, kBigPrecisionBits);
    mpz_class choose_ki;
    for (int i = 0; i <= k; ++i) {
        mpz_bin_uiui(choose_ki.get_mpz_t(), static_cast<unsigned long>(k),
                     static_cast<unsigned long>(i));
        mpf_class term(choose_ki, kBigPrecisionBits);
        term *= scratch.silent[M - k + i - scratch.j_lo];
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    mpz_class choose_mk;
    mpz_bin_uiui(choose_mk.get_mpz_t(), static_cast<unsigned long>(M),
                 static_cast<unsigned long>(k));
    acc *= mpf_class(choose_mk, kBigPrecisionBits);
    return acc.get_d();
}

std::string describe_spatial(const SpatialArrayConfig& c, int n, int m_max) {
    std::ostringstream os;
    os << "spatial(M=" << c.elements << ",eta=" << c.click.eta << ",dark=" << c.click.dark_prob
       << ",n=" << n << ",m_max=" << m_max << ")";
    return os.str();
}

} // namespace

double placement_probability(int M, const std::vector<int>& occupancy) {
    if (M < 1) throw std::invalid_argument("placement_probability: M must be >= 1");
    if (static_cast<int>(occupancy.size()) != M)
        throw std::invalid_argument("placement_probability: occupancy must have M entries");
    int m = 0;
    for (int x : occupancy) {
        if (x < 0) throw std::invalid_argument("placement_probability: negative occupancy");
        m += x;
    }
    // Multinomial coefficient m! / prod x_i! as a product of binomials.
    double coeff = 1.0;
    int seen = 0;
    for (int x : occupancy) {
        seen += x;
        coeff *= binomial_coefficient(seen, x);
    }
    return coeff * std::pow(static_cast<double>(M), -m);
}

double diagonal_closed_form(int M, double eta, int m) {
    if (M < 1) throw std::invalid_argument("diagonal_closed_form: M must be >= 1");
    if (m < 0 || m > M)
        throw std::invalid_argument("diagonal_closed_form: requires 0 <= m <= M");
    double p = 1.0;
    for (int i = 0; i < m; ++i) p *= eta * (M - i) / M;
    return p;
}

ResponseMatrix spatial_response(const SpatialArrayConfig& config, int n,
                                const TruncationPolicy& policy) {
    const int M = config.elements;
    if (n < 0 || n > M)
        throw std::invalid_argument("spatial_response: requires 0 <= n <= M");
    const double eta = config.click.eta;
    const double dark = config.click.dark_prob;
    const int m_max = policy.resolve_m_max(M, n);

    ResponseMatrix out(n, m_max, describe_spatial(config, n, m_max));

    // Binomial weights, exact in double for M <= kDoubleSafeElements.
    std::vector<std::vector<double>> choose(n, std::vector<double>());
    std::vector<double> choose_Mk(n, 0.0);
    for (int k = 0; k < n; ++k) {
        choose_Mk[k] = binomial_coefficient(M, k);
        choose[k].resize(k + 1);
        for (int i = 0; i <= k; ++i) choose[k][i] = binomial_coefficient(k, i);
    }
    const double eps = std::numeric_limits<double>::epsilon();

    parallel_for(0, m_max + 1, [&](int m) {
        BigColumnScratch scratch;
        std::vector<double> silent(n >= 1 ? n : 1);
        const int j_lo = std::max(0, M - n + 1);
        if (M <= kDoubleSafeElements)
            for (int j = j_lo; j <= M; ++j)
                silent[j - j_lo] = silent_set_prob(M, eta, dark, j, m);

        double below = 0.0; // mass of rows 0..n-1
        for (int k = 0; k < n; ++k) {
            double value;
            if (dark == 0.0 && k > m) {
                value = 0.0; // cannot out-click the photon count without dark counts
            } else if (M > kDoubleSafeElements) {
                value = big_entry(scratch, M, eta, dark, m, k, n);
            } else {
                CompensatedSum acc;
                for (int i = 0; i <= k; ++i) {
                    double term = choose[k][i] * silent[M - k + i - j_lo];
                    acc.add(i % 2 == 0 ? term : -term);
                }
                value = choose_Mk[k] * acc.value();
                if (choose_Mk[k] * acc.max_term * eps > kRescueThreshold)
                    value = big_entry(scratch, M, eta, dark, m, k, n);
            }
            out.at(k, m) = value;
            below += value;
        }
        out.at(n, m) = 1.0 - below; // absorbing ">= n" class
    });

    bool monotone = true;
    for (int m = 1; m <= m_max; ++m)
        if (out.at(n, m) < out.at(n, m - 1) - 1e-12) monotone = false;
    out.set_tail_monotone_verified(monotone);
    return out;
}

} // namespace pnr
