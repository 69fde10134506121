#include "pnr/distributions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pnr {

PhotonDistribution PhotonDistribution::fock(int m) {
    if (m < 0) throw std::invalid_argument("PhotonDistribution::fock: m must be >= 0");
    return PhotonDistribution(Variant{Fock{m}});
}

PhotonDistribution PhotonDistribution::poisson(double mu) {
    if (!(mu >= 0.0)) throw std::invalid_argument("PhotonDistribution::poisson: mu must be >= 0");
    return PhotonDistribution(Variant{Poisson{mu}});
}

PhotonDistribution
PhotonDistribution::mixture(std::vector<std::pair<double, PhotonDistribution>> components) {
    if (components.empty())
        throw std::invalid_argument("PhotonDistribution::mixture: no components");
    double wsum = 0.0;
    for (const auto& [w, d] : components) {
        if (!(w > 0.0)) throw std::invalid_argument("PhotonDistribution::mixture: weights must be positive");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::invalid_argument("PhotonDistribution::mixture: weights must sum to 1");
    return PhotonDistribution(Variant{Mixture{std::move(components)}});
}

double poisson_pmf(double mu, int m) {
    if (m < 0) return 0.0;
    if (mu == 0.0) return m == 0 ? 1.0 : 0.0;
    return std::exp(m * std::log(mu) - mu - std::lgamma(m + 1.0));
}

int poisson_tail_cutoff(double mu, double tail_tol) {
    if (mu == 0.0) return 0;
    // Walk the CDF with the term recurrence; switch point is far below any
    // double underflow for the mu values in scope.
    double term = std::exp(-mu);
    double cdf = term;
    int m = 0;
    while (1.0 - cdf >= tail_tol) {
        ++m;
        term *= mu / m;
        cdf += term;
        if (m > 500000)
            throw std::invalid_argument("poisson_tail_cutoff: mu too large for tail_tol");
    }
    return m;
}

double PhotonDistribution::pmf(int m) const {
    if (m < 0) throw std::invalid_argument("PhotonDistribution::pmf: m must be >= 0");
    struct Visitor {
        int m;
        double operator()(const Fock& f) const { return f.m == m ? 1.0 : 0.0; }
        double operator()(const Poisson& p) const { return poisson_pmf(p.mu, m); }
        double operator()(const Mixture& mix) const {
            double s = 0.0;
            for (const auto& [w, d] : mix.parts) s += w * d.pmf(m);
            return s;
        }
    };
    return std::visit(Visitor{m}, v_);
}

double PhotonDistribution::tail_mass_above(int m_max) const {
    struct Visitor {
        int m_max;
        double operator()(const Fock& f) const { return f.m > m_max ? 1.0 : 0.0; }
        double operator()(const Poisson& p) const {
            if (p.mu == 0.0) return 0.0;
            double term = std::exp(-p.mu);
            double cdf = term;
            for (int k = 1; k <= m_max; ++k) {
                term *= p.mu / k;
                cdf += term;
            }
            return std::max(0.0, 1.0 - cdf);
        }
        double operator()(const Mixture& mix) const {
            double s = 0.0;
            for (const auto& [w, d] : mix.parts) s += w * d.tail_mass_above(m_max);
            return s;
        }
    };
    return std::visit(Visitor{m_max}, v_);
}

bool PhotonDistribution::is_fock() const { return std::holds_alternative<Fock>(v_); }
bool PhotonDistribution::is_poisson() const { return std::holds_alternative<Poisson>(v_); }

double PhotonDistribution::parameter() const {
    if (is_fock()) return std::get<Fock>(v_).m;
    if (is_poisson()) return std::get<Poisson>(v_).mu;
    throw std::invalid_argument("PhotonDistribution::parameter: mixture has no single parameter");
}

std::string PhotonDistribution::describe() const {
    std::ostringstream os;
    struct Visitor {
        std::ostringstream& os;
        void operator()(const Fock& f) const { os << "fock(" << f.m << ")"; }
        void operator()(const Poisson& p) const { os << "poisson(" << p.mu << ")"; }
        void operator()(const Mixture& mix) const {
            os << "mixture(";
            for (size_t i = 0; i < mix.parts.size(); ++i) {
                if (i) os << ", ";
                os << mix.parts[i].first << "*" << mix.parts[i].second.describe();
            }
            os << ")";
        }
    };
    std::visit(Visitor{os}, v_);
    return os.str();
}

double distribution_pmf(const PhotonDistribution& d, int m) { return d.pmf(m); }

} // namespace pnr
