#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pnr {

/// A photon-number distribution: a Fock number, a Poisson distribution, or a
/// finite convex mixture of other distributions. Mixture weights must be
/// positive and sum to 1 within 1e-12.
class PhotonDistribution {
  public:
    static PhotonDistribution fock(int m);
    static PhotonDistribution poisson(double mu);
    static PhotonDistribution
    mixture(std::vector<std::pair<double, PhotonDistribution>> components);

    double pmf(int m) const;

    /// Probability mass strictly above m_max. Exact for Fock; 1 - CDF for
    /// Poisson; weighted for mixtures.
    double tail_mass_above(int m_max) const;

    bool is_fock() const;
    bool is_poisson() const;
    /// Fock photon number or Poisson mean, depending on variant.
    double parameter() const;

    std::string describe() const;

  private:
    struct Fock {
        int m;
    };
    struct Poisson {
        double mu;
    };
    struct Mixture {
        std::vector<std::pair<double, PhotonDistribution>> parts;
    };
    using Variant = std::variant<Fock, Poisson, Mixture>;

    explicit PhotonDistribution(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Probability of exactly m photons under d.
double distribution_pmf(const PhotonDistribution& d, int m);

/// Poisson pmf mu^m e^{-mu} / m!, stable for any mu >= 0.
double poisson_pmf(double mu, int m);

/// Smallest m such that the Poisson(mu) mass above m is below tail_tol.
int poisson_tail_cutoff(double mu, double tail_tol);

} // namespace pnr
