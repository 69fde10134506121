#pragma once

#include <cmath>
#include <stdexcept>

namespace pnr {

/// Parameters of a single binary ("click") detector: quantum efficiency and
/// the dark-count probability per detection window.
struct ClickModel {
    double eta = 1.0;
    double dark_prob = 0.0;

    ClickModel() = default;
    ClickModel(double eta_, double dark_prob_) : eta(eta_), dark_prob(dark_prob_) {
        if (!(eta >= 0.0 && eta <= 1.0))
            throw std::invalid_argument("ClickModel: eta must be in [0, 1]");
        if (!(dark_prob >= 0.0 && dark_prob < 1.0))
            throw std::invalid_argument("ClickModel: dark_prob must be in [0, 1)");
    }
};

/// Probability that a click detector fires when `photons` photons hit it:
/// 1 - (1 - dark_prob) * (1 - eta)^photons.
inline double click_probability(const ClickModel& model, int photons) {
    if (photons < 0) throw std::invalid_argument("click_probability: photons must be >= 0");
    return 1.0 - (1.0 - model.dark_prob) * std::pow(1.0 - model.eta, photons);
}

} // namespace pnr
