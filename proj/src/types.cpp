#include "ecs/types.hpp"

#include <cmath>

namespace ecs {

void OscillatorConfig::validate() const {
    if (!(omega > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument(
            "OscillatorConfig: omega, mass and hbar must be positive");
}

ECSParams ECSParams::from_beta(int m, double beta, double phase) {
    if (beta < 0.0)
        throw std::invalid_argument("ECSParams: beta must be >= 0");
    ECSParams p;
    p.m = m;
    p.alpha_mag = std::sqrt(beta);
    p.phase = phase;
    p.validate();
    return p;
}

void ECSParams::validate() const {
    if (m < 0)
        throw std::invalid_argument("ECSParams: m must be >= 0");
    if (!(alpha_mag >= 0.0) || !std::isfinite(alpha_mag))
        throw std::invalid_argument("ECSParams: |alpha| must be finite and >= 0");
    if (!std::isfinite(phase))
        throw std::invalid_argument("ECSParams: phase must be finite");
}

void GridSpec::validate() const {
    if (!(eps_min < eps_max))
        throw std::invalid_argument("GridSpec: eps_min must be < eps_max");
    if (points < 2)
        throw std::invalid_argument("GridSpec: need at least 2 points");
}

}  // namespace ecs
