#pragma once

#include <span>
#include <vector>

#include "qhe/eigensolve.hpp"

namespace qhe {

// Gibbs-state quantities at inverse temperature beta, k_B = 1.
struct ThermalState {
    double beta;
    double log_z;
    double internal_energy;
    double entropy;
    double free_energy;
};

// All evaluations shift by the ground energy E0 before exponentiating:
//   ln Z = -beta E0 + ln sum_i exp(-beta (E_i - E0))
// which keeps beta ~ 30 with |E| ~ 1e3 finite.
ThermalState thermal_state(std::span<const double> energies, double beta);
ThermalState thermal_state(const Spectrum& spectrum, double beta);

std::vector<double> occupation_probabilities(std::span<const double> energies, double beta);
std::vector<double> occupation_probabilities(const Spectrum& spectrum, double beta);

// -sum p ln p, terms with p < 1e-300 contribute zero. Only used as a
// cross-check of ThermalState::entropy.
double gibbs_entropy(std::span<const double> probabilities);

} // namespace qhe
