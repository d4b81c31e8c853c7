#include "qhe/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhe/errors.hpp"

namespace qhe {
namespace {

void check_inputs(std::span<const double> energies, double beta) {
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw ParameterError("beta must be finite and > 0, got " + std::to_string(beta));
    }
    if (energies.empty()) throw ContractError("thermal evaluation of an empty spectrum");
    for (double e : energies) {
        if (!std::isfinite(e)) throw ContractError("spectrum contains a non-finite energy");
    }
}

} // namespace

ThermalState thermal_state(std::span<const double> energies, double beta) {
    check_inputs(energies, beta);
    const double e0 = *std::min_element(energies.begin(), energies.end());

    double weight_sum = 0.0;
    double excess_sum = 0.0; // sum_i w_i (E_i - E0)
    for (double e : energies) {
        const double excess = e - e0;
        const double w = std::exp(-beta * excess);
        weight_sum += w;
        excess_sum += w * excess;
    }
    const double log_sum = std::log(weight_sum);
    const double mean_excess = excess_sum / weight_sum;

    ThermalState state{};
    state.beta = beta;
    state.log_z = -beta * e0 + log_sum;
    state.internal_energy = e0 + mean_excess;
    state.free_energy = e0 - log_sum / beta;
    // beta (U - F) with the E0 terms cancelled analytically.
    state.entropy = beta * mean_excess + log_sum;
    return state;
}

ThermalState thermal_state(const Spectrum& spectrum, double beta) {
    return thermal_state(spectrum.energies(), beta);
}

std::vector<double> occupation_probabilities(std::span<const double> energies, double beta) {
    check_inputs(energies, beta);
    const double e0 = *std::min_element(energies.begin(), energies.end());
    std::vector<double> p;
    p.reserve(energies.size());
    double total = 0.0;
    for (double e : energies) {
        p.push_back(std::exp(-beta * (e - e0)));
        total += p.back();
    }
    for (double& x : p) x /= total;
    return p;
}

std::vector<double> occupation_probabilities(const Spectrum& spectrum, double beta) {
    return occupation_probabilities(spectrum.energies(), beta);
}

double gibbs_entropy(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p < 1e-300) continue;
        s -= p * std::log(p);
    }
    return s;
}

} // namespace qhe
