#pragma once

#include <string_view>

#include "qhe/model.hpp"

namespace qhe {

// Thermodynamic-limit (N -> infinity) energies of the indistinguishable-particle
// models. The saddle point is temperature independent, so nothing here takes beta,
// and the entropy per particle vanishes identically.

enum class Phase {
    Normal, // paramagnetic (LMG) / normal (Dicke), lambda < lambda_c
    Broken, // ferromagnetic (LMG) / superradiant (Dicke), lambda >= lambda_c
};

std::string_view phase_name(Model model, Phase phase);

// Moduli of the saddle-point amplitudes a0 = r0 e^{i theta0}, b1, b2 of the
// two-boson representation. r0 is zero for LMG.
struct MeanFieldAmplitudes {
    double r0 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
};

struct MeanFieldResult {
    double energy_per_particle;
    double entropy_per_particle = 0.0;
    Phase phase;
    double lambda_c;
    MeanFieldAmplitudes amplitudes;
};

// U/N = -omega0/2 for lambda < omega0, -(lambda + omega0^2/lambda)/4 otherwise.
MeanFieldResult lmg_energy_per_particle(double omega0, double lambda);
// U/N = -omega0/2 for lambda < sqrt(omega omega0),
//       -(lambda^2 / 4 omega)(1 + omega^2 omega0^2 / lambda^4) otherwise.
MeanFieldResult dicke_energy_per_particle(double omega, double omega0, double lambda);

MeanFieldResult meanfield_energy(Model model, double omega, double omega0, double lambda);

// Analytic d^2(U/N)/dlambda^2 of the closed forms above.
double meanfield_second_derivative(Model model, double omega, double omega0, double lambda);

// |d2U(lambda_c+) - d2U(lambda_c-)|: 1/(2 omega0) for LMG, 2/omega for Dicke.
double second_derivative_jump(Model model, double omega, double omega0);

} // namespace qhe
