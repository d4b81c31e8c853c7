#include "qhe/meanfield.hpp"

#include <cmath>

#include "qhe/errors.hpp"

namespace qhe {
namespace {

void require_positive(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) throw ParameterError(std::string(name) + " must be > 0");
}

void require_coupling(double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0) throw ParameterError("lambda must be >= 0");
}

} // namespace

std::string_view phase_name(Model model, Phase phase) {
    if (model == Model::Lmg) return phase == Phase::Normal ? "paramagnetic" : "ferromagnetic";
    return phase == Phase::Normal ? "normal" : "superradiant";
}

MeanFieldResult lmg_energy_per_particle(double omega0, double lambda) {
    require_positive(omega0, "omega0");
    require_coupling(lambda);
    MeanFieldResult out{};
    out.lambda_c = omega0;
    if (lambda < omega0) {
        out.energy_per_particle = -0.5 * omega0;
        out.phase = Phase::Normal;
        out.amplitudes = {0.0, 1.0, 0.0};
    } else {
        out.energy_per_particle = -0.25 * (lambda + omega0 * omega0 / lambda);
        out.phase = Phase::Broken;
        out.amplitudes = {0.0, std::sqrt((lambda + omega0) / (2.0 * lambda)),
                          std::sqrt((lambda - omega0) / (2.0 * lambda))};
    }
    return out;
}

MeanFieldResult dicke_energy_per_particle(double omega, double omega0, double lambda) {
    require_positive(omega, "omega");
    require_positive(omega0, "omega0");
    require_coupling(lambda);
    const double ww0 = omega * omega0;
    MeanFieldResult out{};
    out.lambda_c = std::sqrt(ww0);
    if (lambda < out.lambda_c) {
        out.energy_per_particle = -0.5 * omega0;
        out.phase = Phase::Normal;
        out.amplitudes = {0.0, 0.0, 1.0};
    } else {
        const double l2 = lambda * lambda;
        out.energy_per_particle = -(l2 / (4.0 * omega)) * (1.0 + ww0 * ww0 / (l2 * l2));
        out.phase = Phase::Broken;
        out.amplitudes = {std::sqrt((l2 - ww0) * (l2 + ww0) / (4.0 * omega * omega * l2)),
                          std::sqrt((l2 - ww0) / (2.0 * l2)), std::sqrt((l2 + ww0) / (2.0 * l2))};
    }
    return out;
}

MeanFieldResult meanfield_energy(Model model, double omega, double omega0, double lambda) {
    return model == Model::Lmg ? lmg_energy_per_particle(omega0, lambda)
                               : dicke_energy_per_particle(omega, omega0, lambda);
}

double meanfield_second_derivative(Model model, double omega, double omega0, double lambda) {
    const MeanFieldResult mf = meanfield_energy(model, omega, omega0, lambda);
    if (mf.phase == Phase::Normal) return 0.0;
    if (model == Model::Lmg) return -omega0 * omega0 / (2.0 * lambda * lambda * lambda);
    const double l4 = lambda * lambda * lambda * lambda;
    return -1.0 / (2.0 * omega) - 3.0 * omega * omega0 * omega0 / (2.0 * l4);
}

double second_derivative_jump(Model model, double omega, double omega0) {
    const double lambda_c = meanfield_energy(model, omega, omega0, 0.0).lambda_c;
    return std::abs(meanfield_second_derivative(model, omega, omega0, lambda_c));
}

} // namespace qhe
