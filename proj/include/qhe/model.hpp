#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace qhe {

enum class Model { Lmg, Dicke };

std::string_view to_string(Model model);
Model model_from_string(std::string_view name);

// Parameters identifying one Hamiltonian instance.
//
//   LMG:   H = -omega0 Jz - (lambda/N) (Jx^2 + gamma Jy^2)
//   Dicke: H = omega a^dag a + omega0 Jz
//              + lambda (1+gamma)/(2 sqrt N) (a J+ + a^dag J-)
//              + lambda (1-gamma)/(2 sqrt N) (a J- + a^dag J+)
//
// omega and boson_cutoff are only meaningful for the Dicke model.
struct ModelParams {
    Model model = Model::Lmg;
    int n_particles = 1;
    double omega0 = 1.0;
    double omega = 1.0;
    double gamma = 0.0;
    double lambda = 0.0;
    int boson_cutoff = 1;

    // Throws ParameterError when a field is outside its physical domain.
    void validate() const;

    [[nodiscard]] ModelParams with_lambda(double value) const {
        ModelParams copy = *this;
        copy.lambda = value;
        return copy;
    }

    [[nodiscard]] ModelParams with_cutoff(int value) const {
        ModelParams copy = *this;
        copy.boson_cutoff = value;
        return copy;
    }

    auto operator<=>(const ModelParams&) const = default;
};

std::string describe(const ModelParams& params);

} // namespace qhe
