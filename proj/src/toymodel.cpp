#include "qhe/toymodel.hpp"

namespace qhe {

std::array<double, 4> toy_levels(double lambda) {
    return {3.0 * lambda, 1.0 + lambda, 5.0 - lambda, 12.0 - 3.0 * lambda};
}

Spectrum toy_spectrum(double lambda) {
    const auto levels = toy_levels(lambda);
    return spectrum_from_levels({levels.begin(), levels.end()});
}

CycleResult toy_cycle(double lambda1, double lambda2, const Baths& baths) {
    return run_cycle(toy_spectrum(lambda1), toy_spectrum(lambda2), baths);
}

std::vector<CycleResult> toy_sweep(double lambda1, std::span<const double> lambda2_grid,
                                   const Baths& baths, int workers) {
    return efficiency_sweep(toy_spectrum, lambda1, lambda2_grid, baths, workers);
}

} // namespace qhe
