#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qhe/model.hpp"
#include "qhe/operators.hpp"

namespace qhe {

enum class EigenvectorMode { Skip, Compute };

struct Spectrum {
    std::vector<double> eigenvalues;             // ascending
    std::optional<Eigen::MatrixXd> eigenvectors; // columns aligned with eigenvalues
    std::optional<ModelParams> params;

    [[nodiscard]] std::size_t size() const { return eigenvalues.size(); }
    [[nodiscard]] double ground_energy() const { return eigenvalues.front(); }
    [[nodiscard]] std::span<const double> energies() const { return eigenvalues; }
};

// Full spectrum of a real symmetric matrix. Throws ContractError when the
// matrix is empty or not exactly symmetric, SolverError on non-convergence.
Spectrum eigh(const OperatorMatrix& matrix, EigenvectorMode mode = EigenvectorMode::Skip);

// Builds the Hamiltonian for `params` and diagonalizes it.
Spectrum model_spectrum(const ModelParams& params, EigenvectorMode mode = EigenvectorMode::Skip);

// Spectrum from explicit levels (sorted on the way in).
Spectrum spectrum_from_levels(std::vector<double> levels);

} // namespace qhe
