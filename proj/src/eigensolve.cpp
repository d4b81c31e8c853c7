#include "qhe/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "qhe/errors.hpp"
#include "qhe/hamiltonians.hpp"

namespace qhe {
namespace {

constexpr int kMaxIterationsPerEigenvalue = 50;

// Implicit-shift QL on the symmetric tridiagonal matrix with diagonal `d` and
// subdiagonal e[0..n-2] (e[n-1] is scratch). On return `d` holds the
// eigenvalues (unsorted). When `z` is non-null its columns are rotated along,
// so passing the Householder Q yields eigenvectors of the original matrix.
void tridiagonal_ql(Eigen::VectorXd& d, Eigen::VectorXd& e, Eigen::MatrixXd* z) {
    const Index n = d.size();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (n > 0) e(n - 1) = 0.0;

    for (Index l = 0; l < n; ++l) {
        int iterations = 0;
        Index m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d(m)) + std::abs(d(m + 1));
                if (std::abs(e(m)) <= eps * dd) break;
            }
            if (m == l) break;
            if (iterations++ == kMaxIterationsPerEigenvalue) {
                throw SolverError("eigh: no convergence for eigenvalue index " + std::to_string(l) +
                                  " after " + std::to_string(kMaxIterationsPerEigenvalue) + " QL sweeps");
            }

            double g = (d(l + 1) - d(l)) / (2.0 * e(l));
            double r = std::hypot(g, 1.0);
            g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (Index i = m - 1; i >= l; --i) {
                const double f = s * e(i);
                const double b = c * e(i);
                r = std::hypot(f, g);
                e(i + 1) = r;
                if (r == 0.0) {
                    d(i + 1) -= p;
                    e(m) = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d(i + 1) - p;
                r = (d(i) - g) * s + 2.0 * c * b;
                p = s * r;
                d(i + 1) = g + p;
                g = c * r - b;
                if (z != nullptr) {
                    for (Index k = 0; k < n; ++k) {
                        const double zk = (*z)(k, i + 1);
                        (*z)(k, i + 1) = s * (*z)(k, i) + c * zk;
                        (*z)(k, i) = c * (*z)(k, i) - s * zk;
                    }
                }
            }
            if (underflow) continue;
            d(l) -= p;
            e(l) = g;
            e(m) = 0.0;
        } while (m != l);
    }
}

} // namespace

Spectrum eigh(const OperatorMatrix& matrix, EigenvectorMode mode) {
    const Index n = matrix.dim();
    if (n < 1) throw ContractError("eigh: empty matrix");
    if (!matrix.entries().allFinite()) throw ContractError("eigh: matrix has non-finite entries");
    if (!matrix.is_symmetric()) throw ContractError("eigh: matrix is not symmetric");

    const bool want_vectors = mode == EigenvectorMode::Compute;
    Eigen::VectorXd diag;
    Eigen::VectorXd offdiag = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd vectors;
    if (n == 1) {
        diag = matrix.entries().diagonal();
        if (want_vectors) vectors = Eigen::MatrixXd::Identity(1, 1);
    } else {
        Eigen::Tridiagonalization<Eigen::MatrixXd> tri(matrix.entries());
        diag = tri.diagonal();
        offdiag.head(n - 1) = tri.subDiagonal();
        if (want_vectors) vectors = tri.matrixQ();
    }

    tridiagonal_ql(diag, offdiag, want_vectors ? &vectors : nullptr);

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return diag(a) < diag(b); });

    Spectrum spectrum;
    spectrum.eigenvalues.reserve(order.size());
    for (Index idx : order) spectrum.eigenvalues.push_back(diag(idx));
    if (want_vectors) {
        Eigen::MatrixXd sorted(n, n);
        for (Index col = 0; col < n; ++col) sorted.col(col) = vectors.col(order[static_cast<std::size_t>(col)]);
        spectrum.eigenvectors = std::move(sorted);
    }
    return spectrum;
}

Spectrum model_spectrum(const ModelParams& params, EigenvectorMode mode) {
    Spectrum spectrum = eigh(build_hamiltonian(params), mode);
    spectrum.params = params;
    return spectrum;
}

Spectrum spectrum_from_levels(std::vector<double> levels) {
    if (levels.empty()) throw ContractError("spectrum needs at least one level");
    if (std::any_of(levels.begin(), levels.end(), [](double e) { return std::isnan(e); })) {
        throw ContractError("spectrum contains NaN");
    }
    std::sort(levels.begin(), levels.end());
    Spectrum spectrum;
    spectrum.eigenvalues = std::move(levels);
    return spectrum;
}

} // namespace qhe
