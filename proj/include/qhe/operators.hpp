#pragma once

#include <Eigen/Dense>

#include "qhe/model.hpp"

namespace qhe {

using Index = Eigen::Index;

// Symmetric (j = N/2) sector of N two-level systems. Basis |j, m>, ascending m.
class SpinBasis {
  public:
    explicit SpinBasis(int n_particles);

    [[nodiscard]] int n_particles() const { return n_particles_; }
    [[nodiscard]] Index dimension() const { return n_particles_ + 1; }
    [[nodiscard]] double j() const { return 0.5 * n_particles_; }
    // Magnetic quantum number of basis state `index`.
    [[nodiscard]] double m(Index index) const { return static_cast<double>(index) - j(); }

  private:
    int n_particles_;
};

// Truncated Fock space |0>, ..., |cutoff>, ascending occupation.
class BosonBasis {
  public:
    explicit BosonBasis(int cutoff);

    [[nodiscard]] int cutoff() const { return cutoff_; }
    [[nodiscard]] Index dimension() const { return cutoff_ + 1; }

  private:
    int cutoff_;
};

// Dense real matrix of an operator in a fixed basis. Observables are exactly
// symmetric by construction; ladder operators (J+, a, ...) are not.
class OperatorMatrix {
  public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(Eigen::MatrixXd entries);

    static OperatorMatrix identity(Index dim);
    static OperatorMatrix diagonal(const Eigen::VectorXd& values);
    // (M + M^T)/2, which is symmetric bit for bit.
    static OperatorMatrix symmetrized(const Eigen::MatrixXd& entries);

    [[nodiscard]] Index dim() const { return entries_.rows(); }
    [[nodiscard]] const Eigen::MatrixXd& entries() const { return entries_; }
    [[nodiscard]] double operator()(Index row, Index col) const { return entries_(row, col); }
    [[nodiscard]] double trace() const { return entries_.trace(); }
    [[nodiscard]] bool is_symmetric() const;
    [[nodiscard]] OperatorMatrix transpose() const { return OperatorMatrix(entries_.transpose()); }

  private:
    Eigen::MatrixXd entries_;
};

OperatorMatrix build_jz(const SpinBasis& basis);
// <j,m+1|J+|j,m> = sqrt(j(j+1) - m(m+1))
OperatorMatrix build_jplus(const SpinBasis& basis);
OperatorMatrix build_jminus(const SpinBasis& basis);
// ((J+ + J-)/2)^2
OperatorMatrix build_jx_squared(const SpinBasis& basis);
// -((J+ - J-)/2)^2, the real form of Jy^2.
OperatorMatrix build_jy_squared(const SpinBasis& basis);

struct BosonOperators {
    OperatorMatrix a;
    OperatorMatrix a_dagger;
};

BosonOperators build_boson_ops(const BosonBasis& basis);
OperatorMatrix build_boson_number(const BosonBasis& basis);

// Kronecker product. The left factor varies slowest, so tensor(boson, spin)
// gives the boson-major ordering used for the Dicke model.
OperatorMatrix tensor(const OperatorMatrix& left, const OperatorMatrix& right);

// Excitation number: Jz + N/2 for LMG, a^dag a + Jz + N/2 for Dicke.
OperatorMatrix build_excitation_number(const ModelParams& params);
// exp(i pi N_exc), a diagonal matrix of +-1.
OperatorMatrix build_parity(const ModelParams& params);

// max_ij |(AB - BA)_ij|
double commutator_max_norm(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

} // namespace qhe
