#include "qhe/operators.hpp"

#include <cmath>
#include <string>

#include "qhe/errors.hpp"

namespace qhe {

SpinBasis::SpinBasis(int n_particles) : n_particles_(n_particles) {
    if (n_particles < 1) throw ParameterError("SpinBasis needs n_particles >= 1");
}

BosonBasis::BosonBasis(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 1) throw ParameterError("BosonBasis needs cutoff >= 1");
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw ContractError("operator matrix must be square, got " + std::to_string(entries_.rows()) +
                            "x" + std::to_string(entries_.cols()));
    }
}

OperatorMatrix OperatorMatrix::identity(Index dim) {
    return OperatorMatrix(Eigen::MatrixXd::Identity(dim, dim));
}

OperatorMatrix OperatorMatrix::diagonal(const Eigen::VectorXd& values) {
    return OperatorMatrix(Eigen::MatrixXd(values.asDiagonal()));
}

OperatorMatrix OperatorMatrix::symmetrized(const Eigen::MatrixXd& entries) {
    Eigen::MatrixXd sym = 0.5 * (entries + entries.transpose());
    return OperatorMatrix(std::move(sym));
}

bool OperatorMatrix::is_symmetric() const {
    const Index n = dim();
    for (Index col = 0; col < n; ++col) {
        for (Index row = col + 1; row < n; ++row) {
            if (entries_(row, col) != entries_(col, row)) return false;
        }
    }
    return true;
}

OperatorMatrix build_jz(const SpinBasis& basis) {
    Eigen::VectorXd m(basis.dimension());
    for (Index i = 0; i < basis.dimension(); ++i) m(i) = basis.m(i);
    return OperatorMatrix::diagonal(m);
}

OperatorMatrix build_jplus(const SpinBasis& basis) {
    const Index dim = basis.dimension();
    const double j = basis.j();
    Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(dim, dim);
    for (Index i = 0; i + 1 < dim; ++i) {
        const double m = basis.m(i);
        jp(i + 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    return OperatorMatrix(std::move(jp));
}

OperatorMatrix build_jminus(const SpinBasis& basis) { return build_jplus(basis).transpose(); }

OperatorMatrix build_jx_squared(const SpinBasis& basis) {
    const Eigen::MatrixXd jp = build_jplus(basis).entries();
    const Eigen::MatrixXd jx = 0.5 * (jp + jp.transpose());
    return OperatorMatrix::symmetrized(jx * jx);
}

OperatorMatrix build_jy_squared(const SpinBasis& basis) {
    const Eigen::MatrixXd jp = build_jplus(basis).entries();
    const Eigen::MatrixXd diff = jp - jp.transpose();
    return OperatorMatrix::symmetrized(-0.25 * (diff * diff));
}

BosonOperators build_boson_ops(const BosonBasis& basis) {
    const Index dim = basis.dimension();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    OperatorMatrix annihilate(std::move(a));
    OperatorMatrix create = annihilate.transpose();
    return {std::move(annihilate), std::move(create)};
}

OperatorMatrix build_boson_number(const BosonBasis& basis) {
    return OperatorMatrix::diagonal(Eigen::VectorXd::LinSpaced(basis.dimension(), 0.0,
                                                               static_cast<double>(basis.cutoff())));
}

OperatorMatrix tensor(const OperatorMatrix& left, const OperatorMatrix& right) {
    const Index nl = left.dim();
    const Index nr = right.dim();
    Eigen::MatrixXd out(nl * nr, nl * nr);
    const Eigen::MatrixXd& l = left.entries();
    const Eigen::MatrixXd& r = right.entries();
    for (Index lc = 0; lc < nl; ++lc) {
        for (Index lr = 0; lr < nl; ++lr) {
            out.block(lr * nr, lc * nr, nr, nr) = l(lr, lc) * r;
        }
    }
    return OperatorMatrix(std::move(out));
}

OperatorMatrix build_excitation_number(const ModelParams& params) {
    const SpinBasis spin(params.n_particles);
    Eigen::VectorXd spin_part(spin.dimension());
    for (Index i = 0; i < spin.dimension(); ++i) spin_part(i) = static_cast<double>(i); // m + N/2
    if (params.model == Model::Lmg) return OperatorMatrix::diagonal(spin_part);

    const BosonBasis boson(params.boson_cutoff);
    Eigen::VectorXd values(boson.dimension() * spin.dimension());
    for (Index n = 0; n < boson.dimension(); ++n) {
        values.segment(n * spin.dimension(), spin.dimension()) =
            spin_part.array() + static_cast<double>(n);
    }
    return OperatorMatrix::diagonal(values);
}

OperatorMatrix build_parity(const ModelParams& params) {
    const OperatorMatrix number = build_excitation_number(params);
    Eigen::VectorXd signs(number.dim());
    for (Index i = 0; i < number.dim(); ++i) {
        const auto excitations = static_cast<long long>(number(i, i));
        signs(i) = (excitations % 2 == 0) ? 1.0 : -1.0;
    }
    return OperatorMatrix::diagonal(signs);
}

double commutator_max_norm(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw ContractError("commutator of operators with different dimensions");
    const Eigen::MatrixXd comm = lhs.entries() * rhs.entries() - rhs.entries() * lhs.entries();
    return comm.cwiseAbs().maxCoeff();
}

} // namespace qhe
