#include "qhe/hamiltonians.hpp"

#include <cmath>

#include "qhe/errors.hpp"

namespace qhe {

OperatorMatrix build_lmg(const ModelParams& params) {
    if (params.model != Model::Lmg) throw ParameterError("build_lmg called with " + describe(params));
    params.validate();

    const SpinBasis basis(params.n_particles);
    const double coupling = params.lambda / params.n_particles;
    Eigen::MatrixXd h = -params.omega0 * build_jz(basis).entries();
    h -= coupling * (build_jx_squared(basis).entries() + params.gamma * build_jy_squared(basis).entries());
    return OperatorMatrix::symmetrized(h);
}

OperatorMatrix build_dicke(const ModelParams& params) {
    if (params.model != Model::Dicke) throw ParameterError("build_dicke called with " + describe(params));
    params.validate();

    const SpinBasis spin(params.n_particles);
    const BosonBasis boson(params.boson_cutoff);
    const auto [a, a_dag] = build_boson_ops(boson);
    const OperatorMatrix jp = build_jplus(spin);
    const OperatorMatrix jm = build_jminus(spin);
    const auto id_spin = OperatorMatrix::identity(spin.dimension());
    const auto id_boson = OperatorMatrix::identity(boson.dimension());

    const double scale = params.lambda / (2.0 * std::sqrt(static_cast<double>(params.n_particles)));
    const double rotating = scale * (1.0 + params.gamma);
    const double counter = scale * (1.0 - params.gamma);

    Eigen::MatrixXd h = params.omega * tensor(build_boson_number(boson), id_spin).entries();
    h += params.omega0 * tensor(id_boson, build_jz(spin)).entries();
    h += rotating * (tensor(a, jp).entries() + tensor(a_dag, jm).entries());
    h += counter * (tensor(a, jm).entries() + tensor(a_dag, jp).entries());
    return OperatorMatrix::symmetrized(h);
}

OperatorMatrix build_hamiltonian(const ModelParams& params) {
    return params.model == Model::Lmg ? build_lmg(params) : build_dicke(params);
}

CriticalCoupling critical_coupling(const ModelParams& params) {
    if (params.model == Model::Lmg) return {params.omega0};
    return {std::sqrt(params.omega * params.omega0)};
}

} // namespace qhe
