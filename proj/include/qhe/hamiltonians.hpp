#pragma once

#include "qhe/model.hpp"
#include "qhe/operators.hpp"

namespace qhe {

struct CriticalCoupling {
    double lambda_c;
};

// Both builders validate `params` and reject the other model with ParameterError.
OperatorMatrix build_lmg(const ModelParams& params);
OperatorMatrix build_dicke(const ModelParams& params);
OperatorMatrix build_hamiltonian(const ModelParams& params);

// omega0 for LMG, sqrt(omega * omega0) for Dicke.
CriticalCoupling critical_coupling(const ModelParams& params);

} // namespace qhe
