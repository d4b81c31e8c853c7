#include "qhe/cutoff.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qhe/errors.hpp"

namespace qhe {

void CutoffPolicy::validate() const {
    if (initial < 1) throw ParameterError("cutoff policy: initial cutoff must be >= 1");
    if (!(growth > 1.0)) throw ParameterError("cutoff policy: growth factor must be > 1");
    if (!(tolerance > 0.0) || !(heat_tolerance > 0.0)) throw ParameterError("cutoff policy: tolerances must be > 0");
    if (max_cutoff < initial) throw ParameterError("cutoff policy: max cutoff below initial cutoff");
    if (confirmations < 1) throw ParameterError("cutoff policy: confirmations must be >= 1");
}

int CutoffPolicy::next(int cutoff) const {
    const auto grown = static_cast<int>(std::ceil(cutoff * growth));
    return grown > cutoff ? grown : cutoff + 1;
}

namespace {

bool close(double coarse, double fine, double tolerance) {
    if (std::isnan(coarse) || std::isnan(fine)) return std::isnan(coarse) && std::isnan(fine);
    return std::abs(fine - coarse) < tolerance;
}

} // namespace

bool cycle_results_agree(const CycleResult& coarse, const CycleResult& fine, const CutoffPolicy& policy) {
    if (!close(coarse.efficiency, fine.efficiency, policy.tolerance)) return false;
    const double pairs[4][2] = {{coarse.q_ab, fine.q_ab},
                                {coarse.q_bc, fine.q_bc},
                                {coarse.q_cd, fine.q_cd},
                                {coarse.q_da, fine.q_da}};
    for (const auto& [c, f] : pairs) {
        if (!close(c, f, policy.heat_tolerance * (1.0 + std::abs(f)))) return false;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        const double c = coarse.corner_energies[i], f = fine.corner_energies[i];
        if (!close(c, f, policy.heat_tolerance * (1.0 + std::abs(f)))) return false;
    }
    return true;
}

CutoffConvergence converge_cutoff(const CycleSpec& spec, const CutoffPolicy& policy) {
    if (spec.base.model != Model::Dicke) throw ParameterError("converge_cutoff needs a Dicke model");
    policy.validate();

    auto evaluate = [&](int cutoff) {
        CycleSpec at = spec;
        at.base.boson_cutoff = cutoff;
        return run_cycle(at);
    };

    // Candidate i is accepted once the `confirmations` refinements after it each
    // agree with their predecessor.
    std::vector<int> cutoffs{policy.initial};
    std::vector<CycleResult> results{evaluate(policy.initial)};
    std::size_t candidate = 0;
    for (;;) {
        if (results.size() - 1 - candidate == static_cast<std::size_t>(policy.confirmations)) {
            return {cutoffs[candidate], results[candidate], cutoffs};
        }
        const int next = policy.next(cutoffs.back());
        if (next > policy.max_cutoff) break;
        cutoffs.push_back(next);
        results.push_back(evaluate(next));
        if (!cycle_results_agree(results[results.size() - 2], results.back(), policy)) {
            candidate = results.size() - 1;
        }
    }

    const auto& b = spec.base;
    std::ostringstream msg;
    msg << "boson cutoff did not converge up to " << policy.max_cutoff << " for dicke N=" << b.n_particles
        << ", omega0=" << b.omega0 << ", omega=" << b.omega << ", gamma=" << b.gamma << ", lambda1=" << spec.lambda1
        << ", lambda2=" << spec.lambda2 << ", beta_hot=" << spec.baths.beta_hot << ", beta_cold=" << spec.baths.beta_cold;
    throw SolverError(msg.str());
}

} // namespace qhe
