#pragma once

#include <vector>

#include "qhe/stirling.hpp"

namespace qhe {

// Growth schedule for the Dicke boson cutoff: initial, ceil(initial*growth), ...
// A cutoff is accepted once moving to the next one in the schedule changes the
// efficiency by less than `tolerance` and every heat q by less than
// heat_tolerance * (1 + |q|), the corner energies U_A..U_D move by less than
// heat_tolerance * (1 + |U|), and the same holds for the following
// `confirmations - 1` steps. Deep in the superradiant phase the ground doublet
// freezes the heats long before the levels themselves converge, so eta and the
// heats alone can agree between two cutoffs that are both wrong; the corner
// energies catch that.
struct CutoffPolicy {
    int initial = 8;
    double growth = 2.0;
    double tolerance = 1e-6;
    double heat_tolerance = 1e-6;
    int max_cutoff = 512;
    int confirmations = 1;

    void validate() const;
    [[nodiscard]] int next(int cutoff) const;
};

struct CutoffConvergence {
    int cutoff;
    CycleResult result;
    std::vector<int> visited; // every cutoff evaluated, in order
};

bool cycle_results_agree(const CycleResult& coarse, const CycleResult& fine,
                         const CutoffPolicy& policy);

// Smallest cutoff of the schedule that passes the policy. spec.base must be a
// Dicke model; its boson_cutoff is ignored. Throws SolverError when the
// schedule passes max_cutoff without converging.
CutoffConvergence converge_cutoff(const CycleSpec& spec, const CutoffPolicy& policy = {});

} // namespace qhe
