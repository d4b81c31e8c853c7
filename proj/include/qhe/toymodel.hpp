#pragma once

#include <array>
#include <span>
#include <vector>

#include "qhe/eigensolve.hpp"
#include "qhe/stirling.hpp"

namespace qhe {

// Four affine levels E1 = 3l, E2 = 1 + l, E3 = 5 - l, E4 = 12 - 3l whose ground
// level changes identity at l = 0.5, 2 and 3.5. Returned unsorted, in level order.
std::array<double, 4> toy_levels(double lambda);

Spectrum toy_spectrum(double lambda);

// Stirling cycle on the toy spectrum, through the same thermo/stirling path
// as the many-body models.
CycleResult toy_cycle(double lambda1, double lambda2, const Baths& baths);

std::vector<CycleResult> toy_sweep(double lambda1, std::span<const double> lambda2_grid,
                                   const Baths& baths, int workers = 1);

} // namespace qhe
