#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qhe::testing {

// Strict interior local maxima of y, ignoring NaN neighbours.
inline std::vector<std::size_t> local_maxima(const std::vector<double>& y) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (!std::isfinite(y[i]) || !std::isfinite(y[i - 1]) || !std::isfinite(y[i + 1])) continue;
        if (y[i] > y[i - 1] && y[i] >= y[i + 1]) out.push_back(i);
    }
    return out;
}

// Highest local maximum within `radius` of `center`, or -1.
inline long peak_near(const std::vector<double>& x, const std::vector<double>& y, double center, double radius) {
    long best = -1;
    for (std::size_t i : local_maxima(y)) {
        if (std::abs(x[i] - center) > radius + 1e-9) continue;
        if (best < 0 || y[i] > y[static_cast<std::size_t>(best)]) best = static_cast<long>(i);
    }
    return best;
}

// Peak height above the higher of the two minima within `window` on each side.
// Zero when there is no local maximum within `radius` of `center`.
inline double prominence_near(const std::vector<double>& x, const std::vector<double>& y, double center,
                              double radius = 0.1, double window = 0.3) {
    const long p = peak_near(x, y, center, radius);
    if (p < 0) return 0.0;
    const double xp = x[static_cast<std::size_t>(p)];
    double left = INFINITY, right = INFINITY;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(y[i])) continue;
        if (x[i] >= xp - window && x[i] < xp) left = std::min(left, y[i]);
        if (x[i] > xp && x[i] <= xp + window) right = std::min(right, y[i]);
    }
    const double base = std::max(std::isfinite(left) ? left : -INFINITY, std::isfinite(right) ? right : -INFINITY);
    return std::isfinite(base) ? y[static_cast<std::size_t>(p)] - base : 0.0;
}

} // namespace qhe::testing
