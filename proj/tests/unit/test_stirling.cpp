#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "qhe/eigensolve.hpp"
#include "qhe/errors.hpp"
#include "qhe/stirling.hpp"

using namespace qhe;

namespace {

CycleSpec lmg_cycle(int n, double gamma, double l1, double l2, double beta_hot = 15.0, double beta_cold = 30.0) {
    CycleSpec spec;
    spec.base.model = Model::Lmg;
    spec.base.n_particles = n;
    spec.base.gamma = gamma;
    spec.lambda1 = l1;
    spec.lambda2 = l2;
    spec.baths = {beta_hot, beta_cold};
    return spec;
}

CycleSpec dicke_cycle(int n, double gamma, double l1, double l2, int cutoff) {
    CycleSpec spec = lmg_cycle(n, gamma, l1, l2);
    spec.base.model = Model::Dicke;
    spec.base.boson_cutoff = cutoff;
    return spec;
}

std::vector<double> grid(double lo, double hi, double step) {
    std::vector<double> out;
    for (int i = 0; lo + i * step <= hi + 1e-9; ++i) out.push_back(lo + i * step);
    return out;
}

} // namespace

TEST_CASE("bath validation") {
    CHECK_THROWS_AS(Baths({2.0, 1.0}).validate(), ParameterError);
    CHECK_THROWS_AS(Baths({1.0, 1.0}).validate(), ParameterError);
    CHECK_THROWS_AS(Baths({0.0, 1.0}).validate(), ParameterError);
    CHECK_THROWS_AS(Baths::from_temperatures(1.0, 2.0), ParameterError);
    const auto b = Baths::from_temperatures(2.0, 0.5);
    CHECK(b.beta_hot == 0.5);
    CHECK(b.beta_cold == 2.0);
    CHECK(b.carnot() == 0.75);
    CHECK(Baths({15.0, 30.0}).carnot() == 0.5);
}

TEST_CASE("degenerate cycle does nothing") {
    const auto r = run_cycle(lmg_cycle(6, 0.3, 0.8, 0.8));
    CHECK(std::abs(r.q_ab) < 1e-15);
    CHECK(std::abs(r.q_cd) < 1e-15);
    CHECK(std::abs(r.work) < 1e-14);
    CHECK(std::abs(r.q_bc + r.q_da) < 1e-14);
    CHECK(r.status == CycleStatus::NotEngine);
}

TEST_CASE("heats follow their definitions") {
    const auto spec = lmg_cycle(6, 0.2, 0.5, 1.8, 2.0, 5.0);
    ModelParams p1 = spec.base.with_lambda(0.5), p2 = spec.base.with_lambda(1.8);
    const auto s1 = model_spectrum(p1), s2 = model_spectrum(p2);
    const auto a = thermal_state(s1, 2.0), b = thermal_state(s2, 2.0);
    const auto c = thermal_state(s2, 5.0), d = thermal_state(s1, 5.0);
    const auto r = run_cycle(spec);
    CHECK(r.q_ab == doctest::Approx((b.entropy - a.entropy) / 2.0).epsilon(1e-13));
    CHECK(r.q_bc == doctest::Approx(c.internal_energy - b.internal_energy).epsilon(1e-13));
    CHECK(r.q_cd == doctest::Approx((d.entropy - c.entropy) / 5.0).epsilon(1e-13));
    CHECK(r.q_da == doctest::Approx(a.internal_energy - d.internal_energy).epsilon(1e-13));
    CHECK(r.work == doctest::Approx(r.q_ab + r.q_bc + r.q_cd + r.q_da).epsilon(1e-13));
    CHECK(r.carnot == doctest::Approx(0.6));
}

TEST_CASE("LMG N=20 isotropic-free efficiency rises towards Carnot") {
    const auto g = grid(0.5, 3.0, 0.05);
    const auto results = efficiency_sweep(lmg_cycle(20, 0.0, 0.5, 0.0), g, 1);
    REQUIRE(results.size() == g.size());
    double best = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (std::isfinite(results[i].efficiency)) best = std::max(best, results[i].efficiency);
        if (g[i] >= 2.0) CHECK(results[i].efficiency > 0.49);
    }
    CHECK(best <= 0.5 + 1e-9);
    CHECK(best > 0.4999);
}

TEST_CASE("Carnot is approached as the isochoric heats vanish") {
    const auto g = grid(0.5, 4.0, 0.05);
    const auto results = efficiency_sweep(lmg_cycle(8, 0.0, 0.5, 0.0), g, 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (results[i].efficiency > results[best].efficiency) best = i;
    const auto& top = results[best];
    MESSAGE("max efficiency " << top.efficiency << " at lambda2 " << g[best]);
    CHECK(top.efficiency > 0.499);
    CHECK(std::abs(top.q_bc) < 1e-2 * top.q_ab);
    CHECK(std::abs(top.q_da) < 1e-2 * top.q_ab);
    // Along the approach the isochoric share shrinks as efficiency grows.
    double previous_share = INFINITY;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 2.5) continue;
        const auto& r = results[i];
        const double share = (std::abs(r.q_bc) + std::abs(r.q_da)) / r.q_ab;
        CHECK(share < previous_share);
        previous_share = share;
    }
}

TEST_CASE("isotropic LMG efficiency oscillates with lambda2") {
    const auto g = grid(0.5, 3.0, 0.01);
    const auto results = efficiency_sweep(lmg_cycle(20, 1.0, 0.5, 0.0), g, 1);
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        const double e = results[i].efficiency;
        if (e > results[i - 1].efficiency && e > results[i + 1].efficiency) ++maxima;
    }
    CHECK(maxima >= 2);
}

TEST_CASE("engine sign pattern and Carnot bound across models") {
    for (double gamma : {0.0, 0.5, 1.0}) {
        for (double l2 : grid(0.55, 3.0, 0.15)) {
            for (const auto& spec : {lmg_cycle(8, gamma, 0.5, l2), dicke_cycle(3, gamma, 0.5, l2, 24)}) {
                const auto r = run_cycle(spec);
                CAPTURE(gamma);
                CAPTURE(l2);
                CHECK(satisfies_first_law(r));
                CHECK(satisfies_carnot_bound(r));
                if (r.status == CycleStatus::Engine) {
                    CHECK(r.q_ab > 0.0);
                    CHECK(r.q_cd < 0.0);
                    CHECK(r.q_bc <= 1e-12);
                    CHECK(r.q_da >= -1e-12);
                    CHECK(r.efficiency <= r.carnot + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("exchanging the baths reverses every heat") {
    const auto s1 = model_spectrum(ModelParams{Model::Lmg, 6, 1.0, 1.0, 0.4, 0.5, 1});
    const auto s2 = model_spectrum(ModelParams{Model::Lmg, 6, 1.0, 1.0, 0.4, 1.9, 1});
    const double bh = 1.5, bc = 4.0;
    const CycleStates fwd{thermal_state(s1, bh), thermal_state(s2, bh), thermal_state(s2, bc), thermal_state(s1, bc)};
    // Traversed with the hot and cold roles swapped and the stroke order reversed.
    const CycleStates rev{thermal_state(s1, bc), thermal_state(s2, bc), thermal_state(s2, bh), thermal_state(s1, bh)};
    const auto f = cycle_from_states(fwd, {bh, bc});
    const auto r = cycle_from_states(rev, {bc, bh});
    CHECK(f.q_ab == doctest::Approx(-r.q_cd).epsilon(1e-12));
    CHECK(f.q_cd == doctest::Approx(-r.q_ab).epsilon(1e-12));
    CHECK(f.q_bc == doctest::Approx(-r.q_bc).epsilon(1e-12));
    CHECK(f.q_da == doctest::Approx(-r.q_da).epsilon(1e-12));
    CHECK(f.work == doctest::Approx(-r.work).epsilon(1e-12));
}

TEST_CASE("efficiency is NaN without absorbed heat") {
    const auto t = thermal_state(std::vector<double>{0.0, 1.0}, 1.0);
    const CycleStates s{t, t, t, t};
    const auto r = cycle_from_states(s, {1.0, 2.0});
    CHECK(std::isnan(r.efficiency));
    CHECK(r.status == CycleStatus::NotEngine);
}

TEST_CASE("sweep reuses cached spectra and is worker-count independent") {
    const auto g = grid(0.5, 2.5, 0.1);
    SpectrumCache cache;
    const auto spec = dicke_cycle(3, 0.4, 0.5, 0.0, 16);
    const auto serial = efficiency_sweep(spec, g, 1, &cache);
    CHECK(cache.size() == g.size()); // lambda1 = 0.5 is also a grid point
    const auto parallel = efficiency_sweep(spec, g, 4, &cache);
    CHECK(cache.size() == g.size());
    const auto uncached = efficiency_sweep(spec, g, 3);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(serial[i].q_ab == parallel[i].q_ab);
        CHECK(serial[i].q_bc == uncached[i].q_bc);
        CHECK(std::memcmp(&serial[i].work, &parallel[i].work, sizeof(double)) == 0);
    }
}

TEST_CASE("failing grid points are reported, not thrown") {
    const std::vector<double> g{0.5, 1.0, 2.0};
    SpectrumSource source = [](double lambda) {
        if (lambda == 1.0) throw SolverError("synthetic failure");
        return spectrum_from_levels({0.0, lambda});
    };
    const auto r = efficiency_sweep(source, 0.5, g, {1.0, 2.0}, 2);
    CHECK(r[1].status == CycleStatus::Failed);
    CHECK(r[1].message.find("synthetic") != std::string::npos);
    CHECK(std::isnan(r[1].work));
    CHECK(r[2].status != CycleStatus::Failed);
}
