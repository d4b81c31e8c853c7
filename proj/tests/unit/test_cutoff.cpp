#include <doctest.h>

#include <cmath>

#include "qhe/cutoff.hpp"
#include "qhe/errors.hpp"

using namespace qhe;

namespace {

CycleSpec dicke(int n, double gamma, double l1, double l2) {
    CycleSpec spec;
    spec.base.model = Model::Dicke;
    spec.base.n_particles = n;
    spec.base.gamma = gamma;
    spec.lambda1 = l1;
    spec.lambda2 = l2;
    spec.baths = {15.0, 30.0};
    return spec;
}

} // namespace

TEST_CASE("growth schedule") {
    CutoffPolicy p;
    CHECK(p.next(8) == 16);
    p.growth = 1.5;
    CHECK(p.next(8) == 12);
    CHECK(p.next(1) == 2);
    p.growth = 1.01;
    CHECK(p.next(5) == 6);
    p.growth = 1.0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p = CutoffPolicy{};
    p.tolerance = 0.0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p = CutoffPolicy{};
    p.max_cutoff = 4;
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p = CutoffPolicy{};
    p.confirmations = 0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
}

TEST_CASE("decoupled cycle converges at the initial cutoff") {
    const auto c = converge_cutoff(dicke(4, 0.0, 0.0, 0.0));
    CHECK(c.cutoff == 8);
    CHECK(c.visited == std::vector<int>{8, 16});
}

TEST_CASE("converged cutoff is stable under doubling") {
    const auto spec = dicke(4, 0.0, 0.5, 2.0);
    const auto c = converge_cutoff(spec);
    MESSAGE("converged cutoff " << c.cutoff);
    CycleSpec doubled = spec;
    doubled.base.boson_cutoff = 2 * c.cutoff;
    const auto fine = run_cycle(doubled);
    CHECK(std::abs(fine.efficiency - c.result.efficiency) < 1e-6);
    CHECK(std::abs(fine.q_ab - c.result.q_ab) < 1e-6 * (1.0 + std::abs(fine.q_ab)));
    CHECK(c.result.efficiency > 0.45);
}

TEST_CASE("stronger coupling demands a larger cutoff") {
    // Demand measured against a reference: the smallest cutoff from which every
    // larger one (up to 40) stays within 1e-6 of the cutoff-64 efficiency.
    auto demand = [](double l2) {
        CycleSpec spec = dicke(4, 0.0, 0.5, l2);
        spec.base.boson_cutoff = 64;
        const double reference = run_cycle(spec).efficiency;
        int needed = 41;
        for (int c = 40; c >= 2; --c) {
            spec.base.boson_cutoff = c;
            if (std::abs(run_cycle(spec).efficiency - reference) >= 1e-6) break;
            needed = c;
        }
        return needed;
    };
    const int d15 = demand(1.5), d2 = demand(2.0), d3 = demand(3.0);
    MESSAGE("reference demand " << d15 << " " << d2 << " " << d3);
    CHECK(d15 < d2);
    CHECK(d2 < d3);

    // The default schedule follows the same order.
    const int c15 = converge_cutoff(dicke(4, 0.0, 0.5, 1.5)).cutoff;
    const int c2 = converge_cutoff(dicke(4, 0.0, 0.5, 2.0)).cutoff;
    const int c3 = converge_cutoff(dicke(4, 0.0, 0.5, 3.0)).cutoff;
    MESSAGE("converged cutoffs " << c15 << " " << c2 << " " << c3);
    CHECK(c15 <= c2);
    CHECK(c2 <= c3);
    CHECK(c15 < c3);
    CHECK(c3 >= d3);
}

TEST_CASE("heats alone are fooled deep in the superradiant phase") {
    CycleSpec coarse = dicke(4, 0.0, 0.5, 3.0), fine = coarse;
    coarse.base.boson_cutoff = 8;
    fine.base.boson_cutoff = 16;
    const auto a = run_cycle(coarse), b = run_cycle(fine);
    CHECK(std::abs(a.efficiency - b.efficiency) < 1e-6);
    CHECK(std::abs(a.q_ab - b.q_ab) < 1e-6);
    CHECK(std::abs(a.corner_energies[1] - b.corner_energies[1]) > 1e-3);
    CHECK_FALSE(cycle_results_agree(a, b, CutoffPolicy{}));

    CycleSpec reference = coarse;
    reference.base.boson_cutoff = 96;
    const double exact = run_cycle(reference).efficiency;
    CHECK(std::abs(a.efficiency - exact) > 1e-6);
    CHECK(std::abs(converge_cutoff(coarse).result.efficiency - exact) < 1e-6);
}

TEST_CASE("extra confirmations only ever push the cutoff up") {
    CutoffPolicy strict;
    strict.confirmations = 2;
    for (double l2 : {1.0, 2.0}) {
        const auto spec = dicke(3, 0.5, 0.5, l2);
        CHECK(converge_cutoff(spec, strict).cutoff >= converge_cutoff(spec).cutoff);
    }
}

TEST_CASE("non-convergence is an error naming the parameters") {
    CutoffPolicy tiny;
    tiny.initial = 1;
    tiny.max_cutoff = 3;
    try {
        converge_cutoff(dicke(4, 0.0, 0.5, 2.5), tiny);
        FAIL("expected SolverError");
    } catch (const SolverError& e) {
        const std::string what = e.what();
        CHECK(what.find("lambda2=2.5") != std::string::npos);
        CHECK(what.find("N=4") != std::string::npos);
    }
}

TEST_CASE("LMG is rejected") {
    CycleSpec spec = dicke(4, 0.0, 0.5, 1.0);
    spec.base.model = Model::Lmg;
    CHECK_THROWS_AS(converge_cutoff(spec), ParameterError);
}

TEST_CASE("result comparison is NaN aware") {
    CycleResult a, b;
    a.efficiency = b.efficiency = NAN;
    CHECK(cycle_results_agree(a, b, CutoffPolicy{}));
    b.efficiency = 0.1;
    CHECK_FALSE(cycle_results_agree(a, b, CutoffPolicy{}));
}
