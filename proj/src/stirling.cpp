#include "qhe/stirling.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qhe/errors.hpp"
#include "qhe/parallel.hpp"

namespace qhe {

Baths Baths::from_temperatures(double t_hot, double t_cold) {
    if (!(t_hot > 0.0) || !(t_cold > 0.0)) throw ParameterError("bath temperatures must be > 0");
    const Baths baths{1.0 / t_hot, 1.0 / t_cold};
    baths.validate();
    return baths;
}

void Baths::validate() const {
    if (!std::isfinite(beta_hot) || !std::isfinite(beta_cold) || !(beta_hot > 0.0)) {
        throw ParameterError("bath inverse temperatures must be finite and > 0");
    }
    if (!(beta_cold > beta_hot)) {
        throw ParameterError("cold bath must be colder than the hot bath (beta_cold > beta_hot), got beta_hot=" +
                             std::to_string(beta_hot) + " beta_cold=" + std::to_string(beta_cold));
    }
}

void CycleSpec::validate() const {
    baths.validate();
    if (!std::isfinite(lambda1) || !std::isfinite(lambda2) || lambda1 < 0.0 || lambda2 < 0.0) {
        throw ParameterError("cycle couplings lambda1, lambda2 must be >= 0");
    }
    base.with_lambda(lambda1).validate();
}

std::string_view to_string(CycleStatus status) {
    switch (status) {
    case CycleStatus::Engine:
        return "engine";
    case CycleStatus::NotEngine:
        return "not_engine";
    case CycleStatus::NegativeDaHeat:
        return "qda_negative";
    case CycleStatus::Failed:
        return "failed";
    }
    return "unknown";
}

CycleResult cycle_from_states(const CycleStates& s, const Baths& baths) {
    CycleResult r;
    r.q_ab = (s.b.entropy - s.a.entropy) / baths.beta_hot;
    r.q_bc = s.c.internal_energy - s.b.internal_energy;
    r.q_cd = (s.d.entropy - s.c.entropy) / baths.beta_cold;
    r.q_da = s.a.internal_energy - s.d.internal_energy;
    r.work = r.q_ab + r.q_bc + r.q_cd + r.q_da;
    r.absorbed_heat = r.q_ab + r.q_da;
    r.carnot = baths.carnot();
    r.corner_energies = {s.a.internal_energy, s.b.internal_energy, s.c.internal_energy, s.d.internal_energy};

    if (r.absorbed_heat > 0.0) {
        r.efficiency = r.work / r.absorbed_heat;
    } else {
        r.efficiency = std::numeric_limits<double>::quiet_NaN();
    }

    if (r.absorbed_heat <= 0.0 || r.work <= 0.0) {
        r.status = CycleStatus::NotEngine;
    } else if (r.q_da < 0.0) {
        r.status = CycleStatus::NegativeDaHeat;
    } else {
        r.status = CycleStatus::Engine;
    }
    return r;
}

CycleResult run_cycle(const Spectrum& at_lambda1, const Spectrum& at_lambda2, const Baths& baths) {
    baths.validate();
    const CycleStates states{
        thermal_state(at_lambda1, baths.beta_hot),
        thermal_state(at_lambda2, baths.beta_hot),
        thermal_state(at_lambda2, baths.beta_cold),
        thermal_state(at_lambda1, baths.beta_cold),
    };
    return cycle_from_states(states, baths);
}

CycleResult run_cycle(const CycleSpec& spec) {
    spec.validate();
    const Spectrum first = model_spectrum(spec.base.with_lambda(spec.lambda1));
    if (spec.lambda2 == spec.lambda1) return run_cycle(first, first, spec.baths);
    return run_cycle(first, model_spectrum(spec.base.with_lambda(spec.lambda2)), spec.baths);
}

bool satisfies_first_law(const CycleResult& r, double tolerance) {
    const double heats = r.q_ab + r.q_bc + r.q_cd + r.q_da;
    return std::abs(r.work - heats) < tolerance * (1.0 + std::abs(r.work));
}

bool satisfies_carnot_bound(const CycleResult& r, double tolerance) {
    if (!(r.absorbed_heat > 0.0)) return true;
    return r.efficiency <= r.carnot + tolerance;
}

std::shared_ptr<const Spectrum> SpectrumCache::get(const ModelParams& params) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(params); it != entries_.end()) return it->second;
    }
    // Diagonalize outside the lock; a racing duplicate computes the same values.
    auto spectrum = std::make_shared<const Spectrum>(model_spectrum(params));
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(params, std::move(spectrum)).first->second;
}

std::size_t SpectrumCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

namespace {

CycleResult failed_result(const Baths& baths, std::string message) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    CycleResult r;
    r.q_ab = r.q_bc = r.q_cd = r.q_da = nan;
    r.work = r.efficiency = r.absorbed_heat = nan;
    r.carnot = baths.carnot();
    r.status = CycleStatus::Failed;
    r.message = std::move(message);
    return r;
}

} // namespace

std::vector<CycleResult> efficiency_sweep(const SpectrumSource& source, double lambda1,
                                          std::span<const double> lambda2_grid, const Baths& baths,
                                          int workers) {
    if (lambda2_grid.empty()) throw ParameterError("efficiency_sweep: empty lambda2 grid");
    baths.validate();

    // States at lambda1 are shared by every grid point.
    const Spectrum first = source(lambda1);
    const ThermalState state_a = thermal_state(first, baths.beta_hot);
    const ThermalState state_d = thermal_state(first, baths.beta_cold);

    return parallel_map(lambda2_grid.size(), workers, [&](std::size_t i) -> CycleResult {
        try {
            const double lambda2 = lambda2_grid[i];
            const Spectrum second = lambda2 == lambda1 ? first : source(lambda2);
            const CycleStates states{state_a, thermal_state(second, baths.beta_hot),
                                     thermal_state(second, baths.beta_cold), state_d};
            return cycle_from_states(states, baths);
        } catch (const Error& err) {
            return failed_result(baths, err.what());
        }
    });
}

std::vector<CycleResult> efficiency_sweep(const CycleSpec& spec_template,
                                          std::span<const double> lambda2_grid, int workers,
                                          SpectrumCache* cache) {
    spec_template.validate();
    SpectrumCache local;
    SpectrumCache& store = cache != nullptr ? *cache : local;
    const ModelParams base = spec_template.base;
    SpectrumSource source = [&store, base](double lambda) { return *store.get(base.with_lambda(lambda)); };
    return efficiency_sweep(source, spec_template.lambda1, lambda2_grid, spec_template.baths, workers);
}

} // namespace qhe
