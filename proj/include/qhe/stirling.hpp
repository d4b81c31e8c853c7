#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhe/eigensolve.hpp"
#include "qhe/model.hpp"
#include "qhe/thermo.hpp"

namespace qhe {

struct Baths {
    double beta_hot;
    double beta_cold;

    static Baths from_temperatures(double t_hot, double t_cold);

    // Requires beta_cold > beta_hot > 0 (T_H > T_C).
    void validate() const;
    [[nodiscard]] double carnot() const { return 1.0 - beta_hot / beta_cold; }
};

// Stirling cycle A(beta_H, l1) -> B(beta_H, l2) -> C(beta_C, l2) -> D(beta_C, l1) -> A.
struct CycleSpec {
    ModelParams base; // lambda is ignored
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    Baths baths{1.0, 2.0};

    void validate() const;
};

enum class CycleStatus {
    Engine,         // work > 0 and absorbed heat > 0
    NotEngine,      // work <= 0 or absorbed heat <= 0
    NegativeDaHeat, // engine, but Q_DA < 0 so the absorbed-heat denominator is Q_AB + Q_DA anyway
    Failed,         // evaluation threw; see CycleResult::message
};

std::string_view to_string(CycleStatus status);

struct CycleResult {
    double q_ab = 0.0;
    double q_bc = 0.0;
    double q_cd = 0.0;
    double q_da = 0.0;
    double work = 0.0;
    double efficiency = 0.0; // NaN when absorbed_heat <= 0
    double carnot = 0.0;
    double absorbed_heat = 0.0;
    // U at A, B, C, D. Not part of the table output; cutoff convergence uses them.
    std::array<double, 4> corner_energies{};
    CycleStatus status = CycleStatus::NotEngine;
    std::string message;
};

struct CycleStates {
    ThermalState a;
    ThermalState b;
    ThermalState c;
    ThermalState d;
};

// Heats, work and efficiency from the four corner states. Does not check the
// bath ordering, so it also evaluates the reversed (refrigerator) orientation.
CycleResult cycle_from_states(const CycleStates& states, const Baths& baths);

CycleResult run_cycle(const Spectrum& at_lambda1, const Spectrum& at_lambda2, const Baths& baths);
CycleResult run_cycle(const CycleSpec& spec);

// First law over the cycle and the Carnot bound (when heat is absorbed).
bool satisfies_first_law(const CycleResult& result, double tolerance = 1e-9);
bool satisfies_carnot_bound(const CycleResult& result, double tolerance = 1e-9);

// Spectrum as a function of the driven coupling.
using SpectrumSource = std::function<Spectrum(double lambda)>;

// Thread-safe memo of model spectra keyed by the full parameter set
// (including lambda). One spectrum serves every beta.
class SpectrumCache {
  public:
    std::shared_ptr<const Spectrum> get(const ModelParams& params);
    [[nodiscard]] std::size_t size() const;

  private:
    mutable std::mutex mutex_;
    std::map<ModelParams, std::shared_ptr<const Spectrum>> entries_;
};

// One CycleResult per lambda2 in grid order. Grid points run as an
// order-preserving parallel map; a point that throws is reported with
// CycleStatus::Failed instead of aborting the sweep.
std::vector<CycleResult> efficiency_sweep(const SpectrumSource& source, double lambda1,
                                          std::span<const double> lambda2_grid, const Baths& baths,
                                          int workers = 1);
std::vector<CycleResult> efficiency_sweep(const CycleSpec& spec_template,
                                          std::span<const double> lambda2_grid, int workers = 1,
                                          SpectrumCache* cache = nullptr);

} // namespace qhe
