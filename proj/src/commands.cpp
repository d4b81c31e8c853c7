#include "qhe/commands.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qhe/cutoff.hpp"
#include "qhe/eigensolve.hpp"
#include "qhe/errors.hpp"
#include "qhe/meanfield.hpp"
#include "qhe/output.hpp"
#include "qhe/parallel.hpp"
#include "qhe/toymodel.hpp"

namespace qhe {
namespace {

bool stop_requested(const RunOptions& options) {
    return options.stop != nullptr && options.stop->load();
}

std::string_view config_model_name(ConfigModel model) {
    switch (model) {
    case ConfigModel::Lmg:
        return "lmg";
    case ConfigModel::Dicke:
        return "dicke";
    case ConfigModel::Toy:
        return "toy";
    }
    return "unknown";
}

void require(bool condition, Command command, const std::string& what) {
    if (!condition) throw ConfigError(std::string(to_string(command)) + ": " + what);
}

void require_many_body(const SweepConfig& cfg, Command command) {
    require(cfg.model != ConfigModel::Toy, command, "model must be lmg or dicke");
    require(!cfg.n_list.empty(), command, "'n_list' is required");
}

CycleResult failed(const Baths& baths, const std::string& message) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    CycleResult r;
    r.q_ab = r.q_bc = r.q_cd = r.q_da = r.work = r.efficiency = r.absorbed_heat = nan;
    r.carnot = baths.carnot();
    r.status = CycleStatus::Failed;
    r.message = message;
    return r;
}

// Rows are re-checked against the first law and the Carnot bound on the way out.
void emit(TableWriter& writer, const SweepRecord& record, const RunOptions& options) {
    const CycleResult& r = record.result;
    if (r.status == CycleStatus::Failed) {
        if (options.log != nullptr) {
            *options.log << "warning: " << record.model << " lambda2=" << format_double(record.lambda2)
                         << " failed: " << r.message << '\n';
        }
    } else if (!satisfies_first_law(r) || !satisfies_carnot_bound(r)) {
        throw SolverError("cycle at lambda2=" + format_double(record.lambda2) +
                          " violates the first law or the Carnot bound");
    }
    writer.write_row(to_row(record));
}

SweepRecord make_record(const SweepConfig& cfg, std::optional<int> n, std::optional<double> gamma,
                        double lambda2, const Baths& baths, std::optional<int> cutoff, CycleResult result) {
    return SweepRecord{std::string(config_model_name(cfg.model)),
                       n,
                       gamma,
                       cfg.lambda1,
                       lambda2,
                       baths.beta_hot,
                       baths.beta_cold,
                       cutoff,
                       std::move(result)};
}

void run_spectrum(const SweepConfig& cfg, std::ostream& out, const RunOptions& options) {
    constexpr Command cmd = Command::Spectrum;
    require_many_body(cfg, cmd);
    require(!cfg.lambda_values.empty(), cmd, "'lambda_grid' is required");
    const bool dicke = cfg.model == ConfigModel::Dicke;
    require(!dicke || cfg.boson_cutoff.has_value(), cmd, "Dicke spectra need a fixed 'boson_cutoff'");

    TableWriter writer(out, options.format, {"model", "N", "gamma", "cutoff", "lambda", "level", "energy"});
    for (int n : cfg.n_list) {
        for (double gamma : cfg.gammas) {
            if (stop_requested(options)) return;
            const ModelParams base = cfg.model_params(n, gamma);
            const auto spectra = parallel_map(cfg.lambda_values.size(), options.workers, [&](std::size_t i) {
                return model_spectrum(base.with_lambda(cfg.lambda_values[i]));
            });
            for (std::size_t i = 0; i < spectra.size(); ++i) {
                const auto& levels = spectra[i].eigenvalues;
                std::size_t count = levels.size();
                if (cfg.spectrum_levels > 0) count = std::min<std::size_t>(count, cfg.spectrum_levels);
                for (std::size_t k = 0; k < count; ++k) {
                    writer.write_row({std::string(config_model_name(cfg.model)), std::int64_t{n}, gamma,
                                      dicke ? Cell{std::int64_t{*cfg.boson_cutoff}} : Cell{},
                                      cfg.lambda_values[i], static_cast<std::int64_t>(k), levels[k]});
                }
            }
            writer.flush();
        }
    }
}

void run_meanfield(const SweepConfig& cfg, std::ostream& out, const RunOptions& options) {
    constexpr Command cmd = Command::Meanfield;
    require(cfg.model != ConfigModel::Toy, cmd, "model must be lmg or dicke");
    require(!cfg.lambda_values.empty(), cmd, "'lambda_grid' is required");
    const Model model = cfg.model == ConfigModel::Lmg ? Model::Lmg : Model::Dicke;
    const double h = cfg.fd_step;
    auto energy = [&](double lambda) { return meanfield_energy(model, cfg.omega, cfg.omega0, lambda).energy_per_particle; };

    TableWriter writer(out, options.format,
                       {"model", "omega0", "omega", "lambda", "lambda_c", "phase", "u_per_n", "s_per_n",
                        "d2u_fd", "d2u_exact", "r0", "r1", "r2"});
    for (double lambda : cfg.lambda_values) {
        const MeanFieldResult mf = meanfield_energy(model, cfg.omega, cfg.omega0, lambda);
        // Central difference, one-sided near lambda = 0.
        const double d2 = lambda - h >= 0.0
                              ? (energy(lambda + h) - 2.0 * energy(lambda) + energy(lambda - h)) / (h * h)
                              : (energy(lambda + 2.0 * h) - 2.0 * energy(lambda + h) + energy(lambda)) / (h * h);
        writer.write_row({std::string(config_model_name(cfg.model)), cfg.omega0,
                          model == Model::Dicke ? Cell{cfg.omega} : Cell{}, lambda, mf.lambda_c,
                          std::string(phase_name(model, mf.phase)), mf.energy_per_particle,
                          mf.entropy_per_particle, d2,
                          meanfield_second_derivative(model, cfg.omega, cfg.omega0, lambda), mf.amplitudes.r0,
                          mf.amplitudes.r1, mf.amplitudes.r2});
    }
}

void run_cycles(Command cmd, const SweepConfig& cfg, std::ostream& out, const RunOptions& options) {
    require_many_body(cfg, cmd);
    require(!cfg.baths.empty(), cmd, "'baths' is required");
    require(!cfg.lambda2_values.empty(), cmd,
            cmd == Command::Sweep ? "'lambda2_grid' is required" : "'lambda2' is required");
    const bool dicke = cfg.model == ConfigModel::Dicke;
    const bool converge = dicke && !cfg.boson_cutoff.has_value();
    const auto& grid = cfg.lambda2_values;

    TableWriter writer(out, options.format, sweep_columns());
    for (const Baths& baths : cfg.baths) {
        for (int n : cfg.n_list) {
            for (double gamma : cfg.gammas) {
                if (stop_requested(options)) return;
                CycleSpec spec{cfg.model_params(n, gamma), cfg.lambda1, cfg.lambda1, baths};
                std::vector<CycleResult> results;
                std::vector<std::optional<int>> cutoffs(grid.size());

                if (converge && cmd == Command::Cycle) {
                    // Few points: converge each one independently.
                    const auto points = parallel_map(grid.size(), options.workers, [&](std::size_t i) {
                        CycleSpec at = spec;
                        at.lambda2 = grid[i];
                        try {
                            const CutoffConvergence c = converge_cutoff(at, cfg.cutoff_policy);
                            return std::pair{std::optional<int>{c.cutoff}, c.result};
                        } catch (const Error& err) {
                            return std::pair{std::optional<int>{}, failed(baths, err.what())};
                        }
                    });
                    for (std::size_t i = 0; i < points.size(); ++i) {
                        cutoffs[i] = points[i].first;
                        results.push_back(points[i].second);
                    }
                } else {
                    std::optional<int> cutoff;
                    std::optional<std::string> series_error;
                    if (converge) {
                        // Boson demand grows with lambda2, so the cutoff converged at
                        // the largest grid value serves the whole series.
                        CycleSpec hardest = spec;
                        hardest.lambda2 = *std::max_element(grid.begin(), grid.end());
                        try {
                            cutoff = converge_cutoff(hardest, cfg.cutoff_policy).cutoff;
                            spec.base.boson_cutoff = *cutoff;
                        } catch (const Error& err) {
                            series_error = err.what();
                        }
                    } else if (dicke) {
                        cutoff = *cfg.boson_cutoff;
                    }
                    if (series_error) {
                        results.assign(grid.size(), failed(baths, *series_error));
                    } else {
                        results = efficiency_sweep(spec, grid, options.workers);
                        std::fill(cutoffs.begin(), cutoffs.end(), cutoff);
                    }
                }

                for (std::size_t i = 0; i < grid.size(); ++i) {
                    emit(writer, make_record(cfg, n, gamma, grid[i], baths, cutoffs[i], results[i]), options);
                }
                writer.flush();
            }
        }
    }
}

void run_toy(const SweepConfig& cfg, std::ostream& out, const RunOptions& options) {
    constexpr Command cmd = Command::Toy;
    require(cfg.model == ConfigModel::Toy, cmd, "model must be toy");
    require(!cfg.baths.empty(), cmd, "'baths' is required");
    require(!cfg.lambda2_values.empty(), cmd, "'lambda2_grid' or 'lambda2' is required");

    TableWriter writer(out, options.format, sweep_columns());
    for (const Baths& baths : cfg.baths) {
        if (stop_requested(options)) return;
        const auto results = toy_sweep(cfg.lambda1, cfg.lambda2_values, baths, options.workers);
        for (std::size_t i = 0; i < results.size(); ++i) {
            emit(writer, make_record(cfg, {}, {}, cfg.lambda2_values[i], baths, {}, results[i]), options);
        }
        writer.flush();
    }
}

void run_converge(const SweepConfig& cfg, std::ostream& out, const RunOptions& options) {
    constexpr Command cmd = Command::ConvergeCutoff;
    require_many_body(cfg, cmd);
    require(cfg.model == ConfigModel::Dicke, cmd, "model must be dicke");
    require(!cfg.boson_cutoff.has_value(), cmd, "'boson_cutoff' conflicts with cutoff convergence");
    require(!cfg.baths.empty(), cmd, "'baths' is required");
    require(!cfg.lambda2_values.empty(), cmd, "'lambda2' or 'lambda2_grid' is required");

    TableWriter writer(out, options.format, sweep_columns());
    for (const Baths& baths : cfg.baths) {
        for (int n : cfg.n_list) {
            for (double gamma : cfg.gammas) {
                if (stop_requested(options)) return;
                const CycleSpec spec{cfg.model_params(n, gamma), cfg.lambda1, cfg.lambda1, baths};
                const auto points = parallel_map(cfg.lambda2_values.size(), options.workers, [&](std::size_t i) {
                    CycleSpec at = spec;
                    at.lambda2 = cfg.lambda2_values[i];
                    return converge_cutoff(at, cfg.cutoff_policy);
                });
                for (std::size_t i = 0; i < points.size(); ++i) {
                    emit(writer,
                         make_record(cfg, n, gamma, cfg.lambda2_values[i], baths, points[i].cutoff, points[i].result),
                         options);
                }
                writer.flush();
            }
        }
    }
}

} // namespace

Command command_from_string(std::string_view name) {
    if (name == "spectrum") return Command::Spectrum;
    if (name == "cycle") return Command::Cycle;
    if (name == "sweep") return Command::Sweep;
    if (name == "meanfield") return Command::Meanfield;
    if (name == "toy") return Command::Toy;
    if (name == "converge-cutoff") return Command::ConvergeCutoff;
    throw ConfigError("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command command) {
    switch (command) {
    case Command::Spectrum:
        return "spectrum";
    case Command::Cycle:
        return "cycle";
    case Command::Sweep:
        return "sweep";
    case Command::Meanfield:
        return "meanfield";
    case Command::Toy:
        return "toy";
    case Command::ConvergeCutoff:
        return "converge-cutoff";
    }
    return "unknown";
}

void run_command(Command command, const SweepConfig& config, std::ostream& out, const RunOptions& options) {
    switch (command) {
    case Command::Spectrum:
        return run_spectrum(config, out, options);
    case Command::Meanfield:
        return run_meanfield(config, out, options);
    case Command::Cycle:
    case Command::Sweep:
        return run_cycles(command, config, out, options);
    case Command::Toy:
        return run_toy(config, out, options);
    case Command::ConvergeCutoff:
        return run_converge(config, out, options);
    }
}

} // namespace qhe
