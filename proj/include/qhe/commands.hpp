#pragma once

#include <atomic>
#include <ostream>
#include <string_view>

#include "qhe/config.hpp"

namespace qhe {

enum class Command { Spectrum, Cycle, Sweep, Meanfield, Toy, ConvergeCutoff };

Command command_from_string(std::string_view name);
std::string_view to_string(Command command);

struct RunOptions {
    OutputFormat format = OutputFormat::Csv;
    int workers = 0;
    // Checked between series; when set the run stops early and closes its output.
    const std::atomic<bool>* stop = nullptr;
    // Receives one line per failed grid point. May be null.
    std::ostream* log = nullptr;
};

// Runs one CLI subcommand against `config`, streaming the table to `out`.
// Output bytes depend only on config and format, never on the worker count.
//
//   spectrum         eigenvalues vs lambda_grid for every (N, gamma)
//   cycle            Stirling cycles at the listed lambda2 values
//   sweep            Stirling cycles over lambda2_grid, rows ordered (baths, N, gamma, lambda2)
//   meanfield        closed-form U/N and d2(U/N)/dlambda2 over lambda_grid
//   toy              Stirling cycles of the four-level toy system
//   converge-cutoff  converged Dicke boson cutoff per (N, gamma, lambda2)
void run_command(Command command, const SweepConfig& config, std::ostream& out,
                 const RunOptions& options);

} // namespace qhe
