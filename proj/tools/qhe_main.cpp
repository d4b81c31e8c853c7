// qhe: Stirling-cycle quantum heat engine sweeps over the LMG and Dicke models.
//
//   qhe sweep --preset fig3a --output fig3a.csv
//   qhe spectrum --config my.json --format json
//
// Exit codes: 0 success, 1 config error, 2 numerical failure, 3 I/O error,
// 130 interrupted (completed rows are kept).

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qhe/commands.hpp"
#include "qhe/config.hpp"
#include "qhe/errors.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_stop{false};

extern "C" void handle_interrupt(int) { g_stop.store(true); }

struct CommonFlags {
    std::string config;
    std::string preset;
    std::string output;
    std::string format;
    std::optional<int> workers;
};

void add_common_flags(CLI::App* sub, CommonFlags& flags) {
    auto* config = sub->add_option("--config", flags.config, "Sweep configuration file (JSON, schema_version 1)");
    auto* preset = sub->add_option("--preset", flags.preset, "Bundled preset name (see `qhe presets`)");
    config->excludes(preset);
    preset->excludes(config);
    sub->add_option("--output", flags.output, "Output path (default: config output.path, else stdout)");
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", flags.workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
}

int run(qhe::Command command, const CommonFlags& flags) {
    if (flags.config.empty() && flags.preset.empty()) throw qhe::ConfigError("one of --config or --preset is required");
    const qhe::SweepConfig config =
        flags.preset.empty() ? qhe::load_config_file(flags.config) : qhe::load_preset(flags.preset);

    qhe::RunOptions options;
    options.format = flags.format.empty() ? config.format : qhe::output_format_from_string(flags.format);
    options.workers = flags.workers.value_or(config.workers);
    options.stop = &g_stop;
    options.log = &std::cerr;

    const std::string path = !flags.output.empty() ? flags.output : config.output_path.value_or("");
    std::ofstream file;
    if (!path.empty()) {
        file.open(path, std::ios::out | std::ios::trunc);
        if (!file) throw qhe::IoError("cannot open output file " + path);
    }
    std::ostream& out = path.empty() ? std::cout : file;

    std::signal(SIGINT, handle_interrupt);
    qhe::run_command(command, config, out, options);
    if (!out) throw qhe::IoError("failed writing output");
    if (g_stop.load()) {
        std::cerr << "interrupted: output holds the completed series\n";
        return kExitInterrupted;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Stirling heat engines with LMG and Dicke working substances"};
    app.require_subcommand(1);

    const std::map<std::string, std::string> descriptions = {
        {"spectrum", "Eigenvalues versus lambda"},
        {"cycle", "Stirling cycles at the listed lambda2 values"},
        {"sweep", "Stirling cycle efficiency sweep over lambda2 (and gamma)"},
        {"meanfield", "Thermodynamic-limit energy per particle and its second derivative"},
        {"toy", "Stirling cycles of the four-level toy system"},
        {"converge-cutoff", "Converged Dicke boson cutoff per cycle"},
    };

    CommonFlags flags;
    std::optional<qhe::Command> selected;
    for (const auto& [name, text] : descriptions) {
        auto* sub = app.add_subcommand(name, text);
        add_common_flags(sub, flags);
        sub->callback([&selected, name = name] { selected = qhe::command_from_string(name); });
    }

    auto* presets = app.add_subcommand("presets", "List bundled presets, or print one");
    std::string shown;
    presets->add_option("name", shown, "Preset to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (presets->parsed()) {
            if (shown.empty()) {
                for (const auto& name : qhe::preset_names()) std::cout << name << '\n';
            } else {
                std::cout << qhe::preset_text(shown);
            }
            return 0;
        }
        return run(*selected, flags);
    } catch (const qhe::ConfigError& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return kExitConfig;
    } catch (const qhe::ParameterError& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return kExitConfig;
    } catch (const qhe::IoError& err) {
        std::cerr << "I/O error: " << err.what() << '\n';
        return kExitIo;
    } catch (const qhe::Error& err) {
        std::cerr << "numerical failure: " << err.what() << '\n';
        return kExitNumerical;
    }
}
