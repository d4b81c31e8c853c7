#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhe/cutoff.hpp"
#include "qhe/stirling.hpp"

namespace qhe {

inline constexpr int kConfigSchemaVersion = 1;

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_string(std::string_view name);

enum class ConfigModel { Lmg, Dicke, Toy };

// Inclusive grid min, min + step, ..., with points computed as min + i*step.
struct Grid {
    double min = 0.0;
    double max = 0.0;
    double step = 1.0;

    [[nodiscard]] std::vector<double> values() const;
};

// Parsed sweep configuration (JSON, schema_version 1). The key reference lives
// in README.md; unknown keys are rejected.
struct SweepConfig {
    std::string description;
    ConfigModel model = ConfigModel::Lmg;
    double omega0 = 1.0;
    double omega = 1.0;
    std::vector<int> n_list;
    std::vector<double> gammas{0.0};
    double lambda1 = 0.5;
    std::vector<double> lambda2_values;
    std::vector<double> lambda_values;
    std::vector<Baths> baths;
    std::optional<int> boson_cutoff;
    CutoffPolicy cutoff_policy;
    int spectrum_levels = 0; // 0 emits every level
    double fd_step = 1e-4;
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::Csv;
    int workers = 0;

    // Base ModelParams for one (N, gamma) series. Only valid for LMG/Dicke.
    [[nodiscard]] ModelParams model_params(int n_particles, double gamma) const;
};

// Throws ConfigError on malformed JSON, unknown keys, wrong schema version or
// values outside their domain.
SweepConfig parse_config(std::string_view json_text);
SweepConfig load_config_file(const std::filesystem::path& path);

std::vector<std::string> preset_names();
// Raw JSON of a bundled preset. Throws ConfigError for unknown names.
std::string preset_text(std::string_view name);
SweepConfig load_preset(std::string_view name);

} // namespace qhe
