#include "qhe/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qhe/errors.hpp"

namespace qhe {
namespace detail {
// Generated at configure time from presets/*.json.
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_presets();
} // namespace detail

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ConfigError("config: " + message); }

void reject_unknown_keys(const json& obj, const std::set<std::string>& known, const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!known.contains(item.key())) fail("unknown key '" + item.key() + "' in " + where);
    }
}

double as_number(const json& value, const std::string& key) {
    if (!value.is_number()) fail("'" + key + "' must be a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) fail("'" + key + "' must be finite");
    return x;
}

int as_int(const json& value, const std::string& key) {
    if (!value.is_number_integer()) fail("'" + key + "' must be an integer");
    return value.get<int>();
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail("missing key '" + key + "' in " + where);
    return *it;
}

Grid parse_grid(const json& value, const std::string& key) {
    if (!value.is_object()) fail("'" + key + "' must be an object {min, max, step}");
    reject_unknown_keys(value, {"min", "max", "step"}, key);
    Grid grid{as_number(require(value, "min", key), key + ".min"),
              as_number(require(value, "max", key), key + ".max"),
              as_number(require(value, "step", key), key + ".step")};
    if (!(grid.step > 0.0)) fail("'" + key + ".step' must be > 0");
    if (grid.max < grid.min) fail("'" + key + ".max' must be >= min");
    return grid;
}

std::vector<double> parse_values(const json& value, const std::string& key) {
    std::vector<double> out;
    if (value.is_array()) {
        for (const auto& item : value) out.push_back(as_number(item, key));
    } else {
        out.push_back(as_number(value, key));
    }
    if (out.empty()) fail("'" + key + "' must not be empty");
    return out;
}

Baths parse_baths_entry(const json& value) {
    if (!value.is_object()) fail("'baths' entries must be objects");
    reject_unknown_keys(value, {"beta_hot", "beta_cold", "t_hot", "t_cold"}, "baths");
    const bool betas = value.contains("beta_hot") || value.contains("beta_cold");
    const bool temps = value.contains("t_hot") || value.contains("t_cold");
    if (betas == temps) fail("'baths' needs either {beta_hot, beta_cold} or {t_hot, t_cold}");
    Baths baths{};
    if (betas) {
        baths = {as_number(require(value, "beta_hot", "baths"), "beta_hot"),
                 as_number(require(value, "beta_cold", "baths"), "beta_cold")};
    } else {
        const double t_hot = as_number(require(value, "t_hot", "baths"), "t_hot");
        const double t_cold = as_number(require(value, "t_cold", "baths"), "t_cold");
        if (!(t_hot > t_cold && t_cold > 0.0)) fail("bath temperatures must satisfy t_hot > t_cold > 0");
        baths = Baths::from_temperatures(t_hot, t_cold);
    }
    if (!(baths.beta_cold > baths.beta_hot && baths.beta_hot > 0.0)) {
        fail("bath inverse temperatures must satisfy beta_cold > beta_hot > 0");
    }
    return baths;
}

CutoffPolicy parse_cutoff_policy(const json& value) {
    if (!value.is_object()) fail("'cutoff_policy' must be an object");
    reject_unknown_keys(value, {"initial", "growth", "tolerance", "heat_tolerance", "max", "confirmations"}, "cutoff_policy");
    CutoffPolicy policy;
    if (value.contains("initial")) policy.initial = as_int(value["initial"], "cutoff_policy.initial");
    if (value.contains("growth")) policy.growth = as_number(value["growth"], "cutoff_policy.growth");
    if (value.contains("tolerance")) policy.tolerance = as_number(value["tolerance"], "cutoff_policy.tolerance");
    if (value.contains("heat_tolerance")) {
        policy.heat_tolerance = as_number(value["heat_tolerance"], "cutoff_policy.heat_tolerance");
    }
    if (value.contains("max")) policy.max_cutoff = as_int(value["max"], "cutoff_policy.max");
    if (value.contains("confirmations")) {
        policy.confirmations = as_int(value["confirmations"], "cutoff_policy.confirmations");
    }
    try {
        policy.validate();
    } catch (const ParameterError& err) {
        fail(err.what());
    }
    return policy;
}

const std::set<std::string> kTopLevelKeys = {
    "schema_version", "description", "model",        "omega0",     "omega",
    "n_list",         "gamma",       "gamma_grid",   "lambda1",    "lambda2",
    "lambda2_grid",   "lambda_grid", "baths",        "boson_cutoff", "cutoff_policy",
    "spectrum_levels", "fd_step",    "output",       "workers",
};

} // namespace

OutputFormat output_format_from_string(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ConfigError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::vector<double> Grid::values() const {
    const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(min + static_cast<double>(i) * step);
    return out;
}

ModelParams SweepConfig::model_params(int n_particles, double gamma) const {
    if (model == ConfigModel::Toy) throw ConfigError("toy configuration has no model parameters");
    ModelParams p;
    p.model = model == ConfigModel::Lmg ? Model::Lmg : Model::Dicke;
    p.n_particles = n_particles;
    p.omega0 = omega0;
    p.omega = omega;
    p.gamma = gamma;
    p.lambda = lambda1;
    p.boson_cutoff = boson_cutoff.value_or(cutoff_policy.initial);
    return p;
}

SweepConfig parse_config(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& err) {
        fail(std::string("malformed JSON: ") + err.what());
    }
    if (!root.is_object()) fail("top level must be an object");
    reject_unknown_keys(root, kTopLevelKeys, "config");

    const int version = as_int(require(root, "schema_version", "config"), "schema_version");
    if (version != kConfigSchemaVersion) {
        fail("unsupported schema_version " + std::to_string(version) + " (expected " +
             std::to_string(kConfigSchemaVersion) + ")");
    }

    SweepConfig cfg;
    if (root.contains("description")) {
        if (!root["description"].is_string()) fail("'description' must be a string");
        cfg.description = root["description"].get<std::string>();
    }

    const json& model = require(root, "model", "config");
    if (!model.is_string()) fail("'model' must be a string");
    const auto model_name = model.get<std::string>();
    if (model_name == "lmg") {
        cfg.model = ConfigModel::Lmg;
    } else if (model_name == "dicke") {
        cfg.model = ConfigModel::Dicke;
    } else if (model_name == "toy") {
        cfg.model = ConfigModel::Toy;
    } else {
        fail("'model' must be one of lmg, dicke, toy");
    }

    if (root.contains("omega0")) cfg.omega0 = as_number(root["omega0"], "omega0");
    if (root.contains("omega")) cfg.omega = as_number(root["omega"], "omega");
    if (!(cfg.omega0 > 0.0) || !(cfg.omega > 0.0)) fail("'omega0' and 'omega' must be > 0");

    if (root.contains("n_list")) {
        const json& list = root["n_list"];
        if (!list.is_array() || list.empty()) fail("'n_list' must be a non-empty array");
        for (const auto& item : list) {
            const int n = as_int(item, "n_list");
            if (n < 1) fail("'n_list' entries must be >= 1");
            cfg.n_list.push_back(n);
        }
    }

    if (root.contains("gamma") && root.contains("gamma_grid")) fail("give either 'gamma' or 'gamma_grid', not both");
    if (root.contains("gamma")) cfg.gammas = parse_values(root["gamma"], "gamma");
    if (root.contains("gamma_grid")) cfg.gammas = parse_grid(root["gamma_grid"], "gamma_grid").values();
    for (double g : cfg.gammas) {
        if (g < 0.0 || g > 1.0 + 1e-12) fail("gamma values must lie in [0, 1]");
    }
    for (double& g : cfg.gammas) g = std::min(g, 1.0);

    if (root.contains("lambda1")) cfg.lambda1 = as_number(root["lambda1"], "lambda1");
    if (root.contains("lambda2") && root.contains("lambda2_grid")) {
        fail("give either 'lambda2' or 'lambda2_grid', not both");
    }
    if (root.contains("lambda2")) cfg.lambda2_values = parse_values(root["lambda2"], "lambda2");
    if (root.contains("lambda2_grid")) cfg.lambda2_values = parse_grid(root["lambda2_grid"], "lambda2_grid").values();
    if (root.contains("lambda_grid")) cfg.lambda_values = parse_grid(root["lambda_grid"], "lambda_grid").values();
    if (cfg.model != ConfigModel::Toy) {
        if (cfg.lambda1 < 0.0) fail("'lambda1' must be >= 0");
        for (double l : cfg.lambda2_values) {
            if (l < 0.0) fail("lambda2 values must be >= 0");
        }
        for (double l : cfg.lambda_values) {
            if (l < 0.0) fail("lambda_grid values must be >= 0");
        }
    }

    if (root.contains("baths")) {
        const json& baths = root["baths"];
        if (baths.is_array()) {
            if (baths.empty()) fail("'baths' must not be empty");
            for (const auto& entry : baths) cfg.baths.push_back(parse_baths_entry(entry));
        } else {
            cfg.baths.push_back(parse_baths_entry(baths));
        }
    }

    if (root.contains("boson_cutoff")) {
        const int cutoff = as_int(root["boson_cutoff"], "boson_cutoff");
        if (cutoff < 1) fail("'boson_cutoff' must be >= 1");
        cfg.boson_cutoff = cutoff;
    }
    if (root.contains("cutoff_policy")) cfg.cutoff_policy = parse_cutoff_policy(root["cutoff_policy"]);

    if (root.contains("spectrum_levels")) {
        cfg.spectrum_levels = as_int(root["spectrum_levels"], "spectrum_levels");
        if (cfg.spectrum_levels < 0) fail("'spectrum_levels' must be >= 0");
    }
    if (root.contains("fd_step")) {
        cfg.fd_step = as_number(root["fd_step"], "fd_step");
        if (!(cfg.fd_step > 0.0)) fail("'fd_step' must be > 0");
    }

    if (root.contains("output")) {
        const json& output = root["output"];
        if (!output.is_object()) fail("'output' must be an object");
        reject_unknown_keys(output, {"path", "format"}, "output");
        if (output.contains("path")) {
            if (!output["path"].is_string()) fail("'output.path' must be a string");
            cfg.output_path = output["path"].get<std::string>();
        }
        if (output.contains("format")) {
            if (!output["format"].is_string()) fail("'output.format' must be a string");
            cfg.format = output_format_from_string(output["format"].get<std::string>());
        }
    }

    if (root.contains("workers")) {
        cfg.workers = as_int(root["workers"], "workers");
        if (cfg.workers < 0) fail("'workers' must be >= 0");
    }
    return cfg;
}

SweepConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : detail::embedded_presets()) names.emplace_back(name);
    return names;
}

std::string preset_text(std::string_view name) {
    for (const auto& [preset, text] : detail::embedded_presets()) {
        if (preset == name) return std::string(text);
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

SweepConfig load_preset(std::string_view name) { return parse_config(preset_text(name)); }

} // namespace qhe
