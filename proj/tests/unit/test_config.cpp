#include <doctest.h>

#include <algorithm>
#include <string>

#include "qhe/config.hpp"
#include "qhe/errors.hpp"

using namespace qhe;

TEST_CASE("every bundled preset parses") {
    const auto names = preset_names();
    for (const char* required : {"fig3a", "fig3b", "fig3c", "fig4a", "fig4b", "fig4c", "fig5", "fig6", "ope", "toy",
                                 "fig5_literal", "fig6_literal"}) {
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
    }
    for (const auto& name : names) {
        CAPTURE(name);
        CHECK_NOTHROW(load_preset(name));
    }
    CHECK_THROWS_AS(load_preset("nope"), ConfigError);
}

TEST_CASE("preset parameters") {
    const auto fig3a = load_preset("fig3a");
    CHECK(fig3a.model == ConfigModel::Lmg);
    CHECK(fig3a.n_list == std::vector<int>{2, 4, 8, 20});
    CHECK(fig3a.lambda1 == 0.5);
    REQUIRE(fig3a.baths.size() == 1);
    CHECK(fig3a.baths[0].beta_hot == 15.0);
    CHECK(fig3a.baths[0].beta_cold == 30.0);
    CHECK(fig3a.lambda2_values.front() == 0.5);
    CHECK(fig3a.lambda2_values.back() == doctest::Approx(3.0));
    CHECK(fig3a.lambda2_values.size() == 251);

    const auto literal = load_preset("fig5_literal");
    CHECK(literal.baths[0].beta_hot == doctest::Approx(1.0 / 30.0));
    CHECK(literal.baths[0].beta_cold == doctest::Approx(1.0 / 15.0));
    CHECK(load_preset("fig5").gammas.size() == 21);

    const auto toy = load_preset("toy");
    CHECK(toy.model == ConfigModel::Toy);
    CHECK(toy.baths.size() == 4);
    CHECK(toy.lambda2_values.size() == 401);
}

TEST_CASE("grid arithmetic") {
    CHECK(Grid{0.0, 1.0, 0.1}.values().size() == 11);
    CHECK(Grid{0.5, 0.5, 0.1}.values() == std::vector<double>{0.5});
    const auto v = Grid{0.0, 4.0, 0.01}.values();
    CHECK(v.size() == 401);
    CHECK(v[50] == 0.5);
    CHECK(v[200] == 2.0);
}

TEST_CASE("malformed configs are rejected") {
    const std::string base = R"({"schema_version": 1, "model": "lmg", "n_list": [4], "lambda2": 1.0,
                                 "baths": {"beta_hot": 1, "beta_cold": 2})";
    CHECK_NOTHROW(parse_config(base + "}"));
    CHECK_THROWS_AS(parse_config(base + R"(, "lamda1": 0.3})"), ConfigError);
    CHECK_THROWS_AS(parse_config(base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"model": "lmg"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 2, "model": "lmg"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "model": "xy"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "baths": {"t_hot": 1, "t_cold": 2}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "baths": {"beta_hot": 2, "beta_cold": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "baths": {"beta_hot": 1, "t_cold": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "gamma": 1.5})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "gamma": 0.5, "gamma_grid": {"min": 0, "max": 1, "step": 0.5}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "lambda2_grid": {"min": 0, "max": 1, "step": 0}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "cutoff_policy": {"growth": 2, "maxx": 9}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "output": {"format": "xml"}})"), ConfigError);
    CHECK_THROWS_AS(load_config_file("/nonexistent/qhe.json"), IoError);
}

TEST_CASE("optional fields") {
    const auto cfg = parse_config(R"({"schema_version": 1, "model": "dicke", "omega": 2.0, "n_list": [2, 3],
        "gamma_grid": {"min": 0, "max": 1, "step": 0.25}, "lambda2": [1, 2],
        "baths": [{"t_hot": 2, "t_cold": 1}, {"beta_hot": 3, "beta_cold": 4}],
        "cutoff_policy": {"initial": 4, "growth": 1.5, "tolerance": 1e-7, "max": 64},
        "output": {"path": "out.json", "format": "json"}, "workers": 3})");
    CHECK(cfg.gammas.size() == 5);
    CHECK(cfg.lambda2_values == std::vector<double>{1.0, 2.0});
    CHECK(cfg.baths[0].beta_hot == 0.5);
    CHECK(cfg.baths[1].beta_cold == 4.0);
    CHECK(cfg.cutoff_policy.initial == 4);
    CHECK(cfg.cutoff_policy.max_cutoff == 64);
    CHECK(cfg.format == OutputFormat::Json);
    CHECK(cfg.output_path == "out.json");
    CHECK(cfg.workers == 3);
    const auto p = cfg.model_params(3, 0.25);
    CHECK(p.model == Model::Dicke);
    CHECK(p.omega == 2.0);
    CHECK(p.n_particles == 3);
}
