#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hazvis/distmodel.hpp"

namespace hazvis::vebench {

struct ModelConfig {
    std::string name;
    ParamMap params;

    LifetimeModel resolve() const { return make_model(name, params); }
};

/// One Monte Carlo experiment. JSON form (every key optional, unknown keys
/// rejected):
///
///   {
///     "failure": {"name": "weibull", "params": {"shape": 3, "scale": 1}},
///     "censor": {"name": "exponential", "params": {"rate": 1}},
///     "kernel": "triweight", "c0": 1.0,
///     "n_list": [100, 400, 1600], "replicates": 500, "grid_points": 512,
///     "x0_list": [0.5], "tau_override": null, "include_boundary": false,
///     "master_seed": 20240917, "output_dir": "vebench_out"
///   }
struct ExperimentConfig {
    ModelConfig failure{"exponential", {{"rate", 1.0}}};
    ModelConfig censor{"exponential", {{"rate", 1.0}}};
    std::string kernel = "triweight";
    double c0 = 1.0;
    std::vector<std::size_t> n_list{100, 400, 1600};
    std::size_t replicates = 500;
    std::size_t grid_points = 512;
    std::vector<double> x0_list{};
    std::optional<double> tau_override{};
    bool include_boundary = false;
    std::uint64_t master_seed = 20240917;
    std::string output_dir = "vebench_out";
};

/// Throws std::invalid_argument on malformed JSON, unknown keys, wrong
/// types, or values violating the invariants checked by validate().
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string& path);

/// Canonical JSON text with every field present.
std::string to_json_text(const ExperimentConfig& config);

/// n_list nonempty and strictly ascending with n >= 1, replicates >= 1,
/// grid_points >= 16, c0 > 0, tau_override > 0 when set, resolvable
/// models and kernel.
void validate(const ExperimentConfig& config);

}  // namespace hazvis::vebench
