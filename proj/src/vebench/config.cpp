#include "hazvis/vebench/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hazvis/kernelset.hpp"
#include "json.hpp"

namespace hazvis::vebench {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string, std::less<>>& allowed, std::string_view where) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            throw std::invalid_argument("unknown key '" + key + "' in " + std::string(where));
        }
    }
}

template <class T>
T get_as(const json& value, std::string_view key) {
    try {
        return value.get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument("bad value for '" + std::string(key) + "': " + e.what());
    }
}

ModelConfig parse_model(const json& j, std::string_view key) {
    if (!j.is_object()) throw std::invalid_argument("'" + std::string(key) + "' must be an object");
    reject_unknown(j, {"name", "params"}, key);
    ModelConfig m;
    if (!j.contains("name")) throw std::invalid_argument("'" + std::string(key) + "' needs a name");
    m.name = get_as<std::string>(j.at("name"), "name");
    if (j.contains("params")) {
        const json& p = j.at("params");
        if (!p.is_object()) throw std::invalid_argument("'" + std::string(key) + ".params' must be an object");
        for (const auto& [pk, pv] : p.items()) {
            if (!pv.is_number()) throw std::invalid_argument("model parameter '" + pk + "' must be a number");
            m.params[pk] = pv.get<double>();
        }
    }
    return m;
}

json model_to_json(const ModelConfig& m) {
    json params = json::object();
    for (const auto& [k, v] : m.params) params[k] = v;
    return {{"name", m.name}, {"params", params}};
}

std::uint64_t parse_seed(const json& j) {
    if (!j.is_number_unsigned()) throw std::invalid_argument("'master_seed' must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

std::size_t parse_count(const json& j, std::string_view key) {
    if (!j.is_number_unsigned()) {
        throw std::invalid_argument("'" + std::string(key) + "' must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    reject_unknown(j,
                   {"failure", "censor", "kernel", "c0", "n_list", "replicates", "grid_points", "x0_list",
                    "tau_override", "include_boundary", "master_seed", "output_dir"},
                   "config");

    ExperimentConfig c;
    if (j.contains("failure")) c.failure = parse_model(j.at("failure"), "failure");
    if (j.contains("censor")) c.censor = parse_model(j.at("censor"), "censor");
    if (j.contains("kernel")) c.kernel = get_as<std::string>(j.at("kernel"), "kernel");
    if (j.contains("c0")) c.c0 = get_as<double>(j.at("c0"), "c0");
    if (j.contains("n_list")) {
        const json& list = j.at("n_list");
        if (!list.is_array()) throw std::invalid_argument("'n_list' must be an array");
        c.n_list.clear();
        for (const json& v : list) c.n_list.push_back(parse_count(v, "n_list"));
    }
    if (j.contains("replicates")) c.replicates = parse_count(j.at("replicates"), "replicates");
    if (j.contains("grid_points")) c.grid_points = parse_count(j.at("grid_points"), "grid_points");
    if (j.contains("x0_list")) c.x0_list = get_as<std::vector<double>>(j.at("x0_list"), "x0_list");
    if (j.contains("tau_override") && !j.at("tau_override").is_null()) {
        c.tau_override = get_as<double>(j.at("tau_override"), "tau_override");
    }
    if (j.contains("include_boundary")) c.include_boundary = get_as<bool>(j.at("include_boundary"), "include_boundary");
    if (j.contains("master_seed")) c.master_seed = parse_seed(j.at("master_seed"));
    if (j.contains("output_dir")) c.output_dir = get_as<std::string>(j.at("output_dir"), "output_dir");
    validate(c);
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string to_json_text(const ExperimentConfig& c) {
    json j = {
        {"failure", model_to_json(c.failure)},
        {"censor", model_to_json(c.censor)},
        {"kernel", c.kernel},
        {"c0", c.c0},
        {"n_list", c.n_list},
        {"replicates", c.replicates},
        {"grid_points", c.grid_points},
        {"x0_list", c.x0_list},
        {"tau_override", c.tau_override ? json(*c.tau_override) : json(nullptr)},
        {"include_boundary", c.include_boundary},
        {"master_seed", c.master_seed},
        {"output_dir", c.output_dir},
    };
    return j.dump(2) + "\n";
}

void validate(const ExperimentConfig& c) {
    if (c.n_list.empty()) throw std::invalid_argument("'n_list' must not be empty");
    for (std::size_t i = 0; i < c.n_list.size(); ++i) {
        if (c.n_list[i] == 0) throw std::invalid_argument("'n_list' entries must be >= 1");
        if (i > 0 && c.n_list[i] <= c.n_list[i - 1]) throw std::invalid_argument("'n_list' must be strictly ascending");
    }
    if (c.replicates < 1) throw std::invalid_argument("'replicates' must be >= 1");
    if (c.grid_points < 16) throw std::invalid_argument("'grid_points' must be >= 16");
    if (!(c.c0 > 0.0)) throw std::invalid_argument("'c0' must be positive");
    if (c.tau_override && !(*c.tau_override > 0.0)) throw std::invalid_argument("'tau_override' must be positive");
    for (const double x0 : c.x0_list) {
        if (!(x0 >= 0.0)) throw std::invalid_argument("'x0_list' entries must be >= 0");
    }
    (void)builtin_kernel(c.kernel);
    (void)c.failure.resolve();
    (void)c.censor.resolve();
}

}  // namespace hazvis::vebench
