#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hazvis/curvedist.hpp"
#include "hazvis/vebench/config.hpp"

namespace hazvis::vebench {

/// Criterion names in summary order. The *_sq rows average squared values
/// and carry the asymptotic targets.
const std::vector<std::string>& criterion_names();

struct CriterionRow {
    std::size_t n;
    std::string criterion;
    double mean;
    double stderr_mean;
    std::optional<double> target;
    std::string target_kind;  // mise, weighted_mise, twice_weighted_mise or none
};

/// Summary of n^(2/5) |D_n - normalizer| over replicates. Direction 1 is the
/// estimate point measured against the truth graph, direction 2 the reverse.
struct DnRow {
    std::size_t n;
    double x0;
    int direction;
    double median_scaled_dev;
    double iqr;
};

struct TargetRow {
    std::size_t n;
    double bandwidth;
    Interval domain;
    double mise;
    double weighted_mise;
    double twice_weighted_mise;
};

struct CurveDump {
    std::size_t n;
    std::size_t replicate;
    std::vector<double> x;
    std::vector<double> h_true;
    std::vector<double> h_est;
};

struct AggregateResult {
    ExperimentConfig config;
    std::size_t replicates = 0;
    std::vector<CriterionRow> summary;
    std::vector<DnRow> dn;
    std::vector<TargetRow> targets;
    std::vector<CurveDump> curves;
};

struct RunOptions {
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    std::size_t threads = 0;
    /// Replicate execution order (a permutation of 0..replicates-1). Empty
    /// means ascending. Aggregates never depend on it.
    std::vector<std::size_t> execution_order{};
    std::function<void(std::string_view)> progress{};
};

/// Truth polyline resolution used for the D_n distances.
inline constexpr std::size_t kDnGridPoints = 4096;

AggregateResult run(const ExperimentConfig& config, const RunOptions& options = {});

/// Throws std::out_of_range when the row is missing.
const CriterionRow& find_row(const AggregateResult& result, std::size_t n, std::string_view criterion);
const TargetRow& find_targets(const AggregateResult& result, std::size_t n);
const DnRow& find_dn(const AggregateResult& result, std::size_t n, double x0, int direction);

/// Linear-interpolation sample quantile (Hyndman-Fan type 7) of unsorted data.
double sample_quantile(std::vector<double> values, double q);

}  // namespace hazvis::vebench
