#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hazvis/vebench/engine.hpp"

namespace hazvis::vebench {

/// 17 significant digits, '.' decimal point, no grouping; parses back to
/// the identical double.
std::string format_double(double value);

/// Writes summary.csv, dn.csv, curves_<n>_<rep>.csv and config.echo.json
/// into `dir` (created if missing). Throws std::runtime_error on I/O failure.
///
///   summary.csv  n,criterion,mean,stderr,target,target_kind  (empty target when none)
///   dn.csv       n,x0,direction,median_scaled_dev,iqr
///   curves_*.csv x,h_true,h_est
void emit(const AggregateResult& result, const std::filesystem::path& dir);

std::vector<CriterionRow> read_summary_csv(const std::filesystem::path& file);
std::vector<DnRow> read_dn_csv(const std::filesystem::path& file);

}  // namespace hazvis::vebench
