#include "hazvis/vebench/emit.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "hazvis/vebench/config.hpp"

namespace hazvis::vebench {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    return out;
}

void finish(std::ofstream& out, const fs::path& file) {
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + file.string());
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error("malformed number '" + text + "'");
    }
    return value;
}

std::size_t parse_size(const std::string& text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error("malformed integer '" + text + "'");
    }
    return value;
}

std::vector<std::vector<std::string>> read_rows(const fs::path& file, const std::string& header) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + file.string());
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw std::runtime_error(file.string() + ": unexpected header");
    }
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty()) rows.push_back(split_line(line));
    }
    return rows;
}

constexpr const char* kSummaryHeader = "n,criterion,mean,stderr,target,target_kind";
constexpr const char* kDnHeader = "n,x0,direction,median_scaled_dev,iqr";

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc()) throw std::runtime_error("cannot format number");
    return std::string(buf, ptr);
}

void emit(const AggregateResult& result, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

    {
        const fs::path file = dir / "summary.csv";
        std::ofstream out = open_out(file);
        out << kSummaryHeader << '\n';
        for (const auto& row : result.summary) {
            out << row.n << ',' << row.criterion << ',' << format_double(row.mean) << ','
                << format_double(row.stderr_mean) << ',' << (row.target ? format_double(*row.target) : "") << ','
                << row.target_kind << '\n';
        }
        finish(out, file);
    }
    {
        const fs::path file = dir / "dn.csv";
        std::ofstream out = open_out(file);
        out << kDnHeader << '\n';
        for (const auto& row : result.dn) {
            out << row.n << ',' << format_double(row.x0) << ',' << row.direction << ','
                << format_double(row.median_scaled_dev) << ',' << format_double(row.iqr) << '\n';
        }
        finish(out, file);
    }
    for (const auto& curve : result.curves) {
        const fs::path file =
            dir / ("curves_" + std::to_string(curve.n) + "_" + std::to_string(curve.replicate) + ".csv");
        std::ofstream out = open_out(file);
        out << "x,h_true,h_est\n";
        for (std::size_t i = 0; i < curve.x.size(); ++i) {
            out << format_double(curve.x[i]) << ',' << format_double(curve.h_true[i]) << ','
                << format_double(curve.h_est[i]) << '\n';
        }
        finish(out, file);
    }
    {
        const fs::path file = dir / "config.echo.json";
        std::ofstream out = open_out(file);
        out << to_json_text(result.config);
        finish(out, file);
    }
}

std::vector<CriterionRow> read_summary_csv(const fs::path& file) {
    std::vector<CriterionRow> rows;
    for (const auto& cells : read_rows(file, kSummaryHeader)) {
        if (cells.size() != 6) throw std::runtime_error(file.string() + ": expected 6 columns");
        CriterionRow row{parse_size(cells[0]), cells[1], parse_double(cells[2]), parse_double(cells[3]),
                         std::nullopt, cells[5]};
        if (!cells[4].empty()) row.target = parse_double(cells[4]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<DnRow> read_dn_csv(const fs::path& file) {
    std::vector<DnRow> rows;
    for (const auto& cells : read_rows(file, kDnHeader)) {
        if (cells.size() != 5) throw std::runtime_error(file.string() + ": expected 5 columns");
        rows.push_back({parse_size(cells[0]), parse_double(cells[1]), static_cast<int>(parse_size(cells[2])),
                        parse_double(cells[3]), parse_double(cells[4])});
    }
    return rows;
}

}  // namespace hazvis::vebench
