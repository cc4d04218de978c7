#include "hazvis/vebench/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hazvis/asympt.hpp"
#include "hazvis/hazest.hpp"
#include "hazvis/sampler.hpp"

namespace hazvis::vebench {

namespace {

struct ReplicateRecord {
    ErrorReport report;
    // Per x0: scaled deviations for direction 1 then 2.
    std::vector<double> dn_scaled;
    std::vector<double> h_est;  // kept for replicate 0 only
};

// Everything that depends on n but not on the replicate.
struct SizeContext {
    std::size_t n;
    Bandwidth b;
    Interval domain;
    std::vector<double> grid;
    CurveGraph truth;
    std::vector<double> fine_grid;
    CurveGraph fine_truth;
};

double field(const ErrorReport& r, std::size_t k) {
    switch (k) {
        case 0: return r.l1;
        case 1: return r.l2;
        case 2: return r.linf;
        case 3: return r.ve1_eh;
        case 4: return r.ve1_he;
        case 5: return r.ve2_eh;
        case 6: return r.ve2_he;
        case 7: return r.veinf_eh;
        case 8: return r.veinf_he;
        case 9: return r.se1;
        case 10: return r.se2;
        case 11: return r.seinf;
        case 12: return r.ve2_eh * r.ve2_eh;
        case 13: return r.ve2_he * r.ve2_he;
        default: return r.se2 * r.se2;
    }
}

// d((x0, y0), estimate graph on the fine grid), building only the part of
// the graph that can hold the nearest point; the radius doubles until the
// excluded slabs are certified farther than the best distance.
double distance_to_local_estimate(const CensoredSample& sample, const KernelSpec& kernel, const Bandwidth& b,
                                  std::span<const double> fine, Point p, double radius) {
    const std::size_t m = fine.size();
    const double step = fine[1] - fine[0];
    radius = std::max(radius, 2.0 * step);
    for (;;) {
        auto lo_it = std::lower_bound(fine.begin(), fine.end(), p.x - radius);
        auto hi_it = std::upper_bound(fine.begin(), fine.end(), p.x + radius);
        auto i0 = static_cast<std::size_t>(lo_it - fine.begin());
        auto i1 = static_cast<std::size_t>(hi_it - fine.begin());
        i0 = i0 > 0 ? i0 - 1 : 0;
        i1 = std::min(i1 + 1, m);
        if (i1 - i0 < 2) i1 = std::min(i0 + 2, m);
        const CurveGraph local = estimate_on_grid(sample, kernel, b, fine.subspan(i0, i1 - i0));
        const double d = point_to_graph(p, local);
        const bool left_ok = i0 == 0 || p.x - fine[i0] >= d;
        const bool right_ok = i1 == m || fine[i1 - 1] - p.x >= d;
        if (left_ok && right_ok) return d;
        radius *= 2.0;
    }
}

ReplicateRecord run_replicate(const ExperimentConfig& config, const SizeContext& ctx, const LifetimeModel& failure,
                              const LifetimeModel& censor, const KernelSpec& kernel, std::size_t replicate) {
    const std::uint64_t seed = split_seed(config.master_seed, ctx.n, replicate);
    const CensoredSample sample = generate(failure, censor, ctx.n, seed);
    const CurveGraph est = estimate_on_grid(sample, kernel, ctx.b, ctx.grid);

    ReplicateRecord rec;
    rec.report = error_report(est, ctx.truth);
    const double scale = std::pow(static_cast<double>(ctx.n), 0.4);
    for (const double x0 : config.x0_list) {
        const double est_x0 = estimate(sample, kernel, ctx.b, x0);
        const double true_x0 = failure.hazard(x0);
        const double center = dn_normalizer(failure, x0, est_x0, true_x0);
        const double d1 = point_to_graph({x0, est_x0}, ctx.fine_truth);
        const double d2 = distance_to_local_estimate(sample, kernel, ctx.b, ctx.fine_grid, {x0, true_x0},
                                                     std::abs(est_x0 - true_x0));
        rec.dn_scaled.push_back(scale * std::abs(d1 - center));
        rec.dn_scaled.push_back(scale * std::abs(d2 - center));
    }
    if (replicate == 0) rec.h_est.assign(est.ys().begin(), est.ys().end());
    return rec;
}

void run_parallel(std::size_t count, std::size_t threads, const std::vector<std::size_t>& order,
                  const std::function<void(std::size_t)>& task) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t slot = next.fetch_add(1);
            if (slot >= count) return;
            try {
                task(order[slot]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<std::size_t> resolve_order(const RunOptions& options, std::size_t replicates) {
    if (options.execution_order.empty()) {
        std::vector<std::size_t> order(replicates);
        std::iota(order.begin(), order.end(), std::size_t{0});
        return order;
    }
    std::vector<std::size_t> check = options.execution_order;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i) {
        if (check[i] != i || check.size() != replicates) {
            throw std::invalid_argument("execution_order must be a permutation of the replicate indices");
        }
    }
    return options.execution_order;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
    static const std::vector<std::string> names{
        "l1",       "l2",       "linf", "ve1_eh", "ve1_he", "ve2_eh",    "ve2_he",   "veinf_eh",
        "veinf_he", "se1",      "se2",  "seinf",  "ve2_eh_sq", "ve2_he_sq", "se2_sq"};
    return names;
}

double sample_quantile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

AggregateResult run(const ExperimentConfig& config, const RunOptions& options) {
    validate(config);
    const LifetimeModel failure = config.failure.resolve();
    const LifetimeModel censor = config.censor.resolve();
    const KernelSpec kernel = builtin_kernel(config.kernel);
    const double tau = config.tau_override ? *config.tau_override : default_tau(failure, censor);
    const std::vector<std::size_t> order = resolve_order(options, config.replicates);
    const std::size_t threads =
        options.threads > 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());

    AggregateResult result;
    result.config = config;
    result.replicates = config.replicates;
    const auto& names = criterion_names();

    for (const std::size_t n : config.n_list) {
        const Bandwidth b = Bandwidth::from_schedule(config.c0, n);
        const Interval domain = comparison_domain(tau, b, kernel, config.include_boundary);
        for (const double x0 : config.x0_list) {
            if (x0 < domain.lo || x0 > domain.hi) {
                throw std::invalid_argument("x0 = " + std::to_string(x0) + " lies outside the comparison domain for n = " +
                                            std::to_string(n));
            }
        }
        std::vector<double> grid = linspace(domain.lo, domain.hi, config.grid_points);
        std::vector<double> fine = linspace(domain.lo, domain.hi, kDnGridPoints);
        CurveGraph truth = hazard_graph(failure, grid);
        CurveGraph fine_truth = hazard_graph(failure, fine);
        const SizeContext ctx{n, b, domain, std::move(grid), std::move(truth), std::move(fine), std::move(fine_truth)};

        const AsymptoticSpec spec{failure, censor, kernel, n, b, domain};
        const double mise = mise_asymptotic(spec);
        const double weighted = weighted_mise_asymptotic(spec);
        result.targets.push_back({n, b.value, domain, mise, weighted, 2.0 * weighted});

        if (options.progress) options.progress("n = " + std::to_string(n));
        std::vector<ReplicateRecord> records(config.replicates);
        run_parallel(config.replicates, threads, order, [&](std::size_t r) {
            records[r] = run_replicate(config, ctx, failure, censor, kernel, r);
        });

        // Index-ordered reduction.
        const double reps = static_cast<double>(config.replicates);
        for (std::size_t k = 0; k < names.size(); ++k) {
            double sum = 0.0;
            for (const auto& rec : records) sum += field(rec.report, k);
            const double mean = sum / reps;
            double ss = 0.0;
            for (const auto& rec : records) {
                const double dev = field(rec.report, k) - mean;
                ss += dev * dev;
            }
            const double se = config.replicates > 1 ? std::sqrt(ss / (reps - 1.0) / reps) : 0.0;
            CriterionRow row{n, names[k], mean, se, std::nullopt, "none"};
            if (names[k] == "l2") {
                row.target = mise;
                row.target_kind = "mise";
            } else if (names[k] == "ve2_eh_sq" || names[k] == "ve2_he_sq") {
                row.target = weighted;
                row.target_kind = "weighted_mise";
            } else if (names[k] == "se2_sq") {
                row.target = 2.0 * weighted;
                row.target_kind = "twice_weighted_mise";
            }
            result.summary.push_back(std::move(row));
        }

        for (std::size_t j = 0; j < config.x0_list.size(); ++j) {
            for (int dir = 1; dir <= 2; ++dir) {
                std::vector<double> values;
                values.reserve(records.size());
                for (const auto& rec : records) values.push_back(rec.dn_scaled[2 * j + static_cast<std::size_t>(dir - 1)]);
                const double median = sample_quantile(values, 0.5);
                const double iqr = sample_quantile(values, 0.75) - sample_quantile(values, 0.25);
                result.dn.push_back({n, config.x0_list[j], dir, median, iqr});
            }
        }

        CurveDump dump{n, 0, {ctx.grid.begin(), ctx.grid.end()},
                       {ctx.truth.ys().begin(), ctx.truth.ys().end()}, std::move(records[0].h_est)};
        result.curves.push_back(std::move(dump));
    }
    return result;
}

const CriterionRow& find_row(const AggregateResult& result, std::size_t n, std::string_view criterion) {
    for (const auto& row : result.summary) {
        if (row.n == n && row.criterion == criterion) return row;
    }
    throw std::out_of_range("no summary row for n = " + std::to_string(n) + ", criterion " + std::string(criterion));
}

const TargetRow& find_targets(const AggregateResult& result, std::size_t n) {
    for (const auto& row : result.targets) {
        if (row.n == n) return row;
    }
    throw std::out_of_range("no targets for n = " + std::to_string(n));
}

const DnRow& find_dn(const AggregateResult& result, std::size_t n, double x0, int direction) {
    for (const auto& row : result.dn) {
        if (row.n == n && row.x0 == x0 && row.direction == direction) return row;
    }
    throw std::out_of_range("no D_n row for n = " + std::to_string(n));
}

}  // namespace hazvis::vebench
