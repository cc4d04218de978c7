#include "hazvis/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hazvis {

CensoredSample::CensoredSample(std::vector<double> x, std::vector<std::uint8_t> delta)
    : x_(std::move(x)), delta_(std::move(delta)) {
    if (x_.empty()) throw std::invalid_argument("censored sample must contain at least one observation");
    if (x_.size() != delta_.size()) throw std::invalid_argument("times and indicators differ in length");
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (!(x_[i] >= 0.0) || !std::isfinite(x_[i])) {
            throw std::invalid_argument("observed times must be finite and nonnegative");
        }
        if (delta_[i] > 1) throw std::invalid_argument("censoring indicators must be 0 or 1");
        if (i > 0 && x_[i] < x_[i - 1]) throw std::invalid_argument("observed times must be ascending");
    }
}

CensoredSample CensoredSample::from_unsorted(std::vector<double> x, std::vector<std::uint8_t> delta) {
    if (x.size() != delta.size()) throw std::invalid_argument("times and indicators differ in length");
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return delta[a] > delta[b];
    });
    std::vector<double> xs(x.size());
    std::vector<std::uint8_t> ds(x.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        xs[i] = x[order[i]];
        ds[i] = delta[order[i]];
    }
    return CensoredSample(std::move(xs), std::move(ds));
}

std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t n, std::uint64_t replicate) noexcept {
    return mix64(mix64(mix64(master) ^ n) ^ replicate);
}

double inverse_transform(const LifetimeModel& model, double u) {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("inverse_transform requires 0 < u < 1");
    return model.quantile(u);
}

CensoredSample generate(const LifetimeModel& failure, const LifetimeModel& censor, std::size_t n,
                        std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample size must be at least 1");
    StreamRng rng(seed);
    std::vector<double> x(n);
    std::vector<std::uint8_t> delta(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = inverse_transform(failure, rng.uniform_open());
        const double c = inverse_transform(censor, rng.uniform_open());
        x[i] = std::min(t, c);
        delta[i] = t <= c ? 1 : 0;
    }
    return CensoredSample::from_unsorted(std::move(x), std::move(delta));
}

}  // namespace hazvis
