#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hazvis/distmodel.hpp"

namespace hazvis {

/// Observed times X(1) <= ... <= X(n) with aligned censoring indicators
/// (1 = failure observed, 0 = censored).
class CensoredSample {
public:
    /// Takes already-ordered data; throws std::invalid_argument if the
    /// order, sizes, sign or indicator values are wrong.
    CensoredSample(std::vector<double> x, std::vector<std::uint8_t> delta);

    /// Sorts raw observations ascending. Stable; on tied times a failure
    /// precedes a censoring.
    static CensoredSample from_unsorted(std::vector<double> x, std::vector<std::uint8_t> delta);

    std::span<const double> x() const noexcept { return x_; }
    std::span<const std::uint8_t> delta() const noexcept { return delta_; }
    std::size_t size() const noexcept { return x_.size(); }

    friend bool operator==(const CensoredSample&, const CensoredSample&) = default;

private:
    std::vector<double> x_;
    std::vector<std::uint8_t> delta_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Stream seed for replicate `replicate` at sample size `n`:
/// mix64(mix64(mix64(master) ^ n) ^ replicate).
std::uint64_t split_seed(std::uint64_t master, std::uint64_t n, std::uint64_t replicate) noexcept;

/// The repository-wide generator: std::mt19937_64 with a portable mapping
/// of its 53 high bits to the open interval (0, 1).
class StreamRng {
public:
    explicit StreamRng(std::uint64_t seed) : engine_(seed) {}

    double uniform_open() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53; }

private:
    std::mt19937_64 engine_;
};

/// cdf^{-1}(u); throws std::domain_error unless 0 < u < 1.
double inverse_transform(const LifetimeModel& model, double u);

/// n i.i.d. pairs T ~ failure, C ~ censor under random censorship, returned
/// as (min(T, C), [T <= C]) in order-statistic form. Each observation draws
/// T then C from one StreamRng(seed).
CensoredSample generate(const LifetimeModel& failure, const LifetimeModel& censor, std::size_t n,
                        std::uint64_t seed);

}  // namespace hazvis
