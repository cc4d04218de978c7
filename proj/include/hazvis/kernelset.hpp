#pragma once

#include <string_view>

namespace hazvis {

/// Symmetric polynomial kernel c * (1 - u^2)^p on [-1, 1].
class KernelSpec {
public:
    enum class Family { epanechnikov, biweight, triweight };

    explicit KernelSpec(Family family);

    Family family() const noexcept { return family_; }
    std::string_view name() const noexcept;
    /// Support is [-support_hi(), support_hi()].
    double support_hi() const noexcept { return 1.0; }

    double value(double u) const noexcept {
        if (!(u > -1.0 && u < 1.0)) return 0.0;
        const double t = 1.0 - u * u;
        switch (power_) {
            case 1: return norm_ * t;
            case 2: return norm_ * t * t;
            default: return norm_ * t * t * t;
        }
    }

    double derivative(double u) const noexcept {
        if (!(u > -1.0 && u < 1.0)) return 0.0;
        const double t = 1.0 - u * u;
        switch (power_) {
            case 1: return -2.0 * norm_ * u;
            case 2: return -4.0 * norm_ * u * t;
            default: return -6.0 * norm_ * u * t * t;
        }
    }

    /// Integral of K^2.
    double alpha() const noexcept { return alpha_; }
    /// Second moment, integral of u^2 K.
    double beta() const noexcept { return beta_; }

private:
    Family family_;
    int power_;
    double norm_;
    double alpha_;
    double beta_;
};

struct KernelMoments {
    double alpha;
    double beta;
};

/// epanechnikov, biweight or triweight; anything else throws
/// std::invalid_argument.
KernelSpec builtin_kernel(std::string_view name);

KernelMoments moments(const KernelSpec& kernel) noexcept;

}  // namespace hazvis
