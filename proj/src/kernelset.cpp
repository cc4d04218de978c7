#include "hazvis/kernelset.hpp"

#include <stdexcept>
#include <string>

namespace hazvis {

KernelSpec::KernelSpec(Family family) : family_(family) {
    switch (family) {
        case Family::epanechnikov:
            power_ = 1;
            norm_ = 3.0 / 4.0;
            alpha_ = 3.0 / 5.0;
            beta_ = 1.0 / 5.0;
            break;
        case Family::biweight:
            power_ = 2;
            norm_ = 15.0 / 16.0;
            alpha_ = 5.0 / 7.0;
            beta_ = 1.0 / 7.0;
            break;
        case Family::triweight:
            power_ = 3;
            norm_ = 35.0 / 32.0;
            alpha_ = 350.0 / 429.0;
            beta_ = 1.0 / 9.0;
            break;
        default:
            throw std::invalid_argument("unknown kernel family");
    }
}

std::string_view KernelSpec::name() const noexcept {
    switch (family_) {
        case Family::epanechnikov: return "epanechnikov";
        case Family::biweight: return "biweight";
        case Family::triweight: return "triweight";
    }
    return "unknown";
}

KernelSpec builtin_kernel(std::string_view name) {
    if (name == "epanechnikov") return KernelSpec(KernelSpec::Family::epanechnikov);
    if (name == "biweight") return KernelSpec(KernelSpec::Family::biweight);
    if (name == "triweight") return KernelSpec(KernelSpec::Family::triweight);
    throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
}

KernelMoments moments(const KernelSpec& kernel) noexcept { return {kernel.alpha(), kernel.beta()}; }

}  // namespace hazvis
