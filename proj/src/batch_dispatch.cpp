#include <cstdlib>
#include <stdexcept>

#include "frictionlab/batch.hpp"

namespace frictionlab::batch {

namespace {

bool has_vector_kernel(MethodId id) {
    switch (id) {
        case MethodId::Eq3:
        case MethodId::Eq4:
        case MethodId::Eq5:
        case MethodId::Eq6:
        case MethodId::Eq3OneLog:
            return true;
        default:
            return false;
    }
}

bool scalar_forced() {
    const char* value = std::getenv("FRICTIONLAB_SIMD");
    return value != nullptr && std::string_view(value) == "scalar";
}

}  // namespace

bool avx2_supported() {
#if defined(FRICTIONLAB_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::string_view kernel_name(MethodId id) {
    if (has_vector_kernel(id) && avx2_supported() && !scalar_forced()) {
        return "avx2";
    }
    return "scalar";
}

void eval_u(MethodId id, std::span<const double> reynolds,
            std::span<const double> roughness, std::span<double> u_out,
            const Options& opts) {
    if (reynolds.size() != roughness.size() || reynolds.size() != u_out.size()) {
        throw std::invalid_argument("eval_u: input and output spans must be equally sized");
    }
#if defined(FRICTIONLAB_HAVE_AVX2)
    if (kernel_name(id) == "avx2") {
        eval_u_avx2(id, reynolds, roughness, u_out, opts);
        return;
    }
#endif
    eval_u_scalar(id, reynolds, roughness, u_out, opts);
}

}  // namespace frictionlab::batch
