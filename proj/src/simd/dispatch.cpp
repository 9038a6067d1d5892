#include "wgcert/simd/phase_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wgcert::simd {

namespace {

using KernelFn = PhaseSum (*)(std::span<const double>);

KernelFn kernel_for(Isa isa)
{
#if defined(WGCERT_HAVE_AVX2_KERNEL)
    if (isa == Isa::avx2) {
        return &sum_unit_phases_avx2;
    }
#endif
    (void)isa;
    return &sum_unit_phases_scalar;
}

Isa initial_isa()
{
    if (const char* env = std::getenv("WGCERT_ISA")) {
        const std::string v(env);
        if (v == "scalar") {
            return Isa::scalar;
        }
        if (v == "avx2" && isa_available(Isa::avx2)) {
            return Isa::avx2;
        }
    }
    return detected_isa();
}

std::atomic<Isa>& active()
{
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

} // namespace

const char* isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(WGCERT_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

Isa detected_isa()
{
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

Isa active_isa()
{
    return active().load(std::memory_order_relaxed);
}

void set_active_isa(Isa isa)
{
    if (!isa_available(isa)) {
        throw std::invalid_argument(std::string("kernel not available on this machine: ") + isa_name(isa));
    }
    active().store(isa, std::memory_order_relaxed);
}

PhaseSum sum_unit_phases(std::span<const double> turns)
{
    return kernel_for(active_isa())(turns);
}

} // namespace wgcert::simd
