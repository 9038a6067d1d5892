#pragma once

// Kernels summing unit phases e(p) = cos(2 pi p) + i sin(2 pi p) over a block.
//
// Phases are given in turns. Each kernel first reduces p to [-1/2, 1/2] with
// round-to-nearest-even, so p and -p always produce conjugate terms. The scalar
// kernel is the libm reference; the AVX2 kernel evaluates a polynomial
// sincos four lanes at a time. The active kernel is chosen at first use from
// cpuid and may be overridden (WGCERT_ISA=scalar|avx2, or set_active_isa).

#include <span>

namespace wgcert::simd {

struct PhaseSum {
    double re = 0.0;
    double im = 0.0;
};

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
/// True when the kernel is compiled in and the CPU supports it.
bool isa_available(Isa isa);
/// Best available kernel on this machine.
Isa detected_isa();
Isa active_isa();
/// Throws std::invalid_argument when the kernel is not available.
void set_active_isa(Isa isa);

PhaseSum sum_unit_phases_scalar(std::span<const double> turns);
#if defined(WGCERT_HAVE_AVX2_KERNEL)
PhaseSum sum_unit_phases_avx2(std::span<const double> turns);
#endif

/// Dispatches to the active kernel.
PhaseSum sum_unit_phases(std::span<const double> turns);

} // namespace wgcert::simd
