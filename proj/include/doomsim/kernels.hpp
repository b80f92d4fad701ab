#pragma once

#include <complex>
#include <cstdint>
#include <span>

// Data-parallel amplitude kernels. Scalar reference implementations live in
// kernels.cpp; an AVX2 variant is selected at runtime when the CPU supports
// it. The two paths are equivalence-tested against each other.

namespace doomsim::kernels {

using cplx = std::complex<double>;

/// Sum of |z|^2 over the span.
double norm_squared(std::span<const cplx> amps);

/// Project onto the sector where bit `shift` of the index equals `value`
/// (index bit extracted as (i >> shift) & 1). Amplitudes outside the sector
/// are zeroed in place; returns the squared mass of the kept sector.
double project_bit(std::span<cplx> amps, int shift, int value);

/// Multiply every amplitude by a real factor.
void scale(std::span<cplx> amps, double factor);

/// Name of the active dispatch target ("scalar", "avx2").
const char* active_target();

namespace detail {
double norm_squared_scalar(std::span<const cplx> amps);
double project_bit_scalar(std::span<cplx> amps, int shift, int value);
void scale_scalar(std::span<cplx> amps, double factor);
#if defined(__x86_64__) || defined(_M_X64)
double norm_squared_avx2(std::span<const cplx> amps);
double project_bit_avx2(std::span<cplx> amps, int shift, int value);
void scale_avx2(std::span<cplx> amps, double factor);
#endif
} // namespace detail

} // namespace doomsim::kernels
