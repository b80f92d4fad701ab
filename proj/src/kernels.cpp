#include "doomsim/kernels.hpp"

#include <cstring>

namespace doomsim::kernels {

namespace detail {

double norm_squared_scalar(std::span<const cplx> amps) {
  double total = 0.0;
  for (const cplx& z : amps) total += z.real() * z.real() + z.imag() * z.imag();
  return total;
}

double project_bit_scalar(std::span<cplx> amps, int shift, int value) {
  double kept = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (((i >> shift) & 1u) == static_cast<std::size_t>(value)) {
      kept += std::norm(amps[i]);
    } else {
      amps[i] = cplx{};
    }
  }
  return kept;
}

void scale_scalar(std::span<cplx> amps, double factor) {
  for (cplx& z : amps) z *= factor;
}

} // namespace detail

#if defined(__x86_64__) || defined(_M_X64)

namespace {
bool have_avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
}
} // namespace

const char* active_target() { return have_avx2() ? "avx2" : "scalar"; }

double norm_squared(std::span<const cplx> amps) {
  return have_avx2() ? detail::norm_squared_avx2(amps) : detail::norm_squared_scalar(amps);
}

double project_bit(std::span<cplx> amps, int shift, int value) {
  return have_avx2() ? detail::project_bit_avx2(amps, shift, value)
                     : detail::project_bit_scalar(amps, shift, value);
}

void scale(std::span<cplx> amps, double factor) {
  if (have_avx2())
    detail::scale_avx2(amps, factor);
  else
    detail::scale_scalar(amps, factor);
}

#else

const char* active_target() { return "scalar"; }

double norm_squared(std::span<const cplx> amps) { return detail::norm_squared_scalar(amps); }

double project_bit(std::span<cplx> amps, int shift, int value) {
  return detail::project_bit_scalar(amps, shift, value);
}

void scale(std::span<cplx> amps, double factor) { detail::scale_scalar(amps, factor); }

#endif

} // namespace doomsim::kernels
