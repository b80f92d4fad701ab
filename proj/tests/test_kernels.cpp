#include <doctest.h>

#include <random>
#include <vector>

#include "doomsim/kernels.hpp"

using doomsim::kernels::cplx;
namespace kernels = doomsim::kernels;

namespace {

std::vector<cplx> random_amps(std::mt19937_64& rng, std::size_t count) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> amps(count);
  for (auto& z : amps) z = cplx(normal(rng), normal(rng));
  return amps;
}

} // namespace

TEST_CASE("norm_squared matches scalar reference") {
  std::mt19937_64 rng(101);
  for (std::size_t count : {1u, 3u, 4u, 7u, 64u, 1000u, 4096u}) {
    const auto amps = random_amps(rng, count);
    const double reference = kernels::detail::norm_squared_scalar(amps);
    const double dispatched = kernels::norm_squared(amps);
    CHECK(dispatched == doctest::Approx(reference).epsilon(1e-13));
  }
}

TEST_CASE("project_bit matches scalar reference and zeroes the right sector") {
  std::mt19937_64 rng(103);
  for (int k = 1; k <= 10; ++k) {
    const std::size_t dim = std::size_t{1} << k;
    for (int shift = 0; shift < k; ++shift) {
      for (int value = 0; value <= 1; ++value) {
        auto a = random_amps(rng, dim);
        auto b = a;
        const double kept_ref = kernels::detail::project_bit_scalar(a, shift, value);
        const double kept = kernels::project_bit(b, shift, value);
        CHECK(kept == doctest::Approx(kept_ref).epsilon(1e-13));
        for (std::size_t i = 0; i < dim; ++i) {
          if (((i >> shift) & 1u) != static_cast<std::size_t>(value)) {
            CHECK(b[i] == cplx{});
          } else {
            CHECK(b[i] == a[i]);
          }
        }
      }
    }
  }
}

TEST_CASE("project complements sum to the total mass") {
  std::mt19937_64 rng(107);
  auto amps = random_amps(rng, 256);
  const double total = kernels::norm_squared(amps);
  for (int shift = 0; shift < 8; ++shift) {
    auto kept1 = amps;
    auto kept0 = amps;
    const double p1 = kernels::project_bit(kept1, shift, 1);
    const double p0 = kernels::project_bit(kept0, shift, 0);
    CHECK(p0 + p1 == doctest::Approx(total).epsilon(1e-12));
  }
}

TEST_CASE("scale matches scalar reference") {
  std::mt19937_64 rng(109);
  auto a = random_amps(rng, 1023);
  auto b = a;
  kernels::detail::scale_scalar(a, 0.3125);
  kernels::scale(b, 0.3125);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == a[i]);
}

TEST_CASE("dispatch target is reported") {
  const std::string target = kernels::active_target();
  CHECK((target == "scalar" || target == "avx2"));
}
