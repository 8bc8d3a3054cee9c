#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation and an AVX2 variant; the un-namespaced entry points pick
// one at runtime. The two must agree to a few ulps of the summed magnitude.

#include <cstdint>
#include <string_view>

#include "besselxi/types.hpp"

namespace besselxi::kernels {

enum class Isa { scalar, avx2 };

/// ISA chosen at first use: AVX2+FMA when the CPU has it, unless the
/// environment variable BESSELXI_ISA=scalar forces the reference path.
Isa active_isa();
std::string_view isa_name(Isa isa);

/// Σ_{n=first}^{last} exp(-c n²).
double gaussian_sum(double c, std::int64_t first, std::int64_t last);

/// Σ_{n=1}^{count} n^{-s}.
Complex dirichlet_sum(Complex s, std::int64_t count);

namespace scalar {
double gaussian_sum(double c, std::int64_t first, std::int64_t last);
Complex dirichlet_sum(Complex s, std::int64_t count);
}  // namespace scalar

namespace avx2 {
bool available();
double gaussian_sum(double c, std::int64_t first, std::int64_t last);
Complex dirichlet_sum(Complex s, std::int64_t count);
}  // namespace avx2

namespace detail {
/// ln(n) for n in [0, size); entry 0 is unused. Immutable after first use.
const double* log_table();
inline constexpr std::int64_t kLogTableSize = 1 << 16;
}  // namespace detail

}  // namespace besselxi::kernels
