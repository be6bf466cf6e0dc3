#pragma once

#include <complex>

namespace holo {

/// Argument above which the large-argument expansion replaces the power series.
inline constexpr double kHankelSwitch = 12.0;

/// H0^(1)(z) = J0(z) + i Y0(z) for z > 0, absolute accuracy well below 1e-7.
std::complex<double> hankel0_first_kind(double z);

namespace detail {
/// Ascending power series for J0 and Y0. Accurate for moderate z only.
std::complex<double> hankel0_series(double z);
/// Hankel's asymptotic expansion, truncated at the smallest term.
std::complex<double> hankel0_asymptotic(double z);
}  // namespace detail

}  // namespace holo
