#include "holo/special.hpp"

#include <cmath>
#include <numbers>

#include "holo/error.hpp"

namespace holo {

namespace detail {

std::complex<double> hankel0_series(double z) {
  // J0 = sum (-q)^m / (m!)^2,  q = z^2/4
  // Y0 = (2/pi) [(ln(z/2) + gamma) J0 + sum_{m>=1} (-1)^{m+1} H_m q^m / (m!)^2]
  const double q = 0.25 * z * z;
  double term = 1.0;
  double j0 = 1.0;
  double harmonic = 0.0;
  double y_sum = 0.0;
  for (int m = 1; m < 200; ++m) {
    term *= -q / (static_cast<double>(m) * m);
    harmonic += 1.0 / m;
    j0 += term;
    y_sum -= harmonic * term;
    if (std::abs(term) * (1.0 + harmonic) < 1e-17 * (1.0 + std::abs(j0))) break;
  }
  const double y0 = (2.0 / std::numbers::pi) * ((std::log(0.5 * z) + std::numbers::egamma) * j0 + y_sum);
  return {j0, y0};
}

std::complex<double> hankel0_asymptotic(double z) {
  // J0 = sqrt(2/(pi z)) (P cos chi - Q sin chi), Y0 = sqrt(2/(pi z)) (P sin chi + Q cos chi)
  // with chi = z - pi/4 and a_k = a_{k-1} * (-(2k-1)^2) / (8k).
  double p = 1.0;
  double qsum = 0.0;
  double a = 1.0;
  double zpow = 1.0;
  double last = INFINITY;
  for (int k = 1; k < 60; ++k) {
    a *= -static_cast<double>((2 * k - 1) * (2 * k - 1)) / (8.0 * k);
    zpow *= z;
    const double t = a / zpow;
    if (std::abs(t) >= last) break;
    last = std::abs(t);
    // (-1)^m a_{2m} for P and (-1)^m a_{2m+1} for Q.
    const int m = k / 2;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) p += sign * t; else qsum += sign * t;
    if (std::abs(t) < 1e-17) break;
  }
  const double chi = z - 0.25 * std::numbers::pi;
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  const double amp = std::sqrt(2.0 / (std::numbers::pi * z));
  return {amp * (p * c - qsum * s), amp * (p * s + qsum * c)};
}

}  // namespace detail

std::complex<double> hankel0_first_kind(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw Error(ErrorKind::Domain, "hankel0 requires z > 0");
  return z <= kHankelSwitch ? detail::hankel0_series(z) : detail::hankel0_asymptotic(z);
}

}  // namespace holo
