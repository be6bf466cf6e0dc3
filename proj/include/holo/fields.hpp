#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "holo/vec.hpp"

namespace holo {

using cplx = std::complex<double>;

/// Incident plane wave e^{i k.x} with |k| = kappa.
struct WaveParams {
  double kappa = 0.0;
  Vec k;

  /// Validates |k| = kappa to 1e-9 relative.
  static WaveParams make(double kappa, const Vec& k);
  std::size_t dim() const noexcept { return k.dim(); }
};

struct PointSource {
  cplx c;
  Vec x0;
};

/// Outgoing field psi_1 as a superposition of point sources:
/// d=3: c e^{i kappa r} / r,  d=2: c H0^(1)(kappa r).
struct RadiationField {
  std::size_t dim = 3;
  std::vector<PointSource> sources;

  /// Rejects dimensions other than 2 and 3, empty lists and repeated sources.
  static RadiationField make(std::size_t dim, std::vector<PointSource> sources);
};

cplx plane_wave(const Vec& x, const WaveParams& params);

/// Throws SingularEvaluation when x is within 1e-12 of a source.
cplx eval_radiation(const RadiationField& field, double kappa, const Vec& x);

/// Closed-form far-field pattern, normalised so that
/// psi_1(r theta) ~ e^{i kappa r} r^{-(d-1)/2} f_1(theta).
cplx far_field(const RadiationField& field, double kappa, const Vec& theta);

/// r^{(d-1)/2} e^{-i kappa r} psi_1(r theta); converges to far_field as O(1/r).
cplx far_field_numeric_oracle(const RadiationField& field, double kappa, const Vec& theta, double r);

}  // namespace holo
