#include "holo/fields.hpp"

#include <cmath>
#include <numbers>

#include "holo/error.hpp"
#include "holo/special.hpp"

namespace holo {

namespace {

constexpr double kSourceClearance = 1e-12;

cplx unit_phase(double phase) { return {std::cos(phase), std::sin(phase)}; }

}  // namespace

WaveParams WaveParams::make(double kappa, const Vec& k) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw Error(ErrorKind::InvalidParameter, "kappa must be positive");
  if (std::abs(norm(k) - kappa) > 1e-9 * kappa) throw Error(ErrorKind::InvalidParameter, "|k| must equal kappa");
  return {kappa, k};
}

RadiationField RadiationField::make(std::size_t dim, std::vector<PointSource> sources) {
  if (dim != 2 && dim != 3) throw Error(ErrorKind::InvalidInput, "radiation fields are defined for d = 2 and d = 3");
  if (sources.empty()) throw Error(ErrorKind::InvalidInput, "at least one point source is required");
  for (std::size_t a = 0; a < sources.size(); ++a) {
    if (sources[a].x0.dim() != dim) throw Error(ErrorKind::InvalidInput, "source location has the wrong dimension");
    for (std::size_t b = 0; b < a; ++b)
      if (sources[a].x0 == sources[b].x0) throw Error(ErrorKind::InvalidInput, "source locations must be distinct");
  }
  return {dim, std::move(sources)};
}

cplx plane_wave(const Vec& x, const WaveParams& params) { return unit_phase(dot(params.k, x)); }

cplx eval_radiation(const RadiationField& field, double kappa, const Vec& x) {
  cplx sum = 0.0;
  for (const PointSource& src : field.sources) {
    const double r = distance(x, src.x0);
    if (r <= kSourceClearance) throw Error(ErrorKind::SingularEvaluation, "evaluation point coincides with a source");
    if (field.dim == 3)
      sum += src.c * unit_phase(kappa * r) / r;
    else
      sum += src.c * hankel0_first_kind(kappa * r);
  }
  return sum;
}

cplx far_field(const RadiationField& field, double kappa, const Vec& theta) {
  cplx sum = 0.0;
  for (const PointSource& src : field.sources) sum += src.c * unit_phase(-kappa * dot(theta, src.x0));
  if (field.dim == 2) sum *= std::sqrt(2.0 / (std::numbers::pi * kappa)) * unit_phase(-0.25 * std::numbers::pi);
  return sum;
}

cplx far_field_numeric_oracle(const RadiationField& field, double kappa, const Vec& theta, double r) {
  const double scale = std::pow(r, 0.5 * static_cast<double>(field.dim - 1));
  return scale * unit_phase(-kappa * r) * eval_radiation(field, kappa, theta * r);
}

}  // namespace holo
