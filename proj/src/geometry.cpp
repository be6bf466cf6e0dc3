#include "holo/geometry.hpp"

#include <cmath>
#include <string>

#include "holo/error.hpp"

namespace holo {

namespace {

constexpr double kUnitTolerance = 1e-9;
constexpr double kGramSchmidtSkip = 1e-6;

void require_half_space(const Vec& theta, const PlaneFrame& frame) {
  if (dot(theta, frame.omega) <= kUnitTolerance)
    throw Error(ErrorKind::OutOfHalfspace, "(theta, omega) must be positive");
}

}  // namespace

Vec require_unit(const Vec& v, const char* what) {
  const double len = norm(v);
  if (len == 0.0) throw Error(ErrorKind::InvalidInput, std::string(what) + " is the zero vector");
  if (std::abs(len - 1.0) > kUnitTolerance)
    throw Error(ErrorKind::InvalidInput, std::string(what) + " is not a unit vector");
  return v / len;
}

double GridSpec::coordinate(std::size_t index) const {
  // Endpoints are exact: -h at 0 and +h at n-1.
  if (index + 1 == n) return half_width;
  const double step = 2.0 * half_width / static_cast<double>(n - 1);
  return -half_width + step * static_cast<double>(index);
}

PlaneFrame make_frame(const Vec& omega, double s) {
  const std::size_t d = omega.dim();
  if (d < 2 || d > Vec::kMaxDim) throw Error(ErrorKind::InvalidInput, "dimension must be in [2, 8]");
  if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorKind::InvalidParameter, "plane distance s must be positive");

  PlaneFrame frame;
  frame.dim = d;
  frame.omega = require_unit(omega, "omega");
  frame.s = s;

  for (std::size_t axis = 0; axis < d && frame.basis.size() + 1 < d; ++axis) {
    Vec w = Vec::unit(d, axis);
    // Two passes of modified Gram-Schmidt keep the basis orthonormal to rounding.
    for (int pass = 0; pass < 2; ++pass) {
      w -= dot(w, frame.omega) * frame.omega;
      for (const Vec& b : frame.basis) w -= dot(w, b) * b;
    }
    const double len = norm(w);
    if (len < kGramSchmidtSkip) continue;
    frame.basis.push_back(w / len);
  }
  return frame;
}

Vec point_on_plane(const Vec& theta_in, const PlaneFrame& frame) {
  const Vec theta = require_unit(theta_in, "theta");
  require_half_space(theta, frame);
  return theta * (frame.s / dot(theta, frame.omega));
}

DirectionDecomp decompose(const Vec& v, const PlaneFrame& frame) {
  const double perp = dot(v, frame.omega);
  return {v - perp * frame.omega, perp};
}

bool in_exceptional_set(const Vec& theta, const Vec& k, double eps, const PlaneFrame& frame) {
  const double kappa = norm(k);
  if (!(eps > 0.0) || !(eps < 2.0 * kappa))
    throw Error(ErrorKind::InvalidParameter, "eps must lie in (0, 2 kappa)");
  require_half_space(theta, frame);
  const Vec diff = decompose(k, frame).par - kappa * decompose(theta, frame).par;
  return norm(diff) < eps;
}

bool in_cap_delta(const Vec& theta, double delta, const PlaneFrame& frame) {
  if (!(delta > 0.0) || !(delta < 1.0)) throw Error(ErrorKind::InvalidParameter, "delta must lie in (0, 1)");
  require_half_space(theta, frame);
  return norm(decompose(theta, frame).par) < delta;
}

std::vector<GridNode> grid_points(const GridSpec& spec) {
  if (spec.n < 2) throw Error(ErrorKind::InvalidParameter, "grid needs n >= 2");
  if (!(spec.half_width > 0.0)) throw Error(ErrorKind::InvalidParameter, "grid half-width must be positive");
  const PlaneFrame& f = spec.frame;
  const Vec origin = f.omega * f.s;
  std::vector<GridNode> nodes;
  nodes.reserve(spec.size());
  if (spec.axes() == 1) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      const double u = spec.coordinate(i);
      nodes.push_back({i, 0, u, 0.0, origin + u * f.basis.at(spec.axis_u)});
    }
    return nodes;
  }
  const Vec& eu = f.basis.at(spec.axis_u);
  const Vec& ev = f.basis.at(spec.axis_v);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const double u = spec.coordinate(i);
    for (std::size_t j = 0; j < spec.n; ++j) {
      const double v = spec.coordinate(j);
      nodes.push_back({i, j, u, v, origin + u * eu + v * ev});
    }
  }
  return nodes;
}

void plane_coordinates(const GridSpec& spec, const Vec& y, double& u, double& v) {
  u = dot(y, spec.frame.basis.at(spec.axis_u));
  v = spec.axes() == 2 ? dot(y, spec.frame.basis.at(spec.axis_v)) : 0.0;
}

ExpansionOracle expansion_oracles(const Vec& x, const Vec& zeta) {
  const double r = norm(x);
  const Vec theta = x / r;
  const double tz = dot(theta, zeta);
  const double zz = dot(zeta, zeta);
  return {theta + (zeta - theta * tz) / r, r * (1.0 + tz / r + (zz - tz * tz) / (2.0 * r * r))};
}

}  // namespace holo
