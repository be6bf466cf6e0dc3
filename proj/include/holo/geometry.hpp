#pragma once

#include <cstddef>
#include <vector>

#include "holo/vec.hpp"

namespace holo {

/// Measurement hyperplane X_{s,omega} = {x : (x, omega) = s} with an
/// orthonormal basis of the parallel plane through the origin.
struct PlaneFrame {
  std::size_t dim = 0;
  Vec omega;
  double s = 0.0;
  std::vector<Vec> basis;  // dim - 1 vectors, orthonormal, orthogonal to omega
};

/// Split of a vector into its in-plane part and its signed normal coefficient.
struct DirectionDecomp {
  Vec par;
  double perp = 0.0;
};

/// Square (d=3) or segment (d=2) patch of the plane, sampled on an inclusive
/// n-point lattice per axis over [-h, h].
struct GridSpec {
  PlaneFrame frame;
  double half_width = 0.0;
  std::size_t n = 0;
  std::size_t axis_u = 0;  // frame basis index of the first in-plane coordinate
  std::size_t axis_v = 1;  // second coordinate, d=3 only

  std::size_t axes() const noexcept { return frame.dim == 2 ? 1 : 2; }
  std::size_t size() const noexcept { return axes() == 1 ? n : n * n; }
  double coordinate(std::size_t index) const;
};

/// One grid node: lattice indices, in-plane coordinates and the ambient point.
struct GridNode {
  std::size_t i = 0;
  std::size_t j = 0;
  double u = 0.0;
  double v = 0.0;
  Vec x;
};

/// Normalises a vector that should be of unit length. Inputs further than 1e-9
/// from unit norm are rejected with InvalidInput.
Vec require_unit(const Vec& v, const char* what);

PlaneFrame make_frame(const Vec& omega, double s);

Vec point_on_plane(const Vec& theta, const PlaneFrame& frame);

DirectionDecomp decompose(const Vec& v, const PlaneFrame& frame);

bool in_exceptional_set(const Vec& theta, const Vec& k, double eps, const PlaneFrame& frame);

bool in_cap_delta(const Vec& theta, double delta, const PlaneFrame& frame);

/// Row-major: index = i * n + j with i along axis_u and j along axis_v.
std::vector<GridNode> grid_points(const GridSpec& spec);

/// In-plane coordinates of an arbitrary point relative to the grid axes.
void plane_coordinates(const GridSpec& spec, const Vec& y, double& u, double& v);

struct ExpansionOracle {
  Vec yhat_approx;
  double ynorm_approx = 0.0;
};

/// First-order unit direction and second-order norm of y = x + zeta, for
/// checking the small-offset expansions against exact evaluation.
ExpansionOracle expansion_oracles(const Vec& x, const Vec& zeta);

}  // namespace holo
