#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holo/fields.hpp"
#include "holo/geometry.hpp"

namespace holo {

/// Rectangular region of the grid patch in in-plane coordinates.
struct RegionMask {
  enum class Kind { Full, CentralBox, OutsideBox };
  Kind kind = Kind::Full;
  double half_width = 0.0;  // b, for the box kinds

  static RegionMask full() { return {Kind::Full, 0.0}; }
  static RegionMask box(double b) { return {Kind::CentralBox, b}; }
  static RegionMask outside_box(double b) { return {Kind::OutsideBox, b}; }

  /// Box membership is |u| < b and |v| < b (strict).
  bool contains(double u, double v) const;
  std::string name() const;
  /// Membership per node of `nodes`, in the same order.
  std::vector<bool> select(std::span<const GridNode> nodes) const;
};

/// sqrt(sum |u2 - u1|^2) / sqrt(sum |u1|^2) over masked entries, accumulated
/// sequentially in long double. Throws UndefinedDenominator if u1 vanishes.
double rel_l2(std::span<const cplx> u2, std::span<const cplx> u1, const std::vector<bool>& mask);
double rel_l2(std::span<const double> u2, std::span<const double> u1, const std::vector<bool>& mask);

/// rel_l2(I_rec - 1, I - 1) with I_rec = |psi_0 + psi_rec|^2 and I = |psi_0 + psi_1|^2.
double discrepancy(const RadiationField& field, std::span<const cplx> recon_values, const WaveParams& params,
                   std::span<const GridNode> nodes, const std::vector<bool>& mask);

/// Least-squares slope of log(error) against log(scale).
double slope_estimate(std::span<const std::pair<double, double>> samples);

}  // namespace holo
