#include "holo/metrics.hpp"

#include <cmath>
#include <set>

#include "holo/error.hpp"
#include "holo/hologram.hpp"

namespace holo {

bool RegionMask::contains(double u, double v) const {
  const bool inside = std::abs(u) < half_width && std::abs(v) < half_width;
  switch (kind) {
    case Kind::Full: return true;
    case Kind::CentralBox: return inside;
    case Kind::OutsideBox: return !inside;
  }
  return false;
}

std::string RegionMask::name() const {
  switch (kind) {
    case Kind::Full: return "G";
    case Kind::CentralBox: return "D";
    case Kind::OutsideBox: return "G\\D";
  }
  return "?";
}

std::vector<bool> RegionMask::select(std::span<const GridNode> nodes) const {
  std::vector<bool> mask(nodes.size());
  for (std::size_t p = 0; p < nodes.size(); ++p) mask[p] = contains(nodes[p].u, nodes[p].v);
  return mask;
}

namespace {

template <class T>
double rel_l2_impl(std::span<const T> u2, std::span<const T> u1, const std::vector<bool>& mask) {
  if (u2.size() != u1.size() || mask.size() != u1.size())
    throw Error(ErrorKind::InvalidInput, "rel_l2 operands differ in length");
  long double num = 0.0L;
  long double den = 0.0L;
  for (std::size_t p = 0; p < u1.size(); ++p) {
    if (!mask[p]) continue;
    num += static_cast<long double>(std::norm(u2[p] - u1[p]));
    den += static_cast<long double>(std::norm(u1[p]));
  }
  if (!(den > 0.0L)) throw Error(ErrorKind::UndefinedDenominator, "reference vanishes on the region");
  return static_cast<double>(std::sqrt(num / den));
}

}  // namespace

double rel_l2(std::span<const cplx> u2, std::span<const cplx> u1, const std::vector<bool>& mask) {
  return rel_l2_impl(u2, u1, mask);
}

double rel_l2(std::span<const double> u2, std::span<const double> u1, const std::vector<bool>& mask) {
  return rel_l2_impl(u2, u1, mask);
}

double discrepancy(const RadiationField& field, std::span<const cplx> recon_values, const WaveParams& params,
                   std::span<const GridNode> nodes, const std::vector<bool>& mask) {
  if (recon_values.size() != nodes.size()) throw Error(ErrorKind::InvalidInput, "one value per node expected");
  std::vector<double> measured(nodes.size());
  std::vector<double> rebuilt(nodes.size());
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    const cplx incident = plane_wave(nodes[p].x, params);
    measured[p] = intensity(field, params, nodes[p].x) - 1.0;
    rebuilt[p] = std::norm(incident + recon_values[p]) - 1.0;
  }
  return rel_l2(std::span<const double>(rebuilt), std::span<const double>(measured), mask);
}

double slope_estimate(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 3) throw Error(ErrorKind::InvalidInput, "slope estimate needs at least 3 samples");
  std::set<double> scales;
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [s, e] : samples) {
    if (!(s > 0.0) || !(e > 0.0)) throw Error(ErrorKind::Domain, "scales and errors must be positive");
    scales.insert(s);
    mx += std::log(s);
    my += std::log(e);
  }
  if (scales.size() != samples.size()) throw Error(ErrorKind::InvalidInput, "scales must be distinct");
  const double n = static_cast<double>(samples.size());
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [s, e] : samples) {
    const double dx = std::log(s) - mx;
    sxy += dx * (std::log(e) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace holo
