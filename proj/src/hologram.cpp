#include "holo/hologram.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <string>

#include "holo/csv.hpp"
#include "holo/error.hpp"
#include "holo/parallel.hpp"

namespace holo {

double intensity(const RadiationField& field, const WaveParams& params, const Vec& x) {
  return std::norm(plane_wave(x, params) + eval_radiation(field, params.kappa, x));
}

double scattered_signal(const RadiationField& field, const WaveParams& params, const Vec& x) {
  const double r = norm(x);
  if (!(r > 0.0)) throw Error(ErrorKind::Domain, "scattered signal needs |x| > 0");
  return std::pow(r, 0.5 * static_cast<double>(x.dim() - 1)) * (intensity(field, params, x) - 1.0);
}

Hologram sample_hologram(const RadiationField& field, const WaveParams& params, const GridSpec& spec,
                         unsigned threads) {
  const std::vector<GridNode> nodes = grid_points(spec);
  Hologram holo{spec, params, std::vector<double>(nodes.size())};
  parallel_for(nodes.size(), threads, [&](std::size_t p) {
    try {
      holo.values[p] = intensity(field, params, nodes[p].x);
    } catch (const Error& e) {
      throw Error(e.kind(), "grid node (" + std::to_string(nodes[p].i) + ", " + std::to_string(nodes[p].j) +
                                "): " + e.what());
    }
  });
  return holo;
}

Hologram add_noise(const Hologram& hologram, double relative_level, std::uint64_t seed) {
  if (!(relative_level >= 0.0)) throw Error(ErrorKind::InvalidParameter, "noise level must be >= 0");
  Hologram out = hologram;
  if (relative_level == 0.0) return out;
  std::mt19937_64 gen(seed);
  for (double& v : out.values) {
    // 53 high bits -> [0, 1) -> [-1, 1); fixed mapping keeps output platform independent.
    const double u01 = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const double u = 2.0 * u01 - 1.0;
    v = std::max(0.0, v * (1.0 + relative_level * u));
  }
  return out;
}

IntensityLookup IntensityLookup::analytic(const RadiationField& field, const WaveParams& params) {
  IntensityLookup l;
  l.mode_ = LookupMode::Analytic;
  l.params_ = params;
  l.field_ = &field;
  return l;
}

IntensityLookup IntensityLookup::bilinear(const Hologram& hologram) {
  IntensityLookup l;
  l.mode_ = LookupMode::Bilinear;
  l.params_ = hologram.params;
  l.hologram_ = &hologram;
  return l;
}

namespace {

// Cell index and local weight along one axis; throws when outside [-h, h].
std::pair<std::size_t, double> locate(const GridSpec& spec, double c) {
  const double h = spec.half_width;
  const double slack = 1e-12 * h;
  if (c < -h - slack || c > h + slack) throw Error(ErrorKind::OutOfPatch, "coordinate " + num(c) + " outside patch");
  const double step = 2.0 * h / static_cast<double>(spec.n - 1);
  const double t = std::clamp((c + h) / step, 0.0, static_cast<double>(spec.n - 1));
  std::size_t cell = std::min(static_cast<std::size_t>(t), spec.n - 2);
  double w = t - static_cast<double>(cell);
  // Snap onto nodes so that node lookups return stored samples exactly.
  const std::size_t nearest = static_cast<std::size_t>(std::lround(t));
  if (std::abs(spec.coordinate(nearest) - c) <= slack) {
    cell = std::min(nearest, spec.n - 2);
    w = static_cast<double>(nearest) - static_cast<double>(cell);
  }
  return {cell, w};
}

}  // namespace

double IntensityLookup::intensity(const Vec& y) const {
  if (mode_ == LookupMode::Analytic) return holo::intensity(*field_, params_, y);
  const Hologram& h = *hologram_;
  double u = 0.0;
  double v = 0.0;
  plane_coordinates(h.spec, y, u, v);
  const auto [i, wu] = locate(h.spec, u);
  if (h.spec.axes() == 1) return (1.0 - wu) * h.at(i, 0) + wu * h.at(i + 1, 0);
  const auto [j, wv] = locate(h.spec, v);
  const double lo = (1.0 - wv) * h.at(i, j) + wv * h.at(i, j + 1);
  const double hi = (1.0 - wv) * h.at(i + 1, j) + wv * h.at(i + 1, j + 1);
  return (1.0 - wu) * lo + wu * hi;
}

double IntensityLookup::signal(const Vec& y) const {
  const double r = norm(y);
  return std::pow(r, 0.5 * static_cast<double>(y.dim() - 1)) * (intensity(y) - 1.0);
}

void write_hologram_csv(std::ostream& out, const Hologram& hologram) {
  const GridSpec& spec = hologram.spec;
  out << (spec.axes() == 1 ? "i,x2,I\n" : "i,j,x2,x3,I\n");
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (spec.axes() == 1) {
      out << i << ',' << num(spec.coordinate(i)) << ',' << num(hologram.at(i, 0)) << '\n';
      continue;
    }
    for (std::size_t j = 0; j < spec.n; ++j)
      out << i << ',' << j << ',' << num(spec.coordinate(i)) << ',' << num(spec.coordinate(j)) << ','
          << num(hologram.at(i, j)) << '\n';
  }
}

void write_hologram_pgm(std::ostream& out, const Hologram& hologram) {
  const GridSpec& spec = hologram.spec;
  const std::size_t width = spec.n;
  const std::size_t height = spec.axes() == 1 ? 1 : spec.n;
  const auto [lo_it, hi_it] = std::minmax_element(hologram.values.begin(), hologram.values.end());
  const double lo = *lo_it;
  const double span = *hi_it - lo;
  out << "P5\n" << width << ' ' << height << "\n255\n";
  std::string row(width, '\0');
  for (std::size_t r = 0; r < height; ++r) {
    const std::size_t j = height - 1 - r;
    for (std::size_t i = 0; i < width; ++i) {
      const double t = span > 0.0 ? (hologram.at(i, j) - lo) / span : 0.0;
      row[i] = static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * t)));
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

}  // namespace holo
