#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "holo/fields.hpp"
#include "holo/geometry.hpp"

namespace holo {

/// Intensity samples I = |psi_0 + psi_1|^2 on a grid patch, in grid order.
struct Hologram {
  GridSpec spec;
  WaveParams params;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[spec.axes() == 1 ? i : i * spec.n + j]; }
};

double intensity(const RadiationField& field, const WaveParams& params, const Vec& x);

/// a(x, k) = |x|^{(d-1)/2} (I(x) - 1).
double scattered_signal(const RadiationField& field, const WaveParams& params, const Vec& x);

/// Evaluates I at every grid node; `threads` only changes scheduling, never values.
Hologram sample_hologram(const RadiationField& field, const WaveParams& params, const GridSpec& spec,
                         unsigned threads = 1);

/// Multiplicative uniform noise I <- max(0, I (1 + level u)), u in [-1, 1],
/// drawn from a seeded 64-bit Mersenne Twister mapped to doubles bit-exactly.
Hologram add_noise(const Hologram& hologram, double relative_level, std::uint64_t seed);

enum class LookupMode { Analytic, Bilinear };

/// Source of intensity values at arbitrary plane points: the exact forward
/// model, or bilinear interpolation of a sampled hologram.
class IntensityLookup {
 public:
  static IntensityLookup analytic(const RadiationField& field, const WaveParams& params);
  /// The hologram must outlive the lookup.
  static IntensityLookup bilinear(const Hologram& hologram);

  LookupMode mode() const noexcept { return mode_; }
  const WaveParams& params() const noexcept { return params_; }

  /// Bilinear mode throws OutOfPatch when y lies outside [-h, h]^(d-1).
  double intensity(const Vec& y) const;
  double signal(const Vec& y) const;

 private:
  LookupMode mode_ = LookupMode::Analytic;
  WaveParams params_;
  const RadiationField* field_ = nullptr;
  const Hologram* hologram_ = nullptr;
};

/// CSV `i,j,x2,x3,I` (d=3) or `i,x2,I` (d=2).
void write_hologram_csv(std::ostream& out, const Hologram& hologram);

/// Binary P5, 8-bit, linear min->0, max->255; a constant image is all zeros.
/// x3 increases upward (first image row is j = n-1).
void write_hologram_pgm(std::ostream& out, const Hologram& hologram);

}  // namespace holo
