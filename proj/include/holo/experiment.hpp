#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holo/fields.hpp"
#include "holo/geometry.hpp"
#include "holo/hologram.hpp"
#include "holo/recon.hpp"

namespace holo {

enum class RateProbe { Auto, Annulus, Singular };

/// Everything one run needs. Defaults reproduce the d=3 point-source
/// experiment: kappa 4, k = (4,0,0), plane x1 = 100, source c = 1 at
/// (0, 2.5, 0), 100 x 100 grid over [-20, 20]^2, sqrt-scaled offsets with
/// alpha = -1/2.
struct ExperimentConfig {
  std::size_t dim = 3;
  double kappa = 4.0;
  Vec k{4.0, 0.0, 0.0};
  Vec omega{1.0, 0.0, 0.0};
  double s = 100.0;
  std::vector<PointSource> sources{{cplx(1.0, 0.0), Vec{0.0, 2.5, 0.0}}};
  double h = 20.0;
  std::size_t n = 100;
  ZetaStrategy strategy;
  LookupMode lookup = LookupMode::Analytic;
  bool refine2d = false;
  double noise_level = 0.0;
  std::uint64_t noise_seed = 0;
  std::filesystem::path out_dir = ".";
  double region_b = 2.0;
  RateProbe probe = RateProbe::Auto;
  std::vector<double> rate_ladder{50.0, 100.0, 200.0, 400.0, 800.0};

  /// Throws InvalidParameter / InvalidInput on any violated invariant.
  void validate() const;
};

/// Parses the line-oriented `key = value` format (`#` comments, vectors
/// comma-separated). Unset keys take the defaults above; for dim = 2 the
/// vector defaults are the planar analogues. Errors carry the line number.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Objects derived from a config.
struct Setup {
  WaveParams params;
  RadiationField field;
  GridSpec spec;
};
Setup build_setup(const ExperimentConfig& config);

struct MetricValue {
  std::string metric;  // "E", "E_dis" or "max_zeta"
  std::string region;  // "G", "D", "G_minus_D"
  std::optional<double> value;
  std::string error;  // set when value is empty
};

struct ReconstructionReport {
  ReconGrid grid;
  std::vector<cplx> exact;
  std::vector<MetricValue> metrics;

  std::optional<double> metric(std::string_view name, std::string_view region) const;
};

Hologram simulate(const ExperimentConfig& config, unsigned threads);
ReconstructionReport reconstruct(const ExperimentConfig& config, unsigned threads);

/// Writes hologram.csv and hologram.pgm into config.out_dir.
Hologram run_simulate(const ExperimentConfig& config, unsigned threads);
/// Writes recon.csv, profile.csv and metrics.csv into config.out_dir.
ReconstructionReport run_reconstruct(const ExperimentConfig& config, unsigned threads);

/// Column of the grid with the smallest |x2| (ties to the smaller index).
std::size_t central_column(const GridSpec& spec);
void write_profile_csv(std::ostream& out, const ReconstructionReport& report);
void write_metrics_csv(std::ostream& out, const std::vector<MetricValue>& metrics);

struct SweepRow {
  std::string param;
  double value = 0.0;
  std::optional<double> error_g;
  std::string error;
};

/// Applies one parameter value ("s", "c", "kappa" or "x0_2") to a copy of the config.
ExperimentConfig with_parameter(const ExperimentConfig& base, std::string_view param, double value);
std::vector<SweepRow> sweep(const ExperimentConfig& config, std::string_view param, const std::vector<double>& values,
                            unsigned threads);
/// Writes sweep.csv (`param,value,E_G`).
std::vector<SweepRow> run_sweep(const ExperimentConfig& config, std::string_view param,
                                const std::vector<double>& values, unsigned threads);

struct RateSeries {
  std::string name;
  std::vector<std::pair<double, double>> samples;  // (s, RMS |f11 - f1| over probes)
  double slope = 0.0;
};

/// Probe directions used by `rates` for this config.
std::vector<Vec> rate_probes(const ExperimentConfig& config);
/// Error ladder over config.rate_ladder; d=2 also reports the refined estimator.
std::vector<RateSeries> rates(const ExperimentConfig& config, unsigned threads);
/// Writes rates.csv (`series,s,error`) and rates_slopes.csv (`series,slope`).
std::vector<RateSeries> run_rates(const ExperimentConfig& config, unsigned threads);

/// Full reproduction of the published point-source experiment with a
/// per-value comparison table; returns true when every value is in tolerance.
bool reproduce_paper(const ExperimentConfig& config, unsigned threads, std::ostream& summary);

}  // namespace holo
