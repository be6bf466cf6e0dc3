#include "holo/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "holo/csv.hpp"
#include "holo/error.hpp"
#include "holo/metrics.hpp"
#include "holo/parallel.hpp"

namespace holo {

namespace {

std::ofstream open_output(const std::filesystem::path& dir, const char* name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const char* name) {
  out.flush();
  if (!out) throw Error(ErrorKind::Io, std::string("write failed for ") + name);
}

}  // namespace

Setup build_setup(const ExperimentConfig& config) {
  config.validate();
  Setup setup{WaveParams::make(config.kappa, config.k), RadiationField::make(config.dim, config.sources), {}};
  setup.spec.frame = make_frame(config.omega, config.s);
  setup.spec.half_width = config.h;
  setup.spec.n = config.n;
  setup.spec.axis_u = 0;
  setup.spec.axis_v = config.dim == 3 ? 1 : 0;
  return setup;
}

std::optional<double> ReconstructionReport::metric(std::string_view name, std::string_view region) const {
  for (const MetricValue& m : metrics)
    if (m.metric == name && m.region == region) return m.value;
  return std::nullopt;
}

Hologram simulate(const ExperimentConfig& config, unsigned threads) {
  const Setup setup = build_setup(config);
  Hologram holo = sample_hologram(setup.field, setup.params, setup.spec, threads);
  return add_noise(holo, config.noise_level, config.noise_seed);
}

ReconstructionReport reconstruct(const ExperimentConfig& config, unsigned threads) {
  const Setup setup = build_setup(config);
  std::optional<Hologram> hologram;
  IntensityLookup lookup = IntensityLookup::analytic(setup.field, setup.params);
  if (config.lookup == LookupMode::Bilinear) {
    hologram = simulate(config, threads);
    lookup = IntensityLookup::bilinear(*hologram);
  }

  ReconstructionReport report{reconstruct_grid(setup.spec, lookup, config.strategy, config.refine2d, threads), {}, {}};
  const std::vector<GridNode> nodes = grid_points(setup.spec);
  report.exact.resize(nodes.size());
  parallel_for(nodes.size(), threads,
               [&](std::size_t p) { report.exact[p] = eval_radiation(setup.field, setup.params.kappa, nodes[p].x); });

  std::vector<cplx> rec(nodes.size());
  for (std::size_t p = 0; p < nodes.size(); ++p) rec[p] = report.grid.points[p].psi1_rec;

  const RegionMask regions[] = {RegionMask::full(), RegionMask::box(config.region_b),
                                RegionMask::outside_box(config.region_b)};
  const char* names[] = {"G", "D", "G_minus_D"};
  for (int pass = 0; pass < 2; ++pass) {
    for (int r = 0; r < 3; ++r) {
      MetricValue m{pass == 0 ? "E" : "E_dis", names[r], std::nullopt, {}};
      try {
        const std::vector<bool> mask = regions[r].select(nodes);
        m.value = pass == 0 ? rel_l2(std::span<const cplx>(rec), std::span<const cplx>(report.exact), mask)
                            : discrepancy(setup.field, rec, setup.params, nodes, mask);
      } catch (const Error& e) {
        m.error = e.what();
      }
      report.metrics.push_back(std::move(m));
    }
  }
  report.metrics.push_back({"max_zeta", "G", report.grid.max_zeta, {}});
  return report;
}

Hologram run_simulate(const ExperimentConfig& config, unsigned threads) {
  Hologram holo = simulate(config, threads);
  auto csv = open_output(config.out_dir, "hologram.csv");
  write_hologram_csv(csv, holo);
  finish(csv, "hologram.csv");
  auto pgm = open_output(config.out_dir, "hologram.pgm");
  write_hologram_pgm(pgm, holo);
  finish(pgm, "hologram.pgm");
  return holo;
}

std::size_t central_column(const GridSpec& spec) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < spec.n; ++i)
    if (std::abs(spec.coordinate(i)) < std::abs(spec.coordinate(best))) best = i;
  return best;
}

void write_profile_csv(std::ostream& out, const ReconstructionReport& report) {
  const GridSpec& spec = report.grid.spec;
  const auto row = [&](std::size_t p) {
    out << num(report.exact[p].real()) << ',' << num(report.exact[p].imag()) << ','
        << num(report.grid.points[p].psi1_rec.real()) << ',' << num(report.grid.points[p].psi1_rec.imag()) << '\n';
  };
  if (spec.axes() == 1) {
    out << "i,x2,re_psi1,im_psi1,re_psi1rec,im_psi1rec\n";
    for (std::size_t i = 0; i < spec.n; ++i) {
      out << i << ',' << num(spec.coordinate(i)) << ',';
      row(i);
    }
    return;
  }
  const std::size_t col = central_column(spec);
  out << "j,x3,re_psi1,im_psi1,re_psi1rec,im_psi1rec\n";
  for (std::size_t j = 0; j < spec.n; ++j) {
    out << j << ',' << num(spec.coordinate(j)) << ',';
    row(col * spec.n + j);
  }
}

void write_metrics_csv(std::ostream& out, const std::vector<MetricValue>& metrics) {
  out << "metric,region,value\n";
  for (const MetricValue& m : metrics) out << m.metric << ',' << m.region << ',' << (m.value ? num(*m.value) : "undefined") << '\n';
}

ReconstructionReport run_reconstruct(const ExperimentConfig& config, unsigned threads) {
  ReconstructionReport report = reconstruct(config, threads);
  auto recon = open_output(config.out_dir, "recon.csv");
  write_recon_csv(recon, report.grid, report.exact);
  finish(recon, "recon.csv");
  auto profile = open_output(config.out_dir, "profile.csv");
  write_profile_csv(profile, report);
  finish(profile, "profile.csv");
  auto metrics = open_output(config.out_dir, "metrics.csv");
  write_metrics_csv(metrics, report.metrics);
  finish(metrics, "metrics.csv");
  return report;
}

ExperimentConfig with_parameter(const ExperimentConfig& base, std::string_view param, double value) {
  ExperimentConfig cfg = base;
  if (param == "s") {
    cfg.s = value;
  } else if (param == "c") {
    cfg.sources.at(0).c = cplx(value, 0.0);
  } else if (param == "kappa") {
    if (!(value > 0.0)) throw Error(ErrorKind::InvalidParameter, "kappa must be positive");
    cfg.k = cfg.k * (value / cfg.kappa);
    cfg.kappa = value;
  } else if (param == "x0_2") {
    cfg.sources.at(0).x0[1] = value;
  } else {
    throw Error(ErrorKind::InvalidParameter, "sweep parameter must be s, c, kappa or x0_2");
  }
  cfg.validate();
  return cfg;
}

std::vector<SweepRow> sweep(const ExperimentConfig& config, std::string_view param, const std::vector<double>& values,
                            unsigned threads) {
  std::vector<SweepRow> rows;
  for (double v : values) {
    SweepRow row{std::string(param), v, std::nullopt, {}};
    try {
      const ReconstructionReport report = reconstruct(with_parameter(config, param, v), threads);
      row.error_g = report.metric("E", "G");
      if (!row.error_g) row.error = "E undefined on G";
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "param,value,E_G\n";
  for (const SweepRow& r : rows) out << r.param << ',' << num(r.value) << ',' << (r.error_g ? num(*r.error_g) : "undefined") << '\n';
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& config, std::string_view param,
                                const std::vector<double>& values, unsigned threads) {
  std::vector<SweepRow> rows = sweep(config, param, values, threads);
  auto out = open_output(config.out_dir, "sweep.csv");
  write_sweep_csv(out, rows);
  finish(out, "sweep.csv");
  return rows;
}

std::vector<Vec> rate_probes(const ExperimentConfig& config) {
  const Setup setup = build_setup(config);
  RateProbe probe = config.probe;
  if (probe == RateProbe::Auto)
    probe = config.strategy.kind == StrategyKind::SqrtScaled ? RateProbe::Singular : RateProbe::Annulus;

  std::vector<Vec> probes;
  if (probe == RateProbe::Singular) {
    const PlaneFrame& f = setup.spec.frame;
    const Vec th_par = decompose(setup.params.k, f).par / setup.params.kappa;
    const double par2 = dot(th_par, th_par);
    if (!(par2 < 1.0)) throw Error(ErrorKind::InvalidParameter, "no singular direction inside the half-space");
    probes.push_back(th_par + std::sqrt(1.0 - par2) * f.omega);
    return probes;
  }
  for (const GridNode& node : grid_points(setup.spec)) {
    const double rho = std::hypot(node.u, node.v);
    if (rho >= 0.5 * config.h && rho <= config.h) probes.push_back(node.x / norm(node.x));
  }
  if (probes.empty()) throw Error(ErrorKind::InvalidParameter, "empty probe annulus");
  return probes;
}

std::vector<RateSeries> rates(const ExperimentConfig& config, unsigned threads) {
  const Setup setup = build_setup(config);
  const std::vector<Vec> probes = rate_probes(config);
  const WaveParams& params = setup.params;
  const ZetaStrategy& strategy = config.strategy;
  const bool planar = config.dim == 2;

  const char* base_name = strategy.kind == StrategyKind::SqrtScaled      ? "sqrt"
                          : strategy.kind == StrategyKind::BoundedOffset ? "bounded"
                                                                         : "hybrid";
  RateSeries baseline{base_name, {}, 0.0};
  RateSeries refined{std::string(base_name) + "_refined", {}, 0.0};

  for (double s : config.rate_ladder) {
    const PlaneFrame frame = make_frame(config.omega, s);
    std::vector<double> err_base(probes.size());
    std::vector<double> err_ref(probes.size());
    parallel_for(probes.size(), threads, [&](std::size_t p) {
      const Vec& theta = probes[p];
      const Vec x = point_on_plane(theta, frame);
      const double r = norm(x);
      const bool exceptional = in_exceptional_set(theta, params.k, strategy.eps, frame);
      const bool bounded = strategy.kind == StrategyKind::BoundedOffset ||
                           (strategy.kind == StrategyKind::Hybrid && !exceptional);
      const Vec zeta = bounded ? zeta_bounded(theta, params, frame, strategy.alpha, strategy.eps)
                               : zeta_sqrt(theta, params, frame, strategy.alpha, r, strategy.fallback_axis);
      const Vec y = x + zeta;
      const cplx est = f11(scattered_signal(setup.field, params, x), scattered_signal(setup.field, params, y), x, y,
                           params);
      const cplx exact = far_field(setup.field, params.kappa, theta);
      err_base[p] = std::abs(est - exact);
      if (planar) err_ref[p] = std::abs(f11_refined_2d(est, x, y, params) - exact);
    });
    const auto rms = [](const std::vector<double>& e) {
      long double acc = 0.0L;
      for (double v : e) acc += static_cast<long double>(v) * v;
      return static_cast<double>(std::sqrt(acc / static_cast<long double>(e.size())));
    };
    baseline.samples.emplace_back(s, rms(err_base));
    if (planar) refined.samples.emplace_back(s, rms(err_ref));
  }
  std::vector<RateSeries> out{baseline};
  if (planar) out.push_back(refined);
  for (RateSeries& series : out) series.slope = slope_estimate(series.samples);
  return out;
}

std::vector<RateSeries> run_rates(const ExperimentConfig& config, unsigned threads) {
  std::vector<RateSeries> series = rates(config, threads);
  auto out = open_output(config.out_dir, "rates.csv");
  out << "series,s,error\n";
  for (const RateSeries& r : series)
    for (const auto& [s, e] : r.samples) out << r.name << ',' << num(s) << ',' << num(e) << '\n';
  finish(out, "rates.csv");
  auto slopes = open_output(config.out_dir, "rates_slopes.csv");
  slopes << "series,slope\n";
  for (const RateSeries& r : series) slopes << r.name << ',' << num(r.slope) << '\n';
  finish(slopes, "rates_slopes.csv");
  return series;
}

}  // namespace holo
