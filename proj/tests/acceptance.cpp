// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "holo/csv.hpp"
#include "holo/error.hpp"
#include "holo/experiment.hpp"
#include "holo/metrics.hpp"
#include "holo/parallel.hpp"

using namespace holo;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  [%2d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool near(double value, double target, double tol) { return std::abs(value - target) <= tol; }

std::string pct(double v) { return num(100.0 * v) + "%"; }

double metric(const ReconstructionReport& r, const char* name, const char* region) {
  const auto v = r.metric(name, region);
  return v ? *v : std::nan("");
}

double sweep_error(const ExperimentConfig& base, const char* param, double value) {
  return metric(reconstruct(with_parameter(base, param, value), default_threads()), "E", "G");
}

template <class Fn>
std::optional<ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

Vec random_direction(std::mt19937_64& gen, std::size_t dim, const Vec& omega, double min_dot) {
  std::normal_distribution<double> g;
  while (true) {
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = g(gen);
    const double len = norm(v);
    if (len < 1e-6) continue;
    v = v / len;
    if (dot(v, omega) > min_dot) return v;
  }
}

}  // namespace

int main() {
  const ExperimentConfig preset;
  const unsigned threads = default_threads();
  const ReconstructionReport base = reconstruct(preset, threads);

  {
    const double g = metric(base, "E", "G");
    const double d = metric(base, "E", "D");
    const double o = metric(base, "E", "G_minus_D");
    const bool ok = near(g, 0.117, 0.015) && near(d, 0.297, 0.04) && near(o, 0.102, 0.015);
    report(1, ok, "headline errors on G, D, G\\D",
           pct(g) + " / " + pct(d) + " / " + pct(o) + " (want 11.7+-1.5 / 29.7+-4 / 10.2+-1.5)");
  }

  {
    std::string detail;
    bool ok = true;
    const double s_vals[] = {5, 10, 100, 200};
    const double s_want[] = {0.25, 0.16, 0.117, 0.108};
    double prev = INFINITY;
    detail += "s:";
    for (int q = 0; q < 4; ++q) {
      const double e = sweep_error(preset, "s", s_vals[q]);
      ok = ok && near(e, s_want[q], 0.025) && e < prev;
      prev = e;
      detail += " " + pct(e);
    }
    const double k_vals[] = {1, 4, 16};
    const double k_want[] = {0.098, 0.117, 0.13};
    detail += "; kappa:";
    for (int q = 0; q < 3; ++q) {
      const double e = sweep_error(preset, "kappa", k_vals[q]);
      ok = ok && near(e, k_want[q], 0.02);
      detail += " " + pct(e);
    }
    detail += "; c:";
    double lo = INFINITY;
    double hi = -INFINITY;
    for (double c : {0.1, 1.0, 10.0, 20.0}) {
      const double e = sweep_error(preset, "c", c);
      ok = ok && e >= 0.097 && e <= 0.138;
      lo = std::min(lo, e);
      hi = std::max(hi, e);
      detail += " " + pct(e);
    }
    ok = ok && hi - lo <= 0.01;
    const double x0[] = {sweep_error(preset, "x0_2", 0), sweep_error(preset, "x0_2", 2.5),
                         sweep_error(preset, "x0_2", 5)};
    ok = ok && x0[0] <= 0.005 && near(x0[1], 0.117, 0.015) && near(x0[2], 0.222, 0.03);
    detail += "; x0_2: " + pct(x0[0]) + " " + pct(x0[1]) + " " + pct(x0[2]);
    report(2, ok, "parameter sweeps", detail);
  }

  {
    const double g = metric(base, "E_dis", "G");
    const double d = metric(base, "E_dis", "D");
    const double o = metric(base, "E_dis", "G_minus_D");
    const auto within2 = [](double v, double t) { return v >= t / 2.0 && v <= 2.0 * t; };
    const bool ok = within2(g, 7.2e-3) && within2(d, 6.7e-3) && within2(o, 7.2e-3) && g < 0.02 &&
                    metric(base, "E", "G") > 0.09;
    report(3, ok, "intensity discrepancy", num(g) + " / " + num(d) + " / " + num(o) + " with E(G) " +
                                               pct(metric(base, "E", "G")));
  }

  {
    const double m = metric(base, "max_zeta", "G");
    report(4, m < 15.0, "largest offset", "max|zeta| = " + num(m) + " (< 15)");
  }

  {
    std::mt19937_64 gen(20240501);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const WaveParams params = WaveParams::make(4, {4, 0, 0});
    const PlaneFrame frame = make_frame({1, 0, 0}, 100);
    double worst_bounded = 0.0;
    double worst_quad = 0.0;
    bool bound_ok = true;
    int bounded_samples = 0;
    while (bounded_samples < 1000) {
      const Vec theta = random_direction(gen, 3, frame.omega, 0.05);
      if (in_exceptional_set(theta, params.k, 0.25, frame)) continue;
      const double alpha = (uni(gen) < 0.5 ? -1.0 : 1.0) * (0.1 + 1.4 * uni(gen));
      const Vec z = zeta_bounded(theta, params, frame, alpha, 0.25);
      worst_bounded = std::max(worst_bounded, std::abs(dot(params.k - params.kappa * theta, z) - alpha));
      ++bounded_samples;
    }
    for (int t = 0; t < 1000; ++t) {
      const Vec theta = random_direction(gen, 3, frame.omega, 0.05);
      const double r = std::pow(10.0, 1.0 + 4.0 * uni(gen));
      const double alpha = -(0.05 + 1.5 * uni(gen));
      const Vec th_par = decompose(theta, frame).par;
      const Vec k_par = decompose(params.k, frame).par;
      const Vec z = zeta_sqrt(theta, params, frame, alpha, r, 0);
      const double beta_abs = norm(z);
      const Vec zhat = z / beta_abs;
      const double beta = -beta_abs;
      const double tz = dot(th_par, zhat);
      const double gap = norm(k_par - params.kappa * th_par);
      const double residual = beta * gap + params.kappa / (2.0 * r) * beta * beta * (tz * tz - 1.0) - alpha;
      worst_quad = std::max(worst_quad, std::abs(residual));
      if (tz * tz < 1.0) {
        const double bound = std::sqrt(2.0 * alpha * r / (params.kappa * (tz * tz - 1.0)));
        bound_ok = bound_ok && beta_abs <= bound * (1.0 + 1e-12);
      }
    }
    const bool ok = worst_bounded <= 1e-10 && worst_quad <= 1e-10 && bound_ok;
    report(5, ok, "offset strategies hit their phase",
           "bounded max residual " + num(worst_bounded) + ", quadratic max residual " + num(worst_quad) +
               (bound_ok ? ", |beta| bound holds" : ", |beta| bound violated"));
  }

  {
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const WaveParams params = WaveParams::make(4, {4, 0, 0});
    double max_abs = 0.0;
    double max_re = 0.0;
    for (int t = 0; t < 100000; ++t) {
      const Vec x{1.0 + 1e3 * std::abs(uni(gen)), 50 * uni(gen), 50 * uni(gen)};
      const Vec z{0.0, 10 * uni(gen), 10 * uni(gen)};
      const cplx D = determinant(x, z, params);
      max_abs = std::max(max_abs, std::abs(D));
      max_re = std::max(max_re, std::abs(D.real()));
    }
    const PlaneFrame frame = make_frame({1, 0, 0}, 100);
    const Vec x = point_on_plane({1, 0, 0}, frame);
    const Vec z = zeta_sqrt({1, 0, 0}, params, frame, -0.5, norm(x), 0);
    const double phase = determinant_phase(x, z, params);
    const double tol = 3.0 / std::sqrt(norm(x));
    const bool ok = max_abs <= 2.0 && max_re <= 1e-12 && std::abs(phase - -0.5) <= tol;
    report(6, ok, "determinant properties",
           "max|D| " + num(max_abs) + ", max|Re D| " + num(max_re) + ", singular phase " + num(phase) +
               " vs -0.5 (tol " + num(tol) + ")");
  }

  {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::normal_distribution<double> g;
    const WaveParams params = WaveParams::make(4, {0, 4, 0});
    double worst_ratio = 0.0;
    for (int t = 0; t < 10000; ++t) {
      const double r = std::pow(10.0, 1.0 + 3.0 * uni(gen));
      Vec x{g(gen), g(gen), g(gen)};
      x = x * (r / norm(x));
      Vec z{g(gen), g(gen), g(gen)};
      z = z * (0.1 * r * uni(gen) / norm(z));
      const double diff = std::abs(determinant_phase(x, z, params) - determinant_phase_expansion(x, z, params));
      const double bound = 2.0 * params.kappa * std::pow(norm(z), 3) / (r * r);
      worst_ratio = std::max(worst_ratio, diff / bound);
    }
    report(7, worst_ratio <= 1.0, "phase expansion remainder", "max remainder / bound = " + num(worst_ratio));
  }

  {
    std::string detail;
    bool ok = true;
    for (std::size_t dim : {2u, 3u}) {
      const RadiationField field = dim == 3 ? RadiationField::make(3, {{1.0, {0.5, 2.5, -1.0}}})
                                            : RadiationField::make(2, {{1.0, {0.5, 2.5}}});
      const Vec theta = dim == 3 ? Vec{0.8, 0.36, 0.48} : Vec{0.8, 0.6};
      const cplx f = far_field(field, 4.0, theta);
      std::vector<std::pair<double, double>> samples;
      for (double r : {1e3, 1e4, 1e5}) samples.emplace_back(r, std::abs(far_field_numeric_oracle(field, 4.0, theta, r) - f));
      const double slope = slope_estimate(samples);
      ok = ok && slope <= -0.9;
      detail += (dim == 3 ? ", d=3 slope " : "d=2 slope ") + num(slope);
    }
    report(8, ok, "far-field remainder order", detail);
  }

  {
    ExperimentConfig sq = preset;
    ExperimentConfig bd = preset;
    bd.strategy.kind = StrategyKind::BoundedOffset;
    ExperimentConfig pl = parse_config(
        "dim = 2\n"
        "kappa = 4\n"
        "source = 4, 0, 0, 1\n"
        "strategy = bounded\n"
        "alpha = -0.5\n");
    const RateSeries s_sq = rates(sq, threads).at(0);
    const RateSeries s_bd = rates(bd, threads).at(0);
    const std::vector<RateSeries> s_pl = rates(pl, threads);
    const double last_base = s_pl.at(0).samples.back().second;
    const double last_ref = s_pl.at(1).samples.back().second;
    const bool ok = near(s_sq.slope, -0.5, 0.3) && near(s_bd.slope, -1.0, 0.3) && near(s_pl[0].slope, -0.5, 0.3) &&
                    near(s_pl[1].slope, -1.0, 0.3) && last_ref < last_base;
    report(9, ok, "convergence rates",
           "sqrt " + num(s_sq.slope) + ", bounded " + num(s_bd.slope) + ", d=2 baseline " + num(s_pl[0].slope) +
               ", d=2 refined " + num(s_pl[1].slope) + ", largest-s errors " + num(last_ref) + " < " +
               num(last_base));
  }

  {
    ExperimentConfig zero = preset;
    zero.sources[0].c = 0.0;
    const ReconstructionReport r = reconstruct(zero, threads);
    bool all_zero = r.grid.failures == 0;
    for (const ReconPointResult& pt : r.grid.points) all_zero = all_zero && pt.psi1_rec == cplx(0, 0);
    bool undefined = true;
    for (const MetricValue& m : r.metrics)
      if (m.metric != "max_zeta") undefined = undefined && !m.value && !m.error.empty();

    const PlaneFrame frame = make_frame({1, 0, 0}, 100);
    const auto back = error_kind([&] { point_on_plane({-1, 0, 0}, frame); });
    const auto grazing = error_kind([&] { point_on_plane({0, 1, 0}, frame); });
    const auto exceptional =
        error_kind([&] { zeta_bounded({1, 0, 0}, WaveParams::make(4, {4, 0, 0}), frame, -0.5, 0.25); });
    const bool ok = all_zero && undefined && back == ErrorKind::OutOfHalfspace &&
                    grazing == ErrorKind::OutOfHalfspace && exceptional == ErrorKind::ExceptionalDirection;
    report(10, ok, "degenerate inputs",
           std::string(all_zero ? "zero field reconstructs to zero" : "nonzero reconstruction of zero field") +
               (undefined ? ", metrics undefined" : ", metrics unexpectedly defined") +
               (back && grazing ? ", back half-space rejected" : ", back half-space accepted") +
               (exceptional ? ", exceptional direction rejected" : ", exceptional direction accepted"));
  }

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
