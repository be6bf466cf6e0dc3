#include "holo/recon.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "holo/csv.hpp"
#include "holo/parallel.hpp"

namespace holo {

namespace {

constexpr double kSingularRelTol = 1e-12;

cplx unit_phase(double phase) { return {std::cos(phase), std::sin(phase)}; }

// kappa th_par - k_par
Vec phase_gradient(const Vec& theta, const WaveParams& params, const PlaneFrame& frame) {
  return params.kappa * decompose(theta, frame).par - decompose(params.k, frame).par;
}

double radial_power(double r, std::size_t dim) { return std::pow(r, 0.5 * static_cast<double>(dim - 1)); }

}  // namespace

void ZetaStrategy::validate(double kappa, std::size_t dim) const {
  if (!std::isfinite(alpha) || alpha == 0.0 || std::sin(alpha) == 0.0)
    throw Error(ErrorKind::InvalidParameter, "alpha must be nonzero with sin(alpha) != 0");
  if (kind != StrategyKind::BoundedOffset && !(alpha < 0.0))
    throw Error(ErrorKind::InvalidParameter, "the sqrt-scaled offset requires alpha < 0");
  if (!(eps > 0.0) || !(eps < 2.0 * kappa)) throw Error(ErrorKind::InvalidParameter, "eps must lie in (0, 2 kappa)");
  if (fallback_axis + 1 >= dim) throw Error(ErrorKind::InvalidParameter, "fallback axis must index a plane basis vector");
}

Vec zeta_bounded(const Vec& theta, const WaveParams& params, const PlaneFrame& frame, double alpha, double eps) {
  if (alpha == 0.0) throw Error(ErrorKind::InvalidParameter, "alpha must be nonzero");
  if (in_exceptional_set(theta, params.k, eps, frame))
    throw Error(ErrorKind::ExceptionalDirection, "|kappa th_par - k_par| < eps; use the sqrt-scaled offset");
  const Vec g = phase_gradient(theta, params, frame);
  return g * (-alpha / dot(g, g));
}

double beta_solve(double alpha, double kappa, double r, const Vec& theta_par, const Vec& k_par, const Vec& zeta_hat) {
  if (!(alpha < 0.0)) throw Error(ErrorKind::InvalidParameter, "beta_solve requires alpha < 0");
  if (!(r > 0.0) || !(kappa > 0.0)) throw Error(ErrorKind::InvalidParameter, "kappa and r must be positive");
  const double gap = norm(k_par - kappa * theta_par);
  const double tz = dot(theta_par, zeta_hat);
  const double radicand = gap * gap + (2.0 * kappa / r) * (tz * tz - 1.0) * alpha;
  if (radicand < 0.0) throw Error(ErrorKind::InfeasibleParameters, "negative discriminant in beta");
  const double denom = gap + std::sqrt(radicand);
  if (!(denom > 0.0)) throw Error(ErrorKind::InfeasibleParameters, "vanishing beta denominator");
  return 2.0 * alpha / denom;
}

Vec zeta_sqrt(const Vec& theta, const WaveParams& params, const PlaneFrame& frame, double alpha, double r,
              std::size_t fallback_axis) {
  const Vec th_par = decompose(theta, frame).par;
  const Vec k_par = decompose(params.k, frame).par;
  const Vec g = params.kappa * th_par - k_par;
  const double gap = norm(g);
  if (gap < kSingularRelTol * params.kappa) {
    const Vec& zhat = frame.basis.at(fallback_axis);
    return beta_solve(alpha, params.kappa, r, th_par, k_par, zhat) * zhat;
  }
  // beta < 0, so zhat = -sgn(beta) g/|g| = g/|g|; only (th_par, zhat)^2 enters beta.
  const Vec zhat = g / gap;
  const double beta = beta_solve(alpha, params.kappa, r, th_par, k_par, zhat);
  return zhat * (-beta);
}

double determinant_phase(const Vec& x, const Vec& zeta, const WaveParams& params) {
  const Vec y = x + zeta;
  const double rx = norm(x);
  const double ry = norm(y);
  const double dr = -(2.0 * dot(x, zeta) + dot(zeta, zeta)) / (rx + ry);  // |x| - |y|
  return dot(params.k, zeta) + params.kappa * dr;
}

cplx determinant(const Vec& x, const Vec& zeta, const WaveParams& params) {
  return {0.0, 2.0 * std::sin(determinant_phase(x, zeta, params))};
}

double determinant_phase_expansion(const Vec& x, const Vec& zeta, const WaveParams& params) {
  const double r = norm(x);
  const Vec theta = x / r;
  const double tz = dot(theta, zeta);
  return dot(params.k - params.kappa * theta, zeta) + params.kappa / (2.0 * r) * (tz * tz - dot(zeta, zeta));
}

TwoPointEstimate two_point_estimate(double a_x, double a_y, const Vec& x, const Vec& y, const WaveParams& params) {
  const cplx D = determinant(x, y - x, params);
  if (D == 0.0) return {D, 0.0};
  const cplx ex = unit_phase(dot(params.k, x) - params.kappa * norm(x));
  const cplx ey = unit_phase(dot(params.k, y) - params.kappa * norm(y));
  return {D, (ey * a_x - ex * a_y) / D};
}

cplx f11(double a_x, double a_y, const Vec& x, const Vec& y, const WaveParams& params, double det_floor) {
  const TwoPointEstimate est = two_point_estimate(a_x, a_y, x, y, params);
  if (std::abs(est.D) <= det_floor) throw Error(ErrorKind::DegenerateDeterminant, "|D| = " + num(std::abs(est.D)));
  return est.value;
}

cplx f11_refined_2d(cplx f11_value, const Vec& x, const Vec& y, const WaveParams& params, double det_floor) {
  if (x.dim() != 2) throw Error(ErrorKind::InvalidInput, "the refined estimator is defined for d = 2");
  const cplx D = determinant(x, y - x, params);
  if (std::abs(D) <= det_floor) throw Error(ErrorKind::DegenerateDeterminant, "|D| = " + num(std::abs(D)));
  const cplx ex = unit_phase(dot(params.k, x) - params.kappa * norm(x));
  const cplx ey = unit_phase(dot(params.k, y) - params.kappa * norm(y));
  return f11_value - (ey - ex) / D * (std::norm(f11_value) / std::sqrt(norm(x)));
}

ReconGrid reconstruct_grid(const GridSpec& spec, const IntensityLookup& data, const ZetaStrategy& strategy,
                           bool refine2d, unsigned threads) {
  const WaveParams& params = data.params();
  const PlaneFrame& frame = spec.frame;
  strategy.validate(params.kappa, frame.dim);
  const std::vector<GridNode> nodes = grid_points(spec);

  ReconGrid grid{spec, std::vector<ReconPointResult>(nodes.size()), 0.0, 0};
  parallel_for(nodes.size(), threads, [&](std::size_t p) {
    ReconPointResult& out = grid.points[p];
    out.node = nodes[p];
    const Vec& x = nodes[p].x;
    const double r = norm(x);
    out.theta = x / r;
    out.zeta = Vec(frame.dim);
    out.flags.in_exceptional_set = in_exceptional_set(out.theta, params.k, strategy.eps, frame);
    try {
      const bool bounded = strategy.kind == StrategyKind::BoundedOffset ||
                           (strategy.kind == StrategyKind::Hybrid && !out.flags.in_exceptional_set);
      out.zeta = bounded ? zeta_bounded(out.theta, params, frame, strategy.alpha, strategy.eps)
                         : zeta_sqrt(out.theta, params, frame, strategy.alpha, r, strategy.fallback_axis);
      const Vec y = x + out.zeta;
      const TwoPointEstimate est = two_point_estimate(data.signal(x), data.signal(y), x, y, params);
      out.D = est.D;
      out.f11 = est.value;
      out.flags.small_determinant = std::abs(est.D) <= kDetFloor;
      if (est.D == 0.0) {
        out.failure = ErrorKind::DegenerateDeterminant;
      } else if (refine2d && frame.dim == 2) {
        out.f11 = out.f11 - (unit_phase(dot(params.k, y) - params.kappa * norm(y)) -
                             unit_phase(dot(params.k, x) - params.kappa * r)) /
                                est.D * (std::norm(out.f11) / std::sqrt(r));
      }
    } catch (const Error& e) {
      out.failure = e.kind();
      out.f11 = 0.0;
    }
    out.psi1_rec = unit_phase(params.kappa * r) / radial_power(r, frame.dim) * out.f11;
  });
  for (const ReconPointResult& pt : grid.points) {
    grid.max_zeta = std::max(grid.max_zeta, norm(pt.zeta));
    if (pt.failure) ++grid.failures;
  }
  return grid;
}

void write_recon_csv(std::ostream& out, const ReconGrid& grid, const std::vector<cplx>& exact) {
  const bool plane = grid.spec.axes() == 2;
  out << (plane ? "i,j,x2,x3," : "i,x2,")
      << "re_psi1,im_psi1,re_psi1rec,im_psi1rec,re_f11,im_f11,abs_D,zeta_norm,flag_exceptional,flag_smallD\n";
  for (std::size_t p = 0; p < grid.points.size(); ++p) {
    const ReconPointResult& pt = grid.points[p];
    out << pt.node.i << ',';
    if (plane) out << pt.node.j << ',';
    out << num(pt.node.u) << ',';
    if (plane) out << num(pt.node.v) << ',';
    out << num(exact[p].real()) << ',' << num(exact[p].imag()) << ',' << num(pt.psi1_rec.real()) << ','
        << num(pt.psi1_rec.imag()) << ',' << num(pt.f11.real()) << ',' << num(pt.f11.imag()) << ','
        << num(std::abs(pt.D)) << ',' << num(norm(pt.zeta)) << ',' << (pt.flags.in_exceptional_set ? 1 : 0) << ','
        << (pt.flags.small_determinant ? 1 : 0) << '\n';
  }
}

}  // namespace holo
