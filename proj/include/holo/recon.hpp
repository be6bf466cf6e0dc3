#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "holo/error.hpp"
#include "holo/fields.hpp"
#include "holo/geometry.hpp"
#include "holo/hologram.hpp"

namespace holo {

/// |D| at or below this marks a point `small_determinant`; the estimator value
/// is still recorded.
inline constexpr double kDetFloor = 1e-6;

enum class StrategyKind {
  BoundedOffset,  // zeta = -alpha (kappa th_par - k_par) / |.|^2, fails inside the exceptional set
  SqrtScaled,     // |zeta| = O(sqrt r) from the quadratic phase equation, total on the half-sphere
  Hybrid,         // BoundedOffset outside the exceptional set, SqrtScaled inside
};

/// Rule for choosing the second measurement point y = x + zeta.
struct ZetaStrategy {
  StrategyKind kind = StrategyKind::SqrtScaled;
  double alpha = -0.5;
  double eps = 0.25;  // exceptional-set radius; also used for flagging
  std::size_t fallback_axis = 0;

  /// Checks the alpha/eps constraints of `kind` for wavenumber kappa.
  void validate(double kappa, std::size_t dim) const;
};

Vec zeta_bounded(const Vec& theta, const WaveParams& params, const PlaneFrame& frame, double alpha, double eps);

/// Root of beta |k_par - kappa th_par| + (kappa / 2r) beta^2 ((th_par, zhat)^2 - 1) = alpha
/// in the cancellation-free form.
double beta_solve(double alpha, double kappa, double r, const Vec& theta_par, const Vec& k_par, const Vec& zeta_hat);

Vec zeta_sqrt(const Vec& theta, const WaveParams& params, const PlaneFrame& frame, double alpha, double r,
              std::size_t fallback_axis);

/// Exact phase (k, zeta) + kappa |x| - kappa |x + zeta|, evaluated without
/// cancellation in |x| - |y|.
double determinant_phase(const Vec& x, const Vec& zeta, const WaveParams& params);

/// D = 2i sin(determinant_phase); purely imaginary.
cplx determinant(const Vec& x, const Vec& zeta, const WaveParams& params);

/// Second-order model (k - kappa th, zeta) + kappa/(2|x|) ((th, zeta)^2 - |zeta|^2).
double determinant_phase_expansion(const Vec& x, const Vec& zeta, const WaveParams& params);

struct TwoPointEstimate {
  cplx D;
  cplx value;
};

/// Solves the 2x2 system for f_1 and its conjugate from a(x), a(y) without
/// checking D. Returns value 0 when D is exactly 0.
TwoPointEstimate two_point_estimate(double a_x, double a_y, const Vec& x, const Vec& y, const WaveParams& params);

/// Throws DegenerateDeterminant when |D| <= det_floor.
cplx f11(double a_x, double a_y, const Vec& x, const Vec& y, const WaveParams& params, double det_floor = kDetFloor);

/// Removes the leading |f_1|^2 |x|^{-1/2} self-interference term (d = 2).
cplx f11_refined_2d(cplx f11_value, const Vec& x, const Vec& y, const WaveParams& params,
                    double det_floor = kDetFloor);

struct ReconFlags {
  bool in_exceptional_set = false;
  bool small_determinant = false;
};

struct ReconPointResult {
  GridNode node;
  Vec theta;
  Vec zeta;
  cplx D;
  cplx f11;
  cplx psi1_rec;
  ReconFlags flags;
  std::optional<ErrorKind> failure;  // set when no estimate could be formed
};

struct ReconGrid {
  GridSpec spec;
  std::vector<ReconPointResult> points;
  double max_zeta = 0.0;
  std::size_t failures = 0;
};

/// Two-point reconstruction at every grid node; per-point failures are
/// recorded, never thrown. Output order is grid order for any thread count.
ReconGrid reconstruct_grid(const GridSpec& spec, const IntensityLookup& data, const ZetaStrategy& strategy,
                           bool refine2d, unsigned threads = 1);

/// CSV `i,j,x2,x3,re_psi1,im_psi1,re_psi1rec,im_psi1rec,re_f11,im_f11,abs_D,zeta_norm,flag_exceptional,flag_smallD`
/// (d=2 drops j and x3). `exact` holds psi_1 at the nodes in grid order.
void write_recon_csv(std::ostream& out, const ReconGrid& grid, const std::vector<cplx>& exact);

}  // namespace holo
