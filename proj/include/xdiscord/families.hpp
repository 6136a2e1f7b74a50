#pragma once

#include <optional>

#include "xdiscord/discord.hpp"
#include "xdiscord/xstate.hpp"

// Named state families: the two-parameter X3(m, eps) family, Bell-diagonal
// states, and the maximally discordant curve X_m defined by D_0 = D_{pi/2}.

namespace xdiscord {

class NoRoot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct X3Params {
  double m = 0.0;    // in [0, 1/2]
  double eps = 0.0;  // in [0, 1]
};

// diag(eps/2, (1-eps)m, (1-eps)(1-m), eps/2) with rho03 = eps/2, rho12 = 0.
// Correlations: x = -y = (1-eps)(2m-1), t = 2 eps - 1, s = -u = eps.
// Spectrum: {eps, (1-eps)m, (1-eps)(1-m), 0}.
CanonicalXState x3_state(const X3Params& p);

// Classifier boundaries for X3:
//   B_X(m, eps) = sqrt(m(1-m)) - eps/(1-eps)   (<= 0 implies sigma_x optimal)
//   B_Z(m, eps) = eps/(1-eps) - 2m(1-m)        (<= 0 implies sigma_z optimal)
double boundary_bx(double m, double eps);
double boundary_bz(double m, double eps);

// X-state with x = y = 0 and the given correlations, canonicalized to s >= |u|.
CanonicalXState bell_diagonal(double t, double s, double u);

// A point on the X_m curve: eps solves D_0 = D_{pi/2} for the given m;
// delta = D_0 - min_theta D_theta and delta_tilde = D_0 - D_upper(POVM).
struct XmPoint {
  double m = 0.0;
  double eps = 0.0;
  double theta_opt = 0.0;  // in [0, pi/4] up to scan jitter
  double delta = 0.0;
  double delta_tilde = 0.0;
};

// Find eps in (0, 1/3] with D_0(m, eps) = D_{pi/2}(m, eps) by bisection on a
// sign-changing bracket (a 64-point pre-scan asserts the bracket has exactly
// one sign change; NoRoot otherwise). The residual at the returned eps is
// below 1e-10. delta and delta_tilde come from a forced numeric scan.
//
// At the curve endpoints the objective is flat and every angle is optimal;
// when the scan cannot resolve the minimum above numerical noise, theta_opt
// is taken from `theta_hint` if given (scan_xm_curve passes the neighboring
// sample to keep the reported curve continuous), else clamped into [0, pi/4].
XmPoint solve_xm(double m, const MinimizeOptions& scan_opts = {},
                 std::optional<double> theta_hint = std::nullopt);

}  // namespace xdiscord
