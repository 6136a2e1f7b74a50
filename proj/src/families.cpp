#include "xdiscord/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xdiscord/povm.hpp"

namespace xdiscord {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr int kBracketPoints = 64;
// Below this dip the scan minimum is indistinguishable from the fixed-angle
// values and the minimizer location is noise.
constexpr double kDegenerateDip = 1e-13;
constexpr double kPiOver4 = 0.78539816339744831;

void check_x3_range(double m, double eps) {
  if (m < -1e-12 || m > 0.5 + 1e-12) throw DomainError("X3 parameter m outside [0, 1/2]");
  if (eps < -1e-12 || eps > 1.0 + 1e-12) throw DomainError("X3 parameter eps outside [0, 1]");
}

// D_0 - D_{pi/2}; S(rho) and h(x) cancel in the difference, so only the two
// conditional entropies are needed.
double xm_residual(const DiscordEvaluator& ev) {
  return ev.conditional_entropy(1.0) - ev.conditional_entropy(0.0);
}

double xm_residual(double m, double eps) {
  return xm_residual(DiscordEvaluator(x3_state({m, eps})));
}

}  // namespace

CanonicalXState x3_state(const X3Params& p) {
  check_x3_range(p.m, p.eps);
  const double m = std::clamp(p.m, 0.0, 0.5);
  const double eps = std::clamp(p.eps, 0.0, 1.0);
  CanonicalXState st;
  st.rho00 = eps / 2.0;
  st.rho11 = (1.0 - eps) * m;
  st.rho22 = (1.0 - eps) * (1.0 - m);
  st.rho33 = eps / 2.0;
  st.rho03 = eps / 2.0;
  st.rho12 = 0.0;
  return st;
}

double boundary_bx(double m, double eps) {
  check_x3_range(m, eps);
  if (eps >= 1.0) throw DomainError("B_X undefined at eps = 1");
  return std::sqrt(std::max(m * (1.0 - m), 0.0)) - eps / (1.0 - eps);
}

double boundary_bz(double m, double eps) {
  check_x3_range(m, eps);
  if (eps >= 1.0) throw DomainError("B_Z undefined at eps = 1");
  return eps / (1.0 - eps) - 2.0 * m * (1.0 - m);
}

CanonicalXState bell_diagonal(double t, double s, double u) {
  return from_bloch_params(BlochParams{0.0, 0.0, t, s, u});
}

XmPoint solve_xm(double m, const MinimizeOptions& scan_opts, std::optional<double> theta_hint) {
  if (!(m > 0.0) || m > 0.5 + 1e-12)
    throw DomainError("solve_xm requires m in (0, 1/2]");
  m = std::min(m, 0.5);

  // Bracket scan over (0, 1/3]: D_0 - D_{pi/2} is negative for small eps and
  // nonnegative at eps = 1/3 (where sigma_x is provably optimal).
  const double lo0 = 1e-9;
  const double hi0 = 1.0 / 3.0;
  double r_prev = xm_residual(m, lo0);
  double lo = lo0, hi = hi0;
  double r_lo = r_prev, r_hi = 0.0;
  int sign_changes = 0;
  bool have_bracket = false;
  for (int j = 1; j < kBracketPoints; ++j) {
    const double eps = lo0 + (hi0 - lo0) * j / (kBracketPoints - 1);
    const double r = xm_residual(m, eps);
    const bool crossed = (r_prev < 0.0 && r >= 0.0) || (r_prev > 0.0 && r <= 0.0);
    if (crossed) {
      ++sign_changes;
      if (!have_bracket) {
        lo = lo0 + (hi0 - lo0) * (j - 1) / (kBracketPoints - 1);
        hi = eps;
        r_lo = r_prev;
        r_hi = r;
        have_bracket = true;
      }
    }
    r_prev = r;
  }
  if (sign_changes > 1)
    throw NoRoot("D_0 = D_{pi/2} bracket has " + std::to_string(sign_changes) +
                 " sign changes for m = " + std::to_string(m));
  if (!have_bracket) {
    // Residual stays one-signed; accept the right end only if it is a root
    // within tolerance (m = 1/2, where the root sits exactly at eps = 1/3).
    if (std::abs(r_prev) <= kResidualTol) {
      lo = hi = hi0;
    } else {
      throw NoRoot("no sign change of D_0 - D_{pi/2} on (0, 1/3] for m = " +
                   std::to_string(m));
    }
  }

  // Bisection to machine width; the residual guarantee follows a fortiori.
  while (hi - lo > 0.0) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r = xm_residual(m, mid);
    if ((r < 0.0) == (r_lo < 0.0)) {
      lo = mid;
      r_lo = r;
    } else {
      hi = mid;
      r_hi = r;
    }
  }
  const double eps = (std::abs(r_lo) <= std::abs(r_hi)) ? lo : hi;
  const double residual = xm_residual(m, eps);
  if (std::abs(residual) > kResidualTol)
    throw NoRoot("bisection stalled with residual " + std::to_string(residual));

  const DiscordEvaluator ev(x3_state({m, eps}));
  MinimizeOptions forced = scan_opts;
  forced.fast_path = false;
  const DiscordResult scan = ev.minimize(forced);

  const double dz = ev.discord_sigma_z();
  const double dx = ev.discord_sigma_x();
  const double dip = std::min(dz, dx) - scan.discord;

  XmPoint pt;
  pt.m = m;
  pt.eps = eps;
  pt.delta = dz - scan.discord;
  double theta = scan.optimal_theta();
  if (dip <= kDegenerateDip) {
    // Every angle attains the minimum within resolution; pick the
    // continuity-preserving representative.
    theta = theta_hint ? *theta_hint : std::min(theta, kPiOver4);
  }
  pt.theta_opt = theta;

  const Povm povm = three_outcome_povm(pt.theta_opt);
  const double d_upper = detail::h_unit(ev.params().x) - ev.state_entropy() +
                         conditional_entropy_povm(ev.params(), povm);
  pt.delta_tilde = dz - d_upper;
  return pt;
}

}  // namespace xdiscord
