#include "xdiscord/discord.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xdiscord {

namespace {

// Outcome probabilities below this floor contribute no entropy:
// lim_{p->0} p h(c/p) = 0 for the arguments that arise here.
constexpr double kProbFloor = 1e-14;

double cond_entropy(double x, double y, double t, double s2, double nz) noexcept {
  const double xnz = x * nz;
  const double pp = 0.5 * (1.0 + xnz);
  const double pm = 0.5 * (1.0 - xnz);
  const double planar = (1.0 - nz * nz) * s2;
  const double ap = y + nz * t;
  const double am = y - nz * t;
  double r = 0.0;
  if (pp > kProbFloor) r += pp * detail::h_unit(std::sqrt(planar + ap * ap) / (2.0 * pp));
  if (pm > kProbFloor) r += pm * detail::h_unit(std::sqrt(planar + am * am) / (2.0 * pm));
  return r;
}

struct ScanMin {
  double value;
  double nz;
};

// Coarse grid over nz in [0,1] followed by golden-section refinement around
// the best cell. Ties on the grid resolve toward larger nz. The grid contains
// both endpoints, so the result never exceeds min(S(0), S(1)).
template <typename F>
ScanMin scan_minimum(const F& f, int grid_points, double tol) {
  if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
  const int n = grid_points;
  double best = f(0.0);
  int bi = 0;
  for (int i = 1; i < n; ++i) {
    const double v = f(static_cast<double>(i) / (n - 1));
    if (v <= best) {
      best = v;
      bi = i;
    }
  }
  double a = std::max(0.0, static_cast<double>(bi - 1) / (n - 1));
  double b = std::min(1.0, static_cast<double>(bi + 1) / (n - 1));

  constexpr double invphi = 0.61803398874989484820;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  ScanMin res{best, static_cast<double>(bi) / (n - 1)};
  if (f1 < res.value) res = {f1, x1};
  if (f2 < res.value) res = {f2, x2};
  return res;
}

}  // namespace

double conditional_entropy_vn(const BlochParams& p, VnMeasurement m) {
  validate(p);
  return cond_entropy(p.x, p.y, p.t, p.s * p.s, m.nz);
}

double discord_given_measurement(const BlochParams& p, VnMeasurement m) {
  const CanonicalXState st = from_bloch_params(p);
  return detail::h_unit(p.x) - entropy(st) + cond_entropy(p.x, p.y, p.t, p.s * p.s, m.nz);
}

AnalyticClass classify_analytic(const CanonicalXState& st) {
  const double off = st.rho12 + st.rho03;  // = s/2 in canonical form

  // Case i in matrix-element form and in correlation-coefficient form;
  // algebraically identical, so a sign disagreement away from the boundary
  // indicates a canonicalization bug.
  const double margin_block = (st.rho00 - st.rho11) * (st.rho33 - st.rho22) - off * off;
  const BlochParams p = bloch_params(st);
  const double margin_bloch = 0.25 * (p.t * p.t - p.y * p.y - p.s * p.s);
  if ((margin_block >= 0.0) != (margin_bloch >= 0.0) &&
      std::abs(margin_block) > 1e-12 && std::abs(margin_bloch) > 1e-12)
    throw std::logic_error("sigma_z condition forms disagree");

  const bool z_opt = margin_block >= 0.0;
  const double gm = std::sqrt(st.rho00 * st.rho33) - std::sqrt(st.rho11 * st.rho22);
  const bool x_opt = std::abs(gm) <= off;

  if (z_opt && x_opt) return AnalyticClass::Both;
  if (z_opt) return AnalyticClass::SigmaZ;
  if (x_opt) return AnalyticClass::SigmaX;
  return AnalyticClass::Unknown;
}

DiscordEvaluator::DiscordEvaluator(const BlochParams& p) : state_(from_bloch_params(p)) {
  init();
}

DiscordEvaluator::DiscordEvaluator(const CanonicalXState& st) : state_(st) {
  validate(state_);
  init();
}

void DiscordEvaluator::init() {
  p_ = bloch_params(state_);
  s2_ = p_.s * p_.s;
  state_entropy_ = entropy(state_);
  base_ = detail::h_unit(p_.x) - state_entropy_;
  mutual_ = base_ + detail::h_unit(p_.y);
}

double DiscordEvaluator::conditional_entropy(double nz) const noexcept {
  return cond_entropy(p_.x, p_.y, p_.t, s2_, nz);
}

DiscordResult DiscordEvaluator::minimize(const MinimizeOptions& opts) const {
  DiscordResult res;
  res.mutual_information = mutual_;

  if (opts.fast_path) {
    switch (classify_analytic(state_)) {
      case AnalyticClass::SigmaZ:
        res.discord = discord_sigma_z();
        res.optimal_nz = 1.0;
        res.method = DiscordMethod::AnalyticZ;
        res.classical_correlation = mutual_ - res.discord;
        return res;
      case AnalyticClass::SigmaX:
        res.discord = discord_sigma_x();
        res.optimal_nz = 0.0;
        res.method = DiscordMethod::AnalyticX;
        res.classical_correlation = mutual_ - res.discord;
        return res;
      case AnalyticClass::Both: {
        const double dz = discord_sigma_z();
        const double dx = discord_sigma_x();
        if (dz <= dx) {
          res.discord = dz;
          res.optimal_nz = 1.0;
          res.method = DiscordMethod::AnalyticZ;
        } else {
          res.discord = dx;
          res.optimal_nz = 0.0;
          res.method = DiscordMethod::AnalyticX;
        }
        res.classical_correlation = mutual_ - res.discord;
        return res;
      }
      case AnalyticClass::Unknown:
        break;
    }
  }

  const ScanMin m = scan_minimum([this](double nz) { return conditional_entropy(nz); },
                                 opts.grid_points, opts.refine_tol);
  res.discord = base_ + m.value;
  res.optimal_nz = m.nz;
  res.method = DiscordMethod::NumericScan;
  res.classical_correlation = mutual_ - res.discord;
  return res;
}

double discord_sigma_z(const BlochParams& p) { return DiscordEvaluator(p).discord_sigma_z(); }

double discord_sigma_x(const BlochParams& p) { return DiscordEvaluator(p).discord_sigma_x(); }

DiscordResult minimize_discord_vn(const BlochParams& p, const MinimizeOptions& opts) {
  return DiscordEvaluator(p).minimize(opts);
}

double classical_correlation(const BlochParams& p, const MinimizeOptions& opts) {
  return minimize_discord_vn(p, opts).classical_correlation;
}

const char* to_string(AnalyticClass c) {
  switch (c) {
    case AnalyticClass::SigmaZ: return "sigma_z";
    case AnalyticClass::SigmaX: return "sigma_x";
    case AnalyticClass::Both: return "both";
    case AnalyticClass::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(DiscordMethod m) {
  switch (m) {
    case DiscordMethod::AnalyticZ: return "analytic_z";
    case DiscordMethod::AnalyticX: return "analytic_x";
    case DiscordMethod::NumericScan: return "numeric_scan";
    case DiscordMethod::PovmUpper: return "povm_upper";
  }
  return "numeric_scan";
}

}  // namespace xdiscord
