#pragma once

#include <cmath>

#include "xdiscord/xstate.hpp"

// Quantum discord under von Neumann measurements on qubit A. For a real
// X-state with s >= |u| the optimal projective measurement lies in the x-z
// plane, so the minimization is one-dimensional in n_z = cos(theta).

namespace xdiscord {

// Measurement axis n = (sqrt(1-nz^2), 0, nz). Outcome relabeling gives
// S(nz) = S(-nz), so nz in [0,1] covers every axis in the plane.
struct VnMeasurement {
  double nz = 1.0;

  explicit VnMeasurement(double nz_) : nz(nz_) {
    if (nz < -1e-12 || nz > 1.0 + 1e-12)
      throw DomainError("measurement nz outside [0,1]");
    nz = std::min(std::max(nz, 0.0), 1.0);
  }

  static VnMeasurement from_theta(double theta) { return VnMeasurement(std::cos(theta)); }
  double theta() const { return std::acos(nz); }
};

// Result of the analytic classifier: which of the two closed-form
// measurements (if any) is provably optimal for this state.
enum class AnalyticClass { SigmaZ, SigmaX, Both, Unknown };

enum class DiscordMethod { AnalyticZ, AnalyticX, NumericScan, PovmUpper };

struct MinimizeOptions {
  int grid_points = 201;      // coarse global grid over nz in [0,1]
  double refine_tol = 1e-12;  // golden-section width in nz
  bool fast_path = true;      // use the analytic classifier when it applies
};

struct DiscordResult {
  double discord = 0.0;
  double classical_correlation = 0.0;
  double mutual_information = 0.0;
  double optimal_nz = 1.0;
  DiscordMethod method = DiscordMethod::NumericScan;

  double optimal_theta() const { return std::acos(std::min(std::max(optimal_nz, 0.0), 1.0)); }
};

// S(nz) = sum_{+-} p_± h(sqrt(Delta_±)/(2 p_±)) with p_± = (1 ± x nz)/2 and
// Delta_± = (1-nz^2) s^2 + (y ± nz t)^2. Exact for projectors in the x-z
// plane. Evaluated on the parameters as given (no canonicalization), so the
// x-z plane refers to the frame of `p`.
double conditional_entropy_vn(const BlochParams& p, VnMeasurement m);

// D(nz) = S(rho_A) - S(rho) + S(nz) = h(x) - S(rho) + conditional entropy.
double discord_given_measurement(const BlochParams& p, VnMeasurement m);

// Closed-form optimality test:
//   sigma_z is optimal if (rho12 + rho03)^2 <= (rho00 - rho11)(rho33 - rho22),
//   sigma_x is optimal if |sqrt(rho00 rho33) - sqrt(rho11 rho22)| <= rho12 + rho03.
// The first condition is equivalent to t^2 >= y^2 + s^2 (with the sign
// condition on the diagonal differences); both forms are computed and checked
// against each other.
AnalyticClass classify_analytic(const CanonicalXState& st);

// D at nz = 1 resp. nz = 0 (the D_0 and D_{pi/2} of the two-case rule),
// evaluated in the canonical frame of `p`.
double discord_sigma_z(const BlochParams& p);
double discord_sigma_x(const BlochParams& p);

// Quantum discord over von Neumann measurements: analytic fast path when the
// classifier applies, otherwise coarse grid + golden-section refinement.
// The input is canonicalized first; optimal_nz refers to the canonical frame.
DiscordResult minimize_discord_vn(const BlochParams& p, const MinimizeOptions& opts = {});

// J = I - D with the same minimizer, so J + D = I holds exactly.
double classical_correlation(const BlochParams& p, const MinimizeOptions& opts = {});

// Precomputed evaluator for many measurements on one state. Canonicalizes the
// input once; all evaluations are in the canonical frame.
class DiscordEvaluator {
 public:
  explicit DiscordEvaluator(const BlochParams& p);
  explicit DiscordEvaluator(const CanonicalXState& st);

  double conditional_entropy(double nz) const noexcept;
  double discord(double nz) const noexcept { return base_ + conditional_entropy(nz); }
  double discord_sigma_z() const noexcept { return discord(1.0); }
  double discord_sigma_x() const noexcept { return discord(0.0); }
  double mutual_information() const noexcept { return mutual_; }
  double state_entropy() const noexcept { return state_entropy_; }

  const BlochParams& params() const noexcept { return p_; }
  const CanonicalXState& state() const noexcept { return state_; }

  DiscordResult minimize(const MinimizeOptions& opts = {}) const;

 private:
  void init();

  CanonicalXState state_{};
  BlochParams p_{};
  double s2_ = 0.0;            // s^2, hoisted out of the scan loop
  double base_ = 0.0;          // h(x) - S(rho)
  double mutual_ = 0.0;        // I = h(x) + h(y) - S(rho)
  double state_entropy_ = 0.0; // S(rho)
};

const char* to_string(AnalyticClass c);
const char* to_string(DiscordMethod m);

}  // namespace xdiscord
