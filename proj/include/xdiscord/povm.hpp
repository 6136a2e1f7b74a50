#pragma once

#include <array>
#include <vector>

#include "xdiscord/discord.hpp"
#include "xdiscord/xstate.hpp"

// General K-outcome POVMs {mu_k (1 + n_k . sigma)} on qubit A, K <= 4
// (rank-one qubit POVMs never need more outcomes). Resolution of the identity
// requires sum mu_k = 1, |n_k| = 1, and sum mu_k n_k = 0.

namespace xdiscord {

class InvalidPovm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PovmElement {
  double mu = 0.0;
  std::array<double, 3> n{0.0, 0.0, 1.0};
};

class Povm {
 public:
  // Elements with mu below 1e-14 are dropped, then the resolution constraints
  // are checked to 1e-12. Throws InvalidPovm on violation or K > 4.
  explicit Povm(std::vector<PovmElement> elements);

  const std::vector<PovmElement>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }

  // True when every n_k has zero y-component (within tol); in that case the
  // Delta_k closed form is exact.
  bool in_plane(double tol = 1e-12) const noexcept;

 private:
  std::vector<PovmElement> elems_;
};

// The 3-outcome construction interpolating between sigma_z (theta = 0) and
// sigma_x (theta = pi/2):
//   mu1 = cos(theta)/(1+cos(theta)),    n1 = (0,0,-1)
//   mu2 = mu3 = 1/(2(1+cos(theta))),    n23 = (+-sin(theta), 0, cos(theta)).
Povm three_outcome_povm(double theta);

// sum_k p_k S(X_{B|k}) with p_k = mu_k (1 + x n_kz). In-plane POVMs use the
// Delta_k closed form; tilted elements use the exact conditioned-state Bloch
// vector (s n_kx, u n_ky, y + t n_kz)/(1 + x n_kz). Evaluated on the
// parameters as given. Zero-probability outcomes contribute nothing.
double conditional_entropy_povm(const BlochParams& p, const Povm& povm);

// Upper bound on the POVM discord: minimize over von Neumann measurements,
// build the 3-outcome POVM at the optimal angle, and evaluate. The result is
// an upper bound for the POVM-minimized discord by construction.
DiscordResult discord_upper_povm(const BlochParams& p, const MinimizeOptions& opts = {});

}  // namespace xdiscord
