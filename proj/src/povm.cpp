#include "xdiscord/povm.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace xdiscord {

namespace {

constexpr double kMuFloor = 1e-14;
constexpr double kConstraintTol = 1e-12;
constexpr double kProbFloor = 1e-14;

}  // namespace

Povm::Povm(std::vector<PovmElement> elements) : elems_(std::move(elements)) {
  std::erase_if(elems_, [](const PovmElement& e) { return e.mu < kMuFloor; });
  if (elems_.empty()) throw InvalidPovm("POVM has no elements");
  if (elems_.size() > 4)
    throw InvalidPovm("POVM has " + std::to_string(elems_.size()) + " outcomes; K <= 4 required");

  double mu_sum = 0.0;
  std::array<double, 3> bal{0.0, 0.0, 0.0};
  for (const PovmElement& e : elems_) {
    if (e.mu < 0.0) throw InvalidPovm("POVM weight must be positive");
    const double norm2 = e.n[0] * e.n[0] + e.n[1] * e.n[1] + e.n[2] * e.n[2];
    if (std::abs(norm2 - 1.0) > 2.0 * kConstraintTol)
      throw InvalidPovm("POVM direction is not a unit vector");
    mu_sum += e.mu;
    for (int i = 0; i < 3; ++i) bal[i] += e.mu * e.n[i];
  }
  if (std::abs(mu_sum - 1.0) > kConstraintTol)
    throw InvalidPovm("POVM weights do not sum to one");
  if (std::sqrt(bal[0] * bal[0] + bal[1] * bal[1] + bal[2] * bal[2]) > kConstraintTol)
    throw InvalidPovm("POVM directions do not balance: sum mu_k n_k != 0");
}

bool Povm::in_plane(double tol) const noexcept {
  for (const PovmElement& e : elems_)
    if (std::abs(e.n[1]) > tol) return false;
  return true;
}

Povm three_outcome_povm(double theta) {
  if (theta < -1e-12 || theta > 1.5707963267948966 + 1e-12)
    throw DomainError("three_outcome_povm angle outside [0, pi/2]");
  const double c = std::cos(std::min(std::max(theta, 0.0), 1.5707963267948966));
  const double sn = std::sin(std::min(std::max(theta, 0.0), 1.5707963267948966));
  const double w = 1.0 / (2.0 * (1.0 + c));
  // theta = pi/2 has mu1 = 0; the constructor drops it, leaving projective sigma_x.
  return Povm({{c / (1.0 + c), {0.0, 0.0, -1.0}},
               {w, {sn, 0.0, c}},
               {w, {-sn, 0.0, c}}});
}

double conditional_entropy_povm(const BlochParams& p, const Povm& povm) {
  validate(p);
  const double s2 = p.s * p.s;
  const bool planar = povm.in_plane();
  double r = 0.0;
  for (const PovmElement& e : povm.elements()) {
    const double nz = e.n[2];
    const double weight = 1.0 + p.x * nz;
    const double pk = e.mu * weight;
    if (pk < kProbFloor) continue;
    double bloch;
    if (planar) {
      bloch = std::sqrt((1.0 - nz * nz) * s2 + (p.y + p.t * nz) * (p.y + p.t * nz)) / weight;
    } else {
      const double bx = p.s * e.n[0];
      const double by = p.u * e.n[1];
      const double bz = p.y + p.t * nz;
      bloch = std::sqrt(bx * bx + by * by + bz * bz) / weight;
    }
    r += pk * detail::h_unit(bloch);
  }
  return r;
}

DiscordResult discord_upper_povm(const BlochParams& p, const MinimizeOptions& opts) {
  const DiscordEvaluator ev(p);
  const DiscordResult vn = ev.minimize(opts);
  const Povm povm = three_outcome_povm(vn.optimal_theta());

  DiscordResult res;
  res.mutual_information = ev.mutual_information();
  res.discord = detail::h_unit(ev.params().x) - ev.state_entropy() +
                conditional_entropy_povm(ev.params(), povm);
  res.classical_correlation = res.mutual_information - res.discord;
  res.optimal_nz = vn.optimal_nz;
  res.method = DiscordMethod::PovmUpper;
  return res;
}

}  // namespace xdiscord
