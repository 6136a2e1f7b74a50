#include "xdiscord/xstate.hpp"

#include <algorithm>
#include <cmath>

namespace xdiscord {

namespace {

double clamp01(double v) { return std::min(std::max(v, 0.0), 1.0); }

void check_trace(double trace, double tol) {
  if (std::abs(trace - 1.0) > tol)
    throw InvalidState("trace one violated: tr(rho) = " + std::to_string(trace));
}

void check_diag(double v, const char* name, double tol) {
  if (v < -tol || v > 1.0 + tol)
    throw InvalidState(std::string("diagonal entry out of [0,1]: ") + name);
}

void check_block(double off2, double prod, const char* name, double tol) {
  if (off2 > prod + tol)
    throw InvalidState(std::string("positivity violated: |") + name +
                       "|^2 exceeds its diagonal block product");
}

}  // namespace

void validate(const RawXState& r, double tol) {
  check_diag(r.rho00, "rho00", tol);
  check_diag(r.rho11, "rho11", tol);
  check_diag(r.rho22, "rho22", tol);
  check_diag(r.rho33, "rho33", tol);
  check_trace(r.rho00 + r.rho11 + r.rho22 + r.rho33, tol);
  check_block(std::norm(r.rho03), r.rho00 * r.rho33, "rho03", tol);
  check_block(std::norm(r.rho12), r.rho11 * r.rho22, "rho12", tol);
}

void validate(const CanonicalXState& st, double tol) {
  if (st.rho03 < -tol || st.rho12 < -tol)
    throw InvalidState("canonical off-diagonals must be nonnegative");
  check_diag(st.rho00, "rho00", tol);
  check_diag(st.rho11, "rho11", tol);
  check_diag(st.rho22, "rho22", tol);
  check_diag(st.rho33, "rho33", tol);
  check_trace(st.rho00 + st.rho11 + st.rho22 + st.rho33, tol);
  check_block(st.rho03 * st.rho03, st.rho00 * st.rho33, "rho03", tol);
  check_block(st.rho12 * st.rho12, st.rho11 * st.rho22, "rho12", tol);
}

void validate(const BlochParams& p, double tol) {
  for (double v : {p.x, p.y, p.t, p.s, p.u})
    if (std::abs(v) > 1.0 + tol)
      throw InvalidState("correlation coefficient outside [-1,1]");
  const double plus = (1.0 + p.t) * (1.0 + p.t) - (p.x + p.y) * (p.x + p.y) -
                      (p.s - p.u) * (p.s - p.u);
  const double minus = (1.0 - p.t) * (1.0 - p.t) - (p.x - p.y) * (p.x - p.y) -
                       (p.s + p.u) * (p.s + p.u);
  if (plus < -tol)
    throw InvalidState("positivity violated: (1+t)^2 < (x+y)^2 + (s-u)^2");
  if (minus < -tol)
    throw InvalidState("positivity violated: (1-t)^2 < (x-y)^2 + (s+u)^2");
}

CanonicalXState canonicalize(const RawXState& raw, double tol) {
  validate(raw, tol);
  CanonicalXState st;
  st.rho00 = clamp01(raw.rho00);
  st.rho11 = clamp01(raw.rho11);
  st.rho22 = clamp01(raw.rho22);
  st.rho33 = clamp01(raw.rho33);
  st.rho03 = std::abs(raw.rho03);
  st.rho12 = std::abs(raw.rho12);
  return st;
}

BlochParams bloch_params(const CanonicalXState& st) {
  BlochParams p;
  p.x = st.rho00 + st.rho11 - st.rho22 - st.rho33;
  p.y = st.rho00 - st.rho11 + st.rho22 - st.rho33;
  p.t = st.rho00 - st.rho11 - st.rho22 + st.rho33;
  p.s = 2.0 * (st.rho12 + st.rho03);
  p.u = 2.0 * (st.rho12 - st.rho03);
  return p;
}

CanonicalXState from_bloch_params(const BlochParams& p, double tol) {
  validate(p, tol);
  CanonicalXState st;
  st.rho00 = clamp01(0.25 * (1.0 + p.x + p.y + p.t));
  st.rho11 = clamp01(0.25 * (1.0 + p.x - p.y - p.t));
  st.rho22 = clamp01(0.25 * (1.0 - p.x + p.y - p.t));
  st.rho33 = clamp01(0.25 * (1.0 - p.x - p.y + p.t));
  st.rho03 = std::abs(0.25 * (p.s - p.u));
  st.rho12 = std::abs(0.25 * (p.s + p.u));
  return st;
}

double binary_entropy(double w) {
  if (std::abs(w) > 1.0 + 1e-9)
    throw DomainError("binary_entropy argument outside [-1,1]: " + std::to_string(w));
  return detail::h_unit(w);
}

Spectrum spectrum(const CanonicalXState& st) {
  const double d03 = std::sqrt((st.rho00 - st.rho33) * (st.rho00 - st.rho33) +
                               4.0 * st.rho03 * st.rho03);
  const double d12 = std::sqrt((st.rho11 - st.rho22) * (st.rho11 - st.rho22) +
                               4.0 * st.rho12 * st.rho12);
  std::array<double, 4> lam = {
      0.5 * (st.rho00 + st.rho33 + d03), 0.5 * (st.rho00 + st.rho33 - d03),
      0.5 * (st.rho11 + st.rho22 + d12), 0.5 * (st.rho11 + st.rho22 - d12)};
  for (double& l : lam) {
    if (l < -kStateTol)
      throw InvalidState("negative eigenvalue beyond tolerance: " + std::to_string(l));
    if (l < 0.0) l = 0.0;
  }
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return Spectrum{lam};
}

double entropy(const CanonicalXState& st) { return detail::entropy_of(spectrum(st).lambda); }

double entropy_a(const CanonicalXState& st) {
  return detail::h_unit(st.rho00 + st.rho11 - st.rho22 - st.rho33);
}

double entropy_b(const CanonicalXState& st) {
  return detail::h_unit(st.rho00 - st.rho11 + st.rho22 - st.rho33);
}

double mutual_information(const CanonicalXState& st) {
  return entropy_a(st) + entropy_b(st) - entropy(st);
}

namespace detail {

double h_unit(double w) noexcept {
  w = std::min(std::abs(w), 1.0);
  const double p = 0.5 * (1.0 + w);
  const double q = 0.5 * (1.0 - w);
  double r = 0.0;
  if (p > 0.0) r -= p * std::log2(p);
  if (q > 0.0) r -= q * std::log2(q);
  return r;
}

double entropy_of(const std::array<double, 4>& lambda) noexcept {
  double r = 0.0;
  for (double l : lambda)
    if (l > 0.0) r -= l * std::log2(l);
  return r;
}

}  // namespace detail

}  // namespace xdiscord
