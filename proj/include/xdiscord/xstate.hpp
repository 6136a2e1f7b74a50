#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

// Two-qubit X-states: density matrices whose only nonzero entries sit on the
// diagonal and the anti-diagonal of the computational basis {|00>,|01>,|10>,|11>}.
// All entropies are in bits (log base 2).

namespace xdiscord {

class InvalidState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tolerance for states produced by this library.
inline constexpr double kStateTol = 1e-12;
// Looser tolerance for user-supplied input, which is often rounded.
inline constexpr double kUserInputTol = 1e-9;

// X-state as it arrives from the outside world: complex off-diagonals allowed.
struct RawXState {
  double rho00 = 0.0;
  double rho11 = 0.0;
  double rho22 = 0.0;
  double rho33 = 0.0;
  std::complex<double> rho03{0.0, 0.0};
  std::complex<double> rho12{0.0, 0.0};
};

// X-state after removing the off-diagonal phases by local unitaries
// (which leave the discord unchanged): rho03, rho12 real and >= 0.
// This forces the correlation coefficients to satisfy s >= |u|.
struct CanonicalXState {
  double rho00 = 0.0;
  double rho11 = 0.0;
  double rho22 = 0.0;
  double rho33 = 0.0;
  double rho03 = 0.0;
  double rho12 = 0.0;
};

// The five correlation coefficients of a real X-state:
//   x = <sigma_z^A>, y = <sigma_z^B>, t = <sigma_z sigma_z>,
//   s = <sigma_x sigma_x>, u = <sigma_y sigma_y>.
// Positivity is (1 +/- t)^2 >= (x +/- y)^2 + (s -/+ u)^2 with all five in [-1,1].
struct BlochParams {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
  double s = 0.0;
  double u = 0.0;
};

// Eigenvalues of a canonical X-state, sorted descending. Closed form from the
// two 2x2 blocks; values in [-kStateTol, 0) are clamped to zero.
struct Spectrum {
  std::array<double, 4> lambda{};

  double operator[](std::size_t i) const { return lambda[i]; }
  auto begin() const { return lambda.begin(); }
  auto end() const { return lambda.end(); }
};

// Throw InvalidState (message names the violated invariant) if the object is
// not a physical state within `tol`.
void validate(const RawXState& raw, double tol = kStateTol);
void validate(const CanonicalXState& st, double tol = kStateTol);
void validate(const BlochParams& p, double tol = kStateTol);

// Replace rho03, rho12 by their moduli. The diagonal is untouched and the
// spectrum (hence every entropy) is preserved.
CanonicalXState canonicalize(const RawXState& raw, double tol = kStateTol);

BlochParams bloch_params(const CanonicalXState& st);

// Inverse of bloch_params up to the s >= |u| convention: inputs with s < |u|
// (or negative off-diagonal contributions) are canonicalized on the way in.
CanonicalXState from_bloch_params(const BlochParams& p, double tol = kStateTol);

// h(w) = -(1+w)/2 log2 (1+w)/2 - (1-w)/2 log2 (1-w)/2, the entropy of a qubit
// with Bloch-vector length |w|. Even in w; h(0) = 1; h(+-1) = 0.
double binary_entropy(double w);

Spectrum spectrum(const CanonicalXState& st);

double entropy(const CanonicalXState& st);    // S(rho)
double entropy_a(const CanonicalXState& st);  // S(rho_A) = h(x)
double entropy_b(const CanonicalXState& st);  // S(rho_B) = h(y)
double mutual_information(const CanonicalXState& st);

namespace detail {

// binary_entropy without domain checks; argument is clamped into [0, 1].
double h_unit(double w) noexcept;

// -sum lambda log2 lambda with 0 log 0 := 0; assumes entries already clamped.
double entropy_of(const std::array<double, 4>& lambda) noexcept;

}  // namespace detail

}  // namespace xdiscord
