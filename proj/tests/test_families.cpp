#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "xdiscord/explorer.hpp"
#include "xdiscord/families.hpp"

using namespace xdiscord;

namespace {
constexpr double kPiOver4 = 0.78539816339744831;
}

TEST_CASE("x3_state reference points") {
  SUBCASE("eps = 1 is the Bell projector for any m") {
    const CanonicalXState st = x3_state({0.3, 1.0});
    CHECK(st.rho00 == 0.5);
    CHECK(st.rho33 == 0.5);
    CHECK(st.rho03 == 0.5);
    CHECK(st.rho11 == 0.0);
    CHECK(st.rho22 == 0.0);
  }

  SUBCASE("eps = 0, m = 1/2 is the even mixture of |01> and |10>") {
    const CanonicalXState st = x3_state({0.5, 0.0});
    CHECK(st.rho11 == 0.5);
    CHECK(st.rho22 == 0.5);
    CHECK(st.rho00 == 0.0);
    CHECK(st.rho03 == 0.0);
  }

  SUBCASE("correlations at (0.3, 0.2)") {
    const BlochParams p = bloch_params(x3_state({0.3, 0.2}));
    CHECK(p.x == doctest::Approx(-0.32).epsilon(1e-14));
    CHECK(p.y == doctest::Approx(0.32).epsilon(1e-14));
    CHECK(p.t == doctest::Approx(-0.6).epsilon(1e-14));
    CHECK(p.s == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(p.u == doctest::Approx(-0.2).epsilon(1e-14));
  }

  SUBCASE("spectrum") {
    const Spectrum sp = spectrum(x3_state({0.3, 0.2}));
    CHECK(std::abs(sp[0] - 0.8 * 0.7) <= 1e-15);
    CHECK(std::abs(sp[1] - 0.8 * 0.3) <= 1e-15);
    CHECK(std::abs(sp[2] - 0.2) <= 1e-15);
    CHECK(sp[3] == 0.0);
  }

  SUBCASE("parameter range checks") {
    CHECK_THROWS_AS(x3_state({0.6, 0.2}), DomainError);
    CHECK_THROWS_AS(x3_state({0.3, 1.5}), DomainError);
  }
}

TEST_CASE("classifier boundaries") {
  SUBCASE("eps = 1/3 forces B_X <= 0") {
    for (double m : {0.0, 0.1, 0.25, 0.4, 0.5})
      CHECK(boundary_bx(m, 1.0 / 3.0) <= 1e-15);
  }

  SUBCASE("both boundaries vanish at the origin") {
    CHECK(boundary_bx(0.0, 0.0) == 0.0);
    CHECK(boundary_bz(0.0, 0.0) == 0.0);
  }

  SUBCASE("the white-region point has both positive") {
    CHECK(boundary_bx(0.101, 0.228) > 0.0);
    CHECK(boundary_bz(0.101, 0.228) > 0.0);
  }

  SUBCASE("eps = 1 is out of domain") {
    CHECK_THROWS_AS(boundary_bx(0.2, 1.0), DomainError);
    CHECK_THROWS_AS(boundary_bz(0.2, 1.0), DomainError);
  }

  SUBCASE("boundary signs agree with the classifier on a grid") {
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        const double m = 0.5 * i / 99;
        const double eps = 0.999 * j / 99;
        const double bx = boundary_bx(m, eps);
        const double bz = boundary_bz(m, eps);
        const AnalyticClass c = classify_analytic(x3_state({m, eps}));
        if (bx <= -1e-12)
          CHECK((c == AnalyticClass::SigmaX || c == AnalyticClass::Both));
        if (bz <= -1e-12)
          CHECK((c == AnalyticClass::SigmaZ || c == AnalyticClass::Both));
        if (bx > 1e-12 && bz > 1e-12) CHECK(c == AnalyticClass::Unknown);
      }
    }
  }
}

TEST_CASE("bell_diagonal constructor") {
  const CanonicalXState bell = bell_diagonal(1.0, 1.0, -1.0);
  CHECK(bell.rho00 == 0.5);
  CHECK(bell.rho03 == 0.5);

  const CanonicalXState mixed = bell_diagonal(0.0, 0.0, 0.0);
  CHECK(mixed.rho00 == 0.25);
  CHECK(mixed.rho12 == 0.0);

  CHECK(classify_analytic(bell_diagonal(0.5, 0.3, 0.1)) == AnalyticClass::SigmaZ);
  CHECK_THROWS_AS(bell_diagonal(-1.0, 0.8, 0.0), InvalidState);
}

TEST_CASE("solve_xm endpoints and residuals") {
  SUBCASE("m = 1/2 gives eps = 1/3") {
    const XmPoint pt = solve_xm(0.5);
    CHECK(std::abs(pt.eps - 1.0 / 3.0) <= 1e-8);
    CHECK(pt.theta_opt >= 0.0);
    CHECK(pt.theta_opt <= kPiOver4 + 1e-6);
    CHECK(std::abs(pt.delta) <= 1e-8);
  }

  SUBCASE("eps vanishes with m") {
    CHECK(solve_xm(1e-4).eps < 1e-2);
  }

  SUBCASE("m = 1/4: the defining equation holds at the root") {
    const XmPoint pt = solve_xm(0.25);
    const DiscordEvaluator ev(x3_state({pt.m, pt.eps}));
    CHECK(std::abs(ev.discord_sigma_z() - ev.discord_sigma_x()) <= 1e-9);
    CHECK(std::abs(ev.discord_sigma_z() - pt.eps) <= 1e-12);  // D_0 = eps
    CHECK(pt.delta > 0.0);
    CHECK(pt.delta_tilde > pt.delta);
  }

  SUBCASE("domain errors") {
    CHECK_THROWS_AS(solve_xm(0.0), DomainError);
    CHECK_THROWS_AS(solve_xm(0.7), DomainError);
  }
}

TEST_CASE("theta_opt is continuous along the curve") {
  // Delta m = 1/200 grid; adjacent samples may not jump.
  const auto curve = scan_xm_curve(xm_default_grid(100));
  REQUIRE(curve.size() == 100);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].theta_opt >= 0.0);
    CHECK(curve[i].theta_opt <= kPiOver4 + 1e-6);
    CHECK(curve[i].delta >= 0.0);
    if (i > 0) CHECK(std::abs(curve[i].theta_opt - curve[i - 1].theta_opt) < 0.1);
    // delta vanishes only in the endpoint regions of the curve.
    if (curve[i].delta <= 1e-9) {
      const bool near_end = curve[i].m < 0.01 || curve[i].m > 0.45;
      CHECK(near_end);
    }
  }
}
