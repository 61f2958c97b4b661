#include <doctest.h>

#include "ocmg/lfa.hpp"

#include <cmath>
#include <numbers>

using namespace ocmg;
using namespace ocmg::lfa;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Laplacian and mass symbols")
{
  const double h = 0.1;
  CHECK(symbol_laplacian({0.0, 0.0}, h) == doctest::Approx(0.0));
  CHECK(symbol_laplacian({kPi, kPi}, h) == doctest::Approx(8.0 / (h * h)));
  CHECK(symbol_mass({0.0, 0.0}, h) == doctest::Approx(h * h));
  CHECK(symbol_mass({kPi, kPi}, h) == doctest::Approx(h * h / 9.0));
}

TEST_CASE("smoother symbol is I - omega B^{-1} A")
{
  const Frequency t{1.1, 2.3};
  const double h = 1.0 / 64;
  const double alpha = 1e-4;
  for (Scheme s : {Scheme::cjr, Scheme::bsr})
  {
    const double omega = 0.7;
    const auto A = symbol_saddle(t, h, alpha);
    const auto B = symbol_relaxation(s, t, h, alpha);
    const Complex d = B.det();
    // B^{-1} A by the 2x2 adjugate.
    const Complex m11 = (B.a22 * A.a11 - B.a12 * A.a21) / d;
    const Complex m12 = (B.a22 * A.a12 - B.a12 * A.a22) / d;
    const Complex m21 = (-B.a21 * A.a11 + B.a11 * A.a21) / d;
    const Complex m22 = (-B.a21 * A.a12 + B.a11 * A.a22) / d;
    const auto S = symbol_smoother(s, t, h, alpha, omega);
    const double scale = std::abs(m12) + 1.0;
    CHECK(std::abs(S.a11 - (1.0 - omega * m11)) < 1e-12 * scale);
    CHECK(std::abs(S.a12 + omega * m12) < 1e-12 * scale);
    CHECK(std::abs(S.a21 + omega * m21) < 1e-12 * scale);
    CHECK(std::abs(S.a22 - (1.0 - omega * m22)) < 1e-12 * scale);
  }
}

TEST_CASE("BSR iteration matrix has eigenvalues 1 - omega and 1 - omega lambda2")
{
  const double h = 1.0 / 32;
  const double alpha = 1e-6;
  const double omega = 0.75;
  for (const Frequency t : {Frequency{kPi, 0.3}, Frequency{2.0, 2.5}, Frequency{kPi, kPi}})
  {
    const auto S = symbol_smoother(Scheme::bsr, t, h, alpha, omega);
    const auto [e1, e2] = S.eigenvalues();
    const double l2 = lambda2_bsr(t, h, alpha);
    const double a = 1.0 - omega;
    const double b = 1.0 - omega * l2;
    const bool match = (std::abs(e1 - a) < 1e-8 && std::abs(e2 - b) < 1e-8) ||
                       (std::abs(e1 - b) < 1e-8 && std::abs(e2 - a) < 1e-8);
    CHECK(match);
  }
}

TEST_CASE("high-frequency sample set excludes the low box")
{
  for (int q : {2, 3, 4})
  {
    const auto pts = high_freq_grid(q, 64);
    REQUIRE_FALSE(pts.empty());
    for (const auto &t : pts)
    {
      const bool low = t.theta1 > -kPi / q && t.theta1 <= kPi / q && t.theta2 > -kPi / q &&
                       t.theta2 <= kPi / q;
      CHECK_FALSE(low);
      CHECK(t.theta1 > -kPi / 2 - 1e-12);
      CHECK(t.theta1 <= 1.5 * kPi + 1e-12);
    }
  }
}

TEST_CASE("CJR closed-form values at the q-dependent Jacobi damping")
{
  // gamma -> 0: mu = sqrt(Psi(tau0, 0)) with Psi(w, 0) = (2w - 1)^2.
  CHECK(cjr_optimal(LfaParams(2, 1.0, 1.0 / 256)).omega == doctest::Approx(0.8));
  CHECK(cjr_optimal(LfaParams(2, 1.0, 1.0 / 256)).mu == doctest::Approx(0.6).epsilon(1e-4));
  CHECK(cjr_psi(0.5, 0.0) == doctest::Approx(0.0));
  CHECK(cjr_omega0(0.0) == doctest::Approx(0.5));
  CHECK(cjr_omega0(1e6) == doctest::Approx(1.0));
  CHECK(cjr_gamma_threshold(2) == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("CJR switches to omega0 above the threshold")
{
  for (int q : {2, 3, 4})
  {
    const double thr = cjr_gamma_threshold(q);
    // gamma = h^2 / (4 sqrt(alpha)) with h = 1/8.
    const double h = 0.125;
    const double g_hi = 2.0 * thr;
    const double alpha_hi = std::pow(h * h / (4.0 * g_hi), 2);
    const auto hi = cjr_optimal(LfaParams(q, alpha_hi, h));
    CHECK(hi.omega == doctest::Approx(cjr_omega0(g_hi)));
    const double g_lo = 0.5 * thr;
    const double alpha_lo = std::pow(h * h / (4.0 * g_lo), 2);
    const auto lo = cjr_optimal(LfaParams(q, alpha_lo, h));
    CHECK(lo.omega < cjr_omega0(thr) + 1e-12);
  }
}

TEST_CASE("sampled optimum agrees with the closed form")
{
  for (int q : {2, 3, 4})
  {
    for (double alpha : {1e-2, 1e-8, 1e-12})
    {
      const LfaParams p(q, alpha, 1.0 / 64, 128);
      const auto cf = cjr_optimal(p);
      const auto s = optimize_sampled(Scheme::cjr, p);
      CHECK(s.method == LfaReport::Method::sampled);
      CHECK(s.mu == doctest::Approx(cf.mu).epsilon(2e-3));
      CHECK(std::abs(s.omega - cf.omega) < 5e-3);
    }
  }
}

TEST_CASE("BSR damping constants and their smoothing bound")
{
  CHECK(bsr_damping(2).omega == doctest::Approx(0.75));
  CHECK(bsr_damping(2).upper_bound_mu == doctest::Approx(1.0 / 3.0));
  CHECK(bsr_damping(3).omega == doctest::Approx(36.0 / 47.0));
  CHECK(bsr_damping(4).upper_bound_mu == doctest::Approx(0.5416).epsilon(1e-3));
  for (int q : {2, 3, 4})
  {
    for (double alpha : {1.0, 1e-6, 1e-12})
    {
      const auto d = bsr_damping(q);
      const auto rep = smoothing_factor_sampled(Scheme::bsr, LfaParams(q, alpha, 1.0 / 128), d.omega);
      CHECK(rep.mu <= d.upper_bound_mu + 1e-9);
    }
  }
}

TEST_CASE("scalar relaxation ranges")
{
  const double s2 = std::numbers::sqrt2;
  const auto j2 = scalar_range_check(RangeKind::jacobi, 2);
  CHECK(j2.min == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(j2.max == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(scalar_range_check(RangeKind::jacobi, 3).min == doctest::Approx(0.25).epsilon(1e-3));
  CHECK(scalar_range_check(RangeKind::jacobi, 4).min ==
        doctest::Approx((2.0 - s2) / 4.0).epsilon(1e-3));
  const auto m3 = scalar_range_check(RangeKind::mass, 3);
  CHECK(m3.min == doctest::Approx(5.0 / 6.0).epsilon(1e-3));
  CHECK(m3.max == doctest::Approx(16.0 / 9.0).epsilon(1e-3));
}

TEST_CASE("parameter validation")
{
  CHECK_THROWS_AS(LfaParams(5, 1e-2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(LfaParams(2, 0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(LfaParams(2, 1e-2, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(bsr_damping(1), std::invalid_argument);
  CHECK(LfaReport{0.5, 0.8, {}, LfaReport::Method::closed_form}.mu_pow(3) ==
        doctest::Approx(0.125));
}
