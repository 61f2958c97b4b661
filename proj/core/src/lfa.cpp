#include "ocmg/lfa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ocmg::lfa {

namespace {

constexpr double kPi = std::numbers::pi;

struct Sample
{
  Frequency theta;
  double c1;
  double c2;
};

std::vector<Sample> make_samples(int q, int samples_per_axis)
{
  const auto grid = high_freq_grid(q, samples_per_axis);
  std::vector<Sample> out;
  out.reserve(grid.size());
  for (const auto &t : grid)
  {
    out.push_back({t, std::cos(t.theta1), std::cos(t.theta2)});
  }
  return out;
}

// Real 2x2 symbol of I - omega B^{-1} A from the cosines of theta.
SymbolMatrix2 smoother_from_cos(Scheme scheme, double c1, double c2, double h, double alpha,
                                double omega)
{
  const double h2 = h * h;
  const double a = (4.0 - 2.0 * c1 - 2.0 * c2) / h2;
  const double ia = 1.0 / alpha;

  // B = [b11, -1/alpha; 1, b22]
  double b11 = 0.0;
  double b22 = 0.0;
  if (scheme == Scheme::cjr)
  {
    b11 = 4.0 / h2;
    b22 = b11;
  }
  else
  {
    const double qt = h2 / 9.0 * (4.0 + 2.0 * c1 + 2.0 * c2 + c1 * c2);
    b11 = 1.0 / qt;
    b22 = a;
  }
  const double detb = b11 * b22 + ia;
  if (!(detb > 0.0) || !std::isfinite(detb))
  {
    throw std::runtime_error("lfa: singular relaxation symbol");
  }
  // B^{-1} = [b22, 1/alpha; -1, b11] / detb ; A = [a, -1/alpha; 1, a]
  const double m11 = (b22 * a + ia) / detb;
  const double m12 = (-b22 * ia + ia * a) / detb;
  const double m21 = (-a + b11) / detb;
  const double m22 = (ia + b11 * a) / detb;
  return {Complex(1.0 - omega * m11), Complex(-omega * m12), Complex(-omega * m21),
          Complex(1.0 - omega * m22)};
}

LfaReport mu_over(Scheme scheme, const std::vector<Sample> &samples, double h, double alpha,
                  double omega)
{
  LfaReport rep;
  rep.method = LfaReport::Method::sampled;
  rep.omega = omega;
  rep.mu = -1.0;
  for (const auto &s : samples)
  {
    const double r = smoother_from_cos(scheme, s.c1, s.c2, h, alpha, omega).spectral_radius();
    if (r > rep.mu)
    {
      rep.mu = r;
      rep.arg_theta = s.theta;
    }
  }
  return rep;
}

double jacobi_tau0(int q)
{
  switch (q)
  {
    case 2:
      return 4.0 / 5.0;
    case 3:
      return 8.0 / 9.0;
    default:
      return 8.0 / (10.0 - std::numbers::sqrt2);
  }
}

} // namespace

const char *to_string(Scheme s) noexcept
{
  return s == Scheme::cjr ? "cjr" : "bsr";
}

void validate_q(int q)
{
  if (q < 2 || q > 4)
  {
    throw std::invalid_argument("coarsening factor q must be 2, 3 or 4");
  }
}

LfaParams::LfaParams(int q_, double alpha_, double h_, int samples)
  : q(q_), alpha(alpha_), h(h_), samples_per_axis(samples)
{
  validate_q(q);
  if (!(alpha > 0.0) || !(h > 0.0))
  {
    throw std::invalid_argument("LfaParams: alpha and h must be positive");
  }
  if (samples_per_axis < 32)
  {
    throw std::invalid_argument("LfaParams: samples_per_axis must be >= 32");
  }
}

double LfaParams::gamma() const noexcept
{
  return h * h / (4.0 * std::sqrt(alpha));
}

std::pair<Complex, Complex> SymbolMatrix2::eigenvalues() const
{
  const Complex half_tr = 0.5 * trace();
  const Complex disc = std::sqrt(half_tr * half_tr - det());
  return {half_tr + disc, half_tr - disc};
}

double SymbolMatrix2::spectral_radius() const
{
  const auto [l1, l2] = eigenvalues();
  return std::max(std::abs(l1), std::abs(l2));
}

double LfaReport::mu_pow(int nu) const
{
  return std::pow(mu, nu);
}

double symbol_laplacian(const Frequency &theta, double h)
{
  return (4.0 - 2.0 * std::cos(theta.theta1) - 2.0 * std::cos(theta.theta2)) / (h * h);
}

double symbol_mass(const Frequency &theta, double h)
{
  const double c1 = std::cos(theta.theta1);
  const double c2 = std::cos(theta.theta2);
  return h * h / 9.0 * (4.0 + 2.0 * c1 + 2.0 * c2 + c1 * c2);
}

SymbolMatrix2 symbol_saddle(const Frequency &theta, double h, double alpha)
{
  const double a = symbol_laplacian(theta, h);
  return {Complex(a), Complex(-1.0 / alpha), Complex(1.0), Complex(a)};
}

SymbolMatrix2 symbol_relaxation(Scheme scheme, const Frequency &theta, double h, double alpha)
{
  if (scheme == Scheme::cjr)
  {
    const double a1 = 4.0 / (h * h);
    return {Complex(a1), Complex(-1.0 / alpha), Complex(1.0), Complex(a1)};
  }
  const double b = 1.0 / symbol_mass(theta, h);
  return {Complex(b), Complex(-1.0 / alpha), Complex(1.0), Complex(symbol_laplacian(theta, h))};
}

SymbolMatrix2 symbol_smoother(Scheme scheme, const Frequency &theta, double h, double alpha,
                              double omega)
{
  return smoother_from_cos(scheme, std::cos(theta.theta1), std::cos(theta.theta2), h, alpha,
                           omega);
}

std::vector<Frequency> high_freq_grid(int q, int samples_per_axis)
{
  validate_q(q);
  if (samples_per_axis < 4)
  {
    throw std::invalid_argument("high_freq_grid: samples_per_axis too small");
  }

  const double pq = kPi / q;
  // Forced nodes first so that they win the de-duplication below.
  std::vector<double> axis = {0.0,        pq,         -pq,        kPi / 2.0, kPi,
                              1.5 * kPi, kPi / 4.0, -kPi / 4.0, kPi / 3.0, -kPi / 3.0};
  const double step = 2.0 * kPi / samples_per_axis;
  for (int k = 1; k <= samples_per_axis; ++k)
  {
    axis.push_back(-kPi / 2.0 + k * step);
  }

  std::vector<double> uniq;
  for (double t : axis)
  {
    const bool dup = std::any_of(uniq.begin(), uniq.end(),
                                 [t](double u) { return std::abs(u - t) < 1e-12; });
    if (!dup)
    {
      uniq.push_back(t);
    }
  }
  std::sort(uniq.begin(), uniq.end());

  auto low = [pq](double t) { return t > -pq && t <= pq; };
  std::vector<Frequency> out;
  out.reserve(uniq.size() * uniq.size());
  for (double t2 : uniq)
  {
    for (double t1 : uniq)
    {
      if (!(low(t1) && low(t2)))
      {
        out.push_back({t1, t2});
      }
    }
  }
  return out;
}

LfaReport smoothing_factor_sampled(Scheme scheme, const LfaParams &params, double omega)
{
  if (!(omega > 0.0))
  {
    throw std::invalid_argument("smoothing_factor_sampled: omega must be positive");
  }
  const auto samples = make_samples(params.q, params.samples_per_axis);
  return mu_over(scheme, samples, params.h, params.alpha, omega);
}

LfaReport optimize_sampled(Scheme scheme, const LfaParams &params)
{
  const auto samples = make_samples(params.q, params.samples_per_axis);
  auto f = [&](double w) { return mu_over(scheme, samples, params.h, params.alpha, w).mu; };

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.1;
  double hi = 1.5;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > 1e-4)
  {
    if (f1 <= f2)
    {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f(x1);
    }
    else
    {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f(x2);
    }
  }
  return mu_over(scheme, samples, params.h, params.alpha, 0.5 * (lo + hi));
}

double cjr_gamma_threshold(int q)
{
  validate_q(q);
  switch (q)
  {
    case 2:
      return std::sqrt(6.0);
    case 3:
      return std::sqrt(14.0);
    default:
    {
      const double s2 = std::numbers::sqrt2;
      return std::sqrt((12.0 + 2.0 * s2) / (2.0 - s2));
    }
  }
}

double cjr_omega0(double gamma)
{
  const double g2 = gamma * gamma;
  return (2.0 + g2) / (4.0 + g2);
}

double cjr_psi(double omega, double gamma)
{
  const double g2 = gamma * gamma;
  return ((4.0 + g2) * omega * omega - (4.0 + 2.0 * g2) * omega + 1.0 + g2) / (1.0 + g2);
}

LfaReport cjr_optimal(const LfaParams &params)
{
  const double g = params.gamma();
  LfaReport rep;
  rep.method = LfaReport::Method::closed_form;
  // tau attains its maximum 2 at theta = (pi, pi); that branch dominates for
  // every omega at or above the crossover.
  rep.arg_theta = {kPi, kPi};
  if (g > cjr_gamma_threshold(params.q))
  {
    const double g2 = g * g;
    rep.omega = cjr_omega0(g);
    rep.mu = std::sqrt(g2 / ((4.0 + g2) * (1.0 + g2)));
  }
  else
  {
    rep.omega = jacobi_tau0(params.q);
    rep.mu = std::sqrt(cjr_psi(rep.omega, g));
  }
  return rep;
}

BsrDamping bsr_damping(int q)
{
  validate_q(q);
  switch (q)
  {
    case 2:
      return {3.0 / 4.0, 1.0 / 3.0};
    case 3:
      return {36.0 / 47.0, 17.0 / 47.0};
    default:
    {
      const double s = 3.0 * std::numbers::sqrt2;
      return {18.0 / (25.0 - s), (7.0 + s) / (25.0 - s)};
    }
  }
}

double lambda2_bsr(const Frequency &theta, double h, double alpha)
{
  const double a = symbol_laplacian(theta, h);
  const double b = 1.0 / symbol_mass(theta, h);
  return (1.0 + alpha * a * a) / (1.0 + alpha * a * b);
}

Range scalar_range_check(RangeKind kind, int q, int samples_per_axis)
{
  const auto samples = make_samples(q, samples_per_axis);
  Range r{1e300, -1e300};
  for (const auto &s : samples)
  {
    const double lap = 4.0 - 2.0 * s.c1 - 2.0 * s.c2;
    const double v = kind == RangeKind::jacobi
                       ? lap / 4.0
                       : lap * (4.0 + 2.0 * s.c1 + 2.0 * s.c2 + s.c1 * s.c2) / 9.0;
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
  }
  return r;
}

} // namespace ocmg::lfa
