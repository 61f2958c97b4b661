#ifndef OCMG_LFA_HPP
#define OCMG_LFA_HPP

// Local Fourier analysis of the two collective relaxations for the saddle
// system with coarsening by q in {2,3,4}.
//
// Symbols used throughout (theta in (-pi/2, 3pi/2]^2):
//   a      = (4 - 2cos t1 - 2cos t2) / h^2          five-point Laplacian
//   a1     = 4 / h^2                                its diagonal
//   Qt     = (h^2/9)(4 + 2cos t1 + 2cos t2 + cos t1 cos t2)   mass stencil
//   b      = 1 / Qt
//   gamma  = h^2 / (4 sqrt(alpha))
//
// Two independent routes are provided: closed-form optimal damping and
// smoothing factors, and brute-force sampling of the 2x2 symbol over the
// high-frequency set with a golden-section search in omega.

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace ocmg::lfa {

struct Frequency
{
  double theta1 = 0.0;
  double theta2 = 0.0;
};

enum class Scheme
{
  cjr,  // collective Jacobi
  bsr,  // mass-based Braess-Sarazin (exact Schur solve)
};

const char *to_string(Scheme s) noexcept;

struct LfaParams
{
  LfaParams(int q, double alpha, double h, int samples_per_axis = 256);

  int q;
  double alpha;
  double h;
  int samples_per_axis;

  double gamma() const noexcept;
};

using Complex = std::complex<double>;

struct SymbolMatrix2
{
  Complex a11, a12, a21, a22;

  Complex trace() const noexcept { return a11 + a22; }
  Complex det() const noexcept { return a11 * a22 - a12 * a21; }
  /// Eigenvalues from the trace/determinant quadratic.
  std::pair<Complex, Complex> eigenvalues() const;
  double spectral_radius() const;
};

struct LfaReport
{
  enum class Method
  {
    closed_form,
    sampled,
  };

  double mu = 0.0;
  double omega = 0.0;
  Frequency arg_theta{};
  Method method = Method::closed_form;

  /// Smoothing factor for nu sweeps, mu^nu.
  double mu_pow(int nu) const;
};

double symbol_laplacian(const Frequency &theta, double h);
double symbol_mass(const Frequency &theta, double h);

/// Symbol of A_h.
SymbolMatrix2 symbol_saddle(const Frequency &theta, double h, double alpha);
/// Symbol of B_J (cjr) or B_m (bsr).
SymbolMatrix2 symbol_relaxation(Scheme scheme, const Frequency &theta, double h, double alpha);
/// I - omega * B^{-1} A.
SymbolMatrix2 symbol_smoother(Scheme scheme, const Frequency &theta, double h, double alpha,
                              double omega);

/// Tensor grid of sampled angles in (-pi/2, 3pi/2]^2 with the low box
/// (-pi/q, pi/q]^2 removed. Forced nodes put the analytic extrema on the grid.
std::vector<Frequency> high_freq_grid(int q, int samples_per_axis);

/// Max spectral radius of the smoother symbol over high_freq_grid.
LfaReport smoothing_factor_sampled(Scheme scheme, const LfaParams &params, double omega);

/// Sampled optimum over omega: golden-section on [0.1, 1.5] to 1e-4.
LfaReport optimize_sampled(Scheme scheme, const LfaParams &params);

/// Closed-form optimal damping and smoothing factor for CJR.
LfaReport cjr_optimal(const LfaParams &params);

/// gamma above which the optimal CJR damping is omega_0(gamma).
double cjr_gamma_threshold(int q);
/// omega_0 = (2 + gamma^2) / (4 + gamma^2).
double cjr_omega0(double gamma);
/// Psi(omega) = ((4+g^2)w^2 - (4+2g^2)w + 1 + g^2) / (1 + g^2).
double cjr_psi(double omega, double gamma);

struct BsrDamping
{
  double omega;
  double upper_bound_mu;
};

/// Fixed per-q BSR damping and the corresponding smoothing-factor bound.
BsrDamping bsr_damping(int q);

/// lambda_2 = (1 + alpha a^2) / (1 + alpha a b); the other eigenvalue of
/// B_m^{-1} A_h is identically 1.
double lambda2_bsr(const Frequency &theta, double h, double alpha);
inline constexpr double kLambda1Bsr = 1.0;

enum class RangeKind
{
  jacobi,  // tau = a / a1
  mass,    // a / b = a * Qt
};

struct Range
{
  double min;
  double max;
};

/// Sampled extrema of the scalar relaxation symbol over the high frequencies.
Range scalar_range_check(RangeKind kind, int q, int samples_per_axis = 256);

void validate_q(int q);

} // namespace ocmg::lfa

#endif // OCMG_LFA_HPP
