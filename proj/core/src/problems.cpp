#include "ocmg/problems.hpp"

#include <cmath>
#include <numbers>

namespace ocmg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// s(x) = sin(2 pi x) e^{sx}, sign sx = +-1; second derivative in closed form.
double s_val(double x, double sx) { return std::sin(kTwoPi * x) * std::exp(sx * x); }

double s_dd(double x, double sx)
{
  const double e = std::exp(sx * x);
  return (1.0 - kTwoPi * kTwoPi) * std::sin(kTwoPi * x) * e +
         2.0 * sx * kTwoPi * std::cos(kTwoPi * x) * e;
}

} // namespace

ManufacturedProblem example1(const GridSpec &grid, double alpha)
{
  ManufacturedProblem mp{ProblemData(grid), BlockField(grid)};
  const double h = grid.h();
  for (int j = 1; j <= grid.n(); ++j)
  {
    const double x2 = j * h;
    for (int i = 1; i <= grid.n(); ++i)
    {
      const double x1 = i * h;
      // y = a(x1) b(x2), a = s(.,+1), b = s(.,+1); p = a(x1) c(x2), c = s(.,-1).
      const double a = s_val(x1, 1.0), add = s_dd(x1, 1.0);
      const double b = s_val(x2, 1.0), bdd = s_dd(x2, 1.0);
      const double c = s_val(x2, -1.0), cdd = s_dd(x2, -1.0);
      const double y = a * b;
      const double p = a * c;
      const double lap_y = add * b + a * bdd;
      const double lap_p = add * c + a * cdd;
      mp.exact.y(i, j) = y;
      mp.exact.p(i, j) = p;
      mp.data.f(i, j) = -lap_y - p / alpha;
      mp.data.g(i, j) = -lap_p + y;
    }
  }
  return mp;
}

ProblemData example2(const GridSpec &grid)
{
  ProblemData d(grid);
  const double h = grid.h();
  for (int j = 1; j <= grid.n(); ++j)
  {
    for (int i = 1; i <= grid.n(); ++i)
    {
      const double x1 = i * h;
      const double x2 = j * h;
      d.g(i, j) = std::sin(kTwoPi * x1) * std::sin(kTwoPi * x2) * std::exp(2.0 * x1) / 6.0;
    }
  }
  return d;
}

double l2_norm_h(const BlockField &v)
{
  return v.grid().h() * block_norm2(v);
}

} // namespace ocmg
