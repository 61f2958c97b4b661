#include <doctest.h>

#include "ocmg/grid.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace ocmg;

namespace {

ScalarField random_field(const GridSpec &g, std::mt19937_64 &rng)
{
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  ScalarField f(g);
  for (auto &x : f.values())
  {
    x = d(rng);
  }
  return f;
}

} // namespace

TEST_CASE("grid spacing and lexicographic index")
{
  const GridSpec g(8);
  CHECK(g.h() == doctest::Approx(0.125));
  CHECK(g.n() == 7);
  CHECK(g.size() == 49u);
  CHECK(g.index(1, 1) == 0u);
  CHECK(g.index(2, 1) == 1u);
  CHECK(g.index(1, 2) == 7u);
  CHECK(g.index(7, 7) == 48u);
  CHECK_THROWS_AS(GridSpec(1), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(0), std::invalid_argument);
}

TEST_CASE("single interior node stencils")
{
  // N = 2: one unknown at (1/2, 1/2), h = 1/2.
  const GridSpec g(2);
  ScalarField u(g, 1.0);
  CHECK(apply_laplacian(u, g)[0] == doctest::Approx(16.0));
  CHECK(apply_mass(u, g)[0] == doctest::Approx(16.0 * 0.25 / 36.0));

  const SaddleOperator op(g, 1.0);
  BlockField v(g);
  v.y[0] = 1.0;
  v.p[0] = 2.0;
  const BlockField Av = apply_saddle(op, v);
  CHECK(Av.y[0] == doctest::Approx(16.0 - 2.0));
  CHECK(Av.p[0] == doctest::Approx(1.0 + 32.0));
}

TEST_CASE("five-point Laplacian is exact on biquadratics")
{
  const GridSpec g(16);
  const double h = g.h();
  ScalarField u(g);
  ScalarField expect(g);
  for (int j = 1; j <= g.n(); ++j)
  {
    for (int i = 1; i <= g.n(); ++i)
    {
      const double x = i * h;
      const double y = j * h;
      u(i, j) = x * (1 - x) * y * (1 - y);
      expect(i, j) = 2 * y * (1 - y) + 2 * x * (1 - x);
    }
  }
  const ScalarField Lu = apply_laplacian(u, g);
  for (std::size_t k = 0; k < g.size(); ++k)
  {
    CHECK(Lu[k] == doctest::Approx(expect[k]).epsilon(1e-10));
  }
}

TEST_CASE("mass stencil weights sum to h^2 in the interior")
{
  const GridSpec g(10);
  const ScalarField one(g, 1.0);
  const ScalarField Qu = apply_mass(one, g);
  CHECK(Qu(5, 5) == doctest::Approx(g.h() * g.h()));
  // Corner node loses 5 of its 9 neighbours: 16 + 4 + 4 + 1 of 36.
  CHECK(Qu(1, 1) == doctest::Approx(g.h() * g.h() * 25.0 / 36.0));
}

TEST_CASE("Laplacian and mass operators are symmetric")
{
  std::mt19937_64 rng(3);
  const GridSpec g(9);
  const ScalarField a = random_field(g, rng);
  const ScalarField b = random_field(g, rng);
  const auto La = apply_laplacian(a, g);
  const auto Lb = apply_laplacian(b, g);
  CHECK(dot(La.values(), b.values()) ==
        doctest::Approx(dot(a.values(), Lb.values())).epsilon(1e-12));
  const auto Qa = apply_mass(a, g);
  const auto Qb = apply_mass(b, g);
  CHECK(dot(Qa.values(), b.values()) ==
        doctest::Approx(dot(a.values(), Qb.values())).epsilon(1e-12));
}

TEST_CASE("residual is b - A v")
{
  std::mt19937_64 rng(5);
  const GridSpec g(7);
  const SaddleOperator op(g, 1e-3);
  BlockField v(random_field(g, rng), random_field(g, rng));
  BlockField b(random_field(g, rng), random_field(g, rng));
  const BlockField r = residual(op, b, v);
  const BlockField Av = apply_saddle(op, v);
  for (std::size_t k = 0; k < g.size(); ++k)
  {
    CHECK(r.y[k] == doctest::Approx(b.y[k] - Av.y[k]));
    CHECK(r.p[k] == doctest::Approx(b.p[k] - Av.p[k]));
  }
}

TEST_CASE("all-ones mask reproduces the unmasked operator bitwise")
{
  std::mt19937_64 rng(11);
  const GridSpec g(12);
  const SaddleOperator plain(g, 1e-6);
  const SaddleOperator masked(g, 1e-6, MaskField(g, 1));
  CHECK(masked.has_mask());
  CHECK_FALSE(plain.has_mask());
  const BlockField v(random_field(g, rng), random_field(g, rng));
  const BlockField a = apply_saddle(plain, v);
  const BlockField b = apply_saddle(masked, v);
  for (std::size_t k = 0; k < g.size(); ++k)
  {
    CHECK(a.y[k] == b.y[k]);
    CHECK(a.p[k] == b.p[k]);
  }
}

TEST_CASE("zero mask decouples the control term")
{
  std::mt19937_64 rng(13);
  const GridSpec g(6);
  const SaddleOperator op(g, 1e-2, MaskField(g, 0));
  const BlockField v(random_field(g, rng), random_field(g, rng));
  const BlockField Av = apply_saddle(op, v);
  const ScalarField Ly = apply_laplacian(v.y, g);
  for (std::size_t k = 0; k < g.size(); ++k)
  {
    CHECK(Av.y[k] == doctest::Approx(Ly[k]));
  }
}

TEST_CASE("argument validation")
{
  const GridSpec g(4);
  const GridSpec g2(5);
  CHECK_THROWS_AS(SaddleOperator(g, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SaddleOperator(g, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(SaddleOperator(g, 1.0, MaskField(g2, 1)), std::invalid_argument);
  CHECK_THROWS(SaddleOperator::with_coupling(g, 1.0, std::vector<double>(3, 0.5)));
  CHECK_THROWS(ScalarField(g, std::vector<double>(5, 0.0)));
  CHECK(MaskField(g, 1).count() == 9u);
}
