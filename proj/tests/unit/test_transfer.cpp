#include <doctest.h>

#include "ocmg/oracle.hpp"
#include "ocmg/transfer.hpp"

#include <random>

using namespace ocmg;

namespace {

// Column-by-column dense image of a linear field map.
template <class F>
DenseMatrix dense_of(const GridSpec &from, const GridSpec &to, F map)
{
  DenseMatrix M(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
  for (std::size_t k = 0; k < from.size(); ++k)
  {
    ScalarField e(from);
    e[k] = 1.0;
    M.col(static_cast<Eigen::Index>(k)) = flatten(map(e));
  }
  return M;
}

} // namespace

TEST_CASE("coarsening arithmetic")
{
  CHECK(coarsen(GridSpec(256), 2).N() == 128);
  CHECK(coarsen(GridSpec(243), 3).N() == 81);
  CHECK(coarsen(GridSpec(256), 4).N() == 64);
  CHECK_THROWS_AS(coarsen(GridSpec(255), 2), std::invalid_argument);
  CHECK_THROWS_AS(coarsen(GridSpec(4), 4), std::invalid_argument);
  CHECK_THROWS_AS(coarsen(GridSpec(8), 1), std::invalid_argument);
}

TEST_CASE("restriction preserves constants away from the boundary")
{
  for (int q : {2, 3, 4})
  {
    const GridSpec fine(12 * q);
    const ScalarField c(fine, 2.5);
    const ScalarField r = restrict_field(c, q);
    const GridSpec &cg = r.grid();
    for (int J = 2; J < cg.n(); ++J)
    {
      for (int I = 2; I < cg.n(); ++I)
      {
        CHECK(r(I, J) == doctest::Approx(2.5));
      }
    }
  }
}

TEST_CASE("restricting a delta at a coarse-node image")
{
  const GridSpec fine(8);
  ScalarField d(fine);
  d(4, 4) = 1.0;
  const ScalarField r = restrict_field(d, 2);
  CHECK(r(2, 2) == doctest::Approx(0.25));
  CHECK(r(1, 1) == 0.0);
}

TEST_CASE("q=3 restriction reproduces linear data off the boundary rows")
{
  const GridSpec fine(27);
  ScalarField x(fine);
  for (int j = 1; j <= fine.n(); ++j)
  {
    for (int i = 1; i <= fine.n(); ++i)
    {
      x(i, j) = i * fine.h();
    }
  }
  const ScalarField r = restrict_field(x, 3);
  const GridSpec &cg = r.grid();
  for (int J = 2; J < cg.n(); ++J)
  {
    for (int I = 2; I < cg.n(); ++I)
    {
      CHECK(r(I, J) == doctest::Approx(I * cg.h()));
    }
  }
}

TEST_CASE("prolongation reproduces piecewise-linear data")
{
  for (int q : {2, 3, 4})
  {
    const GridSpec fine(6 * q);
    const GridSpec cg = coarsen(fine, q);
    // x1 * x2 is bilinear and vanishes on the two lower edges.
    ScalarField c(cg);
    for (int J = 1; J <= cg.n(); ++J)
    {
      for (int I = 1; I <= cg.n(); ++I)
      {
        c(I, J) = (I * cg.h()) * (J * cg.h());
      }
    }
    const ScalarField f = prolong_field(c, q);
    // Exact wherever both interpolation segments avoid the upper boundary.
    const int limit = cg.n() * q;
    for (int j = 1; j <= limit; ++j)
    {
      for (int i = 1; i <= limit; ++i)
      {
        CHECK(f(i, j) == doctest::Approx((i * fine.h()) * (j * fine.h())));
      }
    }
    CHECK(norm2(prolong_field(ScalarField(cg), q).values()) == 0.0);
  }
}

TEST_CASE("restriction is the scaled transpose of prolongation")
{
  for (int q : {2, 3, 4})
  {
    const GridSpec fine(12);
    const GridSpec cg = coarsen(fine, q);
    const DenseMatrix R = dense_of(fine, cg, [&](const ScalarField &f) { return restrict_field(f, q); });
    const DenseMatrix P = dense_of(cg, fine, [&](const ScalarField &c) { return prolong_field(c, q); });
    CHECK((R - P.transpose() / double(q * q)).norm() <= 1e-14 * R.norm());
  }
}

TEST_CASE("block transfers act componentwise and prolong_add accumulates")
{
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1, 1);
  const GridSpec fine(16);
  BlockField v(fine);
  for (auto &x : v.y.values())
  {
    x = d(rng);
  }
  for (auto &x : v.p.values())
  {
    x = d(rng);
  }
  const BlockField r = restrict_field(v, 2);
  const ScalarField ry = restrict_field(v.y, 2);
  const ScalarField rp = restrict_field(v.p, 2);
  for (std::size_t k = 0; k < r.grid().size(); ++k)
  {
    CHECK(r.y[k] == ry[k]);
    CHECK(r.p[k] == rp[k]);
  }
  BlockField acc = v;
  prolong_add(r, 2, acc);
  const BlockField pr = prolong_field(r, 2);
  for (std::size_t k = 0; k < fine.size(); ++k)
  {
    CHECK(acc.y[k] == doctest::Approx(v.y[k] + pr.y[k]));
    CHECK(acc.p[k] == doctest::Approx(v.p[k] + pr.p[k]));
  }
  BlockField wrong(GridSpec(15));
  CHECK_THROWS_AS(prolong_add(r, 2, wrong), std::invalid_argument);
}
