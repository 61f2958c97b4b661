#ifndef OCMG_GRID_HPP
#define OCMG_GRID_HPP

// Uniform-grid fields on the unit square and the matrix-free operators of the
// discrete optimality system: the five-point Laplacian L_h, the nine-point
// bilinear mass stencil Q_h and the 2x2 block saddle operator
//
//     A_h = [ L_h   -M/alpha ]
//           [ I      L_h     ]
//
// where M is the identity or a diagonal 0/1 active-set mask.
//
// Only interior unknowns are stored; the homogeneous Dirichlet boundary is
// implicit. Interior nodes (i*h, j*h), 1 <= i,j <= N-1, are stored
// lexicographically with j (the x2 index) outer and i (the x1 index) inner:
//
//     index(i, j) = (j - 1) * (N - 1) + (i - 1)

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ocmg {

/// Uniform mesh with N subdivisions per axis, h = 1/N.
class GridSpec
{
public:
  explicit GridSpec(int N);

  int N() const noexcept { return N_; }
  double h() const noexcept { return h_; }
  /// Interior nodes per axis, N - 1.
  int n() const noexcept { return N_ - 1; }
  /// Interior unknowns per scalar field, (N - 1)^2.
  std::size_t size() const noexcept
  {
    return static_cast<std::size_t>(N_ - 1) * static_cast<std::size_t>(N_ - 1);
  }
  std::size_t index(int i, int j) const noexcept
  {
    return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(N_ - 1) +
           static_cast<std::size_t>(i - 1);
  }

  friend bool operator==(const GridSpec &a, const GridSpec &b) noexcept
  {
    return a.N_ == b.N_;
  }

private:
  int N_;
  double h_;
};

class ScalarField
{
public:
  explicit ScalarField(const GridSpec &grid, double fill = 0.0);
  ScalarField(const GridSpec &grid, std::vector<double> values);

  const GridSpec &grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  // 1-based interior node indices.
  double &operator()(int i, int j) { return values_[grid_.index(i, j)]; }
  double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }

  double &operator[](std::size_t k) { return values_[k]; }
  double operator[](std::size_t k) const { return values_[k]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  void fill(double v);

private:
  GridSpec grid_;
  std::vector<double> values_;
};

/// The (state, adjoint) pair v_h = (y_h, p_h).
struct BlockField
{
  explicit BlockField(const GridSpec &grid) : y(grid), p(grid) {}
  BlockField(ScalarField y_, ScalarField p_);

  const GridSpec &grid() const noexcept { return y.grid(); }

  ScalarField y;
  ScalarField p;
};

/// Diagonal 0/1 matrix stored as one flag per interior node.
class MaskField
{
public:
  explicit MaskField(const GridSpec &grid, std::uint8_t fill = 1);
  MaskField(const GridSpec &grid, std::vector<std::uint8_t> values);

  const GridSpec &grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::uint8_t operator[](std::size_t k) const { return values_[k]; }
  void set(std::size_t k, bool on) { values_[k] = on ? 1 : 0; }
  std::span<const std::uint8_t> values() const noexcept { return values_; }
  std::size_t count() const noexcept;

  friend bool operator==(const MaskField &a, const MaskField &b)
  {
    return a.grid_ == b.grid_ && a.values_ == b.values_;
  }

private:
  GridSpec grid_;
  std::vector<std::uint8_t> values_;
};

/// Matrix-free A_h on one grid. The (1,2) block is -diag(c)/alpha where c is
/// either absent (identity), a 0/1 mask on the level it was generated on, or
/// restricted coupling weights in [0,1] on coarser levels of a hierarchy.
class SaddleOperator
{
public:
  SaddleOperator(const GridSpec &grid, double alpha);
  SaddleOperator(const GridSpec &grid, double alpha, const MaskField &mask);

  /// Coupling weights in [0,1]; used for re-discretized coarse operators.
  static SaddleOperator with_coupling(const GridSpec &grid, double alpha,
                                      std::vector<double> weights);

  const GridSpec &grid() const noexcept { return grid_; }
  double alpha() const noexcept { return alpha_; }
  bool has_mask() const noexcept { return coupling_.has_value(); }
  /// Empty span when the (1,2) block is the identity.
  std::span<const double> coupling() const noexcept
  {
    return coupling_ ? std::span<const double>(*coupling_) : std::span<const double>();
  }

private:
  GridSpec grid_;
  double alpha_;
  std::optional<std::vector<double>> coupling_;
};

// Flat-buffer kernels. All spans have grid.size() entries; `out` must not
// alias the input.
void apply_laplacian(const GridSpec &grid, std::span<const double> u, std::span<double> out);
void apply_mass(const GridSpec &grid, std::span<const double> u, std::span<double> out);
void apply_saddle(const SaddleOperator &op, const BlockField &v, BlockField &out);
/// out = b - A v
void residual(const SaddleOperator &op, const BlockField &b, const BlockField &v,
              BlockField &out);

/// (1/h^2)(4u_ij - u_i-1,j - u_i+1,j - u_i,j-1 - u_i,j+1), zero Dirichlet data.
ScalarField apply_laplacian(const ScalarField &u, const GridSpec &grid);
/// (h^2/36)[1 4 1; 4 16 4; 1 4 1] applied with zero Dirichlet data.
ScalarField apply_mass(const ScalarField &u, const GridSpec &grid);
/// (L y - (M o p)/alpha, y + L p)
BlockField apply_saddle(const SaddleOperator &op, const BlockField &v);
BlockField residual(const SaddleOperator &op, const BlockField &b, const BlockField &v);

/// Euclidean norm over all 2(N-1)^2 entries.
double block_norm2(const BlockField &v);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
/// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);
void axpy(double a, const BlockField &x, BlockField &y);

} // namespace ocmg

#endif // OCMG_GRID_HPP
