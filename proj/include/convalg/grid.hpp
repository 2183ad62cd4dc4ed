#ifndef CONVALG_GRID_HPP
#define CONVALG_GRID_HPP

#include <complex>
#include <optional>
#include <vector>

#include "convalg/cone.hpp"
#include "convalg/errors.hpp"

namespace convalg {

using Complex = std::complex<double>;

/// Uniform sampling lattice: points x = origin + spacing * (i_1, ..., i_n)
/// with 0 <= i_j <= extent / spacing on every axis. origin defaults to 0
/// (box [0, L]^n); a Fourier-style box [-L, L]^n is extent 2L with origin
/// -L per axis. extent/spacing and origin/spacing must be integral.
struct GridGeometry {
  int dim = 1;
  double extent = 1.0;
  double spacing = 1.0;
  std::vector<double> origin;  // empty means all zeros

  void validate() const;
  int points_per_axis() const;
  std::size_t total_points() const;
  double origin_coord(int axis) const;

  bool operator==(const GridGeometry&) const = default;
};

/// Complex density sampled on a grid, optionally masked to a convex cone
/// (samples at points outside the cone are forced to exactly zero).
class GridFunction {
 public:
  GridFunction(GridGeometry geom, std::vector<Complex> values,
               std::optional<ConvexCone> cone = std::nullopt);

  /// Samples fn at every grid point.
  template <typename F>
  static GridFunction sample(GridGeometry geom, F&& fn,
                             std::optional<ConvexCone> cone = std::nullopt) {
    geom.validate();
    std::vector<Complex> values;
    values.reserve(geom.total_points());
    std::vector<double> x(static_cast<std::size_t>(geom.dim), 0.0);
    const std::size_t total = geom.total_points();
    for (std::size_t flat = 0; flat < total; ++flat) {
      point_coords(geom, flat, x);
      values.push_back(fn(x));
    }
    return GridFunction(std::move(geom), std::move(values), std::move(cone));
  }

  /// Discrete unit: mass 1/h^n concentrated at the grid point nearest to
  /// site (which must lie on the grid).
  static GridFunction delta_at(const GridGeometry& geom, const std::vector<double>& site,
                               std::optional<ConvexCone> cone = std::nullopt);

  const GridGeometry& geometry() const { return geom_; }
  const std::vector<Complex>& values() const { return values_; }
  const std::optional<ConvexCone>& cone() const { return cone_; }

  /// Coordinates of the grid point with the given row-major flat index.
  std::vector<double> point(std::size_t flat) const;

  /// h^n, the quadrature weight of one sample.
  double cell_volume() const;

 private:
  static void point_coords(const GridGeometry& geom, std::size_t flat, std::vector<double>& out);
  void apply_mask();

  GridGeometry geom_;
  std::vector<Complex> values_;
  std::optional<ConvexCone> cone_;
};

/// Rectangle-rule convolution (f1 * f2)(x) ~ h^n sum_y f1(y) f2(x - y),
/// summed over grid points y with x - y on the grid. The output lives on
/// the same grid as the inputs, so mass convolved past the box boundary is
/// truncated. Inputs must share geometry and cone mask; cone-masked inputs
/// give a cone-masked output. Per-sample reductions use pairwise summation.
GridFunction grid_convolve(const GridFunction& f1, const GridFunction& f2);

/// Exponential character Phi(x) = exp(zeta . x), zeta = xi + i eta.
struct ExpCharacter {
  std::vector<Complex> zeta;

  std::vector<double> xi() const;

  /// |Phi| <= 1 on the cone, which holds iff xi . v <= 0 for every
  /// generator v (i.e. -xi lies in the dual cone).
  bool bounded_on(const ConvexCone& cone, double tol = 1e-12) const;

  /// xi == 0, so |Phi(x)| = 1 everywhere.
  bool is_fourier(double tol = 1e-12) const;

  Complex value(const std::vector<double>& x) const;
};

/// Rectangle-rule pairing phi(f) ~ h^n sum_x exp(zeta . x) f(x). Cone-masked
/// inputs require the character bounded on the cone; unmasked inputs require
/// a pure Fourier character (xi == 0).
Complex char_evaluate(const ExpCharacter& chi, const GridFunction& f);

/// |phi(f1 * f2) - phi(f1) phi(f2)| with everything computed on the grid;
/// expected O(h) plus box-truncation error.
double char_multiplicativity_residual(const ExpCharacter& chi, const GridFunction& f1,
                                      const GridFunction& f2);

}  // namespace convalg

#endif  // CONVALG_GRID_HPP
