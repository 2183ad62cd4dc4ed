#ifndef CONVALG_CONE_HPP
#define CONVALG_CONE_HPP

#include <vector>

#include "convalg/errors.hpp"

namespace convalg {

/// min ||A t - b||_2 over t >= 0, where A has the given columns (each of
/// size b.size()). Lawson-Hanson active-set iteration with Householder QR
/// subproblem solves; rank-deficient passive sets shed dependent columns.
std::vector<double> nonneg_least_squares(const std::vector<std::vector<double>>& columns,
                                         const std::vector<double>& b);

/// Finitely generated closed convex cone {sum_i t_i v_i : t_i >= 0}.
/// Generators must span R^n (full-dimensional).
class ConvexCone {
 public:
  ConvexCone(int dim, std::vector<std::vector<double>> generators);

  int dim() const { return dim_; }
  const std::vector<std::vector<double>>& generators() const { return generators_; }

  /// Membership: distance(x, cone) <= tol * (1 + |x|_2), distance via
  /// nonnegative least squares. Axis-aligned orthants take the exact
  /// coordinate test x_j >= -tol instead.
  bool contains(const std::vector<double>& x, double tol = 1e-9) const;

  /// Dual-cone membership: y . v_i >= -tol |y| |v_i| for every generator
  /// (necessary and sufficient for finitely generated cones).
  bool dual_contains(const std::vector<double>& y, double tol = 1e-9) const;

  /// Nonnegative orthant of R^n.
  static ConvexCone orthant(int n);

  bool operator==(const ConvexCone&) const = default;

 private:
  int dim_;
  std::vector<std::vector<double>> generators_;
  bool axis_orthant_ = false;
};

}  // namespace convalg

#endif  // CONVALG_CONE_HPP
