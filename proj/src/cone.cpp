#include "convalg/cone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace convalg {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Rank of the row set via Gaussian elimination with partial pivoting.
int matrix_rank(std::vector<std::vector<double>> rows, int cols) {
  double scale = 0.0;
  for (const auto& r : rows)
    for (double v : r) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0;
  const double tol = scale * 1e-12 * std::max<std::size_t>(rows.size(), static_cast<std::size_t>(cols));

  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
      if (std::abs(rows[r][c]) > std::abs(rows[pivot][c])) pivot = r;
    }
    if (std::abs(rows[pivot][c]) <= tol) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      const double f = rows[r][c] / rows[static_cast<std::size_t>(rank)][c];
      for (int cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[static_cast<std::size_t>(rank)][cc];
    }
    ++rank;
  }
  return rank;
}

// Least squares min ||A s - b|| by Householder QR on the columns of A.
// Returns false and sets *dependent to the offending column index when a
// column is numerically dependent on the preceding ones.
bool least_squares_qr(std::vector<std::vector<double>> cols, std::vector<double> b,
                      std::vector<double>& s, std::size_t* dependent) {
  const std::size_t p = cols.size();
  const std::size_t n = b.size();
  double scale = 0.0;
  for (const auto& c : cols) scale = std::max(scale, norm2(c));
  const double tol = std::max(scale, 1.0) * 1e-13;

  for (std::size_t k = 0; k < p; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k; i < n; ++i) alpha += cols[k][i] * cols[k][i];
    alpha = std::sqrt(alpha);
    if (alpha <= tol) {
      *dependent = k;
      return false;
    }
    if (cols[k][k] > 0.0) alpha = -alpha;
    // Householder vector kept in place of column k below the diagonal.
    std::vector<double> v(n - k, 0.0);
    v[0] = cols[k][k] - alpha;
    for (std::size_t i = k + 1; i < n; ++i) v[i - k] = cols[k][i];
    double vnorm2 = 0.0;
    for (double x : v) vnorm2 += x * x;
    cols[k][k] = alpha;
    for (std::size_t i = k + 1; i < n; ++i) cols[k][i] = 0.0;
    if (vnorm2 == 0.0) continue;
    for (std::size_t j = k + 1; j < p; ++j) {
      double proj = 0.0;
      for (std::size_t i = k; i < n; ++i) proj += v[i - k] * cols[j][i];
      proj = 2.0 * proj / vnorm2;
      for (std::size_t i = k; i < n; ++i) cols[j][i] -= proj * v[i - k];
    }
    double projb = 0.0;
    for (std::size_t i = k; i < n; ++i) projb += v[i - k] * b[i];
    projb = 2.0 * projb / vnorm2;
    for (std::size_t i = k; i < n; ++i) b[i] -= projb * v[i - k];
  }

  s.assign(p, 0.0);
  for (std::size_t k = p; k-- > 0;) {
    double acc = b[k];
    for (std::size_t j = k + 1; j < p; ++j) acc -= cols[j][k] * s[j];
    s[k] = acc / cols[k][k];
  }
  return true;
}

}  // namespace

std::vector<double> nonneg_least_squares(const std::vector<std::vector<double>>& columns,
                                         const std::vector<double>& b) {
  const std::size_t m = columns.size();
  const std::size_t n = b.size();
  for (const auto& c : columns) {
    if (c.size() != n) throw ValidationError("nonneg_least_squares: column size mismatch");
  }

  double scale = norm2(b);
  for (const auto& c : columns) scale = std::max(scale, norm2(c));
  const double w_tol = 1e-13 * std::max(1.0, scale * scale);

  std::vector<double> t(m, 0.0);
  std::vector<bool> passive(m, false);
  std::vector<std::size_t> pset;

  const int max_outer = 30 * static_cast<int>(m) + 10;
  for (int outer = 0; outer < max_outer; ++outer) {
    // gradient w = A^T (b - A t)
    std::vector<double> residual = b;
    for (std::size_t j = 0; j < m; ++j) {
      if (t[j] == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) residual[i] -= t[j] * columns[j][i];
    }
    double best = w_tol;
    std::size_t pick = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (passive[j]) continue;
      const double wj = dot(columns[j], residual);
      if (wj > best) {
        best = wj;
        pick = j;
      }
    }
    if (pick == m) break;  // Kuhn-Tucker conditions met
    passive[pick] = true;
    pset.push_back(pick);

    for (int inner = 0; inner < max_outer; ++inner) {
      std::vector<std::vector<double>> sub;
      sub.reserve(pset.size());
      for (std::size_t j : pset) sub.push_back(columns[j]);
      std::vector<double> s;
      std::size_t dep = 0;
      if (!least_squares_qr(sub, b, s, &dep)) {
        // dependent column adds nothing to the span; drop it
        passive[pset[dep]] = false;
        t[pset[dep]] = 0.0;
        pset.erase(pset.begin() + static_cast<std::ptrdiff_t>(dep));
        if (pset.empty()) break;
        continue;
      }
      bool feasible = true;
      for (double v : s) {
        if (v <= 0.0) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        for (std::size_t i = 0; i < pset.size(); ++i) t[pset[i]] = s[i];
        break;
      }
      // step toward s until the first passive coefficient hits zero
      double alpha = 1.0;
      std::size_t drop = pset.size();
      for (std::size_t i = 0; i < pset.size(); ++i) {
        if (s[i] <= 0.0) {
          const double ti = t[pset[i]];
          const double denom = ti - s[i];
          const double cand = denom > 0.0 ? ti / denom : 0.0;
          if (cand < alpha) {
            alpha = cand;
            drop = i;
          }
        }
      }
      for (std::size_t i = 0; i < pset.size(); ++i) {
        t[pset[i]] += alpha * (s[i] - t[pset[i]]);
      }
      if (drop < pset.size()) t[pset[drop]] = 0.0;
      for (std::size_t i = pset.size(); i-- > 0;) {
        if (t[pset[i]] <= 0.0) {
          t[pset[i]] = 0.0;
          passive[pset[i]] = false;
          pset.erase(pset.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      if (pset.empty()) break;
    }
  }
  return t;
}

ConvexCone::ConvexCone(int dim, std::vector<std::vector<double>> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ < 1) throw ValidationError("cone dimension must be positive");
  if (generators_.empty()) throw ValidationError("cone needs at least one generator");
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != dim_) {
      throw ValidationError("generator dimension mismatch");
    }
    for (double v : g) {
      if (!std::isfinite(v)) throw ValidationError("generator has non-finite entry");
    }
  }
  if (matrix_rank(generators_, dim_) < dim_) {
    throw ValidationError("generators do not span R^" + std::to_string(dim_) +
                          " (cone not full-dimensional)");
  }

  // orthant detection: every generator has a single positive entry and all
  // axes are covered
  std::vector<bool> axis_seen(static_cast<std::size_t>(dim_), false);
  axis_orthant_ = true;
  for (const auto& g : generators_) {
    int nonzero_axis = -1;
    for (int j = 0; j < dim_; ++j) {
      if (g[static_cast<std::size_t>(j)] != 0.0) {
        if (nonzero_axis >= 0 || g[static_cast<std::size_t>(j)] < 0.0) {
          nonzero_axis = -2;
          break;
        }
        nonzero_axis = j;
      }
    }
    if (nonzero_axis < 0) {
      axis_orthant_ = false;
      break;
    }
    axis_seen[static_cast<std::size_t>(nonzero_axis)] = true;
  }
  if (axis_orthant_) {
    for (bool seen : axis_seen) axis_orthant_ = axis_orthant_ && seen;
  }
}

bool ConvexCone::contains(const std::vector<double>& x, double tol) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw ValidationError("contains: point dimension mismatch");
  }
  if (axis_orthant_) {
    for (double v : x) {
      if (v < -tol) return false;
    }
    return true;
  }
  const std::vector<double> t = nonneg_least_squares(generators_, x);
  std::vector<double> residual = x;
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    for (std::size_t i = 0; i < x.size(); ++i) residual[i] -= t[j] * generators_[j][i];
  }
  return norm2(residual) <= tol * (1.0 + norm2(x));
}

bool ConvexCone::dual_contains(const std::vector<double>& y, double tol) const {
  if (static_cast<int>(y.size()) != dim_) {
    throw ValidationError("dual_contains: point dimension mismatch");
  }
  const double ny = norm2(y);
  for (const auto& g : generators_) {
    if (dot(y, g) < -tol * ny * norm2(g)) return false;
  }
  return true;
}

ConvexCone ConvexCone::orthant(int n) {
  if (n < 1) throw ValidationError("orthant dimension must be positive");
  std::vector<std::vector<double>> gens(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int j = 0; j < n; ++j) gens[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1.0;
  return ConvexCone(n, std::move(gens));
}

}  // namespace convalg
