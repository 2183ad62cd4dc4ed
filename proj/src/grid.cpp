#include "convalg/grid.hpp"

#include <cmath>
#include <string>

namespace convalg {

namespace {

constexpr double kAlignTol = 1e-9;
constexpr double kMaskTol = 1e-9;
constexpr std::size_t kMaxGridPoints = std::size_t{1} << 24;

// Pairwise (cascade) summation: deterministic and accurate to
// O(log n) rounding regardless of term count.
Complex pairwise_sum(const Complex* terms, std::size_t n) {
  if (n <= 8) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) s += terms[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(terms, half) + pairwise_sum(terms + half, n - half);
}

}  // namespace

void GridGeometry::validate() const {
  if (dim < 1) throw ValidationError("grid dimension must be positive");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw ValidationError("grid spacing must be positive and finite");
  }
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw ValidationError("grid extent must be positive and finite");
  }
  const double steps = extent / spacing;
  if (std::abs(steps - std::round(steps)) > kAlignTol * std::max(1.0, steps)) {
    throw ValidationError("extent must be an integer multiple of spacing");
  }
  if (!origin.empty()) {
    if (static_cast<int>(origin.size()) != dim) {
      throw ValidationError("origin dimension mismatch");
    }
    for (double o : origin) {
      const double cells = o / spacing;
      if (std::abs(cells - std::round(cells)) > kAlignTol * std::max(1.0, std::abs(cells))) {
        throw ValidationError("origin must lie on the spacing lattice");
      }
    }
  }
  std::size_t total = 1;
  const auto per_axis = static_cast<std::size_t>(points_per_axis());
  for (int a = 0; a < dim; ++a) {
    if (total > kMaxGridPoints / per_axis) {
      throw ValidationError("grid too large");
    }
    total *= per_axis;
  }
}

int GridGeometry::points_per_axis() const {
  return static_cast<int>(std::llround(extent / spacing)) + 1;
}

std::size_t GridGeometry::total_points() const {
  std::size_t total = 1;
  for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(points_per_axis());
  return total;
}

double GridGeometry::origin_coord(int axis) const {
  return origin.empty() ? 0.0 : origin[static_cast<std::size_t>(axis)];
}

GridFunction::GridFunction(GridGeometry geom, std::vector<Complex> values,
                           std::optional<ConvexCone> cone)
    : geom_(std::move(geom)), values_(std::move(values)), cone_(std::move(cone)) {
  geom_.validate();
  if (values_.size() != geom_.total_points()) {
    throw ValidationError("grid value count " + std::to_string(values_.size()) +
                          " does not match geometry (" + std::to_string(geom_.total_points()) +
                          " points)");
  }
  if (cone_ && cone_->dim() != geom_.dim) {
    throw ValidationError("cone dimension does not match grid dimension");
  }
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError("grid sample is not finite");
    }
  }
  apply_mask();
}

void GridFunction::point_coords(const GridGeometry& geom, std::size_t flat,
                                std::vector<double>& out) {
  const auto per_axis = static_cast<std::size_t>(geom.points_per_axis());
  for (int a = geom.dim - 1; a >= 0; --a) {
    const std::size_t i = flat % per_axis;
    flat /= per_axis;
    out[static_cast<std::size_t>(a)] =
        geom.origin_coord(a) + geom.spacing * static_cast<double>(i);
  }
}

std::vector<double> GridFunction::point(std::size_t flat) const {
  std::vector<double> x(static_cast<std::size_t>(geom_.dim), 0.0);
  point_coords(geom_, flat, x);
  return x;
}

double GridFunction::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < geom_.dim; ++a) v *= geom_.spacing;
  return v;
}

void GridFunction::apply_mask() {
  if (!cone_) return;
  std::vector<double> x(static_cast<std::size_t>(geom_.dim), 0.0);
  for (std::size_t flat = 0; flat < values_.size(); ++flat) {
    point_coords(geom_, flat, x);
    if (!cone_->contains(x, kMaskTol)) values_[flat] = Complex{0.0, 0.0};
  }
}

GridFunction GridFunction::delta_at(const GridGeometry& geom, const std::vector<double>& site,
                                    std::optional<ConvexCone> cone) {
  geom.validate();
  if (static_cast<int>(site.size()) != geom.dim) {
    throw ValidationError("delta_at: site dimension mismatch");
  }
  const int per_axis = geom.points_per_axis();
  std::size_t flat = 0;
  for (int a = 0; a < geom.dim; ++a) {
    const double steps = (site[static_cast<std::size_t>(a)] - geom.origin_coord(a)) / geom.spacing;
    const auto i = static_cast<long long>(std::llround(steps));
    if (std::abs(steps - static_cast<double>(i)) > kAlignTol * std::max(1.0, std::abs(steps)) ||
        i < 0 || i >= per_axis) {
      throw ValidationError("delta_at: site is not a grid point");
    }
    flat = flat * static_cast<std::size_t>(per_axis) + static_cast<std::size_t>(i);
  }
  std::vector<Complex> values(geom.total_points(), Complex{0.0, 0.0});
  double weight = 1.0;
  for (int a = 0; a < geom.dim; ++a) weight *= geom.spacing;
  values[flat] = Complex{1.0 / weight, 0.0};
  return GridFunction(geom, std::move(values), std::move(cone));
}

GridFunction grid_convolve(const GridFunction& f1, const GridFunction& f2) {
  if (f1.geometry() != f2.geometry()) throw ValidationError("grid_convolve: geometry mismatch");
  if (f1.cone() != f2.cone()) throw ValidationError("grid_convolve: cone masks differ");
  const GridGeometry& geom = f1.geometry();
  const int n = geom.dim;
  const int per_axis = geom.points_per_axis();

  // index offset of coordinate zero: x - y = h * (i - j) lands on index
  // i - j + off, off_a = -origin_a / h
  std::vector<long long> off(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    off[static_cast<std::size_t>(a)] = std::llround(-geom.origin_coord(a) / geom.spacing);
  }

  const std::size_t total = geom.total_points();
  std::vector<Complex> out(total, Complex{0.0, 0.0});
  std::vector<Complex> terms;
  terms.reserve(total);

  std::vector<long long> idx(static_cast<std::size_t>(n), 0);   // output index
  std::vector<long long> jlo(static_cast<std::size_t>(n), 0);   // window bounds
  std::vector<long long> jhi(static_cast<std::size_t>(n), 0);
  std::vector<long long> j(static_cast<std::size_t>(n), 0);

  const std::vector<Complex>& v1 = f1.values();
  const std::vector<Complex>& v2 = f2.values();
  const double weight = f1.cell_volume();

  for (std::size_t flat = 0; flat < total; ++flat) {
    // decode output index
    std::size_t rest = flat;
    for (int a = n - 1; a >= 0; --a) {
      idx[static_cast<std::size_t>(a)] = static_cast<long long>(rest % static_cast<std::size_t>(per_axis));
      rest /= static_cast<std::size_t>(per_axis);
    }
    // per-axis window: 0 <= j_a < per_axis and 0 <= i_a - j_a + off_a < per_axis
    bool empty = false;
    for (int a = 0; a < n; ++a) {
      const long long s = idx[static_cast<std::size_t>(a)] + off[static_cast<std::size_t>(a)];
      jlo[static_cast<std::size_t>(a)] = std::max<long long>(0, s - (per_axis - 1));
      jhi[static_cast<std::size_t>(a)] = std::min<long long>(per_axis - 1, s);
      if (jlo[static_cast<std::size_t>(a)] > jhi[static_cast<std::size_t>(a)]) {
        empty = true;
        break;
      }
    }
    if (empty) continue;

    terms.clear();
    j = jlo;
    for (;;) {
      std::size_t jflat = 0;
      std::size_t kflat = 0;
      for (int a = 0; a < n; ++a) {
        const long long ja = j[static_cast<std::size_t>(a)];
        const long long ka = idx[static_cast<std::size_t>(a)] + off[static_cast<std::size_t>(a)] - ja;
        jflat = jflat * static_cast<std::size_t>(per_axis) + static_cast<std::size_t>(ja);
        kflat = kflat * static_cast<std::size_t>(per_axis) + static_cast<std::size_t>(ka);
      }
      const Complex prod = v1[jflat] * v2[kflat];
      if (prod != Complex{0.0, 0.0}) terms.push_back(prod);

      int a = n - 1;
      while (a >= 0 && j[static_cast<std::size_t>(a)] == jhi[static_cast<std::size_t>(a)]) {
        j[static_cast<std::size_t>(a)] = jlo[static_cast<std::size_t>(a)];
        --a;
      }
      if (a < 0) break;
      ++j[static_cast<std::size_t>(a)];
    }
    out[flat] = weight * pairwise_sum(terms.data(), terms.size());
  }

  return GridFunction(geom, std::move(out), f1.cone());
}

std::vector<double> ExpCharacter::xi() const {
  std::vector<double> out;
  out.reserve(zeta.size());
  for (const Complex& z : zeta) out.push_back(z.real());
  return out;
}

bool ExpCharacter::bounded_on(const ConvexCone& cone, double tol) const {
  if (static_cast<int>(zeta.size()) != cone.dim()) {
    throw ValidationError("character dimension does not match cone");
  }
  const std::vector<double> re = xi();
  double nxi = 0.0;
  for (double v : re) nxi += v * v;
  nxi = std::sqrt(nxi);
  for (const auto& g : cone.generators()) {
    double d = 0.0;
    double ng = 0.0;
    for (std::size_t a = 0; a < g.size(); ++a) {
      d += re[a] * g[a];
      ng += g[a] * g[a];
    }
    if (d > tol * (1.0 + nxi * std::sqrt(ng))) return false;
  }
  return true;
}

bool ExpCharacter::is_fourier(double tol) const {
  for (const Complex& z : zeta) {
    if (std::abs(z.real()) > tol) return false;
  }
  return true;
}

Complex ExpCharacter::value(const std::vector<double>& x) const {
  if (x.size() != zeta.size()) throw ValidationError("character dimension mismatch");
  Complex dot{0.0, 0.0};
  for (std::size_t a = 0; a < x.size(); ++a) dot += zeta[a] * x[a];
  return std::exp(dot);
}

Complex char_evaluate(const ExpCharacter& chi, const GridFunction& f) {
  if (static_cast<int>(chi.zeta.size()) != f.geometry().dim) {
    throw ValidationError("char_evaluate: character dimension mismatch");
  }
  if (f.cone()) {
    if (!chi.bounded_on(*f.cone())) {
      throw ValidationError("char_evaluate: character unbounded on the support cone");
    }
  } else if (!chi.is_fourier()) {
    throw ValidationError(
        "char_evaluate: functions on all of R^n require a pure Fourier character (Re zeta = 0)");
  }

  std::vector<Complex> terms;
  terms.reserve(f.values().size());
  for (std::size_t flat = 0; flat < f.values().size(); ++flat) {
    const Complex v = f.values()[flat];
    if (v == Complex{0.0, 0.0}) continue;
    const std::vector<double> p = f.point(flat);
    Complex dot{0.0, 0.0};
    for (std::size_t a = 0; a < p.size(); ++a) dot += chi.zeta[a] * p[a];
    terms.push_back(std::exp(dot) * v);
  }
  return f.cell_volume() * pairwise_sum(terms.data(), terms.size());
}

double char_multiplicativity_residual(const ExpCharacter& chi, const GridFunction& f1,
                                      const GridFunction& f2) {
  const Complex lhs = char_evaluate(chi, grid_convolve(f1, f2));
  const Complex rhs = char_evaluate(chi, f1) * char_evaluate(chi, f2);
  return std::abs(lhs - rhs);
}

}  // namespace convalg
