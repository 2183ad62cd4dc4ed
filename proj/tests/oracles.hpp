// Test-only oracles and random-instance generators. Everything here is
// deliberately independent of the library's convolution path: dense
// schoolbook products, exhaustive scans, closed forms.
#ifndef CONVALG_TESTS_ORACLES_HPP
#define CONVALG_TESTS_ORACLES_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "convalg/character.hpp"
#include "convalg/finite_support.hpp"
#include "convalg/monoid.hpp"

namespace convalg::testing {

// Dense schoolbook polynomial product: c[k] = sum_{i+j=k} a[i] b[j].
inline std::vector<double> polymul_schoolbook(const std::vector<double>& a,
                                              const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline std::vector<Complex> polymul_schoolbook(const std::vector<Complex>& a,
                                               const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> c(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Exhaustive decomposition scan on N^k: walk the whole box 0 <= x <= z and
// keep the pairs that recombine to z.
inline std::vector<std::pair<Element, Element>> decompositions_bruteforce(
    const MonoidDescriptor& m, const Element& z) {
  std::vector<std::pair<Element, Element>> out;
  Element x = identity(m);
  for (;;) {
    bool fits = true;
    Element y;
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
      const std::int64_t rest = z.coords[j] - x.coords[j];
      if (rest < 0) {
        fits = false;
        break;
      }
      y.coords.push_back(rest);
    }
    if (fits && combine(m, x, y) == z) out.emplace_back(x, y);

    int j = m.dim - 1;
    while (j >= 0 && x.coords[static_cast<std::size_t>(j)] == z.coords[static_cast<std::size_t>(j)]) {
      x.coords[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++x.coords[static_cast<std::size_t>(j)];
  }
  return out;
}

// Dense polynomial view of a function on N (dim 1).
inline std::vector<Complex> to_dense(const FiniteSupportFunction& f, std::size_t degree_bound) {
  std::vector<Complex> c(degree_bound + 1, Complex{0.0, 0.0});
  for (const auto& [a, v] : f.terms()) c[static_cast<std::size_t>(a.coords[0])] = v;
  return c;
}

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine);
  }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
  }
  // uniform on the disc of the given radius
  Complex disc(double radius) {
    for (;;) {
      const double re = uniform(-radius, radius);
      const double im = uniform(-radius, radius);
      if (re * re + im * im <= radius * radius) return {re, im};
    }
  }
  Complex unit_circle() {
    const double theta = uniform(0.0, 6.283185307179586);
    return {std::cos(theta), std::sin(theta)};
  }

  Element element(const MonoidDescriptor& m, std::int64_t lo, std::int64_t hi) {
    Element a;
    a.coords.reserve(static_cast<std::size_t>(m.dim));
    const std::int64_t floor = m.kind == MonoidKind::NatPow ? std::max<std::int64_t>(lo, 0) : lo;
    for (int j = 0; j < m.dim; ++j) a.coords.push_back(integer(floor, hi));
    return a;
  }

  // Random function with at most max_support terms, coefficients in the
  // unit disc, support coordinates in [lo, hi].
  FiniteSupportFunction function(const MonoidDescriptor& m, int max_support, std::int64_t lo,
                                 std::int64_t hi) {
    FiniteSupportFunction f(m);
    const int terms = static_cast<int>(integer(1, max_support));
    for (int i = 0; i < terms; ++i) f.add_term(element(m, lo, hi), disc(1.0));
    return f;
  }

  FiniteSupportFunction integer_function(const MonoidDescriptor& m, int max_support,
                                         std::int64_t lo, std::int64_t hi) {
    FiniteSupportFunction f(m);
    const int terms = static_cast<int>(integer(1, max_support));
    for (int i = 0; i < terms; ++i) {
      f.add_term(element(m, lo, hi), Complex{static_cast<double>(integer(-3, 3)),
                                             static_cast<double>(integer(-3, 3))});
    }
    return f;
  }

  // Power character from the families the modules support: |z| <= radius
  // on N^k, |z| = 1 on Z^k.
  Character character(const MonoidDescriptor& m, double nat_radius = 2.0) {
    std::vector<Complex> base;
    base.reserve(static_cast<std::size_t>(m.dim));
    for (int j = 0; j < m.dim; ++j) {
      base.push_back(m.kind == MonoidKind::NatPow ? disc(nat_radius) : unit_circle());
    }
    return Character(m, std::move(base));
  }
};

// Per-term comparison: |f(a) - g(a)| <= tol over the union of supports.
inline bool terms_close(const FiniteSupportFunction& f, const FiniteSupportFunction& g,
                        double tol) {
  for (const auto& [a, c] : f.terms()) {
    if (std::abs(c - g.coeff(a)) > tol) return false;
  }
  for (const auto& [a, c] : g.terms()) {
    if (std::abs(c - f.coeff(a)) > tol) return false;
  }
  return true;
}

}  // namespace convalg::testing

#endif  // CONVALG_TESTS_ORACLES_HPP
