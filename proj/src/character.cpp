#include "convalg/character.hpp"

#include <cmath>
#include <string>

namespace convalg {

namespace {
constexpr double kBoundedTol = 1e-12;
}

Complex integer_power(Complex z, std::int64_t e) {
  if (e == 0) return {1.0, 0.0};
  const bool negative = e < 0;
  if (negative && z == Complex{0.0, 0.0}) {
    throw ValidationError("integer_power: zero base with negative exponent");
  }
  std::uint64_t n = negative ? -static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  Complex result{1.0, 0.0};
  if (n <= 16) {
    for (std::uint64_t i = 0; i < n; ++i) result *= z;
  } else {
    Complex p = z;
    while (n > 0) {
      if (n & 1) result *= p;
      n >>= 1;
      if (n) p *= p;
    }
  }
  return negative ? 1.0 / result : result;
}

Character::Character(MonoidDescriptor m, std::vector<Complex> base)
    : monoid_(m), base_(std::move(base)) {
  if (static_cast<int>(base_.size()) != monoid_.dim) {
    throw ValidationError("character base has " + std::to_string(base_.size()) +
                          " entries, monoid dimension is " + std::to_string(monoid_.dim));
  }
  if (monoid_.kind == MonoidKind::IntPow) {
    for (const Complex& z : base_) {
      if (z == Complex{0.0, 0.0}) {
        throw ValidationError("character on Z^k requires nonzero base entries");
      }
    }
  }
}

Complex Character::value(const Element& a) const {
  check_element(monoid_, a);
  Complex out{1.0, 0.0};
  for (std::size_t j = 0; j < base_.size(); ++j) {
    out *= integer_power(base_[j], a.coords[j]);
  }
  return out;
}

bool Character::is_bounded() const {
  for (const Complex& z : base_) {
    const double r = std::abs(z);
    if (monoid_.kind == MonoidKind::NatPow) {
      if (r > 1.0 + kBoundedTol) return false;
    } else {
      if (std::abs(r - 1.0) > kBoundedTol) return false;
    }
  }
  return true;
}

Complex evaluate(const Character& chi, const FiniteSupportFunction& f) {
  if (chi.monoid() != f.monoid()) throw ValidationError("evaluate: monoid mismatch");
  Complex sum{0.0, 0.0};
  for (const auto& [a, c] : f.terms()) sum += chi.value(a) * c;
  return sum;
}

}  // namespace convalg
