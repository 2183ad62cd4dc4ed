#ifndef CONVALG_CHARACTER_HPP
#define CONVALG_CHARACTER_HPP

#include <cstdint>
#include <vector>

#include "convalg/finite_support.hpp"
#include "convalg/monoid.hpp"

namespace convalg {

/// z^e for integer e, with 0^0 = 1. Uses square-and-multiply above
/// exponent magnitude 16. Zero base with negative exponent is rejected.
Complex integer_power(Complex z, std::int64_t e);

/// Coordinatewise power character Phi(a) = prod_j base_j^(a_j), so that
/// Phi(0) = 1 and Phi(a + b) = Phi(a) Phi(b). On Z^k every base entry
/// must be nonzero.
class Character {
 public:
  Character(MonoidDescriptor m, std::vector<Complex> base);

  const MonoidDescriptor& monoid() const { return monoid_; }
  const std::vector<Complex>& base() const { return base_; }

  /// Phi(a).
  Complex value(const Element& a) const;

  /// True iff |base_j| <= 1 for all j on N^k, |base_j| = 1 for all j on
  /// Z^k, within 1e-12 on the modulus. Bounded characters satisfy
  /// |Phi(a)| <= 1 everywhere.
  bool is_bounded() const;

 private:
  MonoidDescriptor monoid_;
  std::vector<Complex> base_;
};

/// The induced linear functional phi(f) = sum_a Phi(a) f(a). Multiplicative
/// for convolution: phi(f * g) = phi(f) phi(g).
Complex evaluate(const Character& chi, const FiniteSupportFunction& f);

}  // namespace convalg

#endif  // CONVALG_CHARACTER_HPP
