#ifndef CONVALG_SUMMABLE_HPP
#define CONVALG_SUMMABLE_HPP

#include "convalg/character.hpp"
#include "convalg/finite_support.hpp"

namespace convalg {

struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Summable (l1) function represented as an exact finite part plus a
/// certified tail bound tau: the l1 mass outside the stored support is at
/// most tau. Every derived quantity carries the truncation error as an
/// explicit interval or bound instead of silently dropping it.
class SummableFunction {
 public:
  SummableFunction(FiniteSupportFunction finite_part, double tail_bound);

  const FiniteSupportFunction& finite_part() const { return finite_part_; }
  double tail_bound() const { return tail_bound_; }
  const MonoidDescriptor& monoid() const { return finite_part_.monoid(); }

  /// [sum of |coeff| over the finite support, same + tau]; the true l1
  /// norm lies in this interval.
  NormInterval l1_norm_interval() const;

 private:
  FiniteSupportFunction finite_part_;
  double tail_bound_;
};

/// Convolution with sound tail propagation: finite parts convolve exactly,
/// and the omitted mass of f1*f2 is bounded by U1 tau2 + U2 tau1 + tau1 tau2
/// with U_i the l1 norm of f_i's finite part (submultiplicativity applied
/// to the split f = finite + tail).
SummableFunction convolve(const SummableFunction& f1, const SummableFunction& f2);

struct CharacterSum {
  Complex value;
  double error_bound = 0.0;
};

/// phi(f) for a bounded character: the finite-part sum, with the omitted
/// tail contributing at most tau since |Phi(a)| <= 1. Unbounded characters
/// are rejected.
CharacterSum evaluate(const Character& chi, const SummableFunction& f);

/// Truncated geometric series on N: j -> r^j for 0 <= j <= terms, with
/// tail bound r^(terms+1) / (1 - r). Requires 0 <= r < 1.
SummableFunction geometric(const MonoidDescriptor& m, double ratio, int terms);

}  // namespace convalg

#endif  // CONVALG_SUMMABLE_HPP
