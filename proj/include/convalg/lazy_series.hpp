#ifndef CONVALG_LAZY_SERIES_HPP
#define CONVALG_LAZY_SERIES_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "convalg/character.hpp"
#include "convalg/finite_support.hpp"
#include "convalg/monoid.hpp"

namespace convalg {

/// Arbitrary coefficient function on a finite-fiber monoid, evaluated on
/// demand through a total rule. Rules must be pure: evaluations are
/// memoized, and repeated queries return the identical value. Copies share
/// the memo store.
class LazyFunction {
 public:
  using Rule = std::function<Complex(const Element&)>;

  LazyFunction(MonoidDescriptor m, Rule rule);

  const MonoidDescriptor& monoid() const { return monoid_; }

  /// Coefficient at a.
  Complex at(const Element& a) const;

  /// Constant coefficient 1.
  static LazyFunction ones(const MonoidDescriptor& m);
  /// ratio^(sum of coordinates); on N this is j -> ratio^j.
  static LazyFunction geometric_rule(const MonoidDescriptor& m, double ratio);
  /// 1 at a, 0 elsewhere.
  static LazyFunction delta_rule(const MonoidDescriptor& m, Element a);
  /// Coefficient lookup in a finitely supported function.
  static LazyFunction from_finite(FiniteSupportFunction f);

 private:
  struct Memo {
    std::mutex lock;
    std::map<Element, Complex> values;
  };

  MonoidDescriptor monoid_;
  Rule rule_;
  std::shared_ptr<Memo> memo_;
};

/// Total convolution at a single element: the exact finite sum of
/// f1(x) f2(y) over all decompositions x + y = z.
Complex total_convolve_at(const LazyFunction& f1, const LazyFunction& f2, const Element& z);

/// Materializes coefficients at every element coordinatewise <= bound.
FiniteSupportFunction truncate(const LazyFunction& f, const Element& bound);

/// Diagnostic produced by character_triviality_check. partial_sums[N] is
/// |sum of Phi(a) f(a)| over the box [0, N]^k for the chosen witness f.
struct TrivialityReport {
  bool trivial = false;        // Phi vanishes off a finite set
  bool divergent = false;      // witness pairing grows without bound
  std::string witness;
  std::vector<double> partial_sums;
};

/// Demonstrates on a concrete witness that a character of a finite-fiber
/// monoid induces no homomorphism of the total convolution algebra unless
/// it vanishes off a finite set. For nonzero base the witness is the
/// reciprocal f = 1/Phi on the sublattice where Phi is nonzero, whose
/// pairing has partial sums equal to the lattice point count; for zero
/// base the pairing with f == 1 is a finite sum.
TrivialityReport character_triviality_check(const MonoidDescriptor& m, const Character& chi,
                                            int depth = 32);

}  // namespace convalg

#endif  // CONVALG_LAZY_SERIES_HPP
