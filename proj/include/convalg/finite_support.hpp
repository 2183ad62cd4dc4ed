#ifndef CONVALG_FINITE_SUPPORT_HPP
#define CONVALG_FINITE_SUPPORT_HPP

#include <complex>
#include <map>
#include <vector>

#include "convalg/monoid.hpp"

namespace convalg {

using Complex = std::complex<double>;

/// Finitely supported complex function on a monoid, kept canonical:
/// no stored coefficient is exactly zero, terms ordered lexicographically
/// by element.
class FiniteSupportFunction {
 public:
  using TermMap = std::map<Element, Complex>;

  explicit FiniteSupportFunction(MonoidDescriptor m) : monoid_(m) {}

  /// The function equal to 1 at a and 0 elsewhere.
  static FiniteSupportFunction delta(const MonoidDescriptor& m, const Element& a);

  const MonoidDescriptor& monoid() const { return monoid_; }
  const TermMap& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient at a; 0 for elements outside the support.
  Complex coeff(const Element& a) const;

  std::vector<Element> support() const;

  /// Accumulates c into the coefficient at a, pruning an exact-zero result.
  void add_term(const Element& a, Complex c);

  friend bool operator==(const FiniteSupportFunction&, const FiniteSupportFunction&) = default;

 private:
  MonoidDescriptor monoid_;
  TermMap terms_;
};

/// Pointwise sum, canonical form restored (cancellations pruned).
FiniteSupportFunction add(const FiniteSupportFunction& f1, const FiniteSupportFunction& f2);

/// Scalar multiple.
FiniteSupportFunction scale(Complex c, const FiniteSupportFunction& f);

/// Convolution (f1 * f2)(z) = sum over x + y = z of f1(x) f2(y), realized
/// as a sweep over support pairs so it works on infinite-fiber monoids too.
FiniteSupportFunction convolve(const FiniteSupportFunction& f1, const FiniteSupportFunction& f2);

/// Sum of |coefficient| over the support.
double l1_norm(const FiniteSupportFunction& f);

}  // namespace convalg

#endif  // CONVALG_FINITE_SUPPORT_HPP
