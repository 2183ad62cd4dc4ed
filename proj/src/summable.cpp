#include "convalg/summable.hpp"

#include <cmath>

namespace convalg {

SummableFunction::SummableFunction(FiniteSupportFunction finite_part, double tail_bound)
    : finite_part_(std::move(finite_part)), tail_bound_(tail_bound) {
  if (!(tail_bound_ >= 0.0) || !std::isfinite(tail_bound_)) {
    throw ValidationError("tail bound must be finite and nonnegative");
  }
}

NormInterval SummableFunction::l1_norm_interval() const {
  const double lower = l1_norm(finite_part_);
  return {lower, lower + tail_bound_};
}

SummableFunction convolve(const SummableFunction& f1, const SummableFunction& f2) {
  if (f1.monoid() != f2.monoid()) throw ValidationError("convolve: monoid mismatch");
  const double u1 = l1_norm(f1.finite_part());
  const double u2 = l1_norm(f2.finite_part());
  const double tau1 = f1.tail_bound();
  const double tau2 = f2.tail_bound();
  const double tail = u1 * tau2 + u2 * tau1 + tau1 * tau2;
  return SummableFunction(convolve(f1.finite_part(), f2.finite_part()), tail);
}

CharacterSum evaluate(const Character& chi, const SummableFunction& f) {
  if (!chi.is_bounded()) {
    throw ValidationError("evaluate: character is unbounded, l1 pairing undefined");
  }
  return {evaluate(chi, f.finite_part()), f.tail_bound()};
}

SummableFunction geometric(const MonoidDescriptor& m, double ratio, int terms) {
  if (m != nat_monoid(1)) throw ValidationError("geometric: requires the monoid N");
  if (!(ratio >= 0.0 && ratio < 1.0)) {
    throw ValidationError("geometric: ratio must satisfy 0 <= r < 1");
  }
  if (terms < 0) throw ValidationError("geometric: negative term count");

  FiniteSupportFunction finite(m);
  double c = 1.0;
  for (int j = 0; j <= terms; ++j) {
    if (c != 0.0) finite.add_term(Element{j}, Complex{c, 0.0});
    c *= ratio;
  }
  // after the loop c = r^(terms+1), so the tail sum_{j > terms} r^j is
  // exactly c / (1 - r)
  return SummableFunction(std::move(finite), c / (1.0 - ratio));
}

}  // namespace convalg
