#include "convalg/finite_support.hpp"

#include <cmath>

namespace convalg {

FiniteSupportFunction FiniteSupportFunction::delta(const MonoidDescriptor& m, const Element& a) {
  check_element(m, a);
  FiniteSupportFunction f(m);
  f.terms_.emplace(a, Complex{1.0, 0.0});
  return f;
}

Complex FiniteSupportFunction::coeff(const Element& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

std::vector<Element> FiniteSupportFunction::support() const {
  std::vector<Element> out;
  out.reserve(terms_.size());
  for (const auto& [a, c] : terms_) out.push_back(a);
  return out;
}

void FiniteSupportFunction::add_term(const Element& a, Complex c) {
  check_element(monoid_, a);
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) it->second += c;
  if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
}

FiniteSupportFunction add(const FiniteSupportFunction& f1, const FiniteSupportFunction& f2) {
  if (f1.monoid() != f2.monoid()) throw ValidationError("add: monoid mismatch");
  FiniteSupportFunction out = f1;
  for (const auto& [a, c] : f2.terms()) out.add_term(a, c);
  return out;
}

FiniteSupportFunction scale(Complex c, const FiniteSupportFunction& f) {
  FiniteSupportFunction out(f.monoid());
  if (c == Complex{0.0, 0.0}) return out;
  for (const auto& [a, v] : f.terms()) out.add_term(a, c * v);
  return out;
}

FiniteSupportFunction convolve(const FiniteSupportFunction& f1, const FiniteSupportFunction& f2) {
  if (f1.monoid() != f2.monoid()) throw ValidationError("convolve: monoid mismatch");
  const MonoidDescriptor& m = f1.monoid();
  FiniteSupportFunction out(m);
  for (const auto& [x, cx] : f1.terms()) {
    for (const auto& [y, cy] : f2.terms()) {
      out.add_term(combine(m, x, y), cx * cy);
    }
  }
  return out;
}

double l1_norm(const FiniteSupportFunction& f) {
  double sum = 0.0;
  for (const auto& [a, c] : f.terms()) sum += std::abs(c);
  return sum;
}

}  // namespace convalg
