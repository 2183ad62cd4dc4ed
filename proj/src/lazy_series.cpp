#include "convalg/lazy_series.hpp"

#include <cmath>
#include <utility>

namespace convalg {

LazyFunction::LazyFunction(MonoidDescriptor m, Rule rule)
    : monoid_(m), rule_(std::move(rule)), memo_(std::make_shared<Memo>()) {
  if (!m.finite_fiber()) {
    throw ValidationError("LazyFunction: total convolution needs a finite-fiber monoid");
  }
  if (!rule_) throw ValidationError("LazyFunction: empty rule");
}

Complex LazyFunction::at(const Element& a) const {
  check_element(monoid_, a);
  {
    std::lock_guard<std::mutex> guard(memo_->lock);
    auto it = memo_->values.find(a);
    if (it != memo_->values.end()) return it->second;
  }
  const Complex v = rule_(a);
  std::lock_guard<std::mutex> guard(memo_->lock);
  return memo_->values.emplace(a, v).first->second;
}

LazyFunction LazyFunction::ones(const MonoidDescriptor& m) {
  return LazyFunction(m, [](const Element&) { return Complex{1.0, 0.0}; });
}

LazyFunction LazyFunction::geometric_rule(const MonoidDescriptor& m, double ratio) {
  return LazyFunction(m, [ratio](const Element& a) {
    double v = 1.0;
    for (std::int64_t c : a.coords) v *= std::pow(ratio, static_cast<double>(c));
    return Complex{v, 0.0};
  });
}

LazyFunction LazyFunction::delta_rule(const MonoidDescriptor& m, Element a) {
  check_element(m, a);
  return LazyFunction(m, [a = std::move(a)](const Element& b) {
    return b == a ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  });
}

LazyFunction LazyFunction::from_finite(FiniteSupportFunction f) {
  const MonoidDescriptor m = f.monoid();
  return LazyFunction(m, [f = std::move(f)](const Element& a) { return f.coeff(a); });
}

Complex total_convolve_at(const LazyFunction& f1, const LazyFunction& f2, const Element& z) {
  if (f1.monoid() != f2.monoid()) throw ValidationError("total_convolve_at: monoid mismatch");
  Complex sum{0.0, 0.0};
  for (const auto& [x, y] : decompositions(f1.monoid(), z)) {
    sum += f1.at(x) * f2.at(y);
  }
  return sum;
}

FiniteSupportFunction truncate(const LazyFunction& f, const Element& bound) {
  const MonoidDescriptor& m = f.monoid();
  check_element(m, bound);
  FiniteSupportFunction out(m);
  Element a = identity(m);
  for (;;) {
    const Complex v = f.at(a);
    if (v != Complex{0.0, 0.0}) out.add_term(a, v);

    int j = m.dim - 1;
    while (j >= 0 && a.coords[static_cast<std::size_t>(j)] == bound.coords[static_cast<std::size_t>(j)]) {
      a.coords[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++a.coords[static_cast<std::size_t>(j)];
  }
  return out;
}

namespace {

// Sum of Phi(a) f(a) over the box [0, N]^k.
Complex box_pairing(const MonoidDescriptor& m, const Character& chi,
                    const std::function<Complex(const Element&)>& f, int box) {
  Complex sum{0.0, 0.0};
  Element a = identity(m);
  for (;;) {
    sum += chi.value(a) * f(a);
    int j = m.dim - 1;
    while (j >= 0 && a.coords[static_cast<std::size_t>(j)] == box) {
      a.coords[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++a.coords[static_cast<std::size_t>(j)];
  }
  return sum;
}

}  // namespace

TrivialityReport character_triviality_check(const MonoidDescriptor& m, const Character& chi,
                                            int depth) {
  if (!m.finite_fiber()) {
    throw ValidationError("character_triviality_check: finite-fiber monoid required");
  }
  if (chi.monoid() != m) throw ValidationError("character_triviality_check: monoid mismatch");
  if (depth < 0) throw ValidationError("character_triviality_check: negative depth");

  std::vector<std::size_t> zero_axes;
  for (std::size_t j = 0; j < chi.base().size(); ++j) {
    if (chi.base()[j] == Complex{0.0, 0.0}) zero_axes.push_back(j);
  }
  const bool trivial = static_cast<int>(zero_axes.size()) == m.dim;

  TrivialityReport report;
  report.trivial = trivial;
  report.divergent = !trivial;

  std::function<Complex(const Element&)> witness;
  if (trivial) {
    report.witness = "f == 1; Phi(a) = 0 off the identity, so the pairing is a finite sum";
    witness = [](const Element&) { return Complex{1.0, 0.0}; };
  } else {
    report.witness =
        "f(a) = prod_j base_j^(-a_j) on the sublattice where Phi(a) != 0, 0 elsewhere; "
        "each pairing term there equals 1";
    const std::vector<Complex> base = chi.base();
    witness = [base, zero_axes](const Element& a) {
      for (std::size_t j : zero_axes) {
        if (a.coords[j] != 0) return Complex{0.0, 0.0};
      }
      Complex v{1.0, 0.0};
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (base[j] != Complex{0.0, 0.0}) v *= integer_power(base[j], -a.coords[j]);
      }
      return v;
    };
  }

  report.partial_sums.reserve(static_cast<std::size_t>(depth) + 1);
  for (int box = 0; box <= depth; ++box) {
    report.partial_sums.push_back(std::abs(box_pairing(m, chi, witness, box)));
  }
  return report;
}

}  // namespace convalg
