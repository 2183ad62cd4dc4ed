#include "convalg/monoid.hpp"

#include <cstddef>
#include <string>

namespace convalg {

namespace {

constexpr std::size_t kMaxFiberSize = std::size_t{1} << 20;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("combine: coordinate sum overflows 64-bit integer");
  }
  return r;
}

}  // namespace

void check_element(const MonoidDescriptor& m, const Element& a) {
  if (static_cast<int>(a.coords.size()) != m.dim) {
    throw ValidationError("element has " + std::to_string(a.coords.size()) +
                          " coordinates, monoid dimension is " + std::to_string(m.dim));
  }
  if (m.kind == MonoidKind::NatPow) {
    for (std::int64_t c : a.coords) {
      if (c < 0) throw ValidationError("negative coordinate in N^k element");
    }
  }
}

Element identity(const MonoidDescriptor& m) {
  return Element(std::vector<std::int64_t>(static_cast<std::size_t>(m.dim), 0));
}

Element combine(const MonoidDescriptor& m, const Element& a, const Element& b) {
  check_element(m, a);
  check_element(m, b);
  Element r;
  r.coords.reserve(a.coords.size());
  for (std::size_t j = 0; j < a.coords.size(); ++j) {
    r.coords.push_back(checked_add(a.coords[j], b.coords[j]));
  }
  return r;
}

std::vector<std::pair<Element, Element>> decompositions(const MonoidDescriptor& m,
                                                        const Element& z) {
  if (!m.finite_fiber()) {
    throw ValidationError("decompositions: fiber is infinite on Z^k");
  }
  check_element(m, z);

  std::size_t count = 1;
  for (std::int64_t c : z.coords) {
    const auto f = static_cast<std::size_t>(c) + 1;
    if (static_cast<std::size_t>(c) >= kMaxFiberSize || count > kMaxFiberSize / f) {
      throw ValidationError("decompositions: fiber too large to enumerate");
    }
    count *= f;
  }

  std::vector<std::pair<Element, Element>> out;
  out.reserve(count);
  Element x = identity(m);
  for (;;) {
    Element y;
    y.coords.reserve(x.coords.size());
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
      y.coords.push_back(z.coords[j] - x.coords[j]);
    }
    out.emplace_back(x, std::move(y));

    // odometer over 0 <= x_j <= z_j, last axis fastest
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

}  // namespace convalg
