#ifndef CONVALG_MONOID_HPP
#define CONVALG_MONOID_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "convalg/errors.hpp"

namespace convalg {

enum class MonoidKind { NatPow, IntPow };

/// Additive monoid N^k or Z^k. The fiber over z is the set of ordered pairs
/// (x, y) with x + y = z; it is finite exactly on N^k.
struct MonoidDescriptor {
  MonoidKind kind = MonoidKind::NatPow;
  int dim = 1;

  bool finite_fiber() const { return kind == MonoidKind::NatPow; }
  bool operator==(const MonoidDescriptor&) const = default;
};

inline MonoidDescriptor nat_monoid(int dim = 1) { return {MonoidKind::NatPow, dim}; }
inline MonoidDescriptor int_monoid(int dim = 1) { return {MonoidKind::IntPow, dim}; }

/// Element of N^k or Z^k as a plain coordinate tuple. Value semantics;
/// ordering is lexicographic.
struct Element {
  std::vector<std::int64_t> coords;

  Element() = default;
  explicit Element(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Element(std::initializer_list<std::int64_t> c) : coords(c) {}

  auto operator<=>(const Element&) const = default;
};

/// Throws ValidationError unless a is an element of m (dimension match,
/// nonnegative coordinates on N^k).
void check_element(const MonoidDescriptor& m, const Element& a);

/// The all-zeros tuple.
Element identity(const MonoidDescriptor& m);

/// Coordinatewise sum. Overflow is a checked error, not wraparound.
Element combine(const MonoidDescriptor& m, const Element& a, const Element& b);

/// All ordered pairs (x, y) with x + y = z, in lexicographic order of x.
/// Requires a finite-fiber monoid; on N^k the list has prod_j (z_j + 1)
/// entries. Enumerations above an internal size cap are rejected.
std::vector<std::pair<Element, Element>> decompositions(const MonoidDescriptor& m,
                                                        const Element& z);

}  // namespace convalg

#endif  // CONVALG_MONOID_HPP
