#pragma once

// Three graded monoids: the star product on pseudo-Dyck paths, the sharp
// product it induces on non-empty Dyck paths, and the interval monoid
// built on top of sharp.  All three are free; the factorization routines
// recover the unique generator decompositions.

#include <vector>

#include "dexter/dyck.hpp"
#include "dexter/order.hpp"

namespace dexter {

/// u * v = (u', v', 0^k, v'') where u = (u', 0^k) strips the trailing
/// zeros of u and v' is the longest prefix of v whose heights stay >= 0.
/// Associative with the empty word as unit.
PseudoDyckPath star(const PseudoDyckPath& u, const PseudoDyckPath& v);

/// u # v = (1, inner(u) * inner(v), 0).  Associative on non-empty paths
/// with (1,0) as unit; sizes add minus one.
DyckPath sharp(const DyckPath& u, const DyckPath& v);

/// (1,0,1,0) or a block-indecomposable path ending with exactly two zeros,
/// i.e. of the shape (1,w,1,0,0).
bool is_sharp_generator(const DyckPath& w);

/// The unique factorization of a non-empty path as a sharp product of
/// generators: blocks contribute their level decompositions, glued with
/// the (1,0,1,0) generator between consecutive blocks.
std::vector<DyckPath> sharp_factor(const DyckPath& w);

DyckPath sharp_product(const std::vector<DyckPath>& factors);

/// A pair bottom <= top of equal-size paths.
struct IntervalRef {
  DyckPath bottom;
  DyckPath top;
  int size() const { return top.size(); }
  friend bool operator==(const IntervalRef&, const IntervalRef&) = default;
  friend auto operator<=>(const IntervalRef&, const IntervalRef&) = default;
};

/// Checks bottom <= top via the shared reachability oracle.
bool is_interval(const IntervalRef& ref);

/// [a,b] # [c,d] = [a#c, b#d]; unit is the one-element interval of size 1.
/// Operand validity is checked up to the oracle cap.
IntervalRef interval_product(const IntervalRef& lhs, const IntervalRef& rhs);

IntervalRef interval_unit();

/// A generator of the interval monoid: the top is a sharp generator, and
/// for top (1,0,1,0) only the one-element interval occurs.
bool is_interval_generator(const IntervalRef& ref);

/// Factors the top with sharp_factor, then splits the bottom along the
/// boundaries the grading induces.
std::vector<IntervalRef> interval_factor(const IntervalRef& ref);

IntervalRef interval_sharp_product(const std::vector<IntervalRef>& factors);

/// Number of interval-monoid generators whose paths have size n >= 2.
long long interval_generator_count(int n);

}  // namespace dexter
