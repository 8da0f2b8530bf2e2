#pragma once

// Generic finite-poset analytics: zeta polynomials, Coxeter polynomials
// with exact integer arithmetic, root location, lattice properties, and
// the two-color h-polynomials of the dexter diagrams.

#include "dexter/interval.hpp"
#include "dexter/poly.hpp"
#include "dexter/poset.hpp"

namespace dexter {

/// Number of multichains x_1 <= ... <= x_m with m elements (1 for m = 0).
BigInt multichain_count(const Poset& p, int elements);

/// Number of strict chains with the given number of elements.
BigInt chain_count(const Poset& p, int elements);

/// The integer-valued polynomial Z with Z(k) = number of multichains of
/// k-1 elements for every k >= 2, interpolated exactly from multichain
/// counts.  Its degree is the longest chain length.
RatPoly zeta_polynomial(const Poset& p, int cap = 5000);

/// Characteristic polynomial (monic, in x) of the Coxeter transformation
/// -Z^{-T} Z of the 0/1 order matrix Z, computed exactly.
IntPoly coxeter_polynomial(const Poset& p, int cap = 5000);

/// True when every root of p has modulus within tol of 1.  Cyclotomic
/// factors are stripped exactly; the rest is located numerically.
bool roots_on_unit_circle(const IntPoly& p, double tol = 1e-8);

/// Every pair has a unique greatest lower and least upper bound.
bool is_lattice(const Poset& p);

/// Both meet- and join-semidistributivity, by exhaustive triple scan.
/// Throws not_a_lattice when p is not a lattice.
bool is_semidistributive(const Poset& p);

/// Join- and meet-irreducible counts both equal to the longest chain
/// length.  Throws not_a_lattice when p is not a lattice.
bool is_extremal(const Poset& p);

/// Length (number of covers) of the longest chain.
int longest_chain(const Poset& p);

/// A_n(r,b): red/blue in-degree generating polynomial of the size-n
/// diagram, where red marks a slide over its full zero run.
IntPoly colored_h_polynomial(int n);

/// Coefficients A_0..A_N as a series, and its restriction to
/// block-indecomposable paths.
SeriesTable colored_h_series(int max_degree);
SeriesTable colored_block_series(int max_degree);

/// The algebraic identities tying the two series together, on explicit
/// tables (so swapped colors can be rejected).
CheckReport check_h_equations(const SeriesTable& a, const SeriesTable& b);
CheckReport verify_h_equations(int max_degree);

/// A_n(r, rb) = r^{n-1} A_n(1/r, b/r), checked in a Laurent extension by
/// clearing one global power of r.
bool h_symmetry_holds(int n);

/// The uncolored specialization equals the classical Narayana polynomial.
bool h_narayana_matches(int n);

}  // namespace dexter
