#pragma once

// Interval enumeration in the dexter posets, the structural
// factorizations (blocks, strips, upper ideals), the core-interval
// machinery, and the generating-series identities that count intervals.

#include <optional>
#include <utility>
#include <vector>

#include "dexter/monoid.hpp"
#include "dexter/poly.hpp"
#include "dexter/poset.hpp"

namespace dexter {

/// All pairs bottom <= top of size n, ordered by (bottom, top).
/// Throws size_too_large beyond the cap.
std::vector<IntervalRef> all_intervals(int n, int cap = 9);

/// 3 * 2^{n-1} * (2n)! / (n! (n+2)!) for n >= 1, and 1 for n = 0.
BigInt interval_count_formula(int n);

/// Cuts bottom and top at the top's returns to height 0; the interval is
/// order-isomorphic to the product of the factors.
std::vector<IntervalRef> block_factor(const IntervalRef& ref);

/// The induced subposet {u : w <= u} of the size-|w| diagram.
Poset upper_ideal(const DyckPath& w);

/// When w = (u,1,v,1,0,0,0^k) has a strip, Up(w) factors as
/// Up(u') x Up(v) with u' = (u,1,0,0^k).
std::optional<std::pair<DyckPath, DyckPath>> upper_ideal_factor(
    const DyckPath& w);

/// Bottom empty or ending with (1,0).
bool is_reduced(const IntervalRef& ref);

/// Bottom of the shape (v,1,0) and top of the shape (1,w,1,0,0), plus the
/// one-element interval on (1,0,1,0).
bool is_core(const IntervalRef& ref);

bool is_shape_bottom(const DyckPath& w);  // (v,1,0), i.e. ends with (1,0)
bool is_shape_top(const DyckPath& w);     // (1,w,1,0,0)

/// The chain (1,0,w,1,0) -> ... -> (1,w,1,0,0) obtained by repeatedly
/// sliding the second block to height 1; it has blocks(w)+2 entries.
std::vector<DyckPath> core_chain(const DyckPath& w);

/// One step of the orbit map whose orbits are the core chains: shape
/// (1,w',1,0,0) wraps to (1,0,w',1,0), otherwise the second block slides
/// to height 1.  Throws not_in_shape_set off the two shapes.
DyckPath core_chain_step(const DyckPath& u);

/// Writes a core interval of size n as an interval of size n-2 plus the
/// position of the bottom in its chain.
std::pair<IntervalRef, int> core_encode(const IntervalRef& ref);
IntervalRef core_decode(const IntervalRef& ref, int position);

enum class IntervalKind { all, reduced, core };

/// Coefficient of s^j t^n counts the size-n intervals of the kind whose
/// bottom has j blocks.  Computed by enumeration, never from the
/// equations.
SeriesTable interval_series(IntervalKind kind, int max_degree, int cap = 9);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      failures.push_back(what);
    }
  }
};

/// The four functional equations tying the three series together, on
/// explicitly given tables (so corrupted tables can be rejected).
CheckReport check_functional_equations(const SeriesTable& fa,
                                       const SeriesTable& fr,
                                       const SeriesTable& fc);

/// Same, on the brute-force tables through degree max_degree.
CheckReport verify_functional_equations(int max_degree);

/// The algebraic equation satisfied by the closed-formula counting
/// series, checked through t^max_degree, plus agreement of the formula
/// with brute-force counts through enumeration_cap.
CheckReport verify_algebraic_equation(int max_degree, int enumeration_cap = 7);

/// The multiset of level-decomposition entries over all blocks; paths
/// sharing it generate isomorphic lower intervals I(w).
std::vector<DyckPath> level_multiset_key(const DyckPath& w);

/// Groups size-n paths by key and checks poset isomorphism inside each
/// group, as well as I(w) = product of J(w_i) for indecomposable w.
CheckReport level_multiset_isomorphism_check(int n);

/// I(w) = [minimum, w] as an induced poset.
Poset lower_interval(const DyckPath& w);

/// J(w) = I((1,w,1,0,0)), the canonical factor posets.
Poset j_poset(const DyckPath& w);

}  // namespace dexter
