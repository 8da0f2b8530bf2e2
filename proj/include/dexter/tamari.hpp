#pragma once

// The Tamari and comb orders on the same vertex sets, for comparison with
// the dexter order.

#include <vector>

#include "dexter/dyck.hpp"
#include "dexter/order.hpp"
#include "dexter/poset.hpp"

namespace dexter {

/// Single-step north-west slides: each 0 step followed by a 1 step is
/// exchanged with the first-return subpath after it.
std::vector<DyckPath> tamari_covers(const DyckPath& w);

/// Tamari covers whose slid subpath starts at height 0.
std::vector<DyckPath> comb_covers(const DyckPath& w);

/// Cover graph over all size-n paths for one of the three orders.
Poset tamari_hasse(int n, int cap = 14);
Poset comb_hasse(int n, int cap = 14);

/// Whether the order of P is contained in the order of Q.  Both posets
/// must carry the same labels in the same positions.
bool order_contains(const Poset& p, const Poset& q);

/// The Tamari interval [w, slide(w, x, jump)] listed bottom to top; it is
/// exactly the chain of single-step slides of x.
std::vector<DyckPath> tamari_interval_chain(const DyckPath& w, Span x,
                                            int jump);

}  // namespace dexter
