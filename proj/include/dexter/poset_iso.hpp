#pragma once

// Exact poset isomorphism by color refinement plus backtracking over the
// cover graphs (which determine the orders).

#include "dexter/poset.hpp"

namespace dexter {

/// Exact answer; throws too_large beyond the cap.
bool poset_isomorphic(const Poset& p, const Poset& q, int cap = 5000);

}  // namespace dexter
