#pragma once

// The dexter order on Dyck paths: slide moves over runs of zeros, the
// resulting cover graph, and the poset it generates.

#include <unordered_map>
#include <vector>

#include "dexter/dyck.hpp"
#include "dexter/poset.hpp"

namespace dexter {

/// The alternating path (1,0)^n, the unique minimum of the order.
DyckPath min_path(int n);

/// All Dyck paths of size n in increasing word order (so min_path first).
std::vector<DyckPath> all_paths(int n);

/// Subpaths preceded by a 0 step that either end the word or are followed
/// by a 1 step.
std::vector<Span> movable_subpaths(const DyckPath& w);

bool is_movable(const DyckPath& w, Span x);

/// Length of the run of consecutive 0 steps just before the span.
int zero_run_before(const DyckPath& w, Span x);

/// Slides a movable subpath north-west over `jump` zeros of the run
/// before it (jump == zero_run_before means the highest position).
DyckPath slide(const DyckPath& w, Span x, int jump);

struct Cover {
  DyckPath target;
  EdgeColor color = EdgeColor::none;
  friend bool operator==(const Cover&, const Cover&) = default;
};

/// All distinct slide results, in increasing word order.  An edge is red
/// when some witnessing slide jumps its whole zero run, blue otherwise.
std::vector<Cover> covers(const DyckPath& w);

/// Characterization of the maximal elements: block-indecomposable paths
/// with no subpath both preceded by 0 and followed by 1.
bool is_maximal(const DyckPath& w);

/// The cover graph of all size-n paths with its reachability oracle.
class DyckPoset {
 public:
  explicit DyckPoset(int n);

  int n() const { return n_; }
  const std::vector<DyckPath>& elements() const { return elements_; }
  const DyckPath& element(int u) const {
    return elements_[static_cast<size_t>(u)];
  }
  int index_of(const DyckPath& w) const;
  bool contains(const DyckPath& w) const { return index_.count(w) != 0; }

  const Poset& poset() const { return poset_; }
  bool leq(const DyckPath& u, const DyckPath& v) const;

  /// Indices of {u : w <= u} in increasing word order.
  std::vector<int> up_set_of(const DyckPath& w) const;
  std::vector<int> down_set_of(const DyckPath& w) const;

 private:
  int n_;
  std::vector<DyckPath> elements_;
  std::unordered_map<DyckPath, int> index_;
  Poset poset_;
};

/// Builds the Hasse diagram of the order on size-n paths.
/// Throws size_too_large beyond the cap.
DyckPoset hasse(int n, int cap = 14);

/// Process-wide memoized diagrams, shared by interval validation and the
/// brute-force oracles.  Thread-safe; the returned reference stays valid
/// for the lifetime of the process.
const DyckPoset& shared_poset(int n, int cap = 14);

}  // namespace dexter
