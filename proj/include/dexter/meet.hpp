#pragma once

// Constructive meets: the frozen decomposition behind the Rise operator,
// the Desc operator and its full iteration, and the greatest-lower-bound
// loop they support.  All positions are 0-based step indices (the
// corresponding 1-based letter position is index + 1).

#include <optional>
#include <vector>

#include "dexter/dyck.hpp"

namespace dexter {

/// u = prefix 0^leading  X_0 0^{z_0}  ...  X_r 0^{z_r}  tail, where every
/// X_j is a non-empty path fragment returning to its base height and the
/// tail may be empty.
struct FrozenDecomposition {
  struct Segment {
    DyckPath path;  // X_j
    int zeros = 0;  // the run following it
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  StepWord prefix;
  int leading_zeros = 0;
  std::vector<Segment> segments;
  DyckPath tail;

  DyckPath reassemble() const;
  friend bool operator==(const FrozenDecomposition&,
                         const FrozenDecomposition&) = default;
};

/// Scans u after its first prefix_len steps; the step at prefix_len must
/// be a 0 (letter_not_zero otherwise).
FrozenDecomposition frozen_decompose(const DyckPath& u, int prefix_len);

/// Slides the first block of the first segment holding a slidable block
/// up to the level of the previous segment (or of the prefix), leaving
/// the first prefix_len steps unchanged.  Empty when nothing can move.
std::optional<DyckPath> rise(const DyckPath& u, int prefix_len);

/// Iterates rise until the step at prefix_len becomes a 1: the minimum of
/// all paths above u with that prefix and a 1 there.  Empty when no such
/// path exists.
std::optional<DyckPath> rise_to_one(const DyckPath& u, int prefix_len);

/// The step at `step` must be a 1 not starting at height 0.  Slides the
/// last subpath before the matching return point down past the zero run
/// after it; the result is covered by w.
DyckPath descend(const DyckPath& w, int step);

/// descend iterated as many times as w has subpaths between the step and
/// its matching return: the maximum of all paths below w sharing the
/// prefix and carrying a 0 at `step`.
DyckPath descend_fully(const DyckPath& w, int step);

/// Greatest lower bound, by repeatedly lowering the branch that goes up
/// at the first disagreement.  Throws size_mismatch on unequal sizes.
DyckPath meet(const DyckPath& v, const DyckPath& w);

}  // namespace dexter
