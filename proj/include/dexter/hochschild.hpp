#pragma once

// The interval of size-(n+2) paths whose vertices encode the Hochschild
// polytope: intrinsic membership, the ternary encoding of its elements,
// the recursive vertex sets it matches, and the structural bijections
// between consecutive sizes.

#include <string>
#include <vector>

#include "dexter/interval.hpp"
#include "dexter/poset.hpp"

namespace dexter {

/// A word over {0,1,2}, serialized as a digit string such as "120".
class TernaryWord {
 public:
  TernaryWord() = default;
  explicit TernaryWord(std::string digits);
  static TernaryWord parse(std::string_view text) {
    return TernaryWord(std::string(text));
  }

  int length() const { return static_cast<int>(digits_.size()); }
  int at(int i) const { return digits_[static_cast<size_t>(i)] - '0'; }
  const std::string& str() const { return digits_; }
  TernaryWord append(int digit) const;
  TernaryWord with_first(int digit) const;

  friend bool operator==(const TernaryWord&, const TernaryWord&) = default;
  friend auto operator<=>(const TernaryWord&, const TernaryWord&) = default;

 private:
  std::string digits_;
};

/// Componentwise comparison; throws length_mismatch on unequal lengths.
bool termwise_leq(const TernaryWord& a, const TernaryWord& b);

/// (point, height) pairs: a valley is the end point of a 0 step followed
/// by a 1 step, a peak the end point of a 1 step followed by a 0 step.
std::vector<std::pair<int, int>> valleys(const DyckPath& w);
std::vector<std::pair<int, int>> peaks(const DyckPath& w);

/// The interval from (1,1,0,0,(1,0)^n) to (1,1^n,0^n,1,0,0).
IntervalRef hochschild_interval(int n);

/// Paths of size n+2 starting with (1,1), with valleys only at heights 0
/// and 1, weakly decreasing left to right, ending in (0,1,0) or
/// (0,1,0,0).
bool in_hochschild(const DyckPath& w, int n);

/// The interval's elements in increasing word order, and its poset.
std::vector<DyckPath> hochschild_elements(int n);
Poset hochschild_poset(int n);

/// Reads the path left to right: runs of double 1 steps accumulate 2s,
/// every valley flushes its height followed by those 2s.  Defined on the
/// interval only (not_in_hochschild_interval otherwise).
TernaryWord encode_vertex(const DyckPath& w);

/// Inverse of encode_vertex via the brick decomposition of the word.
/// The word must lie in the vertex set (not_in_image otherwise).
DyckPath decode_vertex(const TernaryWord& z);

struct VertexSets {
  std::vector<TernaryWord> zero;   // first digit 0
  std::vector<TernaryWord> one;    // first digit 1
  std::vector<TernaryWord> plain;  // subset of `one` over digits {1,2} only
};

/// The recursive vertex sets of length n, each sorted.
VertexSets vertex_sets(int n);

/// The four explicit size-raising maps:
DyckPath insert_at_second_peak(const DyckPath& w);  // appends 2 under rho
DyckPath append_unit_peak(const DyckPath& w);       // appends 0
DyckPath insert_before_last(const DyckPath& w);     // appends 1
DyckPath lower_first_valley(const DyckPath& w);     // sets first digit to 0

/// Checks that the four maps are bijections onto their stated codomains
/// and act on the encodings as stated.
CheckReport check_structural_bijections(int n);

}  // namespace dexter
