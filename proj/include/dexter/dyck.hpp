#pragma once

// Dyck paths stored as packed step words, together with the path
// decompositions (blocks, level decomposition, strips, subpaths) that the
// rest of the library is built on.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dexter/errors.hpp"

namespace dexter {

/// A word over {0,1} of at most 64 steps, packed into a machine word.
/// Bit j holds step j; 1 is a north-east step, 0 a south-east step.
class StepWord {
 public:
  static constexpr int max_length = 64;

  constexpr StepWord() = default;
  StepWord(std::initializer_list<int> steps) {
    for (int s : steps) append(s);
  }

  /// Parses a compact 0/1 string such as "110100".
  static StepWord parse(std::string_view text);
  static StepWord from_steps(const std::vector<int>& steps);
  static StepWord zeros(int count);
  static StepWord ones(int count);

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }

  int at(int i) const { return static_cast<int>((bits_ >> i) & 1u); }

  void append(int step);
  void append(const StepWord& suffix);

  StepWord slice(int start, int count) const;

  /// Height after `point` steps, i.e. #1 - #0 in the prefix of that length.
  int height(int point) const;

  /// Number of 1 steps in the whole word.
  int one_count() const;

  /// Length of the maximal run of 0 steps at the end of the word.
  int trailing_zeros() const;

  std::string str() const;
  std::string tuple_str() const;  // "(1,1,0,1,0,0)"
  std::vector<int> steps() const;

  friend bool operator==(const StepWord& a, const StepWord& b) = default;

  /// Orders words by length, then lexicographically with 0 < 1.
  friend std::strong_ordering operator<=>(const StepWord& a,
                                          const StepWord& b);

  std::uint64_t bits() const { return bits_; }

 private:
  std::uint64_t bits_ = 0;
  int len_ = 0;
};

/// A contiguous range of steps inside a word.
struct Span {
  int start = 0;
  int len = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

class PseudoDyckPath;

/// A balanced word whose prefix heights never go below zero.
/// The size of a path is its number of 1 steps (half its length).
class DyckPath {
 public:
  DyckPath() = default;

  /// Checks both invariants and throws not_a_dyck_word on failure.
  explicit DyckPath(StepWord word);

  static bool is_valid(const StepWord& word);
  static DyckPath parse(std::string_view text);
  static DyckPath from_steps(const std::vector<int>& steps);

  const StepWord& word() const { return word_; }
  int size() const { return word_.length() / 2; }
  int length() const { return word_.length(); }
  bool empty() const { return word_.empty(); }
  int at(int i) const { return word_.at(i); }
  int height(int point) const { return word_.height(point); }

  std::string str() const { return word_.str(); }
  std::string tuple_str() const { return word_.tuple_str(); }
  std::vector<int> steps() const { return word_.steps(); }

  /// The path with its first and last steps removed.
  PseudoDyckPath inner() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend std::strong_ordering operator<=>(const DyckPath& a,
                                          const DyckPath& b) {
    return a.word_ <=> b.word_;
  }

 private:
  StepWord word_;
};

/// A word obtained from a non-empty Dyck path by removing its first and
/// last steps: heights stay >= -1 and end at 0.
class PseudoDyckPath {
 public:
  PseudoDyckPath() = default;
  explicit PseudoDyckPath(StepWord word);

  static bool is_valid(const StepWord& word);
  static PseudoDyckPath parse(std::string_view text);

  const StepWord& word() const { return word_; }
  int size() const { return word_.one_count(); }
  int length() const { return word_.length(); }
  bool empty() const { return word_.empty(); }
  std::string str() const { return word_.str(); }

  /// The Dyck path (1, word, 0).
  DyckPath lift() const;

  friend bool operator==(const PseudoDyckPath&, const PseudoDyckPath&) =
      default;
  friend std::strong_ordering operator<=>(const PseudoDyckPath& a,
                                          const PseudoDyckPath& b) {
    return a.word_ <=> b.word_;
  }

 private:
  StepWord word_;
};

DyckPath concat(const DyckPath& a, const DyckPath& b);

/// Splits a path at every return to height 0.  Concatenating the result
/// gives the path back; each factor is block-indecomposable.
std::vector<DyckPath> blocks(const DyckPath& w);

bool is_block_indecomposable(const DyckPath& w);

/// Sum of the heights at the midpoint of every step.  Strictly increases
/// along every cover move of the dexter order.
long long area(const DyckPath& w);

/// Heights just after each 1 step (all values >= 1).
std::vector<int> height_sequence(const DyckPath& w);

/// All spans that start and end at the same height while staying strictly
/// above it in between, ordered by start position.  There is exactly one
/// per 1 step (its first-return segment), so all have length >= 2.
std::vector<Span> subpaths(const DyckPath& w);

bool is_subpath(const DyckPath& w, Span x);

/// The unique factors (w_1, ..., w_k) of a block-indecomposable path
/// ending with exactly k+1 zeros, written as (1, w_1, 1, ..., 1, w_k, 1,
/// 0^{k+1}).  Recovered by repeatedly stripping the largest suffix whose
/// heights stay above the running final height.
std::vector<DyckPath> level_decomposition(const DyckPath& w);

/// Inverse of level_decomposition.
DyckPath level_compose(const std::vector<DyckPath>& parts);

/// A writing of a path as (u, 1, v, 1, 0, 0, 0^k), anchored at the second
/// zero of the final zero run.
struct Strip {
  StepWord prefix;   // u: a raw step word, not in general balanced
  DyckPath inner;    // v
  int trailing = 0;  // k
  friend bool operator==(const Strip&, const Strip&) = default;
};

/// Returns the canonical strip of w, or nothing when w is empty or ends
/// with (1,0).
std::optional<Strip> find_strip(const DyckPath& w);

}  // namespace dexter

template <>
struct std::hash<dexter::StepWord> {
  size_t operator()(const dexter::StepWord& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.bits() * 1000003u +
                                      static_cast<unsigned>(w.length()));
  }
};

template <>
struct std::hash<dexter::DyckPath> {
  size_t operator()(const dexter::DyckPath& w) const noexcept {
    return std::hash<dexter::StepWord>{}(w.word());
  }
};
