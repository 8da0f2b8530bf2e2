#pragma once

// Explicit finite posets given by their cover graph, with a bit-packed
// reachability oracle, induced subposets and cartesian products.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dexter/errors.hpp"

namespace dexter {

enum class EdgeColor : std::uint8_t { none, red, blue };

std::string_view color_name(EdgeColor c);

struct CoverEdge {
  int src = 0;
  int dst = 0;
  EdgeColor color = EdgeColor::none;
  friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

/// Square boolean matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_(static_cast<size_t>(n) * row_words(n), 0) {}

  int size() const { return n_; }
  int row_words() const { return row_words(n_); }

  bool get(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  void set(int i, int j) { row(i)[j >> 6] |= 1ull << (j & 63); }

  std::uint64_t* row(int i) {
    return words_.data() + static_cast<size_t>(i) * row_words(n_);
  }
  const std::uint64_t* row(int i) const {
    return words_.data() + static_cast<size_t>(i) * row_words(n_);
  }

  /// row(dst) |= row(src)
  void or_row(int dst, int src);

  /// Number of set bits in a row.
  int row_count(int i) const;

  static int row_words(int n) { return (n + 63) >> 6; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

class Poset {
 public:
  Poset() = default;

  /// Takes ownership of labels and cover edges; the cover graph must be
  /// acyclic (this is checked when reachability is first built).
  Poset(std::vector<std::string> labels, std::vector<CoverEdge> covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int u) const {
    return labels_[static_cast<size_t>(u)];
  }
  const std::vector<CoverEdge>& cover_edges() const { return edges_; }
  const std::vector<int>& upper_covers(int u) const {
    return up_[static_cast<size_t>(u)];
  }
  const std::vector<int>& lower_covers(int u) const {
    return down_[static_cast<size_t>(u)];
  }

  Poset(const Poset& other);
  Poset(Poset&& other) noexcept;
  Poset& operator=(Poset other);

  int index_of(std::string_view label) const;
  std::optional<int> find(std::string_view label) const;

  /// Reflexive reachability along cover edges.
  bool leq(int u, int v) const;

  /// The full reachability matrix (reflexive), built on the first use.
  const BitMatrix& reach() const;

  std::vector<int> up_set(int u) const;
  std::vector<int> down_set(int u) const;

  /// Indices in one linear extension (sources first).  Throws error if the
  /// cover graph has a cycle.
  std::vector<int> topo_order() const;

  /// Subposet on the given elements when they form a convex subset
  /// (interval, upper or lower ideal): covers are simply restricted.
  Poset restrict_convex(const std::vector<int>& elements) const;

  /// Subposet on an arbitrary subset: the induced order is transitively
  /// reduced from scratch; edge colors are dropped.
  Poset induced(const std::vector<int>& elements) const;

  /// true when every cover edge (u,v) admits no other path from u to v.
  bool is_transitively_reduced() const;

  std::string dot(std::string_view graph_name) const;
  std::string json(std::string_view order_name = "") const;
  static Poset from_json(std::string_view text);

 private:
  void build_adjacency();

  std::vector<std::string> labels_;
  std::vector<CoverEdge> edges_;
  std::vector<std::vector<int>> up_, down_;
  // Lazy caches, guarded so concurrent readers can share one poset.
  mutable std::mutex cache_lock_;
  mutable std::unordered_map<std::string, int> index_;
  mutable std::unique_ptr<const BitMatrix> reach_;
};

/// Elements are pairs, covers change exactly one coordinate by a cover.
Poset cartesian_product(const Poset& p, const Poset& q);

}  // namespace dexter
