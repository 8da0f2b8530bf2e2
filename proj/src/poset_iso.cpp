#include "dexter/poset_iso.hpp"

#include <algorithm>
#include <cstdint>

namespace dexter {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::uint64_t> refined_colors(const Poset& p) {
  int n = p.size();
  const BitMatrix& reach = p.reach();
  std::vector<std::uint64_t> color(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) {
    std::uint64_t h = 1469598103934665603ull;
    h = mix(h, p.upper_covers(u).size());
    h = mix(h, p.lower_covers(u).size());
    h = mix(h, static_cast<std::uint64_t>(reach.row_count(u)));
    int below = 0;
    for (int v = 0; v < n; ++v)
      if (reach.get(v, u)) ++below;
    h = mix(h, static_cast<std::uint64_t>(below));
    color[static_cast<size_t>(u)] = h;
  }
  for (int round = 0; round < 8; ++round) {
    std::vector<std::uint64_t> next(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
      std::uint64_t h = color[static_cast<size_t>(u)];
      std::vector<std::uint64_t> ups, downs;
      for (int v : p.upper_covers(u))
        ups.push_back(color[static_cast<size_t>(v)]);
      for (int v : p.lower_covers(u))
        downs.push_back(color[static_cast<size_t>(v)]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      for (std::uint64_t c : ups) h = mix(h, c);
      h = mix(h, 0xabcdef12345ull);
      for (std::uint64_t c : downs) h = mix(h, c);
      next[static_cast<size_t>(u)] = h;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct Matcher {
  const Poset& p;
  const Poset& q;
  std::vector<std::uint64_t> pc, qc;
  std::vector<int> p_to_q, q_to_p;
  std::vector<int> order;  // p-vertices, rarest colors first

  bool consistent(int u, int v) const {
    if (pc[static_cast<size_t>(u)] != qc[static_cast<size_t>(v)]) return false;
    if (p.upper_covers(u).size() != q.upper_covers(v).size()) return false;
    if (p.lower_covers(u).size() != q.lower_covers(v).size()) return false;
    // Already-mapped neighbours must match exactly in both directions.
    for (int w : p.upper_covers(u)) {
      int img = p_to_q[static_cast<size_t>(w)];
      if (img >= 0) {
        const auto& adj = q.upper_covers(v);
        if (std::find(adj.begin(), adj.end(), img) == adj.end()) return false;
      }
    }
    for (int w : p.lower_covers(u)) {
      int img = p_to_q[static_cast<size_t>(w)];
      if (img >= 0) {
        const auto& adj = q.lower_covers(v);
        if (std::find(adj.begin(), adj.end(), img) == adj.end()) return false;
      }
    }
    for (int w : q.upper_covers(v)) {
      int pre = q_to_p[static_cast<size_t>(w)];
      if (pre >= 0) {
        const auto& adj = p.upper_covers(u);
        if (std::find(adj.begin(), adj.end(), pre) == adj.end()) return false;
      }
    }
    for (int w : q.lower_covers(v)) {
      int pre = q_to_p[static_cast<size_t>(w)];
      if (pre >= 0) {
        const auto& adj = p.lower_covers(u);
        if (std::find(adj.begin(), adj.end(), pre) == adj.end()) return false;
      }
    }
    return true;
  }

  bool extend(size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int v = 0; v < q.size(); ++v) {
      if (q_to_p[static_cast<size_t>(v)] >= 0) continue;
      if (!consistent(u, v)) continue;
      p_to_q[static_cast<size_t>(u)] = v;
      q_to_p[static_cast<size_t>(v)] = u;
      if (extend(depth + 1)) return true;
      p_to_q[static_cast<size_t>(u)] = -1;
      q_to_p[static_cast<size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace

bool poset_isomorphic(const Poset& p, const Poset& q, int cap) {
  if (p.size() > cap || q.size() > cap)
    throw too_large("poset beyond the isomorphism cap");
  if (p.size() != q.size()) return false;
  if (p.cover_edges().size() != q.cover_edges().size()) return false;

  Matcher m{p, q, refined_colors(p), refined_colors(q), {}, {}, {}};
  std::vector<std::uint64_t> a = m.pc, b = m.qc;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;

  std::vector<int> class_size(static_cast<size_t>(p.size()));
  for (int u = 0; u < p.size(); ++u)
    class_size[static_cast<size_t>(u)] = static_cast<int>(
        std::count(a.begin(), a.end(), m.pc[static_cast<size_t>(u)]));
  m.order.resize(static_cast<size_t>(p.size()));
  for (int u = 0; u < p.size(); ++u) m.order[static_cast<size_t>(u)] = u;
  std::sort(m.order.begin(), m.order.end(), [&](int x, int y) {
    return class_size[static_cast<size_t>(x)] <
           class_size[static_cast<size_t>(y)];
  });
  m.p_to_q.assign(static_cast<size_t>(p.size()), -1);
  m.q_to_p.assign(static_cast<size_t>(q.size()), -1);
  return m.extend(0);
}

}  // namespace dexter
