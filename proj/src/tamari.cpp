#include "dexter/tamari.hpp"

#include <algorithm>

namespace dexter {

namespace {

std::vector<DyckPath> single_step_covers(const DyckPath& w,
                                         bool only_ground) {
  std::vector<DyckPath> out;
  for (int i = 0; i + 1 < w.length(); ++i) {
    if (w.at(i) != 0 || w.at(i + 1) != 1) continue;
    int base = w.height(i + 1);
    if (only_ground && base != 0) continue;
    int end = i + 2;
    while (w.height(end) != base) ++end;
    // Exchange the 0 at position i with the subpath [i+1, end).
    StepWord word = w.word().slice(0, i);
    word.append(w.word().slice(i + 1, end - i - 1));
    word.append(0);
    word.append(w.word().slice(end, w.length() - end));
    out.push_back(DyckPath(word));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset build_hasse(int n, int cap, bool only_ground) {
  if (n < 0 || n > cap)
    throw size_too_large("size " + std::to_string(n) + " beyond cap " +
                         std::to_string(cap));
  std::vector<DyckPath> elements = all_paths(n);
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const DyckPath& w : elements) labels.push_back(w.str());
  std::vector<CoverEdge> edges;
  for (size_t i = 0; i < elements.size(); ++i) {
    for (const DyckPath& target :
         single_step_covers(elements[i], only_ground)) {
      auto it = std::lower_bound(elements.begin(), elements.end(), target);
      edges.push_back(CoverEdge{static_cast<int>(i),
                                static_cast<int>(it - elements.begin()),
                                EdgeColor::none});
    }
  }
  return Poset(std::move(labels), std::move(edges));
}

}  // namespace

std::vector<DyckPath> tamari_covers(const DyckPath& w) {
  return single_step_covers(w, false);
}

std::vector<DyckPath> comb_covers(const DyckPath& w) {
  return single_step_covers(w, true);
}

Poset tamari_hasse(int n, int cap) { return build_hasse(n, cap, false); }

Poset comb_hasse(int n, int cap) { return build_hasse(n, cap, true); }

bool order_contains(const Poset& p, const Poset& q) {
  if (p.labels() != q.labels())
    throw element_set_mismatch("posets are over different element sets");
  const BitMatrix& a = p.reach();
  const BitMatrix& b = q.reach();
  for (int u = 0; u < p.size(); ++u) {
    const std::uint64_t* ra = a.row(u);
    const std::uint64_t* rb = b.row(u);
    for (int k = 0; k < a.row_words(); ++k)
      if (ra[k] & ~rb[k]) return false;
  }
  return true;
}

std::vector<DyckPath> tamari_interval_chain(const DyckPath& w, Span x,
                                            int jump) {
  if (!is_movable(w, x)) throw not_movable("span is not movable");
  if (jump < 1 || jump > zero_run_before(w, x))
    throw choice_out_of_range("slide amount outside the zero run");
  std::vector<DyckPath> chain{w};
  for (int step = 1; step <= jump; ++step) chain.push_back(slide(w, x, step));
  return chain;
}

}  // namespace dexter
