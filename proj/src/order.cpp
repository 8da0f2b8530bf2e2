#include "dexter/order.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace dexter {

DyckPath min_path(int n) {
  StepWord w;
  for (int i = 0; i < n; ++i) {
    w.append(1);
    w.append(0);
  }
  return DyckPath(w);
}

namespace {

void generate(StepWord& prefix, int ones_left, int height,
              std::vector<DyckPath>& out) {
  if (ones_left == 0 && height == 0) {
    out.push_back(DyckPath(prefix));
    return;
  }
  // 0 before 1 keeps the output in increasing word order.
  if (height > 0) {
    StepWord next = prefix;
    next.append(0);
    generate(next, ones_left, height - 1, out);
  }
  if (ones_left > 0) {
    StepWord next = prefix;
    next.append(1);
    generate(next, ones_left - 1, height + 1, out);
  }
}

}  // namespace

std::vector<DyckPath> all_paths(int n) {
  std::vector<DyckPath> out;
  StepWord empty;
  generate(empty, n, 0, out);
  return out;
}

bool is_movable(const DyckPath& w, Span x) {
  if (!is_subpath(w, x)) return false;
  if (x.start == 0 || w.at(x.start - 1) != 0) return false;
  int end = x.start + x.len;
  return end == w.length() || w.at(end) == 1;
}

std::vector<Span> movable_subpaths(const DyckPath& w) {
  std::vector<Span> out;
  for (Span x : subpaths(w))
    if (is_movable(w, x)) out.push_back(x);
  return out;
}

int zero_run_before(const DyckPath& w, Span x) {
  int run = 0;
  for (int i = x.start - 1; i >= 0 && w.at(i) == 0; --i) ++run;
  return run;
}

DyckPath slide(const DyckPath& w, Span x, int jump) {
  if (!is_movable(w, x)) throw not_movable("span is not movable");
  if (jump < 1 || jump > zero_run_before(w, x))
    throw choice_out_of_range("slide amount outside the zero run");
  StepWord out = w.word().slice(0, x.start - jump);
  out.append(w.word().slice(x.start, x.len));
  out.append(StepWord::zeros(jump));
  out.append(w.word().slice(x.start + x.len,
                            w.length() - x.start - x.len));
  return DyckPath(out);
}

std::vector<Cover> covers(const DyckPath& w) {
  std::vector<Cover> out;
  for (Span x : movable_subpaths(w)) {
    int run = zero_run_before(w, x);
    for (int jump = 1; jump <= run; ++jump) {
      DyckPath target = slide(w, x, jump);
      EdgeColor color = jump == run ? EdgeColor::red : EdgeColor::blue;
      auto it = std::find_if(out.begin(), out.end(), [&](const Cover& c) {
        return c.target == target;
      });
      if (it == out.end())
        out.push_back(Cover{target, color});
      else if (color == EdgeColor::red)
        it->color = EdgeColor::red;
    }
  }
  std::sort(out.begin(), out.end(), [](const Cover& a, const Cover& b) {
    return a.target < b.target;
  });
  return out;
}

bool is_maximal(const DyckPath& w) {
  if (w.empty()) return true;
  if (!is_block_indecomposable(w)) return false;
  for (Span x : subpaths(w)) {
    if (x.start > 0 && w.at(x.start - 1) == 0 &&
        x.start + x.len < w.length() && w.at(x.start + x.len) == 1)
      return false;
  }
  return true;
}

DyckPoset::DyckPoset(int n) : n_(n), elements_(all_paths(n)) {
  index_.reserve(elements_.size());
  std::vector<std::string> labels;
  labels.reserve(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], static_cast<int>(i));
    labels.push_back(elements_[i].str());
  }
  std::vector<CoverEdge> edges;
  for (size_t i = 0; i < elements_.size(); ++i)
    for (const Cover& c : covers(elements_[i]))
      edges.push_back(CoverEdge{static_cast<int>(i), index_.at(c.target),
                                c.color});
  poset_ = Poset(std::move(labels), std::move(edges));
}

int DyckPoset::index_of(const DyckPath& w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw element_not_in_poset("path " + w.str() + " has size != " +
                               std::to_string(n_));
  return it->second;
}

bool DyckPoset::leq(const DyckPath& u, const DyckPath& v) const {
  return poset_.leq(index_of(u), index_of(v));
}

std::vector<int> DyckPoset::up_set_of(const DyckPath& w) const {
  return poset_.up_set(index_of(w));
}

std::vector<int> DyckPoset::down_set_of(const DyckPath& w) const {
  return poset_.down_set(index_of(w));
}

DyckPoset hasse(int n, int cap) {
  if (n < 0 || n > cap)
    throw size_too_large("size " + std::to_string(n) + " beyond cap " +
                         std::to_string(cap));
  return DyckPoset(n);
}

const DyckPoset& shared_poset(int n, int cap) {
  static std::mutex lock;
  static std::map<int, DyckPoset> cache;
  std::scoped_lock guard(lock);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, hasse(n, cap)).first;
  return it->second;
}

}  // namespace dexter
