#include "dexter/hochschild.hpp"

#include <algorithm>
#include <set>

#include "dexter/order.hpp"

namespace dexter {

TernaryWord::TernaryWord(std::string digits) : digits_(std::move(digits)) {
  for (char c : digits_)
    if (c < '0' || c > '2')
      throw not_in_image("ternary words use digits 0, 1, 2");
}

TernaryWord TernaryWord::append(int digit) const {
  TernaryWord out = *this;
  out.digits_ += static_cast<char>('0' + digit);
  return out;
}

TernaryWord TernaryWord::with_first(int digit) const {
  TernaryWord out = *this;
  out.digits_[0] = static_cast<char>('0' + digit);
  return out;
}

bool termwise_leq(const TernaryWord& a, const TernaryWord& b) {
  if (a.length() != b.length())
    throw length_mismatch("ternary words of unequal length");
  for (int i = 0; i < a.length(); ++i)
    if (a.at(i) > b.at(i)) return false;
  return true;
}

std::vector<std::pair<int, int>> valleys(const DyckPath& w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i + 1 < w.length(); ++i)
    if (w.at(i) == 0 && w.at(i + 1) == 1)
      out.emplace_back(i + 1, w.height(i + 1));
  return out;
}

std::vector<std::pair<int, int>> peaks(const DyckPath& w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i + 1 < w.length(); ++i)
    if (w.at(i) == 1 && w.at(i + 1) == 0)
      out.emplace_back(i + 1, w.height(i + 1));
  return out;
}

IntervalRef hochschild_interval(int n) {
  StepWord bottom = StepWord::parse("1100");
  for (int i = 0; i < n; ++i) bottom.append(StepWord::parse("10"));
  StepWord top;
  top.append(StepWord::ones(n + 1));
  top.append(StepWord::zeros(n));
  top.append(StepWord::parse("100"));
  return IntervalRef{DyckPath(bottom), DyckPath(top)};
}

bool in_hochschild(const DyckPath& w, int n) {
  if (w.size() != n + 2) return false;
  if (w.length() < 2 || w.at(0) != 1 || w.at(1) != 1) return false;
  int previous = 2;
  for (auto [point, height] : valleys(w)) {
    if (height > 1 || height > previous) return false;
    previous = height;
  }
  int len = w.length();
  bool ends_010 = len >= 3 && w.at(len - 3) == 0 && w.at(len - 2) == 1 &&
                  w.at(len - 1) == 0;
  bool ends_0100 = len >= 4 && w.at(len - 4) == 0 && w.at(len - 3) == 1 &&
                   w.at(len - 2) == 0 && w.at(len - 1) == 0;
  return ends_010 || ends_0100;
}

std::vector<DyckPath> hochschild_elements(int n) {
  IntervalRef box = hochschild_interval(n);
  const DyckPoset& d = shared_poset(n + 2);
  int top = d.index_of(box.top);
  std::vector<DyckPath> out;
  for (int z : d.up_set_of(box.bottom))
    if (d.poset().leq(z, top)) out.push_back(d.element(z));
  return out;
}

Poset hochschild_poset(int n) {
  IntervalRef box = hochschild_interval(n);
  const DyckPoset& d = shared_poset(n + 2);
  int top = d.index_of(box.top);
  std::vector<int> members;
  for (int z : d.up_set_of(box.bottom))
    if (d.poset().leq(z, top)) members.push_back(z);
  return d.poset().restrict_convex(members);
}

TernaryWord encode_vertex(const DyckPath& w) {
  if (!in_hochschild(w, w.size() - 2))
    throw not_in_hochschild_interval(w.str());
  TernaryWord out;
  int twos = 0;
  for (int i = 0; i + 1 < w.length(); ++i) {
    if (w.at(i) == 1 && w.at(i + 1) == 1 && i != 0) ++twos;
    if (w.at(i) == 0 && w.at(i + 1) == 1) {
      out = out.append(w.height(i + 1));
      for (; twos > 0; --twos) out = out.append(2);
    }
  }
  return out;
}

DyckPath decode_vertex(const TernaryWord& z) {
  if (z.length() == 0) throw not_in_image("empty ternary word");
  StepWord out;
  int height = 0;
  for (int i = 0; i < z.length();) {
    if (z.at(i) == 2) throw not_in_image("brick starts with 2");
    int target = z.at(i);
    int climb = 1 + (i == 0 ? 1 : 0);
    for (++i; i < z.length() && z.at(i) == 2; ++i) ++climb;
    out.append(StepWord::ones(climb));
    height += climb;
    out.append(StepWord::zeros(height - target));
    height = target;
  }
  out.append(1);
  out.append(StepWord::zeros(height + 1));
  DyckPath path(out);
  if (!in_hochschild(path, path.size() - 2))
    throw not_in_image("word is not a vertex encoding");
  return path;
}

VertexSets vertex_sets(int n) {
  VertexSets sets{{TernaryWord::parse("0")},
                  {TernaryWord::parse("1")},
                  {TernaryWord::parse("1")}};
  for (int m = 1; m < n; ++m) {
    VertexSets next;
    for (const TernaryWord& z : sets.one) {
      next.one.push_back(z.append(0));
      next.one.push_back(z.append(2));
    }
    for (const TernaryWord& z : sets.plain) {
      next.one.push_back(z.append(1));
      next.plain.push_back(z.append(1));
      next.plain.push_back(z.append(2));
    }
    for (const TernaryWord& z : next.one) {
      bool one_only_first = true;
      for (int i = 1; i < z.length() && one_only_first; ++i)
        one_only_first = z.at(i) != 1;
      if (one_only_first) next.zero.push_back(z.with_first(0));
    }
    sets = std::move(next);
  }
  std::sort(sets.zero.begin(), sets.zero.end());
  std::sort(sets.one.begin(), sets.one.end());
  std::sort(sets.plain.begin(), sets.plain.end());
  return sets;
}

DyckPath insert_at_second_peak(const DyckPath& w) {
  auto tops = peaks(w);
  if (tops.size() < 2)
    throw not_in_hochschild_interval("fewer than two peaks in " + w.str());
  int point = tops[tops.size() - 2].first;
  StepWord out = w.word().slice(0, point);
  out.append(StepWord::parse("10"));
  out.append(w.word().slice(point, w.length() - point));
  return DyckPath(out);
}

DyckPath append_unit_peak(const DyckPath& w) {
  return concat(w, DyckPath::parse("10"));
}

DyckPath insert_before_last(const DyckPath& w) {
  StepWord out = w.word().slice(0, w.length() - 1);
  out.append(StepWord::parse("10"));
  out.append(w.word().slice(w.length() - 1, 1));
  return DyckPath(out);
}

DyckPath lower_first_valley(const DyckPath& w) {
  auto dips = valleys(w);
  if (dips.empty() || dips.front().second != 1)
    throw not_in_hochschild_interval("first valley is not at height 1");
  int start = dips.front().first;  // the subpath begins at this point
  int base = 1;
  int end = start + 1;
  while (w.height(end) != base) ++end;
  if (end >= w.length() || w.at(end) != 0)
    throw not_in_hochschild_interval("no zero after the first-valley subpath");
  StepWord out = w.word().slice(0, start);
  out.append(0);
  out.append(w.word().slice(start, end - start));
  out.append(w.word().slice(end + 1, w.length() - end - 1));
  return DyckPath(out);
}

namespace {

int first_digit(const DyckPath& w) {
  auto dips = valleys(w);
  return dips.front().second;
}

}  // namespace

CheckReport check_structural_bijections(int n) {
  CheckReport report;
  std::vector<DyckPath> now = hochschild_elements(n);
  std::vector<DyckPath> bigger = hochschild_elements(n + 1);

  std::set<DyckPath> ones, plain, single_one_valley, zeros_now;
  for (const DyckPath& w : now) {
    if (first_digit(w) == 1) {
      ones.insert(w);
      int high = 0;
      for (auto [p, h] : valleys(w)) high += h == 1;
      if (high == 1) single_one_valley.insert(w);
    } else {
      zeros_now.insert(w);
    }
    if (is_block_indecomposable(w)) plain.insert(w);
  }
  std::set<DyckPath> big_by_last[3];
  for (const DyckPath& w : bigger) {
    TernaryWord z = encode_vertex(w);
    if (z.at(0) == 1) big_by_last[z.at(z.length() - 1)].insert(w);
  }

  auto check_bijection = [&](const std::set<DyckPath>& domain,
                             const std::set<DyckPath>& codomain, auto&& map,
                             auto&& action, const std::string& name) {
    std::set<DyckPath> image;
    for (const DyckPath& w : domain) {
      DyckPath out = map(w);
      report.require(codomain.count(out) == 1,
                     name + ": image misses the codomain at " + w.str());
      report.require(encode_vertex(out) == action(encode_vertex(w)),
                     name + ": wrong action on the encoding at " + w.str());
      image.insert(out);
    }
    report.require(image.size() == domain.size(), name + ": not injective");
    report.require(image.size() == codomain.size(), name + ": not onto");
  };

  check_bijection(
      ones, big_by_last[2], insert_at_second_peak,
      [](const TernaryWord& z) { return z.append(2); }, "peak insertion");
  check_bijection(
      ones, big_by_last[0], append_unit_peak,
      [](const TernaryWord& z) { return z.append(0); }, "final peak");
  check_bijection(
      plain, big_by_last[1], insert_before_last,
      [](const TernaryWord& z) { return z.append(1); }, "pre-final peak");
  check_bijection(
      single_one_valley, zeros_now, lower_first_valley,
      [](const TernaryWord& z) { return z.with_first(0); }, "valley drop");
  return report;
}

}  // namespace dexter
