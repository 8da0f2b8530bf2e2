#include "dexter/meet.hpp"

#include "dexter/order.hpp"

namespace dexter {

DyckPath FrozenDecomposition::reassemble() const {
  StepWord out = prefix;
  out.append(StepWord::zeros(leading_zeros));
  for (const Segment& seg : segments) {
    out.append(seg.path.word());
    out.append(StepWord::zeros(seg.zeros));
  }
  out.append(tail.word());
  return DyckPath(out);
}

FrozenDecomposition frozen_decompose(const DyckPath& u, int prefix_len) {
  if (prefix_len < 0 || prefix_len >= u.length() || u.at(prefix_len) != 0)
    throw letter_not_zero("no 0 step at index " + std::to_string(prefix_len));
  FrozenDecomposition out;
  out.prefix = u.word().slice(0, prefix_len);
  int pos = prefix_len;
  while (pos < u.length() && u.at(pos) == 0) ++pos;
  out.leading_zeros = pos - prefix_len;
  while (pos < u.length()) {
    int base = u.height(pos);
    int end = pos + 1;
    while (u.height(end) != base || (end < u.length() && u.at(end) == 1))
      ++end;
    DyckPath fragment(u.word().slice(pos, end - pos));
    if (end == u.length()) {
      out.tail = fragment;
      return out;
    }
    int zeros = 0;
    while (end + zeros < u.length() && u.at(end + zeros) == 0) ++zeros;
    out.segments.push_back(FrozenDecomposition::Segment{fragment, zeros});
    pos = end + zeros;
  }
  return out;
}

std::optional<DyckPath> rise(const DyckPath& u, int prefix_len) {
  FrozenDecomposition dec = frozen_decompose(u, prefix_len);
  int count = static_cast<int>(dec.segments.size());
  int chosen = -1;
  for (int j = 0; j <= count; ++j) {
    if (j < count) {
      // All blocks of a segment but the last can slide.
      if (blocks(dec.segments[static_cast<size_t>(j)].path).size() >= 2) {
        chosen = j;
        break;
      }
    } else if (!dec.tail.empty()) {
      chosen = j;  // in the tail every block can slide
      break;
    }
  }
  if (chosen < 0) return std::nullopt;
  int start = prefix_len + dec.leading_zeros;
  for (int j = 0; j < chosen; ++j)
    start += dec.segments[static_cast<size_t>(j)].path.length() +
             dec.segments[static_cast<size_t>(j)].zeros;
  const DyckPath& fragment = chosen < count
                                 ? dec.segments[static_cast<size_t>(chosen)].path
                                 : dec.tail;
  int jump = chosen == 0 ? dec.leading_zeros
                         : dec.segments[static_cast<size_t>(chosen - 1)].zeros;
  Span first_block{start, blocks(fragment).front().length()};
  return slide(u, first_block, jump);
}

std::optional<DyckPath> rise_to_one(const DyckPath& u, int prefix_len) {
  if (prefix_len < 0 || prefix_len >= u.length() || u.at(prefix_len) != 0)
    throw letter_not_zero("no 0 step at index " + std::to_string(prefix_len));
  DyckPath z = u;
  while (z.at(prefix_len) == 0) {
    std::optional<DyckPath> lifted = rise(z, prefix_len);
    if (!lifted) return std::nullopt;
    z = *lifted;
  }
  return z;
}

namespace {

struct DescFrame {
  int last_start = 0;  // start of the last subpath before the return
  int turn = 0;        // the matching return point
  int count = 0;       // number of subpaths in between
};

DescFrame desc_frame(const DyckPath& w, int step) {
  if (step < 0 || step >= w.length() || w.at(step) != 1)
    throw step_not_one("no 1 step at index " + std::to_string(step));
  int base = w.height(step);
  if (base == 0)
    throw starts_at_ground_level("step at index " + std::to_string(step) +
                                 " starts at height 0");
  DescFrame frame;
  frame.last_start = step;
  int pos = step + 1;
  int count = 1;
  while (w.height(pos) != base || w.at(pos) == 1) {
    if (w.height(pos) == base) {
      frame.last_start = pos;
      ++count;
    }
    ++pos;
  }
  frame.turn = pos;
  frame.count = count;
  return frame;
}

}  // namespace

DyckPath descend(const DyckPath& w, int step) {
  DescFrame frame = desc_frame(w, step);
  int zeros = 0;
  while (frame.turn + zeros < w.length() && w.at(frame.turn + zeros) == 0)
    ++zeros;
  StepWord out = w.word().slice(0, frame.last_start);
  out.append(StepWord::zeros(zeros));
  out.append(w.word().slice(frame.last_start, frame.turn - frame.last_start));
  out.append(w.word().slice(frame.turn + zeros,
                            w.length() - frame.turn - zeros));
  return DyckPath(out);
}

DyckPath descend_fully(const DyckPath& w, int step) {
  int count = desc_frame(w, step).count;
  DyckPath out = w;
  for (int i = 0; i < count; ++i) out = descend(out, step);
  return out;
}

DyckPath meet(const DyckPath& v, const DyckPath& w) {
  if (v.size() != w.size())
    throw size_mismatch("meet needs paths of equal size");
  DyckPath lower = v, upper = w;
  int agreed = -1;
  while (lower != upper) {
    int d = 0;
    while (lower.at(d) == upper.at(d)) ++d;
    if (d <= agreed) throw error("meet loop failed to extend the prefix");
    agreed = d;
    if (lower.at(d) == 1) std::swap(lower, upper);
    upper = descend_fully(upper, d);
  }
  return lower;
}

}  // namespace dexter
