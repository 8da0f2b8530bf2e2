#include "dexter/monoid.hpp"

namespace dexter {

PseudoDyckPath star(const PseudoDyckPath& u, const PseudoDyckPath& v) {
  int k = u.word().trailing_zeros();
  StepWord head = u.word().slice(0, u.length() - k);
  // Longest prefix of v in which the height stays non-negative.
  int cut = 0;
  int h = 0;
  for (int i = 0; i < v.length(); ++i) {
    h += v.word().at(i) ? 1 : -1;
    if (h < 0) break;
    cut = i + 1;
  }
  StepWord out = head;
  out.append(v.word().slice(0, cut));
  out.append(StepWord::zeros(k));
  out.append(v.word().slice(cut, v.length() - cut));
  return PseudoDyckPath(out);
}

DyckPath sharp(const DyckPath& u, const DyckPath& v) {
  if (u.empty() || v.empty())
    throw empty_operand("sharp product needs non-empty operands");
  return star(u.inner(), v.inner()).lift();
}

bool is_sharp_generator(const DyckPath& w) {
  if (w == DyckPath::parse("1010")) return true;
  return w.length() >= 4 && is_block_indecomposable(w) &&
         w.word().trailing_zeros() == 2;
}

std::vector<DyckPath> sharp_factor(const DyckPath& w) {
  if (w.empty()) throw empty_operand("cannot factor the empty path");
  static const DyckPath separator = DyckPath::parse("1010");
  std::vector<DyckPath> factors;
  bool first = true;
  for (const DyckPath& block : blocks(w)) {
    if (!first) factors.push_back(separator);
    first = false;
    for (const DyckPath& part : level_decomposition(block)) {
      StepWord gen;
      gen.append(1);
      gen.append(part.word());
      gen.append(StepWord::parse("100"));
      factors.push_back(DyckPath(gen));
    }
  }
  return factors;
}

DyckPath sharp_product(const std::vector<DyckPath>& factors) {
  DyckPath out = DyckPath::parse("10");
  for (const DyckPath& f : factors) out = sharp(out, f);
  return out;
}

namespace {

// Deep validation is only affordable while the diagrams stay small.
constexpr int kOracleCap = 11;

void check_interval(const IntervalRef& ref) {
  if (ref.bottom.size() != ref.top.size())
    throw not_an_interval("endpoint sizes differ");
  if (ref.size() <= kOracleCap && !is_interval(ref))
    throw not_an_interval("bottom is not below top: [" + ref.bottom.str() +
                          ", " + ref.top.str() + "]");
}

}  // namespace

bool is_interval(const IntervalRef& ref) {
  if (ref.bottom.size() != ref.top.size()) return false;
  return shared_poset(ref.size()).leq(ref.bottom, ref.top);
}

IntervalRef interval_product(const IntervalRef& lhs, const IntervalRef& rhs) {
  check_interval(lhs);
  check_interval(rhs);
  return IntervalRef{sharp(lhs.bottom, rhs.bottom), sharp(lhs.top, rhs.top)};
}

IntervalRef interval_unit() {
  return IntervalRef{DyckPath::parse("10"), DyckPath::parse("10")};
}

bool is_interval_generator(const IntervalRef& ref) {
  if (!is_sharp_generator(ref.top)) return false;
  if (ref.top == DyckPath::parse("1010")) return ref.bottom == ref.top;
  return true;
}

std::vector<IntervalRef> interval_factor(const IntervalRef& ref) {
  check_interval(ref);
  if (ref.size() < 2) return {};
  std::vector<DyckPath> tops = sharp_factor(ref.top);
  std::vector<DyckPath> bottoms = sharp_factor(ref.bottom);
  std::vector<IntervalRef> factors;
  factors.reserve(tops.size());
  size_t next = 0;
  for (const DyckPath& top : tops) {
    DyckPath bottom = DyckPath::parse("10");
    while (bottom.size() < top.size() && next < bottoms.size())
      bottom = sharp(bottom, bottoms[next++]);
    if (bottom.size() != top.size())
      throw not_an_interval("bottom does not split along the top grading");
    factors.push_back(IntervalRef{bottom, top});
  }
  if (next != bottoms.size())
    throw not_an_interval("bottom does not split along the top grading");
  return factors;
}

IntervalRef interval_sharp_product(const std::vector<IntervalRef>& factors) {
  IntervalRef out = interval_unit();
  for (const IntervalRef& f : factors) out = interval_product(out, f);
  return out;
}

long long interval_generator_count(int n) {
  if (n < 2) return 0;
  const DyckPoset& d = shared_poset(n);
  long long count = n == 2 ? 1 : 0;  // the diagonal interval on (1,0,1,0)
  for (const DyckPath& w : all_paths(n - 2)) {
    StepWord top;
    top.append(1);
    top.append(w.word());
    top.append(StepWord::parse("100"));
    count += static_cast<long long>(d.down_set_of(DyckPath(top)).size());
  }
  return count;
}

}  // namespace dexter
