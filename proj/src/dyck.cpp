#include "dexter/dyck.hpp"

#include <bit>

namespace dexter {

StepWord StepWord::parse(std::string_view text) {
  StepWord w;
  for (char c : text) {
    if (c == '0' || c == '1') {
      w.append(c - '0');
    } else if (c != ' ' && c != ',' && c != '(' && c != ')') {
      throw not_a_dyck_word("unexpected character in step word");
    }
  }
  return w;
}

StepWord StepWord::from_steps(const std::vector<int>& steps) {
  StepWord w;
  for (int s : steps) w.append(s);
  return w;
}

StepWord StepWord::zeros(int count) {
  StepWord w;
  for (int i = 0; i < count; ++i) w.append(0);
  return w;
}

StepWord StepWord::ones(int count) {
  StepWord w;
  for (int i = 0; i < count; ++i) w.append(1);
  return w;
}

void StepWord::append(int step) {
  if (len_ >= max_length) throw word_too_long("step word exceeds 64 steps");
  bits_ |= static_cast<std::uint64_t>(step & 1) << len_;
  ++len_;
}

void StepWord::append(const StepWord& suffix) {
  if (len_ + suffix.len_ > max_length)
    throw word_too_long("step word exceeds 64 steps");
  bits_ |= suffix.bits_ << len_;
  len_ += suffix.len_;
}

StepWord StepWord::slice(int start, int count) const {
  StepWord out;
  if (count > 0) {
    std::uint64_t mask =
        count >= 64 ? ~0ull : ((1ull << count) - 1);
    out.bits_ = (bits_ >> start) & mask;
    out.len_ = count;
  }
  return out;
}

int StepWord::height(int point) const {
  std::uint64_t mask = point >= 64 ? ~0ull : ((1ull << point) - 1);
  return 2 * std::popcount(bits_ & mask) - point;
}

int StepWord::one_count() const { return std::popcount(bits_); }

int StepWord::trailing_zeros() const {
  int run = 0;
  for (int i = len_ - 1; i >= 0 && at(i) == 0; --i) ++run;
  return run;
}

std::string StepWord::str() const {
  std::string s(static_cast<size_t>(len_), '0');
  for (int i = 0; i < len_; ++i) s[static_cast<size_t>(i)] = char('0' + at(i));
  return s;
}

std::string StepWord::tuple_str() const {
  std::string s = "(";
  for (int i = 0; i < len_; ++i) {
    if (i) s += ',';
    s += char('0' + at(i));
  }
  s += ')';
  return s;
}

std::vector<int> StepWord::steps() const {
  std::vector<int> out(static_cast<size_t>(len_));
  for (int i = 0; i < len_; ++i) out[static_cast<size_t>(i)] = at(i);
  return out;
}

std::strong_ordering operator<=>(const StepWord& a, const StepWord& b) {
  if (a.len_ != b.len_) return a.len_ <=> b.len_;
  std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  int j = std::countr_zero(diff);
  return ((a.bits_ >> j) & 1) <=> ((b.bits_ >> j) & 1);
}

bool DyckPath::is_valid(const StepWord& word) {
  int h = 0;
  for (int i = 0; i < word.length(); ++i) {
    h += word.at(i) ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

DyckPath::DyckPath(StepWord word) : word_(word) {
  if (!is_valid(word))
    throw not_a_dyck_word("prefix dips below 0 or endpoint nonzero: " +
                          word.str());
}

DyckPath DyckPath::parse(std::string_view text) {
  return DyckPath(StepWord::parse(text));
}

DyckPath DyckPath::from_steps(const std::vector<int>& steps) {
  return DyckPath(StepWord::from_steps(steps));
}

PseudoDyckPath DyckPath::inner() const {
  if (empty()) throw empty_operand("the empty path has no inner word");
  return PseudoDyckPath(word_.slice(1, length() - 2));
}

bool PseudoDyckPath::is_valid(const StepWord& word) {
  int h = 0;
  for (int i = 0; i < word.length(); ++i) {
    h += word.at(i) ? 1 : -1;
    if (h < -1) return false;
  }
  return h == 0;
}

PseudoDyckPath::PseudoDyckPath(StepWord word) : word_(word) {
  if (!is_valid(word))
    throw not_a_pseudo_dyck_word("height below -1 or endpoint nonzero: " +
                                 word.str());
}

PseudoDyckPath PseudoDyckPath::parse(std::string_view text) {
  return PseudoDyckPath(StepWord::parse(text));
}

DyckPath PseudoDyckPath::lift() const {
  StepWord w;
  w.append(1);
  w.append(word_);
  w.append(0);
  return DyckPath(w);
}

DyckPath concat(const DyckPath& a, const DyckPath& b) {
  StepWord w = a.word();
  w.append(b.word());
  return DyckPath(w);
}

std::vector<DyckPath> blocks(const DyckPath& w) {
  std::vector<DyckPath> out;
  int h = 0, start = 0;
  for (int i = 0; i < w.length(); ++i) {
    h += w.at(i) ? 1 : -1;
    if (h == 0) {
      out.push_back(DyckPath(w.word().slice(start, i + 1 - start)));
      start = i + 1;
    }
  }
  return out;
}

bool is_block_indecomposable(const DyckPath& w) {
  if (w.empty()) return false;
  for (int p = 1; p < w.length(); ++p)
    if (w.height(p) == 0) return false;
  return true;
}

long long area(const DyckPath& w) {
  long long total = 0;
  for (int p = 1; p < w.length(); ++p) total += w.height(p);
  return total;
}

std::vector<int> height_sequence(const DyckPath& w) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(w.size()));
  for (int i = 0; i < w.length(); ++i)
    if (w.at(i) == 1) out.push_back(w.height(i + 1));
  return out;
}

std::vector<Span> subpaths(const DyckPath& w) {
  std::vector<Span> out;
  out.reserve(static_cast<size_t>(w.size()));
  for (int s = 0; s < w.length(); ++s) {
    if (w.at(s) != 1) continue;
    int base = w.height(s);
    for (int e = s + 1; e <= w.length(); ++e) {
      if (w.height(e) == base) {
        out.push_back(Span{s, e - s});
        break;
      }
    }
  }
  return out;
}

bool is_subpath(const DyckPath& w, Span x) {
  if (x.start < 0 || x.len < 2 || x.start + x.len > w.length()) return false;
  int base = w.height(x.start);
  for (int p = x.start + 1; p < x.start + x.len; ++p)
    if (w.height(p) <= base) return false;
  return w.height(x.start + x.len) == base;
}

std::vector<DyckPath> level_decomposition(const DyckPath& w) {
  if (!is_block_indecomposable(w))
    throw not_block_indecomposable(w.str());
  int k = w.word().trailing_zeros() - 1;
  std::vector<DyckPath> parts(static_cast<size_t>(k));
  // Remove the final (1, 0^{k+1}).
  StepWord v = w.word().slice(0, w.length() - k - 2);
  for (int j = k; j >= 1; --j) {
    // Largest suffix of v whose heights all stay >= j.
    int p = v.length();
    while (p > 0 && v.height(p - 1) >= j) --p;
    parts[static_cast<size_t>(j - 1)] =
        DyckPath(v.slice(p, v.length() - p));
    // The separating letter before the suffix must be a 1.
    v = v.slice(0, p - 1);
  }
  return parts;
}

DyckPath level_compose(const std::vector<DyckPath>& parts) {
  StepWord w;
  w.append(1);
  for (const DyckPath& part : parts) {
    w.append(part.word());
    w.append(1);
  }
  w.append(StepWord::zeros(static_cast<int>(parts.size()) + 1));
  return DyckPath(w);
}

std::optional<Strip> find_strip(const DyckPath& w) {
  if (w.empty()) return std::nullopt;
  int run = w.word().trailing_zeros();
  if (run < 2) return std::nullopt;
  int len = w.length();
  // End point of the factor finishing at the second zero of the final run.
  int end = len - run + 2;
  int base = w.height(end);
  int start = end - 1;
  while (w.height(start) != base) --start;
  DyckPath inner(w.word().slice(start + 1, (len - run - 1) - (start + 1)));
  return Strip{w.word().slice(0, start), inner, run - 2};
}

}  // namespace dexter
