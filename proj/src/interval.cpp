#include "dexter/interval.hpp"

#include <algorithm>
#include <map>

#include "dexter/order.hpp"
#include "dexter/poset_iso.hpp"

namespace dexter {

std::vector<IntervalRef> all_intervals(int n, int cap) {
  if (n < 0 || n > cap)
    throw size_too_large("interval enumeration capped at size " +
                         std::to_string(cap));
  const DyckPoset& d = shared_poset(n);
  std::vector<IntervalRef> out;
  for (const DyckPath& u : d.elements())
    for (int v : d.up_set_of(u)) out.push_back(IntervalRef{u, d.element(v)});
  return out;
}

BigInt interval_count_formula(int n) {
  if (n == 0) return 1;
  BigInt numerator = BigInt(3) * (BigInt(1) << (n - 1)) * factorial(2 * n);
  return numerator / (factorial(n) * factorial(n + 2));
}

std::vector<IntervalRef> block_factor(const IntervalRef& ref) {
  std::vector<IntervalRef> out;
  int h = 0, start = 0;
  for (int i = 0; i < ref.top.length(); ++i) {
    h += ref.top.at(i) ? 1 : -1;
    if (h != 0) continue;
    if (ref.bottom.height(i + 1) != 0)
      throw not_an_interval("bottom misses a ground contact of the top");
    out.push_back(
        IntervalRef{DyckPath(ref.bottom.word().slice(start, i + 1 - start)),
                    DyckPath(ref.top.word().slice(start, i + 1 - start))});
    start = i + 1;
  }
  return out;
}

Poset upper_ideal(const DyckPath& w) {
  const DyckPoset& d = shared_poset(w.size());
  return d.poset().restrict_convex(d.up_set_of(w));
}

std::optional<std::pair<DyckPath, DyckPath>> upper_ideal_factor(
    const DyckPath& w) {
  std::optional<Strip> strip = find_strip(w);
  if (!strip) return std::nullopt;
  StepWord left = strip->prefix;
  left.append(1);
  left.append(0);
  left.append(StepWord::zeros(strip->trailing));
  return std::make_pair(DyckPath(left), strip->inner);
}

bool is_shape_bottom(const DyckPath& w) {
  return !w.empty() && w.word().trailing_zeros() == 1;
}

bool is_shape_top(const DyckPath& w) {
  return w.length() >= 4 && is_block_indecomposable(w) &&
         w.word().trailing_zeros() == 2;
}

bool is_reduced(const IntervalRef& ref) {
  return ref.bottom.empty() || is_shape_bottom(ref.bottom);
}

bool is_core(const IntervalRef& ref) {
  static const DyckPath diagonal = DyckPath::parse("1010");
  if (ref.bottom == diagonal && ref.top == diagonal) return true;
  return is_shape_bottom(ref.bottom) && is_shape_top(ref.top);
}

std::vector<DyckPath> core_chain(const DyckPath& w) {
  std::vector<DyckPath> parts = blocks(w);
  int k = static_cast<int>(parts.size()) + 1;
  std::vector<DyckPath> chain;
  chain.reserve(static_cast<size_t>(k) + 1);
  for (int j = 0; j < k; ++j) {
    // (1, first j blocks, 0, remaining blocks, 1, 0)
    StepWord word;
    word.append(1);
    for (int i = 0; i < j; ++i) word.append(parts[static_cast<size_t>(i)].word());
    word.append(0);
    for (int i = j; i < k - 1; ++i)
      word.append(parts[static_cast<size_t>(i)].word());
    word.append(1);
    word.append(0);
    chain.push_back(DyckPath(word));
  }
  StepWord top;
  top.append(1);
  top.append(w.word());
  top.append(StepWord::parse("100"));
  chain.push_back(DyckPath(top));
  return chain;
}

DyckPath core_chain_step(const DyckPath& u) {
  if (is_shape_top(u)) {
    StepWord word;
    word.append(StepWord::parse("10"));
    word.append(u.word().slice(1, u.length() - 4));
    word.append(StepWord::parse("10"));
    return DyckPath(word);
  }
  if (!is_shape_bottom(u) || u.size() < 2)
    throw not_in_shape_set("neither (v,1,0) nor (1,w,1,0,0): " + u.str());
  std::vector<DyckPath> parts = blocks(u);
  int start = parts.front().length();
  return slide(u, Span{start, parts[1].length()}, 1);
}

std::pair<IntervalRef, int> core_encode(const IntervalRef& ref) {
  if (!is_shape_bottom(ref.bottom) || !is_shape_top(ref.top))
    throw not_core("interval endpoints are not of core shape");
  DyckPath z = ref.bottom;
  int steps = 0;
  while (!is_shape_top(z)) {
    z = core_chain_step(z);
    ++steps;
  }
  DyckPath w(z.word().slice(1, z.length() - 4));
  DyckPath top_inner(ref.top.word().slice(1, ref.top.length() - 4));
  int position = static_cast<int>(blocks(w).size()) + 1 - steps;
  return {IntervalRef{w, top_inner}, position};
}

IntervalRef core_decode(const IntervalRef& ref, int position) {
  std::vector<DyckPath> chain = core_chain(ref.bottom);
  if (position < 0 || position >= static_cast<int>(chain.size()) - 1)
    throw choice_out_of_range("chain position beyond the block count");
  StepWord top;
  top.append(1);
  top.append(ref.top.word());
  top.append(StepWord::parse("100"));
  return IntervalRef{chain[static_cast<size_t>(position)], DyckPath(top)};
}

SeriesTable interval_series(IntervalKind kind, int max_degree, int cap) {
  if (max_degree > cap)
    throw size_too_large("series degree capped at " + std::to_string(cap));
  SeriesTable table(max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    IntPoly& coeff = table.coeff(n);
    for (const IntervalRef& ref : all_intervals(n, cap)) {
      bool keep = kind == IntervalKind::all ||
                  (kind == IntervalKind::reduced && is_reduced(ref)) ||
                  (kind == IntervalKind::core && is_core(ref));
      if (keep)
        coeff += IntPoly::variable(
            Var::s, static_cast<int>(blocks(ref.bottom).size()));
    }
  }
  return table;
}

CheckReport check_functional_equations(const SeriesTable& fa,
                                       const SeriesTable& fr,
                                       const SeriesTable& fc) {
  CheckReport report;
  int deg = std::min({fa.max_degree(), fr.max_degree(), fc.max_degree()});
  const IntPoly T = IntPoly::variable(Var::t);
  const IntPoly S = IntPoly::variable(Var::s);
  IntPoly pa = fa.to_poly(), pr = fr.to_poly(), pc = fc.to_poly();
  IntPoly g = pa.substitute(Var::s, IntPoly(1));

  IntPoly lhs1 = pa;
  IntPoly rhs1 = (pr + T * (pa - 1) * g).truncate(Var::t, deg);
  report.require(lhs1 == rhs1, "f_A = f_R + t (f_A - 1) f_A|_{s=1}");

  try {
    IntPoly q1 = (pr - 1).div_exact(S * T);
    IntPoly q2 = (pa - 1).div_exact(S * T);
    IntPoly q3 = pc.div_exact(S * T);
    report.require(
        q1.truncate(Var::t, deg - 1) ==
            (IntPoly(1) + q2 * q3).truncate(Var::t, deg - 1),
        "(f_R - 1)/(st) = 1 + ((f_A - 1)/(st)) (f_C/(st))");
  } catch (const division_not_exact&) {
    report.require(false, "st-division of the freeness identity");
  }

  try {
    IntPoly h = (S * pa - g).div_exact(S - 1);
    IntPoly rhs3 =
        (S * S * T * T * (IntPoly(1) + h)).truncate(Var::t, deg);
    report.require(pc == rhs3,
                   "f_C = s^2 t^2 (1 + (s f_A - f_A|_{s=1})/(s-1))");
    IntPoly rhs4 = (IntPoly(1) + S * T + S * T * (pa - 1) * (IntPoly(1) + h) +
                    T * (pa - 1) * g)
                       .truncate(Var::t, deg);
    report.require(pa == rhs4, "combined catalytic equation for f_A");
  } catch (const division_not_exact&) {
    report.require(false, "(s-1)-division of the core identity");
  }
  return report;
}

CheckReport verify_functional_equations(int max_degree) {
  return check_functional_equations(
      interval_series(IntervalKind::all, max_degree),
      interval_series(IntervalKind::reduced, max_degree),
      interval_series(IntervalKind::core, max_degree));
}

CheckReport verify_algebraic_equation(int max_degree, int enumeration_cap) {
  CheckReport report;
  const IntPoly T = IntPoly::variable(Var::t);
  IntPoly g = 1;
  for (int n = 1; n <= max_degree; ++n)
    g += IntPoly(interval_count_formula(n)) * IntPoly::variable(Var::t, n);
  IntPoly equation = 16 * g * g * T * T - g * (8 * T * T + 12 * T - 1) +
                     T * T + 11 * T - 1;
  report.require(equation.truncate(Var::t, max_degree).is_zero(),
                 "16 g^2 t^2 - g (8t^2 + 12t - 1) + t^2 + 11t - 1 = 0");
  for (int n = 0; n <= enumeration_cap; ++n)
    report.require(BigInt(all_intervals(n).size()) ==
                       interval_count_formula(n),
                   "interval count at size " + std::to_string(n));
  return report;
}

std::vector<DyckPath> level_multiset_key(const DyckPath& w) {
  std::vector<DyckPath> key;
  for (const DyckPath& block : blocks(w))
    for (const DyckPath& part : level_decomposition(block))
      key.push_back(part);
  std::sort(key.begin(), key.end());
  return key;
}

Poset lower_interval(const DyckPath& w) {
  const DyckPoset& d = shared_poset(w.size());
  return d.poset().restrict_convex(d.down_set_of(w));
}

Poset j_poset(const DyckPath& w) {
  StepWord top;
  top.append(1);
  top.append(w.word());
  top.append(StepWord::parse("100"));
  return lower_interval(DyckPath(top));
}

CheckReport level_multiset_isomorphism_check(int n) {
  CheckReport report;
  std::map<std::vector<DyckPath>, std::vector<DyckPath>> groups;
  for (const DyckPath& w : all_paths(n))
    groups[level_multiset_key(w)].push_back(w);
  for (const auto& [key, members] : groups) {
    Poset baseline = lower_interval(members.front());
    for (size_t i = 1; i < members.size(); ++i)
      report.require(poset_isomorphic(baseline, lower_interval(members[i])),
                     "I(" + members.front().str() + ") vs I(" +
                         members[i].str() + ")");
  }
  for (const DyckPath& w : all_paths(n)) {
    if (!is_block_indecomposable(w)) continue;
    std::vector<DyckPath> parts = level_decomposition(w);
    Poset product({""}, {});
    for (const DyckPath& part : parts)
      product = cartesian_product(product, j_poset(part));
    report.require(poset_isomorphic(lower_interval(w), product),
                   "I(" + w.str() + ") vs product of level factors");
  }
  return report;
}

}  // namespace dexter
