#include "dexter/verify.hpp"

#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "dexter/binary_tree.hpp"
#include "dexter/hochschild.hpp"
#include "dexter/invariants.hpp"
#include "dexter/meet.hpp"
#include "dexter/poset_iso.hpp"
#include "dexter/tamari.hpp"

namespace dexter {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  std::string str() const {
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2fs", s);
    return buffer;
  }
};

struct Check {
  std::string name;
  bool ok = true;
  long long cases = 0;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    ++cases;
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }

  VerifyResult result(const std::string& extra = "") const {
    std::string witness = ok ? std::to_string(cases) + " checks" : detail;
    if (!extra.empty() && ok) witness += ", " + extra;
    return VerifyResult{name, ok, true, witness};
  }
};

IntPoly s_terms(std::initializer_list<std::pair<int, int>> coeffs) {
  IntPoly out;
  for (auto [c, e] : coeffs) out += c * IntPoly::variable(Var::s, e);
  return out;
}

std::vector<int> set_bits(const std::uint64_t* row, int words) {
  std::vector<int> out;
  for (int k = 0; k < words; ++k) {
    std::uint64_t word = row[k];
    while (word) {
      int bit = std::countr_zero(word);
      out.push_back(64 * k + bit);
      word &= word - 1;
    }
  }
  return out;
}

VerifyResult interval_counts(const VerifyCaps& caps) {
  Timer timer;
  Check check{"interval-counts"};
  const long long expected[] = {1, 1, 3, 12, 56, 288, 1584, 9152, 55040};
  for (int n = 0; n <= caps.interval_counts; ++n) {
    BigInt brute(all_intervals(n, std::max(9, caps.interval_counts)).size());
    check.expect(brute == interval_count_formula(n),
                 "enumeration disagrees with the formula at size " +
                     std::to_string(n));
    if (n < 9)
      check.expect(brute == expected[n],
                   "count differs from the reference sequence at size " +
                       std::to_string(n));
  }
  return check.result(timer.str());
}

VerifyResult maximal_elements(const VerifyCaps& caps) {
  Check check{"maximal-elements"};
  const long long reference[] = {1, 1, 2, 4, 9, 21, 51};
  for (int n = 1; n <= caps.maximal_predicate; ++n) {
    long long count = 0;
    for (const DyckPath& w : all_paths(n)) {
      bool max = is_maximal(w);
      check.expect(max == covers(w).empty(),
                   "predicate disagrees with out-degree at " + w.str());
      if (max) ++count;
    }
    if (n <= caps.maximal_counts) {
      check.expect(BigInt(count) == motzkin(n - 1),
                   "maximal count is not the Motzkin number at size " +
                       std::to_string(n));
      if (n <= 7)
        check.expect(count == reference[n - 1],
                     "maximal count differs from the reference at size " +
                         std::to_string(n));
    }
  }
  return check.result();
}

VerifyResult order_sandwich(const VerifyCaps& caps) {
  Check check{"order-sandwich"};
  for (int n = 1; n <= caps.order_sandwich; ++n) {
    Poset comb = comb_hasse(n);
    Poset dexter_order = shared_poset(n).poset();
    Poset tamari = tamari_hasse(n);
    check.expect(order_contains(comb, dexter_order),
                 "comb order not inside the dexter order at size " +
                     std::to_string(n));
    check.expect(order_contains(dexter_order, tamari),
                 "dexter order not inside the Tamari order at size " +
                     std::to_string(n));
    for (const DyckPath& u : all_paths(n)) {
      for (Span x : movable_subpaths(u)) {
        int run = zero_run_before(u, x);
        for (int jump = 1; jump <= run; ++jump) {
          auto chain = tamari_interval_chain(u, x, jump);
          int bottom = tamari.index_of(u.str());
          int top = tamari.index_of(chain.back().str());
          std::set<std::string> interval;
          for (int z = 0; z < tamari.size(); ++z)
            if (tamari.leq(bottom, z) && tamari.leq(z, top))
              interval.insert(tamari.label(z));
          std::set<std::string> expected;
          for (const DyckPath& c : chain) expected.insert(c.str());
          check.expect(interval == expected,
                       "Tamari interval is not the slide chain at " +
                           u.str());
        }
      }
    }
  }
  return check.result();
}

VerifyResult tree_bijection(const VerifyCaps& caps) {
  Check check{"tree-bijection"};
  for (int n = 0; n <= caps.structure; ++n) {
    std::set<std::string> images;
    for (const DyckPath& w : all_paths(n)) {
      BinaryTree t = to_binary_tree(w);
      check.expect(from_binary_tree(t) == w, "roundtrip fails at " + w.str());
      check.expect(t.rightmost_branch_length() == w.word().trailing_zeros(),
                   "branch statistic fails at " + w.str());
      images.insert(t.str());
    }
    check.expect(BigInt(images.size()) == catalan(n),
                 "tree images collide at size " + std::to_string(n));
  }
  return check.result();
}

VerifyResult hasse_sanity(const VerifyCaps& caps) {
  Check check{"hasse-reduced"};
  for (int n = 1; n <= caps.structure; ++n) {
    const DyckPoset& d = shared_poset(n);
    check.expect(d.poset().is_transitively_reduced(),
                 "cover graph is not reduced at size " + std::to_string(n));
    std::vector<int> indeg(static_cast<size_t>(d.poset().size()), 0);
    for (const CoverEdge& e : d.poset().cover_edges())
      ++indeg[static_cast<size_t>(e.dst)];
    int sources = 0;
    for (int v : indeg) sources += v == 0;
    check.expect(sources == 1, "several sources at size " + std::to_string(n));
    check.expect(indeg[static_cast<size_t>(d.index_of(min_path(n)))] == 0,
                 "minimum has an incoming edge at size " + std::to_string(n));
  }
  return check.result();
}

VerifyResult printed_series(const VerifyCaps& caps) {
  Check check{"printed-series"};
  SeriesTable fa = interval_series(IntervalKind::all, caps.series_printed);
  SeriesTable fr = interval_series(IntervalKind::reduced, caps.series_printed);
  SeriesTable fc = interval_series(IntervalKind::core, caps.series_printed);
  std::vector<IntPoly> ea = {IntPoly(1),
                             s_terms({{1, 1}}),
                             s_terms({{2, 2}, {1, 1}}),
                             s_terms({{5, 3}, {5, 2}, {2, 1}}),
                             s_terms({{14, 4}, {21, 3}, {15, 2}, {6, 1}})};
  std::vector<IntPoly> er = {IntPoly(1),
                             s_terms({{1, 1}}),
                             s_terms({{2, 2}}),
                             s_terms({{5, 3}, {3, 2}}),
                             s_terms({{14, 4}, {16, 3}, {8, 2}})};
  std::vector<IntPoly> ec = {IntPoly(0),
                             IntPoly(0),
                             s_terms({{2, 2}}),
                             s_terms({{1, 3}, {1, 2}}),
                             s_terms({{2, 4}, {3, 3}, {3, 2}})};
  for (int n = 0; n <= std::min(caps.series_printed, 4); ++n) {
    check.expect(fa.coeff(n) == ea[static_cast<size_t>(n)],
                 "all-interval series differs at degree " + std::to_string(n));
    check.expect(fr.coeff(n) == er[static_cast<size_t>(n)],
                 "reduced series differs at degree " + std::to_string(n));
    check.expect(fc.coeff(n) == ec[static_cast<size_t>(n)],
                 "core series differs at degree " + std::to_string(n));
  }
  return check.result();
}

VerifyResult functional_equations(const VerifyCaps& caps) {
  Check check{"functional-equations"};
  CheckReport report = verify_functional_equations(caps.series_equations);
  for (const std::string& failure : report.failures)
    check.expect(false, failure);
  check.expect(report.ok, "functional equations failed");
  return check.result("through degree " +
                      std::to_string(caps.series_equations));
}

VerifyResult algebraic_equation(const VerifyCaps& caps) {
  Check check{"algebraic-equation"};
  CheckReport report =
      verify_algebraic_equation(caps.algebraic_degree, caps.interval_counts);
  for (const std::string& failure : report.failures) check.expect(false, failure);
  check.expect(report.ok, "algebraic equation failed");
  return check.result("through degree " +
                      std::to_string(caps.algebraic_degree));
}

VerifyResult core_machinery(const VerifyCaps& caps) {
  Check check{"core-machinery"};
  int cap = caps.core_machinery;
  for (int n = 2; n <= cap; ++n) {
    const DyckPoset& d = shared_poset(n);
    std::set<DyckPath> in_chains;
    for (const DyckPath& w : all_paths(n - 2)) {
      auto chain = core_chain(w);
      for (size_t i = 0; i < chain.size(); ++i) {
        check.expect(core_chain_step(chain[i]) ==
                         chain[(i + 1) % chain.size()],
                     "orbit map leaves the chain of " + w.str());
        check.expect(!in_chains.count(chain[i]),
                     "chains overlap at " + chain[i].str());
        in_chains.insert(chain[i]);
      }
    }
    for (const DyckPath& w : d.elements()) {
      bool shaped = is_shape_bottom(w) || is_shape_top(w);
      check.expect(shaped == (in_chains.count(w) == 1),
                   "chains miss the shape set at " + w.str());
    }
    for (const CoverEdge& e : d.poset().cover_edges())
      if (in_chains.count(d.element(e.dst)))
        check.expect(in_chains.count(d.element(e.src)) == 1,
                     "the shape set is not a lower ideal at size " +
                         std::to_string(n));
    long long via_bijection = n == 2 ? 1 : 0;
    for (const IntervalRef& ref : all_intervals(n - 2))
      via_bijection += static_cast<long long>(blocks(ref.bottom).size()) + 1;
    long long direct = 0;
    for (const IntervalRef& ref : all_intervals(n)) {
      if (!is_core(ref)) continue;
      ++direct;
      if (ref.bottom == ref.top) continue;
      auto [inner, position] = core_encode(ref);
      check.expect(core_decode(inner, position) == ref,
                   "core bijection does not roundtrip at [" +
                       ref.bottom.str() + ", " + ref.top.str() + "]");
    }
    check.expect(via_bijection == direct,
                 "core recount fails at size " + std::to_string(n));
    SeriesTable fc = interval_series(IntervalKind::core, n, cap + 1);
    check.expect(fc.coeff(n).substitute(Var::s, IntPoly(1)) ==
                     IntPoly(BigInt(direct)),
                 "core series row differs at size " + std::to_string(n));
  }
  return check.result();
}

VerifyResult monoid_laws(const VerifyCaps& caps) {
  Check check{"monoid-laws"};
  std::vector<PseudoDyckPath> small;
  for (int n = 1; n <= caps.monoid_exhaustive; ++n)
    for (const DyckPath& w : all_paths(n)) small.push_back(w.inner());
  PseudoDyckPath unit;
  for (const auto& a : small) {
    check.expect(star(unit, a) == a && star(a, unit) == a,
                 "star unit law fails at " + a.str());
    for (const auto& b : small)
      for (const auto& c : small)
        check.expect(star(star(a, b), c) == star(a, star(b, c)),
                     "star associativity fails");
  }
  check.expect(star(PseudoDyckPath::parse("10"),
                    PseudoDyckPath::parse("01")) ==
                   PseudoDyckPath::parse("1001"),
               "first worked star product differs");
  check.expect(star(PseudoDyckPath::parse("0110"),
                    PseudoDyckPath::parse("1010")) ==
                   PseudoDyckPath::parse("01110100"),
               "second worked star product differs");

  std::vector<PseudoDyckPath> big = small;
  for (int n = caps.monoid_exhaustive + 1; n <= caps.monoid_random; ++n)
    for (const DyckPath& w : all_paths(n)) big.push_back(w.inner());
  std::mt19937_64 rng(caps.seed);
  std::uniform_int_distribution<size_t> pick(0, big.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& a = big[pick(rng)];
    const auto& b = big[pick(rng)];
    const auto& c = big[pick(rng)];
    check.expect(star(star(a, b), c) == star(a, star(b, c)),
                 "sampled star associativity fails");
  }
  DyckPath one = DyckPath::parse("10");
  for (int n = 1; n <= 6; ++n)
    for (const DyckPath& w : all_paths(n))
      check.expect(sharp(one, w) == w && sharp(w, one) == w,
                   "sharp unit law fails at " + w.str());
  return check.result();
}

VerifyResult free_factorization(const VerifyCaps& caps) {
  Check check{"free-factorization"};
  for (int n = 1; n <= caps.m1_roundtrip; ++n)
    for (const DyckPath& w : all_paths(n)) {
      auto factors = sharp_factor(w);
      for (const DyckPath& f : factors)
        check.expect(is_sharp_generator(f),
                     "non-generator factor at " + w.str());
      check.expect(sharp_product(factors) == w,
                   "sharp factorization does not roundtrip at " + w.str());
    }
  for (int n = 1; n <= caps.m2_roundtrip; ++n)
    for (const IntervalRef& ref : all_intervals(n)) {
      auto factors = interval_factor(ref);
      for (const IntervalRef& f : factors)
        check.expect(is_interval_generator(f),
                     "non-generator interval factor");
      check.expect(interval_sharp_product(factors) == ref,
                   "interval factorization does not roundtrip at [" +
                       ref.bottom.str() + ", " + ref.top.str() + "]");
    }
  return check.result();
}

VerifyResult generator_counts(const VerifyCaps&) {
  Check check{"generator-counts"};
  const long long expected[] = {3, 3, 11, 51, 267, 1507};
  for (int n = 2; n <= 7; ++n)
    check.expect(interval_generator_count(n) == expected[n - 2],
                 "generator count differs at size " + std::to_string(n));
  return check.result();
}

VerifyResult factorization_theorems(const VerifyCaps& caps) {
  Check check{"factorization-theorems"};
  int cap = caps.factorization;
  // Sharp products of intervals are cartesian products.
  for (int a = 2; a <= cap - 1; ++a)
    for (const IntervalRef& lhs : all_intervals(a))
      for (int b = 2; a + b - 1 <= cap; ++b)
        for (const IntervalRef& rhs : all_intervals(b)) {
          IntervalRef prod = interval_product(lhs, rhs);
          const DyckPoset& d = shared_poset(prod.size());
          int top = d.index_of(prod.top);
          std::set<DyckPath> image;
          for (int x : shared_poset(a).up_set_of(lhs.bottom)) {
            const DyckPath& px = shared_poset(a).element(x);
            if (!shared_poset(a).leq(px, lhs.top)) continue;
            for (int y : shared_poset(b).up_set_of(rhs.bottom)) {
              const DyckPath& py = shared_poset(b).element(y);
              if (!shared_poset(b).leq(py, rhs.top)) continue;
              image.insert(sharp(px, py));
            }
          }
          long long direct = 0;
          for (int z : d.up_set_of(prod.bottom))
            if (d.poset().leq(z, top)) ++direct;
          check.expect(static_cast<long long>(image.size()) == direct,
                       "product interval has the wrong cardinality");
          for (const DyckPath& z : image)
            check.expect(d.leq(prod.bottom, z) &&
                             d.poset().leq(d.index_of(z), top),
                         "sharp image leaves the interval");
        }
  // Block factorization is a poset isomorphism.
  for (int n = 1; n <= cap; ++n)
    for (const IntervalRef& ref : all_intervals(n)) {
      auto factors = block_factor(ref);
      if (factors.size() <= 1) continue;
      const DyckPoset& d = shared_poset(n);
      std::vector<int> members;
      int top = d.index_of(ref.top);
      for (int z : d.up_set_of(ref.bottom))
        if (d.poset().leq(z, top)) members.push_back(z);
      Poset induced = d.poset().restrict_convex(members);
      Poset product({""}, {});
      for (const IntervalRef& f : factors) {
        const DyckPoset& df = shared_poset(f.size());
        std::vector<int> sub;
        int ftop = df.index_of(f.top);
        for (int z : df.up_set_of(f.bottom))
          if (df.poset().leq(z, ftop)) sub.push_back(z);
        product = cartesian_product(product, df.poset().restrict_convex(sub));
      }
      check.expect(poset_isomorphic(induced, product),
                   "block factorization not an isomorphism at [" +
                       ref.bottom.str() + ", " + ref.top.str() + "]");
    }
  // Upper ideals factor along strips.
  for (int n = 1; n <= cap; ++n)
    for (const DyckPath& w : all_paths(n)) {
      auto factors = upper_ideal_factor(w);
      if (!factors) continue;
      Poset product = cartesian_product(upper_ideal(factors->first),
                                        upper_ideal(factors->second));
      check.expect(poset_isomorphic(upper_ideal(w), product),
                   "upper ideal does not factor at " + w.str());
    }
  // Lower intervals only depend on the level multiset.
  for (int n = 1; n <= cap; ++n) {
    CheckReport report = level_multiset_isomorphism_check(n);
    for (const std::string& failure : report.failures)
      check.expect(false, failure);
    check.expect(report.ok, "level multiset grouping failed");
  }
  return check.result();
}

VerifyResult meet_vs_brute(const VerifyCaps& caps) {
  Timer timer;
  Check check{"meet-vs-brute"};
  for (int n = 1; n <= caps.meet_pairs; ++n) {
    const DyckPoset& d = shared_poset(n);
    const BitMatrix& reach = d.poset().reach();
    int size = d.poset().size();
    int words = reach.row_words();
    BitMatrix down(size);
    for (int u = 0; u < size; ++u)
      for (int v = 0; v < size; ++v)
        if (reach.get(v, u)) down.set(u, v);
    std::vector<std::uint64_t> shared(static_cast<size_t>(words));
    for (int u = 0; u < size; ++u) {
      for (int v = u; v < size; ++v) {
        for (int k = 0; k < words; ++k)
          shared[static_cast<size_t>(k)] = down.row(u)[k] & down.row(v)[k];
        int glb = -1;
        int maximal = 0;
        for (int z : set_bits(shared.data(), words)) {
          bool top = true;
          const std::uint64_t* up_z = reach.row(z);
          for (int k = 0; k < words && top; ++k) {
            std::uint64_t overlap = up_z[k] & shared[static_cast<size_t>(k)];
            if (k == (z >> 6)) overlap &= ~(1ull << (z & 63));
            top = overlap == 0;
          }
          if (top) {
            ++maximal;
            glb = z;
          }
        }
        check.expect(maximal == 1,
                     "common lower bounds lack a unique maximum at size " +
                         std::to_string(n));
        DyckPath expected = d.element(glb);
        check.expect(meet(d.element(u), d.element(v)) == expected,
                     "constructive meet differs at (" + d.element(u).str() +
                         ", " + d.element(v).str() + ")");
        check.expect(meet(d.element(v), d.element(u)) == expected,
                     "meet is not symmetric at (" + d.element(u).str() +
                         ", " + d.element(v).str() + ")");
      }
    }
  }
  return check.result(timer.str());
}

VerifyResult meet_oracles(const VerifyCaps& caps) {
  Check check{"meet-oracles"};
  for (int n = 1; n <= caps.meet_oracles; ++n) {
    const DyckPoset& d = shared_poset(n);
    for (const DyckPath& u : d.elements()) {
      for (int i = 0; i < u.length(); ++i) {
        if (u.at(i) == 0) {
          std::vector<DyckPath> forcing;
          for (int idx : d.up_set_of(u)) {
            const DyckPath& v = d.element(idx);
            if (v.at(i) != 1) continue;
            bool same = true;
            for (int j = 0; j < i && same; ++j) same = v.at(j) == u.at(j);
            if (same) forcing.push_back(v);
          }
          auto lifted = rise(u, i);
          if (lifted)
            for (const DyckPath& v : forcing)
              check.expect(d.leq(*lifted, v),
                           "single rise overshoots at " + u.str());
          auto minimum = rise_to_one(u, i);
          check.expect(minimum.has_value() == !forcing.empty(),
                       "rise emptiness disagrees at " + u.str());
          if (minimum) {
            check.expect(std::count(forcing.begin(), forcing.end(),
                                    *minimum) == 1,
                         "rise leaves the forcing set at " + u.str());
            for (const DyckPath& v : forcing)
              check.expect(d.leq(*minimum, v),
                           "rise is not minimal at " + u.str());
          }
        } else if (u.height(i) > 0) {
          DyckPath once = descend(u, i);
          auto up = covers(once);
          check.expect(std::count_if(up.begin(), up.end(),
                                     [&](const Cover& c) {
                                       return c.target == u;
                                     }) == 1,
                       "descend is not a cover at " + u.str());
          DyckPath dropped = descend_fully(u, i);
          check.expect(dropped.at(i) == 0,
                       "descend_fully keeps the 1 at " + u.str());
          for (int idx : d.down_set_of(u)) {
            const DyckPath& below = d.element(idx);
            if (below.at(i) != 0) continue;
            bool same = true;
            for (int j = 0; j < i && same; ++j) same = below.at(j) == u.at(j);
            if (same)
              check.expect(d.leq(below, dropped),
                           "descend_fully is not maximal at " + u.str());
          }
        }
      }
    }
  }
  return check.result();
}

VerifyResult hochschild_sizes(const VerifyCaps& caps) {
  Check check{"hochschild-sizes"};
  const long long expected[] = {2, 5, 12, 28, 64, 144};
  for (int n = 1; n <= caps.hochschild_counts; ++n) {
    long long size = static_cast<long long>(hochschild_elements(n).size());
    if (n <= 6)
      check.expect(size == expected[n - 1],
                   "interval size differs at n=" + std::to_string(n));
    long long formula = n == 1 ? 2 : (1ll << (n - 2)) * (n + 3);
    check.expect(size == formula,
                 "interval size formula fails at n=" + std::to_string(n));
  }
  return check.result();
}

VerifyResult hochschild_encoding(const VerifyCaps& caps) {
  Check check{"hochschild-encoding"};
  check.expect(encode_vertex(DyckPath::parse("1110010010")) ==
                   TernaryWord::parse("120"),
               "printed encoding example differs");
  check.expect(decode_vertex(TernaryWord::parse("102")) ==
                   DyckPath::parse("1101100010"),
               "printed decoding example differs");
  for (int n = 1; n <= caps.hochschild_depth; ++n) {
    VertexSets sets = vertex_sets(n);
    std::vector<TernaryWord> zero, one, plain;
    for (const DyckPath& w : hochschild_elements(n)) {
      TernaryWord z = encode_vertex(w);
      check.expect(decode_vertex(z) == w,
                   "encoding does not roundtrip at " + w.str());
      (z.at(0) == 0 ? zero : one).push_back(z);
      if (is_block_indecomposable(w)) plain.push_back(z);
    }
    std::sort(zero.begin(), zero.end());
    std::sort(one.begin(), one.end());
    std::sort(plain.begin(), plain.end());
    check.expect(zero == sets.zero && one == sets.one && plain == sets.plain,
                 "vertex sets differ at n=" + std::to_string(n));
  }
  return check.result();
}

VerifyResult hochschild_covers(const VerifyCaps& caps) {
  Check check{"hochschild-cover-increase"};
  for (int n = 1; n <= caps.hochschild_depth; ++n) {
    Poset f = hochschild_poset(n);
    for (const CoverEdge& e : f.cover_edges()) {
      TernaryWord lo = encode_vertex(DyckPath::parse(f.label(e.src)));
      TernaryWord hi = encode_vertex(DyckPath::parse(f.label(e.dst)));
      int changed = 0;
      bool increased = true;
      for (int i = 0; i < lo.length(); ++i)
        if (lo.at(i) != hi.at(i)) {
          ++changed;
          increased = increased && lo.at(i) < hi.at(i);
        }
      check.expect(changed == 1 && increased,
                   "cover does not raise exactly one digit at n=" +
                       std::to_string(n));
    }
  }
  return check.result();
}

VerifyResult boolean_sublattices(const VerifyCaps& caps) {
  Check check{"boolean-sublattices"};
  for (int n = 1; n <= caps.boolean_rank; ++n) {
    const DyckPoset& d = shared_poset(n + 2);
    std::vector<int> blocky, grounded;
    for (const DyckPath& w : hochschild_elements(n)) {
      if (is_block_indecomposable(w)) blocky.push_back(d.index_of(w));
      bool ground_only = true;
      for (auto [point, height] : valleys(w)) ground_only &= height == 0;
      if (ground_only) grounded.push_back(d.index_of(w));
    }
    check.expect(static_cast<long long>(blocky.size()) == 1ll << (n - 1),
                 "indecomposable part has the wrong size at n=" +
                     std::to_string(n));
    check.expect(static_cast<long long>(grounded.size()) == 1ll << (n - 1),
                 "ground-valley part has the wrong size at n=" +
                     std::to_string(n));
    int size = 1 << (n - 1);
    std::vector<std::string> labels;
    for (int mask = 0; mask < size; ++mask)
      labels.push_back(std::to_string(mask));
    std::vector<CoverEdge> cube;
    for (int mask = 0; mask < size; ++mask)
      for (int bit = 0; bit < n - 1; ++bit)
        if (!(mask & (1 << bit)))
          cube.push_back(CoverEdge{mask, mask | (1 << bit), EdgeColor::none});
    Poset reference(std::move(labels), std::move(cube));
    check.expect(poset_isomorphic(d.poset().induced(blocky), reference),
                 "indecomposable part is not boolean at n=" +
                     std::to_string(n));
    check.expect(poset_isomorphic(d.poset().induced(grounded), reference),
                 "ground-valley part is not boolean at n=" +
                     std::to_string(n));
  }
  return check.result();
}

VerifyResult coxeter_checks(const VerifyCaps& caps) {
  Check check{"coxeter-factorizations"};
  auto factored = [](const Poset& p) {
    return cyclotomic_factor(coxeter_polynomial(p));
  };
  using Factors = std::vector<std::pair<int, int>>;
  auto expect_factors = [&](const Poset& p, int size, const Factors& want,
                            const std::string& name) {
    check.expect(p.size() == size, name + " has the wrong cardinality");
    CycloFactorization f = factored(p);
    check.expect(f.factors == want && f.remainder == IntPoly(1),
                 name + " has the wrong Coxeter factorization: " + f.str());
  };
  expect_factors(j_poset(DyckPath::parse("101100")), 9,
                 Factors{{1, 2}, {2, 1}, {3, 1}, {5, 1}}, "first 9-element");
  expect_factors(j_poset(DyckPath::parse("110010")), 9,
                 Factors{{1, 2}, {2, 1}, {3, 1}, {5, 1}}, "second 9-element");
  expect_factors(j_poset(DyckPath::parse("11011000")), 27,
                 Factors{{2, 1}, {4, 1}, {18, 1}, {54, 1}},
                 "first 27-element");
  expect_factors(j_poset(DyckPath::parse("11101000")), 27,
                 Factors{{2, 1}, {4, 1}, {18, 1}, {54, 1}},
                 "second 27-element");
  expect_factors(j_poset(DyckPath::parse("10111000")), 20,
                 Factors{{1, 2}, {2, 2}, {3, 1}, {5, 1}, {6, 2}, {7, 1}},
                 "first 20-element");
  expect_factors(j_poset(DyckPath::parse("11001100")), 20,
                 Factors{{1, 2}, {2, 2}, {3, 1}, {5, 1}, {6, 2}, {7, 1}},
                 "second 20-element");
  expect_factors(hochschild_poset(5), 64,
                 Factors{{1, 2}, {2, 4}, {6, 4}, {7, 1}, {23, 2}},
                 "64-element interval");
  check.expect(!roots_on_unit_circle(coxeter_polynomial(
                   lower_interval(DyckPath::parse("11111001000100")))),
               "the 14-step example should have roots off the circle");
  for (int n = 1; n <= caps.coxeter_interval; ++n)
    check.expect(
        roots_on_unit_circle(coxeter_polynomial(hochschild_poset(n))),
        "interval family leaves the unit circle at n=" + std::to_string(n));
  return check.result();
}

VerifyResult lattice_counterexample(const VerifyCaps&) {
  Check check{"lattice-counterexample"};
  Poset p = lower_interval(DyckPath::parse("111100100100"));
  check.expect(is_lattice(p), "the example interval should be a lattice");
  check.expect(!is_semidistributive(p),
               "the example interval should not be semidistributive");
  check.expect(!is_extremal(p), "the example interval should not be extremal");
  return check.result();
}

VerifyResult h_equations(const VerifyCaps& caps) {
  Check check{"h-equations"};
  CheckReport report = verify_h_equations(caps.h_quadratic);
  for (const std::string& failure : report.failures) check.expect(false, failure);
  check.expect(report.ok, "h-polynomial equations failed");
  for (int n = 1; n <= caps.h_symmetry; ++n)
    check.expect(h_symmetry_holds(n),
                 "symmetry fails at size " + std::to_string(n));
  for (int n = 0; n <= caps.narayana; ++n)
    check.expect(h_narayana_matches(n),
                 "Narayana specialization fails at size " + std::to_string(n));
  return check.result();
}

VerifyResult zeta_values(const VerifyCaps& caps) {
  Check check{"zeta-values"};
  const long long at_minus_one[] = {1, -1, 2, -5, 14, -42, 132, -429};
  const long long at_minus_two[] = {1, -2, 7, -29, 131, -625, 3099, -15818};
  for (int n = 1; n <= caps.zeta; ++n) {
    RatPoly z = zeta_polynomial(shared_poset(n).poset());
    if (n <= 8) {
      check.expect(z.eval(-1) == BigRat(at_minus_one[n - 1]),
                   "zeta at -1 differs at size " + std::to_string(n));
      check.expect(z.eval(-2) == BigRat(at_minus_two[n - 1]),
                   "zeta at -2 differs at size " + std::to_string(n));
    }
  }
  return check.result();
}

}  // namespace

VerifyCaps small_caps() {
  VerifyCaps caps;
  caps.interval_counts = 5;
  caps.series_equations = 4;
  caps.algebraic_degree = 8;
  caps.maximal_predicate = 6;
  caps.maximal_counts = 6;
  caps.order_sandwich = 5;
  caps.monoid_random = 6;
  caps.m1_roundtrip = 6;
  caps.m2_roundtrip = 4;
  caps.factorization = 4;
  caps.core_machinery = 5;
  caps.meet_pairs = 5;
  caps.meet_oracles = 4;
  caps.hochschild_counts = 4;
  caps.hochschild_depth = 5;
  caps.coxeter_interval = 4;
  caps.h_quadratic = 5;
  caps.h_symmetry = 5;
  caps.narayana = 6;
  caps.zeta = 4;
  caps.structure = 6;
  caps.boolean_rank = 5;
  return caps;
}

VerifyCaps medium_caps() { return VerifyCaps{}; }

VerifyCaps large_caps() {
  VerifyCaps caps;
  caps.interval_counts = 8;
  caps.algebraic_degree = 16;
  caps.maximal_predicate = 10;
  caps.maximal_counts = 9;
  caps.m1_roundtrip = 10;
  caps.structure = 9;
  caps.zeta = 7;
  return caps;
}

std::vector<VerifyResult> verify_counts(const VerifyCaps& caps) {
  return {interval_counts(caps), maximal_elements(caps),
          order_sandwich(caps), tree_bijection(caps), hasse_sanity(caps)};
}

std::vector<VerifyResult> verify_series(const VerifyCaps& caps) {
  return {printed_series(caps), functional_equations(caps),
          algebraic_equation(caps), core_machinery(caps)};
}

std::vector<VerifyResult> verify_monoids(const VerifyCaps& caps) {
  return {monoid_laws(caps), free_factorization(caps),
          generator_counts(caps), factorization_theorems(caps)};
}

std::vector<VerifyResult> verify_meet(const VerifyCaps& caps) {
  return {meet_vs_brute(caps), meet_oracles(caps)};
}

std::vector<VerifyResult> verify_hochschild(const VerifyCaps& caps) {
  return {hochschild_sizes(caps), hochschild_encoding(caps),
          hochschild_covers(caps), boolean_sublattices(caps)};
}

std::vector<VerifyResult> verify_invariants(const VerifyCaps& caps) {
  return {coxeter_checks(caps), lattice_counterexample(caps),
          h_equations(caps), zeta_values(caps)};
}

std::vector<VerifyResult> experimental_reports(const VerifyCaps& caps) {
  std::vector<VerifyResult> out;
  {
    std::string values, verdict = "matches";
    for (int n = 1; n <= caps.structure; ++n) {
      int observed = longest_chain(shared_poset(n).poset());
      if (!values.empty()) values += ",";
      values += std::to_string(observed);
      if (observed != n * n / 4) verdict = "differs";
    }
    out.push_back(VerifyResult{"longest-chain-pattern", true, false,
                               values + " (quarter squares: " + verdict +
                                   ")"});
  }
  {
    bool agrees = true;
    for (int n = 1; n <= caps.hochschild_depth && agrees; ++n) {
      Poset f = hochschild_poset(n);
      std::vector<TernaryWord> codes;
      for (int u = 0; u < f.size(); ++u)
        codes.push_back(encode_vertex(DyckPath::parse(f.label(u))));
      for (int u = 0; u < f.size() && agrees; ++u)
        for (int v = 0; v < f.size() && agrees; ++v)
          agrees = f.leq(u, v) == termwise_leq(codes[static_cast<size_t>(u)],
                                               codes[static_cast<size_t>(v)]);
    }
    out.push_back(VerifyResult{
        "hochschild-termwise-order", true, false,
        std::string(agrees ? "orders agree" : "orders differ") +
            " up to n=" + std::to_string(caps.hochschild_depth)});
  }
  {
    // Upper-ideal sizes indexed by the tree bijection, for comparison
    // with interval counts of other orders.
    BigInt total = 0;
    int n = std::min(caps.structure, 7);
    for (const DyckPath& w : all_paths(n))
      total += BigInt(shared_poset(n).up_set_of(w).size());
    out.push_back(VerifyResult{
        "tree-indexed-upper-ideals", true, false,
        "sizes sum to " + total.str() + " at n=" + std::to_string(n) +
            " (full table: dexter intervals upsizes)"});
  }
  return out;
}

std::vector<VerifyResult> verify_all(const VerifyCaps& caps) {
  std::vector<VerifyResult> out;
  for (auto group : {verify_counts(caps), verify_series(caps),
                     verify_monoids(caps), verify_meet(caps),
                     verify_hochschild(caps), verify_invariants(caps),
                     experimental_reports(caps)})
    out.insert(out.end(), group.begin(), group.end());
  return out;
}

}  // namespace dexter
