#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "dexter/bigint.hpp"
#include "dexter/order.hpp"

using namespace dexter;

namespace {

DyckPath P(std::string_view s) { return DyckPath::parse(s); }

const DyckPoset& poset_of(int n) {
  static std::map<int, DyckPoset> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, DyckPoset(n)).first;
  return it->second;
}

}  // namespace

TEST_CASE("min path and enumeration") {
  CHECK(min_path(1) == P("10"));
  CHECK(min_path(2) == P("1010"));
  CHECK(min_path(0).empty());
  for (int n = 0; n <= 9; ++n) {
    auto paths = all_paths(n);
    CHECK(BigInt(paths.size()) == catalan(n));
    CHECK(std::is_sorted(paths.begin(), paths.end()));
    if (n > 0) CHECK(paths.front() == min_path(n));
  }
}

TEST_CASE("movable subpaths") {
  DyckPath w = P("1011010010");
  CHECK(is_movable(w, Span{2, 6}));
  CHECK(is_movable(w, Span{8, 2}));
  CHECK(!is_movable(w, Span{5, 2}));
  CHECK(movable_subpaths(P("1100")).empty());
  for (int n = 2; n <= 8; ++n) {
    // In the minimum every peak except the first is movable.
    auto movable = movable_subpaths(min_path(n));
    CHECK(static_cast<int>(movable.size()) == n - 1);
    for (int k = 1; k < n; ++k)
      CHECK(std::count(movable.begin(), movable.end(), Span{2 * k, 2}));
  }
}

TEST_CASE("slide") {
  DyckPath w = P("111010001100");
  CHECK(zero_run_before(w, Span{8, 4}) == 3);
  CHECK(slide(w, Span{8, 4}, 2) == P("111010110000"));
  CHECK(slide(P("1010"), Span{2, 2}, 1) == P("1100"));
  CHECK_THROWS_AS(slide(P("1010"), Span{2, 2}, 2), choice_out_of_range);
  CHECK_THROWS_AS(slide(P("1011010010"), Span{5, 2}, 1), not_movable);
}

TEST_CASE("covers") {
  CHECK(covers(min_path(4)).size() == 3);
  CHECK(covers(P("11110000")).empty());
  CHECK(covers(DyckPath()).empty());
  SUBCASE("area strictly increases along covers") {
    for (int n = 0; n <= 8; ++n)
      for (const DyckPath& w : all_paths(n))
        for (const Cover& c : covers(w)) CHECK(area(c.target) > area(w));
  }
}

TEST_CASE("size-4 diagram matches the known picture") {
  const DyckPoset& d = poset_of(4);
  CHECK(d.poset().size() == 14);
  CHECK(d.poset().cover_edges().size() == 21);
  int red = 0, blue = 0;
  for (const CoverEdge& e : d.poset().cover_edges())
    (e.color == EdgeColor::red ? red : blue) += 1;
  CHECK(red == 15);
  CHECK(blue == 6);
}

TEST_CASE("hasse basics") {
  CHECK(poset_of(1).poset().size() == 1);
  CHECK(poset_of(0).poset().size() == 1);
  CHECK(poset_of(0).poset().cover_edges().empty());
  CHECK_THROWS_AS(hasse(15), size_too_large);
  CHECK_THROWS_AS(hasse(9, 8), size_too_large);
}

TEST_CASE("cover graph is a Hasse diagram with unique source") {
  for (int n = 1; n <= 8; ++n) {
    const DyckPoset& d = poset_of(n);
    CHECK_NOTHROW(d.poset().topo_order());
    CHECK(d.poset().is_transitively_reduced());
    std::vector<int> indeg(static_cast<size_t>(d.poset().size()), 0);
    for (const CoverEdge& e : d.poset().cover_edges())
      ++indeg[static_cast<size_t>(e.dst)];
    int sources = 0;
    for (size_t u = 0; u < indeg.size(); ++u)
      if (indeg[u] == 0) ++sources;
    CHECK(sources == 1);
    CHECK(indeg[static_cast<size_t>(d.index_of(min_path(n)))] == 0);
  }
}

TEST_CASE("leq") {
  const DyckPoset& d = poset_of(5);
  for (const DyckPath& v : d.elements()) {
    CHECK(d.leq(min_path(5), v));
    CHECK(d.leq(v, v));
  }
  CHECK_THROWS_AS(d.leq(min_path(4), min_path(5)), element_not_in_poset);
  SUBCASE("matches an independent breadth-first search") {
    for (int n = 1; n <= 7; ++n) {
      const DyckPoset& dn = poset_of(n);
      int size = dn.poset().size();
      for (int u = 0; u < size; ++u) {
        std::vector<bool> seen(static_cast<size_t>(size), false);
        std::vector<int> queue{u};
        seen[static_cast<size_t>(u)] = true;
        for (size_t head = 0; head < queue.size(); ++head)
          for (int v : dn.poset().upper_covers(queue[head]))
            if (!seen[static_cast<size_t>(v)]) {
              seen[static_cast<size_t>(v)] = true;
              queue.push_back(v);
            }
        for (int v = 0; v < size; ++v)
          CHECK(dn.poset().leq(u, v) == seen[static_cast<size_t>(v)]);
      }
    }
  }
}

TEST_CASE("maximal elements") {
  CHECK(is_maximal(P("1100")));
  CHECK(!is_maximal(P("1010")));
  CHECK(is_maximal(P("110100")));
  std::vector<long long> counts;
  for (int n = 1; n <= 9; ++n) {
    long long count = 0;
    for (const DyckPath& w : all_paths(n)) {
      bool max = is_maximal(w);
      CHECK(max == covers(w).empty());
      if (max) ++count;
    }
    counts.push_back(count);
  }
  std::vector<long long> expected{1, 1, 2, 4, 9, 21, 51};
  for (int n = 1; n <= 7; ++n)
    CHECK(counts[static_cast<size_t>(n - 1)] == expected[static_cast<size_t>(n - 1)]);
  for (int n = 1; n <= 9; ++n)
    CHECK(BigInt(counts[static_cast<size_t>(n - 1)]) == motzkin(n - 1));
}

TEST_CASE("both one-peak concatenations embed the order") {
  for (int n = 1; n <= 7; ++n) {
    const DyckPoset& d = poset_of(n);
    const DyckPoset& e = poset_of(n + 1);
    for (const DyckPath& w : d.elements()) {
      for (const Cover& c : covers(w)) {
        // Images of covers stay covers under both embeddings.
        for (bool front : {true, false}) {
          DyckPath u = front ? concat(P("10"), w) : concat(w, P("10"));
          DyckPath v =
              front ? concat(P("10"), c.target) : concat(c.target, P("10"));
          auto image = covers(u);
          CHECK(std::count_if(image.begin(), image.end(),
                              [&](const Cover& k) { return k.target == v; }) ==
                1);
          CHECK(e.leq(u, v));
        }
      }
    }
  }
}

TEST_CASE("poset utilities") {
  const DyckPoset& d = poset_of(4);
  Poset j = Poset::from_json(d.poset().json("dexter"));
  CHECK(j.size() == d.poset().size());
  CHECK(j.cover_edges() == d.poset().cover_edges());
  CHECK(d.poset().dot("dexter4").find("color=red") != std::string::npos);
  CHECK(d.poset().dot("dexter4").find("style=dashed") != std::string::npos);

  SUBCASE("cartesian products") {
    Poset chain2({"a", "b"}, {CoverEdge{0, 1, EdgeColor::none}});
    Poset single({"x"}, {});
    Poset diamond = cartesian_product(chain2, chain2);
    CHECK(diamond.size() == 4);
    CHECK(diamond.cover_edges().size() == 4);
    CHECK(cartesian_product(d.poset(), single).size() == d.poset().size());
    CHECK(cartesian_product(chain2, d.poset()).size() ==
          2 * d.poset().size());
  }

  SUBCASE("convex restriction agrees with general induction") {
    auto up = d.up_set_of(P("10110100"));
    Poset a = d.poset().restrict_convex(up);
    Poset b = d.poset().induced(up);
    CHECK(a.size() == b.size());
    CHECK(a.cover_edges().size() == b.cover_edges().size());
  }
}
