#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "dexter/order.hpp"
#include "dexter/tamari.hpp"

using namespace dexter;

namespace {

DyckPath P(std::string_view s) { return DyckPath::parse(s); }

}  // namespace

TEST_CASE("tamari covers") {
  CHECK(tamari_covers(P("1010")) == std::vector<DyckPath>{P("1100")});
  CHECK(tamari_covers(P("1100")).empty());
  Poset t3 = tamari_hasse(3);
  CHECK(t3.size() == 5);
  CHECK(t3.cover_edges().size() == 5);
}

TEST_CASE("comb covers") {
  CHECK(comb_covers(P("1010")) == std::vector<DyckPath>{P("1100")});
  CHECK(comb_hasse(3).cover_edges().size() == 4);
  CHECK(comb_covers(P("110100")).empty());
  // Comb moves exist exactly on decomposable paths; a block-indecomposable
  // path can still move in the dexter order.
  CHECK(comb_covers(P("11010100")).empty());
  CHECK(!covers(P("11010100")).empty());
}

TEST_CASE("order sandwich comb <= dexter <= tamari") {
  for (int n = 1; n <= 7; ++n) {
    Poset comb = comb_hasse(n);
    Poset dexter_order = hasse(n).poset();
    Poset tamari = tamari_hasse(n);
    CHECK(order_contains(comb, dexter_order));
    CHECK(order_contains(dexter_order, tamari));
    if (n >= 3) {
      CHECK(!order_contains(dexter_order, comb));
      CHECK(!order_contains(tamari, dexter_order));
    }
  }
  CHECK_THROWS_AS(order_contains(comb_hasse(3), comb_hasse(4)),
                  element_set_mismatch);
}

TEST_CASE("every dexter cover is a chain of tamari slides") {
  DyckPath w = P("111010001100");
  auto chain = tamari_interval_chain(w, Span{8, 4}, 2);
  CHECK(chain.size() == 3);
  CHECK(chain.front() == w);
  CHECK(chain.back() == P("111010110000"));

  for (int n = 1; n <= 7; ++n) {
    Poset tamari = tamari_hasse(n);
    for (const DyckPath& u : all_paths(n)) {
      for (Span x : movable_subpaths(u)) {
        int run = zero_run_before(u, x);
        for (int jump = 1; jump <= run; ++jump) {
          auto chain = tamari_interval_chain(u, x, jump);
          CHECK(static_cast<int>(chain.size()) == jump + 1);
          // The brute-force Tamari interval equals the chain.
          int bottom = tamari.index_of(u.str());
          int top = tamari.index_of(chain.back().str());
          std::set<std::string> interval;
          for (int z = 0; z < tamari.size(); ++z)
            if (tamari.leq(bottom, z) && tamari.leq(z, top))
              interval.insert(tamari.label(z));
          std::set<std::string> expected;
          for (const DyckPath& c : chain) expected.insert(c.str());
          CHECK(interval == expected);
          // And it is totally ordered there.
          for (size_t a = 0; a + 1 < chain.size(); ++a)
            CHECK(tamari.leq(tamari.index_of(chain[a].str()),
                             tamari.index_of(chain[a + 1].str())));
        }
      }
    }
  }
}

TEST_CASE("tamari lattice property at small sizes") {
  for (int n = 1; n <= 6; ++n) {
    Poset t = tamari_hasse(n);
    const BitMatrix& reach = t.reach();
    for (int u = 0; u < t.size(); ++u) {
      for (int v = u; v < t.size(); ++v) {
        // Unique maximal common lower bound and minimal common upper bound.
        int meets = 0, joins = 0;
        for (int z = 0; z < t.size(); ++z) {
          if (reach.get(z, u) && reach.get(z, v)) {
            bool top = true;
            for (int y = 0; top && y < t.size(); ++y)
              if (y != z && reach.get(z, y) && reach.get(y, u) &&
                  reach.get(y, v))
                top = false;
            if (top) ++meets;
          }
          if (reach.get(u, z) && reach.get(v, z)) {
            bool bottom = true;
            for (int y = 0; bottom && y < t.size(); ++y)
              if (y != z && reach.get(y, z) && reach.get(u, y) &&
                  reach.get(v, y))
                bottom = false;
            if (bottom) ++joins;
          }
        }
        CHECK(meets == 1);
        CHECK(joins == 1);
      }
    }
  }
}
