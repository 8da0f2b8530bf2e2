#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dexter/binary_tree.hpp"
#include "dexter/bigint.hpp"
#include "dexter/dyck.hpp"
#include "dexter/order.hpp"

using namespace dexter;

namespace {

DyckPath P(std::string_view s) { return DyckPath::parse(s); }

// The 48-step path used as the running example for block decompositions.
const char* kBigExample =
    "111101100110000100"
    "1101101101110101110000100000"
    "10";

std::vector<std::vector<DyckPath>> all_path_lists(int total) {
  std::vector<std::vector<DyckPath>> out{{}};
  for (int n = 1; n <= total; ++n) {
    std::vector<std::vector<DyckPath>> next;
    for (const auto& head : all_paths(n))
      for (const auto& tail : all_path_lists(total - n)) {
        std::vector<DyckPath> list{head};
        list.insert(list.end(), tail.begin(), tail.end());
        next.push_back(list);
      }
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

}  // namespace

TEST_CASE("word parsing and ordering") {
  CHECK(P("10").size() == 1);
  CHECK(P("(1,0,1,0)") == P("1010"));
  CHECK(P("10").tuple_str() == "(1,0)");
  CHECK_THROWS_AS(P("01"), not_a_dyck_word);
  CHECK_THROWS_AS(P("1100 10 1"), not_a_dyck_word);
  CHECK(DyckPath().empty());
  CHECK(P("1010") < P("1100"));
  CHECK(P("10110100") < P("11010100"));
  CHECK(min_path(4) == *all_paths(4).begin());
}

TEST_CASE("figure example validates with three blocks") {
  DyckPath w = P(kBigExample);
  CHECK(w.size() == 24);
  CHECK(blocks(w).size() == 3);
}

TEST_CASE("blocks") {
  CHECK(blocks(P("1010")) == std::vector<DyckPath>{P("10"), P("10")});
  CHECK(blocks(P("1100")) == std::vector<DyckPath>{P("1100")});
  CHECK(blocks(DyckPath()).empty());
  for (int n = 0; n <= 10; ++n) {
    for (const DyckPath& w : all_paths(n)) {
      DyckPath glued;
      for (const DyckPath& b : blocks(w)) {
        CHECK(is_block_indecomposable(b));
        glued = concat(glued, b);
      }
      CHECK(glued == w);
    }
  }
}

TEST_CASE("area convention") {
  CHECK(area(P("10")) == 1);
  CHECK(area(P("1100")) == 4);
  for (int n = 1; n <= 8; ++n) CHECK(area(min_path(n)) == n);
}

TEST_CASE("height sequence") {
  CHECK(height_sequence(P("1010")) == std::vector<int>{1, 1});
  CHECK(height_sequence(P("1100")) == std::vector<int>{1, 2});
  CHECK(height_sequence(P("110100")) == std::vector<int>{1, 2, 2});
}

TEST_CASE("subpaths") {
  CHECK(subpaths(P("10")) == std::vector<Span>{Span{0, 2}});
  CHECK(subpaths(P("1100")) == std::vector<Span>{Span{0, 4}, Span{1, 2}});
  DyckPath w = P("1011010010");
  CHECK(is_subpath(w, Span{2, 6}));
  CHECK(is_subpath(w, Span{8, 2}));
  CHECK(is_subpath(w, Span{5, 2}));
  auto found = subpaths(w);
  CHECK(std::count(found.begin(), found.end(), Span{2, 6}) == 1);
  CHECK(std::count(found.begin(), found.end(), Span{8, 2}) == 1);
  CHECK(std::count(found.begin(), found.end(), Span{5, 2}) == 1);
  for (int n = 0; n <= 8; ++n)
    for (const DyckPath& u : all_paths(n))
      for (Span x : subpaths(u)) {
        CHECK(x.len >= 2);
        CHECK(is_subpath(u, x));
      }
}

TEST_CASE("level decomposition") {
  CHECK(level_decomposition(P("10")).empty());
  CHECK(level_decomposition(P("11011000")) ==
        std::vector<DyckPath>{P("10"), DyckPath()});
  CHECK(level_decomposition(P("11101000")) ==
        std::vector<DyckPath>{DyckPath(), P("10")});
  CHECK_THROWS_AS(level_decomposition(P("1010")), not_block_indecomposable);
  CHECK_THROWS_AS(level_decomposition(DyckPath()),
                  not_block_indecomposable);

  CHECK(level_compose({}) == P("10"));
  CHECK(level_compose({P("10")}) == P("110100"));
  CHECK(level_compose({P("10"), DyckPath()}) == P("11011000"));

  for (int n = 1; n <= 10; ++n)
    for (const DyckPath& w : all_paths(n))
      if (is_block_indecomposable(w))
        CHECK(level_compose(level_decomposition(w)) == w);

  for (const auto& list : all_path_lists(8)) {
    DyckPath w = level_compose(list);
    CHECK(level_decomposition(w) == list);
  }
}

TEST_CASE("strips") {
  CHECK(!find_strip(P("10")));
  CHECK(!find_strip(DyckPath()));
  Strip s = *find_strip(P("1100"));
  CHECK(s.prefix.empty());
  CHECK(s.inner.empty());
  CHECK(s.trailing == 0);

  Strip t = *find_strip(P("1011010100"));
  CHECK(t.prefix == StepWord::parse("10"));
  CHECK(t.inner == P("1010"));
  CHECK(t.trailing == 0);

  for (int n = 0; n <= 10; ++n) {
    for (const DyckPath& w : all_paths(n)) {
      auto strip = find_strip(w);
      bool ends10 = w.empty() || w.word().trailing_zeros() == 1;
      CHECK(strip.has_value() == !ends10);
      if (strip) {
        // Reassemble (u, 1, v, 1, 0, 0, 0^k).
        StepWord back = strip->prefix;
        back.append(1);
        back.append(strip->inner.word());
        back.append(1);
        back.append(StepWord::zeros(2 + strip->trailing));
        CHECK(back == w.word());
      }
    }
  }
}

TEST_CASE("pseudo paths") {
  CHECK(P("1010").inner() == PseudoDyckPath::parse("01"));
  CHECK(PseudoDyckPath::parse("01").lift() == P("1010"));
  CHECK_THROWS_AS(PseudoDyckPath::parse("0011"),
                  not_a_pseudo_dyck_word);
  for (int n = 1; n <= 8; ++n)
    for (const DyckPath& w : all_paths(n)) CHECK(w.inner().lift() == w);
}

TEST_CASE("binary tree bijection") {
  CHECK(to_binary_tree(DyckPath()).is_leaf());
  CHECK(to_binary_tree(P("10")) ==
        BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf()));
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> images;
    for (const DyckPath& w : all_paths(n)) {
      BinaryTree t = to_binary_tree(w);
      CHECK(t.inner_count() == n);
      CHECK(t.rightmost_branch_length() == w.word().trailing_zeros());
      CHECK(from_binary_tree(t) == w);
      images.insert(t.str());
    }
    CHECK(BigInt(images.size()) == catalan(n));
  }
}
