#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "postlie/syntax.hpp"
#include "postlie/tree.hpp"

using namespace postlie;

namespace {

DecoratedTree T(std::string_view s) { return parse_tree(s, 2); }

void shuffle_children(RawTree& t, std::mt19937_64& rng) {
  std::shuffle(t.children.begin(), t.children.end(), rng);
  for (auto& c : t.children) shuffle_children(c.tree, rng);
}

}  // namespace

TEST(Trees, CherryOrderIrrelevant) {
  RawTree leaf1{{1, 0}, {}}, leaf2{{0, 1}, {}};
  RawTree ab{{0, 0}, {{EdgeDec::kernel({0, 0}), leaf1}, {EdgeDec::kernel({1, 0}), leaf2}}};
  RawTree ba{{0, 0}, {{EdgeDec::kernel({1, 0}), leaf2}, {EdgeDec::kernel({0, 0}), leaf1}}};
  EXPECT_EQ(canonicalize(ab), canonicalize(ba));
}

TEST(Trees, SingleNodeFixed) {
  RawTree n{{1, 1}, {}};
  EXPECT_EQ(canonicalize(n), DecoratedTree::node({1, 1}));
}

TEST(Trees, ShufflesCanonicalizeIdentically) {
  DecoratedTree t = T("X^(1,0) Xi I[(1,0)](I[(0,0)](X^(0,1))) I[(0,0)](X^(1,1) Xi) I[(0,1)](1)");
  ASSERT_EQ(t.edge_count(), 6u);
  RawTree raw = to_raw(t);
  std::mt19937_64 rng(42);
  for (int s = 0; s < 100; ++s) {
    RawTree r = raw;
    shuffle_children(r, rng);
    EXPECT_EQ(canonicalize(r), t);
  }
}

TEST(Trees, DecoratedNoiseRejected) {
  RawTree bad{{0, 0}, {{EdgeDec::noise(), RawTree{{1, 0}, {}}}}};
  EXPECT_THROW(canonicalize(bad), std::invalid_argument);
}

TEST(Trees, Product) {
  DecoratedTree alpha = DecoratedTree::node({1, 0});
  EXPECT_EQ(tree_product(alpha, T("Xi I[(0,1)](X^(0,1))")), T("X^(1,0) Xi I[(0,1)](X^(0,1))"));
  EXPECT_EQ(tree_product(DecoratedTree::unit(2), T("Xi")), T("Xi"));
  EXPECT_EQ(T("1"), DecoratedTree::unit(2));
}

TEST(Trees, Grading) {
  Scaling s = Scaling::parabolic(2);
  EXPECT_EQ(grading(DecoratedTree::node({1, 1}), s), 0);
  EXPECT_EQ(grading(T("Xi I[(1,0)](Xi)"), s), 2);
  EXPECT_EQ(grading(T("X^(1,0) Xi I[(0,1)](X^(0,0))"), s), 1);
}

TEST(Trees, Planted) {
  DecoratedTree tau = T("X^(1,0) Xi I[(0,1)](1)");
  DecoratedTree p = planted({1, 0}, tau);
  EXPECT_TRUE(is_planted(p));
  EXPECT_FALSE(is_planted(tau));
  EXPECT_EQ(p, T("I[(1,0)](X^(1,0) Xi I[(0,1)](1))"));
  DecoratedTree single = planted({0, 0}, DecoratedTree::unit(2));
  EXPECT_EQ(single.edge_count(), 1u);
  EXPECT_EQ(single.vertex_count(), 2u);
}

TEST(Trees, NoiseIsNotAVertex) {
  DecoratedTree t = T("Xi Xi I[(0,0)](Xi)");
  EXPECT_EQ(t.vertex_count(), 2u);
  EXPECT_EQ(t.edge_count(), 4u);
}

TEST(Trees, Marks) {
  DecoratedTree t = T("I[(0,0)](Xi)");
  DecoratedTree m = mark_all(t);
  EXPECT_TRUE(m.has_marks());
  EXPECT_EQ(marked_vertices(m), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(strip_marks(m), t);
}
