#include "betaperm/beta_tree.hpp"
#include "betaperm/enumeration.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace betaperm;

namespace {

BetaTree T(std::string_view s) { return parse_tree(s); }

const char* const kExampleA = "(4 (1) (2 (1) (1) (1)) (1 (1)))";
const char* const kExampleB = "(4 (1 (2 (1) (1)) (1)) (3 (1) (1) (1)))";

// Largest k with t = edge + ... + edge (k times) + rest, rest not the single node.
std::pair<int, BetaTree> leading_edges(BetaTree t) {
  int k = 0;
  for (;;) {
    const auto d = decompose(t);
    const auto* parts = std::get_if<SumParts>(&d);
    if (!parts || parts->left != BetaTree::edge()) return {k, t};
    ++k;
    t = parts->right;
  }
}

} // namespace

TEST_SUITE("beta_tree") {

TEST_CASE("text format") {
  CHECK(to_string(T("(2 (1)(1))")) == "(2 (1) (1))");
  CHECK(to_string(T("  ( 1 ( 1 ) ) ")) == "(1 (1))");
  CHECK(to_string(BetaTree::single_node()) == "(1)");
  CHECK(to_string(BetaTree::edge()) == "(1 (1))");
  CHECK(T(kExampleB) == T(to_string(T(kExampleB))));
  CHECK_THROWS_AS(T("(2 (1)"), ParseError);
  CHECK_THROWS_AS(T("(x)"), ParseError);
  CHECK_THROWS_AS(T("(1) (1)"), ParseError);
  CHECK_THROWS_AS(T(""), ParseError);
  try {
    T("(2 (1) x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("validation reports every violated rule") {
  CHECK(validate(parse_tree_node(kExampleA)).ok());
  CHECK(validate(parse_tree_node("(1)")).ok());
  const auto bad_root = validate(parse_tree_node("(3 (1) (1))"));
  REQUIRE_FALSE(bad_root.ok());
  REQUIRE(bad_root.violations.size() == 1);
  CHECK(bad_root.violations[0].kind == ViolationKind::root_sum);
  CHECK(bad_root.violations[0].child_sum == 2);

  const auto bad_internal = validate(parse_tree_node("(6 (5 (1) (1)) (1))"));
  REQUIRE(bad_internal.violations.size() == 1);
  CHECK(bad_internal.violations[0].kind == ViolationKind::internal_range);
  CHECK(bad_internal.violations[0].path == std::vector<std::size_t>{0});

  const auto bad_leaf = validate(parse_tree_node("(2 (2))"));
  REQUIRE(bad_leaf.violations.size() == 1);
  CHECK(bad_leaf.violations[0].kind == ViolationKind::leaf_label);
  CHECK(validate(parse_tree_node("(3 (2))")).violations.size() == 2);
  CHECK_THROWS_AS(T("(3 (1) (1))"), InvalidTree);
  CHECK_THROWS_AS(T("(0 (1 (1)))"), InvalidTree);
}

TEST_CASE("sum and lambda") {
  CHECK(tree_sum(T("(1 (1))"), T("(2 (1) (1))")) == T("(3 (1) (1) (1))"));
  CHECK(tree_sum(T("(2 (1) (1))"), T("(1 (1))")) == T("(3 (1) (1) (1))"));
  CHECK(tree_sum(BetaTree::edge(), BetaTree::edge()) == T("(2 (1) (1))"));
  CHECK_THROWS_AS(tree_sum(BetaTree::single_node(), BetaTree::edge()), InvalidInput);
  CHECK(lambda_op(2, T("(3 (1) (1) (1))")) == T("(2 (2 (1) (1) (1)))"));
  CHECK(lambda_op(3, T("(3 (1) (1) (1))")) == T("(3 (3 (1) (1) (1)))"));
  CHECK(lambda_op(1, BetaTree::single_node()) == BetaTree::edge());
  CHECK_THROWS_AS(lambda_op(4, T("(3 (1) (1) (1))")), InvalidInput);
  CHECK_THROWS_AS(lambda_op(0, T("(3 (1) (1) (1))")), InvalidInput);
  CHECK_THROWS_AS(lambda_op(2, BetaTree::single_node()), InvalidInput);
}

TEST_CASE("obslash and gamma") {
  CHECK(tree_obslash(BetaTree::edge(), BetaTree::edge()) == T("(1 (1 (1)))"));
  CHECK(tree_obslash(T("(2 (1) (1))"), BetaTree::edge()) == T("(2 (1) (1 (1)))"));
  CHECK_THROWS_AS(tree_obslash(BetaTree::single_node(), BetaTree::edge()), InvalidInput);
  CHECK(gamma_op(1, BetaTree::single_node()) == BetaTree::edge());
  CHECK(gamma_op(1, T("(1 (1 (2 (1) (1))))")) == T("(2 (1 (2 (1) (1))) (1))"));
  CHECK(gamma_op(2, T("(1 (1 (2 (1) (1))))")) == T("(2 (2 (2 (1) (1)) (1)))"));
  CHECK(gamma_op(3, T("(1 (1 (2 (1) (1))))")) == T("(2 (2 (3 (1) (1) (1))))"));
  CHECK(gamma_op(2, T("(1 (1 (1)))")) == T("(2 (2 (1) (1)))"));
  for (int i = 1; i <= 3; ++i) CHECK(rpath(gamma_op(i, T("(1 (1 (2 (1) (1))))"))) == i);
  CHECK_THROWS_AS(gamma_op(3, T("(1 (1 (1)))")), InvalidInput);
  CHECK_THROWS_AS(gamma_op(2, BetaTree::single_node()), InvalidInput);
}

TEST_CASE("primal and dual decompositions") {
  const auto lam = decompose(T("(2 (2 (1) (1)))"));
  REQUIRE(std::holds_alternative<LambdaParts>(lam));
  CHECK(std::get<LambdaParts>(lam) == LambdaParts{2, T("(2 (1) (1))")});
  const auto sum = decompose(T("(3 (1) (1) (1))"));
  REQUIRE(std::holds_alternative<SumParts>(sum));
  CHECK(std::get<SumParts>(sum) == SumParts{BetaTree::edge(), T("(2 (1) (1))")});
  CHECK(std::holds_alternative<Atom>(decompose(BetaTree::single_node())));
  CHECK(std::holds_alternative<Atom>(decompose_dual(BetaTree::single_node())));

  for (int e = 0; e <= 8; ++e)
    for (const auto& t : gen_trees(e)) {
      const auto d = decompose(t);
      REQUIRE(recompose(d) == t);
      if (const auto* s = std::get_if<SumParts>(&d)) REQUIRE(sub(s->left) == 1);
      const auto dd = decompose_dual(t);
      REQUIRE(recompose(dd) == t);
    }
}

TEST_CASE("statistics of worked examples") {
  const auto a = tree_stats(T(kExampleA));
  CHECK(a.leaves == 5);
  CHECK(a.root == 4);
  CHECK(a.internal == 3);
  CHECK(a.sub == 3);
  CHECK(a.stemhm == 3);
  CHECK(a.rpath == 2);
  CHECK(a.rsub == 2);
  CHECK(a.lsub == 1);
  CHECK(a.lpath == 1);
  CHECK(a.stem == 1);

  const auto b = tree_stats(T(kExampleB));
  CHECK(b.sub == 2);
  CHECK(b.leaves == 6);
  CHECK(b.root == 4);
  CHECK(b.lpath == 3);
  CHECK(b.rpath == 2);
  CHECK(b.lsub == 2);
  CHECK(b.stemhm == 1);

  const auto leaf = tree_stats(BetaTree::single_node());
  CHECK(leaf.leaves == 1);
  CHECK(leaf.sub + leaf.root + leaf.lpath + leaf.rpath + leaf.lsub + leaf.stem == 0);
  CHECK(leaf.stemhm == 0);

  const auto edge = tree_stats(BetaTree::edge());
  CHECK(edge.stemhm == 1);
  CHECK(edge.stem == 1);
  CHECK(edge.leaves == 1);
  CHECK(edge.internal == 1);
}

TEST_CASE("mirror") {
  CHECK(mirror(BetaTree::single_node()) == BetaTree::single_node());
  CHECK(mirror(T("(3 (1) (2 (1) (1)))")) == T("(3 (2 (1) (1)) (1))"));
  for (int e = 0; e <= 8; ++e)
    for (const auto& t : gen_trees(e)) REQUIRE(mirror(mirror(t)) == t);
}

TEST_CASE("stemh by mirroring equals the gamma depth") {
  const auto path = T("(1 (1 (1)))");
  CHECK(gamma_depth(path) == 0);
  CHECK(stemh_dual(path) == 1);
  CHECK(stemh(path) == 1);
  CHECK(gamma_depth(T("(2 (1) (1))")) == 2);
  for (int e = 0; e <= 9; ++e)
    for (const auto& t : gen_trees(e)) REQUIRE(stemh(t) == stemh_dual(t));
}

TEST_CASE("lambda statistics") {
  for (int e = 1; e <= 8; ++e)
    for (const auto& t : gen_trees(e)) {
      const auto s = tree_stats(t);
      for (int i = 1; i <= s.root; ++i) {
        const auto r = tree_stats(lambda_op(i, t));
        REQUIRE(r.leaves == s.leaves);
        REQUIRE(r.root == i);
        REQUIRE(r.lpath == s.lpath + 1);
        REQUIRE(r.rpath == s.rpath + 1);
        REQUIRE(r.lsub == s.lsub + (i == 1 ? 1 : 0));
        REQUIRE(r.stemhm == (i <= s.stemhm ? i : s.stemhm));
      }
    }
  // Outside the identity's range: the single edge has stemhm 1, not 0.
  CHECK(stemhm(lambda_op(1, BetaTree::single_node())) == 1);
}

TEST_CASE("sum statistics") {
  for (int e = 2; e <= 8; ++e)
    for (int j = 1; j < e; ++j)
      for (const auto& u : gen_trees(j))
        for (const auto& v : gen_trees(e - j)) {
          const auto t = tree_sum(u, v);
          REQUIRE(leaves(t) == leaves(u) + leaves(v));
          REQUIRE(root_label(t) == root_label(u) + root_label(v));
          REQUIRE(lpath(t) == lpath(u));
          REQUIRE(rpath(t) == rpath(v));
          REQUIRE(lsub(t) == lsub(u));
        }
  for (int e = 2; e <= 8; ++e)
    for (const auto& t : gen_trees(e)) {
      if (sub(t) < 2) continue;
      const auto [k, rest] = leading_edges(t);
      if (k == 0) continue;
      REQUIRE(stemhm(t) == k + stemhm(rest));
    }
}

TEST_CASE("involution h") {
  CHECK(involution_h(T(kExampleB)) == T("(2 (2 (2 (1) (1 (1 (2 (1) (1))) (1)))))"));
  CHECK(involution_h(BetaTree::single_node()) == BetaTree::single_node());
  CHECK(involution_h(BetaTree::edge()) == BetaTree::edge());
}

TEST_CASE("unlabeled trees") {
  CHECK(to_string(parse_plane_tree("(()())")) == "(()())");
  CHECK_THROWS_AS(parse_plane_tree("(()"), ParseError);
  CHECK(h_unlabeled(PlaneTree{}) == PlaneTree{});
  CHECK(h_unlabeled(parse_plane_tree("((()))")) == parse_plane_tree("(()())"));
  CHECK(h_unlabeled(parse_plane_tree("(()())")) == parse_plane_tree("((()))"));
  CHECK(to_string(label_plane_tree(parse_plane_tree("(()())"))) == "(2 (1) (1))");
  for (int e = 0; e <= 9; ++e) {
    const auto trees = gen_plane_trees(e);
    CHECK(trees.size() == oracle::kCatalan[e]);
    for (const auto& t : trees) {
      REQUIRE(forget_labels(label_plane_tree(t)) == t);
      REQUIRE(h_unlabeled(h_unlabeled(t)) == t);
    }
  }
}

}
