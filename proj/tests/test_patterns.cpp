#include "betaperm/error.hpp"
#include "betaperm/patterns.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace betaperm;

namespace {
Permutation P(std::string_view s) { return parse_permutation(s); }
}

TEST_SUITE("patterns") {

TEST_CASE("pattern syntax") {
  const auto a = parse_pattern("3-1-4-2");
  CHECK(a.base == P("3142"));
  CHECK(a.adjacent == std::vector<bool>{false, false, false});
  const auto b = parse_pattern("2-41-3");
  CHECK(b.base == P("2413"));
  CHECK(b.adjacent == std::vector<bool>{false, true, false});
  CHECK(parse_pattern("231").adjacent == std::vector<bool>{true, true});
  CHECK(a == pattern_3_1_4_2());
  CHECK(b == pattern_2_41_3());
  CHECK(to_string(b) == "2-41-3");
  CHECK(to_string(a) == "3-1-4-2");
  CHECK_THROWS_AS(parse_pattern("1-2-3-4-5-6-7"), InvalidInput);
  CHECK_THROWS_AS(parse_pattern("1--2"), InvalidInput);
  CHECK_THROWS_AS(parse_pattern("1-3"), InvalidInput);
  CHECK_THROWS_AS(parse_pattern(""), InvalidInput);
}

TEST_CASE("occurrences of the patterns in themselves") {
  CHECK(occurrences(P("3142"), pattern_3_1_4_2()) == std::vector<Occurrence>{{0, 1, 2, 3}});
  CHECK(occurrences(P("2413"), pattern_2_41_3()) == std::vector<Occurrence>{{0, 1, 2, 3}});
  CHECK(avoids(P("215986473"), pattern_3_1_4_2()));
  CHECK_FALSE(avoids(P("2413"), pattern_2_41_3()));
  CHECK(avoids(Permutation{}, pattern_2_41_3()));
  // 2-41-3 needs 4 and 1 to be neighbours.
  CHECK(avoids(P("24513"), pattern_2_41_3()) == false);
  CHECK(avoids(P("25314"), pattern_2_41_3()));
}

TEST_CASE("matcher agrees with brute-force occurrences") {
  const std::vector<std::string_view> patterns{"3-1-4-2", "2-41-3", "231", "2-3-1", "1-32", "21-3", "13-2-4"};
  for (auto text : patterns) {
    const auto pat = parse_pattern(text);
    const std::vector<int> base(pat.base.begin(), pat.base.end());
    for (int n = 0; n <= 7; ++n)
      for (const auto& p : oracle::all_perms(n)) {
        const auto expected = oracle::occurrences(p, base, pat.adjacent);
        REQUIRE(occurrences(p, pat) == expected);
        REQUIRE(avoids(p, pat) == expected.empty());
      }
  }
}

TEST_CASE("avoider membership") {
  CHECK(is_avoider(P("523147896")));
  CHECK_FALSE(is_avoider(P("3142")));
  CHECK_FALSE(is_avoider(P("2413")));
  for (int n = 0; n <= 8; ++n) {
    std::uint64_t count = 0;
    for (const auto& p : oracle::all_perms(n)) {
      const bool in = is_avoider(p);
      if (n <= 7) REQUIRE(in == oracle::is_avoider(p));
      count += in;
    }
    CHECK(count == oracle::kCounts[n]);
  }
}

TEST_CASE("nonseparable permutations") {
  CHECK(is_nonseparable(P("698741325")));
  CHECK_FALSE(is_nonseparable(P("2413")));
  int count = 0;
  for (const auto& p : oracle::all_perms(4)) count += is_nonseparable(p);
  CHECK(count == 22);
  // Nothing sits between 1 and 4 to extend the 3142 occurrence.
  CHECK_FALSE(is_nonseparable(P("3142")));
  CHECK(is_nonseparable(P("41352")));
}

TEST_CASE("indecomposable 3-1-4-2 avoiders have n before 1") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : oracle::all_perms(n)) {
      if (!avoids(p, pattern_3_1_4_2())) continue;
      const bool n_first = p.position_of(n) <= p.position_of(1);
      REQUIRE(is_indecomposable(p) == n_first);
    }
}

}
