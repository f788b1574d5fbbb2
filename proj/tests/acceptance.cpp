// Standalone acceptance run: one PASS/FAIL line per criterion.

#include "betaperm/beta_tree.hpp"
#include "betaperm/bijection.hpp"
#include "betaperm/distribution.hpp"
#include "betaperm/enumeration.hpp"
#include "betaperm/patterns.hpp"
#include "betaperm/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>

using namespace betaperm;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome all_pass(std::initializer_list<std::pair<const char*, int>> claims) {
  Outcome out;
  for (const auto& [id, max_n] : claims) {
    const auto r = verify(id, max_n);
    if (!r.passed) {
      out.ok = false;
      out.note += describe(r) + "; ";
    }
  }
  return out;
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

// --- criterion bodies --------------------------------------------------------

Outcome counting() {
  static constexpr std::uint64_t expected[] = {1, 2, 6, 22, 91, 408, 1938, 9614, 49335};
  for (int n = 1; n <= 9; ++n) {
    if (count_formula(n) != expected[n - 1]) return fail("formula at n=" + std::to_string(n));
    if (gen_avoiders(n).size() != expected[n - 1]) return fail("avoiders at n=" + std::to_string(n));
    if (gen_trees(n).size() != expected[n - 1]) return fail("trees at n=" + std::to_string(n));
  }
  return all_pass({{"counts", 9}});
}

Outcome worked_examples() {
  const auto tree = parse_tree("(4 (1 (2 (1) (1)) (1)) (3 (1) (1) (1)))");
  const auto h_image = parse_tree("(2 (2 (2 (1) (1 (1 (2 (1) (1))) (1)))))");
  if (tree_to_perm(tree) != parse_permutation("523147896")) return fail("f(tree)");
  if (psi(parse_permutation("215986473")) != parse_permutation("327985461")) return fail("psi");
  if (phi(1, parse_permutation("21586473")) != parse_permutation("921586473")) return fail("phi");
  if (involution_h(tree) != h_image) return fail("h(tree)");
  return {};
}

Outcome property_suites() {
  AvoiderGrammar avoiders;
  TreeGrammar trees;
  // Lambda identities on trees with at most 8 edges.
  for (int e = 1; e <= 8; ++e)
    for (const auto& t : trees.trees(e)) {
      const auto s = tree_stats(t);
      for (int i = 1; i <= s.root; ++i) {
        const auto r = tree_stats(lambda_op(i, t));
        if (r.leaves != s.leaves || r.root != i || r.lpath != s.lpath + 1 || r.rpath != s.rpath + 1 ||
            r.lsub != s.lsub + (i == 1) || r.stemhm != (i <= s.stemhm ? i : s.stemhm))
          return fail("lambda identities at " + to_string(t));
      }
    }
  // Sum identities on trees with at most 8 edges.
  for (int e = 2; e <= 8; ++e)
    for (int j = 1; j < e; ++j)
      for (const auto& u : trees.trees(j))
        for (const auto& v : trees.trees(e - j)) {
          const auto t = tree_sum(u, v);
          if (leaves(t) != leaves(u) + leaves(v) || root_label(t) != root_label(u) + root_label(v) ||
              lpath(t) != lpath(u) || rpath(t) != rpath(v) || lsub(t) != lsub(u))
            return fail("sum identities at " + to_string(t));
          if (u == BetaTree::edge()) {
            int k = 1;
            BetaTree rest = v;
            for (;;) {
              const auto d = decompose(rest);
              const auto* parts = std::get_if<SumParts>(&d);
              if (!parts || parts->left != BetaTree::edge()) break;
              ++k;
              rest = parts->right;
            }
            if (stemhm(t) != k + stemhm(rest)) return fail("stemhm of sums at " + to_string(t));
          }
        }
  // psi identities and bijectivity, n <= 9.
  for (int n = 2; n <= 9; ++n)
    for (const auto& p : avoiders.avoiders(n)) {
      if (!in_psi_domain(p)) continue;
      const auto a = perm_stats(p);
      const auto b = perm_stats(psi(p));
      if (a.lmax != b.lmax || a.rmax != b.rmax || a.asc != b.asc || a.ldr != b.ldr || a.lir != b.lir ||
          b.lmin != a.lmin + 1)
        return fail("psi identities at " + to_string(p));
    }
  // phi identities and bijectivity, n <= 9.
  for (int n = 1; n <= 9; ++n) {
    std::set<Permutation> image;
    for (const auto& p : avoiders.avoiders(n - 1)) {
      const auto a = perm_stats(p);
      for (int i = 1; i <= std::max(a.lmax, 1); ++i) {
        const auto q = phi(i, p);
        const auto b = perm_stats(q);
        if (!image.insert(q).second) return fail("phi not injective at " + to_string(q));
        if (phi_inv(q) != std::pair{i, p}) return fail("phi inverse at " + to_string(q));
        if (p.empty()) continue;
        if (b.asc != a.asc || b.lmax != i || b.lmin != a.lmin + 1 || b.rmax != a.rmax + 1 ||
            b.ldr != (i == 1 ? a.ldr + 1 : a.ldr) || b.lir != (i <= a.lir ? i : a.lir))
          return fail("phi identities at " + std::to_string(i) + ", " + to_string(p));
      }
    }
    std::size_t target = 0;
    for (const auto& q : avoiders.avoiders(n)) target += is_indecomposable(q);
    if (image.size() != target) return fail("phi not onto at n=" + std::to_string(n));
  }
  // Direct sums, total length <= 8.
  for (int total = 2; total <= 8; ++total)
    for (int j = 1; j < total; ++j)
      for (const auto& s : avoiders.avoiders(j))
        for (const auto& t : avoiders.avoiders(total - j)) {
          const auto a = perm_stats(s);
          const auto b = perm_stats(t);
          const auto c = perm_stats(direct_sum(s, t));
          if (c.comp != a.comp + b.comp || c.asc != 1 + a.asc + b.asc || c.lmax != a.lmax + b.lmax ||
              c.lmin != a.lmin || c.rmax != b.rmax || c.ldr != a.ldr)
            return fail("sum identities at " + to_string(direct_sum(s, t)));
        }
  for (int n = 2; n <= 8; ++n)
    for (const auto& p : avoiders.avoiders(n)) {
      std::size_t k = 0;
      while (k + 1 < p.size() && p[k] == static_cast<int>(k + 1)) ++k;
      if (k == 0) continue;
      std::vector<int> rest;
      for (std::size_t i = k; i < p.size(); ++i) rest.push_back(p[i] - static_cast<int>(k));
      if (lir(p) != static_cast<int>(k) + lir(Permutation(rest))) return fail("lir of sums at " + to_string(p));
    }
  // Indecomposable 3-1-4-2 avoiders put n before 1, n <= 8.
  for (int n = 1; n <= 8; ++n) {
    std::optional<Permutation> bad;
    brute_filter(
        n, [&](const Permutation& p) { return !bad && avoids(p, pattern_3_1_4_2()); },
        [&](const Permutation& p) {
          if (is_indecomposable(p) != (p.position_of(n) <= p.position_of(1))) bad = p;
        });
    if (bad) return fail("n before 1 at " + to_string(*bad));
  }
  // stemh two ways, trees with at most 9 edges.
  for (int e = 0; e <= 9; ++e)
    for (const auto& t : trees.trees(e))
      if (stemh(t) != stemh_dual(t)) return fail("stemh at " + to_string(t));
  return all_pass({{"psi-lemma", 9}, {"unlabeled-h", 9}});
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds; // 0 means untimed
    std::function<Outcome()> run;
  };
  std::string conjecture_status;
  const std::vector<Criterion> criteria{
      {1, "counting n=1..9", 60, counting},
      {2, "thm_f transport and inverse, trees with <= 9 edges", 60, [] { return all_pass({{"thm_f", 9}}); }},
      {3, "worked examples", 0, worked_examples},
      {4, "thm_h involution and swap, 1..9 edges", 60, [] { return all_pass({{"thm_h", 9}}); }},
      {5, "cor_hf and cor_hmf, avoiders of length <= 9", 0,
       [] { return all_pass({{"cor_hf", 9}, {"cor_hmf", 9}}); }},
      {6, "one-stack sortability and sorter agreement, n <= 8", 0, [] { return all_pass({{"knuth", 8}}); }},
      {7, "(asc,lmax) vs (des,rmax) equidistribution, n <= 9", 60, [] { return all_pass({{"dulucq", 9}}); }},
      {8, "(comp,asc,ldr,rmax) report at n = 10", 300,
       [&] {
         const auto r = conjecture_check(10);
         conjecture_status = r.report.passed ? "equal" : "unequal";
         if (r.avoiders.total() != 260130 || r.sortable.total() != 260130)
           return fail("totals " + std::to_string(r.avoiders.total()) + " / " +
                       std::to_string(r.sortable.total()));
         return Outcome{true, "tables " + conjecture_status};
       }},
      {9, "closure under rc, ri, ci and reverse = nonseparable, n <= 8", 0,
       [] { return all_pass({{"closure", 8}, {"nonsep-reverse", 8}}); }},
      {10, "property suites", 0, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      out.ok = false;
      out.note += "exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    failures += !out.ok;
    std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                out.note.empty() ? "" : " - ", out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
