#include "betaperm/verify.hpp"

#include "betaperm/bijection.hpp"
#include "betaperm/error.hpp"
#include "betaperm/patterns.hpp"
#include "betaperm/sorting.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <set>

namespace betaperm {

namespace {

std::string tuple_text(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::vector<BetaTree> sorted_trees(int edges) {
  auto trees = gen_trees(edges);
  std::sort(trees.begin(), trees.end());
  return trees;
}

std::vector<Permutation> sorted_avoiders(int n) {
  auto perms = gen_avoiders(n);
  std::sort(perms.begin(), perms.end());
  return perms;
}

std::optional<Counterexample> first_failure(int n, const PermPredicate& ok,
                                            const std::function<std::string(const Permutation&)>& why,
                                            const std::function<std::string(const Permutation&)>& image = {}) {
  std::optional<Counterexample> found;
  // brute_filter visits lexicographically; stop recording after the first hit.
  brute_filter(n, [&](const Permutation& p) { return !found && !ok(p); },
               [&](const Permutation& p) {
                 found = Counterexample{n, to_string(p), image ? image(p) : "", why(p)};
               });
  return found;
}

std::optional<Counterexample> table_mismatch(int n, const DistributionTable& a,
                                             const DistributionTable& b, std::string_view left,
                                             std::string_view right) {
  auto diff = compare_distributions(a, b);
  if (!diff) return std::nullopt;
  return Counterexample{n, tuple_text(diff->key), "",
                        std::string(left) + " count " + std::to_string(diff->left) + ", " +
                            std::string(right) + " count " + std::to_string(diff->right)};
}

// --- individual claims ------------------------------------------------------

std::optional<Counterexample> check_counts(int n) {
  const auto expected = count_formula(n);
  const auto avoiders = gen_avoiders(n).size();
  const auto trees = gen_trees(n).size();
  if (avoiders == expected && trees == expected) return std::nullopt;
  return Counterexample{n, "", "",
                        "avoiders " + std::to_string(avoiders) + ", trees " + std::to_string(trees) +
                            ", formula " + expected.str()};
}

std::optional<Counterexample> check_thm_f(int edges) {
  for (const auto& t : sorted_trees(edges)) {
    const Permutation p = tree_to_perm(t);
    const TreeStats ts = tree_stats(t);
    const PermStats ps = perm_stats(p);
    const std::vector<int> lhs{ts.sub, ts.leaves, ts.root, ts.lpath, ts.rpath, ts.lsub, ts.stemhm};
    const std::vector<int> rhs{ps.comp, 1 + ps.asc, ps.lmax, ps.lmin, ps.rmax, ps.ldr, ps.lir};
    if (!is_avoider(p))
      return Counterexample{edges, to_string(t), to_string(p), "image is not an avoider"};
    if (lhs != rhs)
      return Counterexample{edges, to_string(t), to_string(p),
                            "tree " + tuple_text(lhs) + " vs permutation " + tuple_text(rhs)};
    if (perm_to_tree(p) != t)
      return Counterexample{edges, to_string(t), to_string(p), "inverse does not recover the tree"};
  }
  return std::nullopt;
}

std::optional<Counterexample> check_thm_h(int edges) {
  for (const auto& t : sorted_trees(edges)) {
    const BetaTree image = involution_h(t);
    if (involution_h(image) != t)
      return Counterexample{edges, to_string(t), to_string(image), "h is not an involution here"};
    const TreeStats a = tree_stats(t);
    const TreeStats b = tree_stats(image);
    const std::vector<int> lhs{a.leaves, a.internal, a.root, a.rpath, a.sub, a.rsub, a.stem, a.stemh};
    const std::vector<int> rhs{b.internal, b.leaves, b.rpath, b.root, b.rsub, b.sub, b.stemh, b.stem};
    if (lhs != rhs)
      return Counterexample{edges, to_string(t), to_string(image),
                            "tree " + tuple_text(lhs) + " vs image " + tuple_text(rhs)};
  }
  return std::nullopt;
}

template <typename Map>
std::optional<Counterexample> check_transport(int n, Map map,
                                              std::vector<int> (*before)(const PermStats&),
                                              std::vector<int> (*after)(const PermStats&)) {
  for (const auto& p : sorted_avoiders(n)) {
    const Permutation q = map(p);
    const auto lhs = before(perm_stats(p));
    const auto rhs = after(perm_stats(q));
    if (lhs != rhs)
      return Counterexample{n, to_string(p), to_string(q),
                            "source " + tuple_text(lhs) + " vs image " + tuple_text(rhs)};
    if (map(q) != p)
      return Counterexample{n, to_string(p), to_string(q), "map is not an involution here"};
  }
  return std::nullopt;
}

std::optional<Counterexample> check_cor_hf(int n) {
  return check_transport(
      n, [](const Permutation& p) { return tree_to_perm(involution_h(perm_to_tree(p))); },
      [](const PermStats& s) { return std::vector<int>{s.asc, s.lmax, s.rmax}; },
      [](const PermStats& s) { return std::vector<int>{s.des, s.rmax, s.lmax}; });
}

std::optional<Counterexample> check_cor_hmf(int n) {
  return check_transport(
      n,
      [](const Permutation& p) {
        return tree_to_perm(mirror(involution_h(mirror(perm_to_tree(p)))));
      },
      [](const PermStats& s) { return std::vector<int>{s.asc, s.lmax, s.lmin, s.comp, s.ldr}; },
      [](const PermStats& s) { return std::vector<int>{s.des, s.lmin, s.lmax, s.ldr, s.comp}; });
}

std::optional<Counterexample> check_closure(int n) {
  static constexpr std::array ops{Symmetry::rc, Symmetry::ri, Symmetry::ci};
  std::optional<Counterexample> found;
  brute_filter(n, [&](const Permutation& p) { return !found && is_avoider(p); },
               [&](const Permutation& p) {
                 for (Symmetry op : ops) {
                   const Permutation q = apply(op, p);
                   if (!is_avoider(q)) {
                     found = Counterexample{n, to_string(p), to_string(q),
                                            std::string(name_of(op)) + " image is not an avoider"};
                     return;
                   }
                 }
               });
  return found;
}

std::optional<Counterexample> check_knuth(int n) {
  static const DashedPattern p231 = classical(Permutation({2, 3, 1}));
  return first_failure(
      n,
      [](const Permutation& p) {
        return is_k_stack_sortable(p, 1) == avoids(p, p231) && stack_sort(p) == stack_sort_simulated(p);
      },
      [](const Permutation& p) {
        if (stack_sort(p) != stack_sort_simulated(p))
          return "recursive sort " + to_string(stack_sort(p)) + " vs simulation " +
                 to_string(stack_sort_simulated(p));
        return std::string(is_k_stack_sortable(p, 1) ? "sortable but contains 231"
                                                     : "avoids 231 but is not sortable");
      },
      [](const Permutation& p) { return to_string(stack_sort(p)); });
}

std::optional<Counterexample> check_nonsep_reverse(int n) {
  return first_failure(
      n, [](const Permutation& p) { return is_avoider(reverse(p)) == is_nonseparable(p); },
      [](const Permutation& p) {
        return std::string(is_nonseparable(p) ? "nonseparable but its reverse is not an avoider"
                                              : "reverse is an avoider but it is separable");
      },
      [](const Permutation& p) { return to_string(reverse(p)); });
}

std::optional<Counterexample> check_dulucq(int n) {
  auto avoiders = distribution({FamilyKind::avoiders, n}, {"asc", "lmax"});
  auto sortable = distribution({FamilyKind::two_stack_sortable, n}, {"des", "rmax"});
  return table_mismatch(n, avoiders, sortable, "avoiders", "two-stack-sortable");
}

std::optional<Counterexample> check_psi_lemma(int n) {
  const auto nn = n;
  auto first_not_max = [nn](const Permutation& p) { return p[0] != nn; };
  std::set<Permutation> image;
  for (const auto& p : sorted_avoiders(n)) {
    if (!in_psi_domain(p)) continue;
    const Permutation q = psi(p);
    if (!is_avoider(q) || !is_indecomposable(q) || !first_not_max(q))
      return Counterexample{n, to_string(p), to_string(q), "image outside the codomain"};
    if (!image.insert(q).second)
      return Counterexample{n, to_string(p), to_string(q), "image already hit"};
    if (psi_inv(q) != p)
      return Counterexample{n, to_string(p), to_string(q), "inverse does not recover the input"};
  }
  for (const auto& q : sorted_avoiders(n)) {
    if (!is_indecomposable(q) || !first_not_max(q)) continue;
    if (!image.contains(q)) return Counterexample{n, "", to_string(q), "codomain element not hit"};
  }
  return std::nullopt;
}

std::optional<Counterexample> check_unlabeled_h(int edges) {
  auto trees = gen_plane_trees(edges);
  std::sort(trees.begin(), trees.end());
  for (const auto& t : trees) {
    try {
      const PlaneTree image = h_unlabeled(t);
      if (h_unlabeled(image) != t)
        return Counterexample{edges, to_string(t), to_string(image), "not an involution here"};
    } catch (const std::logic_error& e) {
      return Counterexample{edges, to_string(t), "", e.what()};
    }
  }
  return std::nullopt;
}

} // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry{
      {"counts", "avoiders and trees are counted by 2(3n)!/((2n+1)!(n+1)!)", 1, 10, check_counts},
      {"thm_f", "f sends (sub,leaves,root,lpath,rpath,lsub,stemhm) to (comp,1+asc,lmax,lmin,rmax,ldr,lir)",
       0, 10, check_thm_f},
      {"thm_h", "h is an involution swapping leaves/internal, root/rpath, sub/rsub, stem/stemh", 1, 10,
       check_thm_h},
      {"cor_hf", "f^-1 h f sends (asc,lmax,rmax) to (des,rmax,lmax)", 1, 10, check_cor_hf},
      {"cor_hmf", "f^-1 m h m f sends (asc,lmax,lmin,comp,ldr) to (des,lmin,lmax,ldr,comp)", 1, 10,
       check_cor_hmf},
      {"closure", "avoiders are closed under rc, ri and ci", 1, 10, check_closure},
      {"knuth", "one-stack-sortable iff 231-avoiding; both stack sorts agree", 1, 10, check_knuth},
      {"nonsep-reverse", "reverses of avoiders are the nonseparable permutations", 1, 10,
       check_nonsep_reverse},
      {"dulucq", "(asc,lmax) on avoiders matches (des,rmax) on two-stack-sortable permutations", 1, 10,
       check_dulucq},
      {"psi-lemma", "psi is a bijection onto indecomposable avoiders not starting with n", 2, 10,
       check_psi_lemma},
      {"unlabeled-h", "h restricts to an involution on unlabeled plane trees", 1, 12, check_unlabeled_h},
  };
  return registry;
}

const ClaimInfo& find_claim(std::string_view id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw InvalidInput("unknown claim '" + std::string(id) + "'");
}

VerificationReport verify(std::string_view claim, int max_n) {
  const ClaimInfo& info = find_claim(claim);
  if (max_n < info.min_n || max_n > info.limit)
    throw InvalidInput("max-n for " + info.id + " must lie in " + std::to_string(info.min_n) + ".." +
                       std::to_string(info.limit));
  VerificationReport report{info.id, info.min_n, max_n, true, std::nullopt, 0};
  const auto start = std::chrono::steady_clock::now();
  for (int n = info.min_n; n <= max_n; ++n) {
    if (auto failure = info.check(n)) {
      report.passed = false;
      report.counterexample = std::move(failure);
      break;
    }
  }
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

ConjectureReport conjecture_check(int n, bool force) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  if (n > kConjectureLimit && !force)
    throw InvalidInput("n > " + std::to_string(kConjectureLimit) + " requires --force");
  if (n > kMaxScanLength)
    throw InvalidInput("n > " + std::to_string(kMaxScanLength) + " is not supported");
  const std::vector<std::string> stats{"comp", "asc", "ldr", "rmax"};
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport out;
  out.avoiders = distribution({FamilyKind::avoiders, n}, stats);
  out.sortable = distribution({FamilyKind::two_stack_sortable, n}, stats);
  out.report.claim = "conjecture";
  out.report.min_n = n;
  out.report.max_n = n;
  out.report.counterexample =
      table_mismatch(n, out.avoiders, out.sortable, "avoiders", "two-stack-sortable");
  out.report.passed = !out.report.counterexample;
  out.report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return out;
}

namespace {

nlohmann::json report_json(const VerificationReport& r, std::string_view ok, std::string_view bad) {
  nlohmann::json j;
  j["claim"] = r.claim;
  j["range"] = {r.min_n, r.max_n};
  j["status"] = r.passed ? ok : bad;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["witness"] = {{"n", c.n}, {"object", c.object}, {"image", c.image}, {"detail", c.detail}};
  } else {
    j["witness"] = nullptr;
  }
  j["millis"] = r.millis;
  return j;
}

} // namespace

std::string to_json(const VerificationReport& r) { return report_json(r, "pass", "fail").dump(); }

std::string to_json(const ConjectureReport& r) {
  auto j = report_json(r.report, "equal", "unequal");
  j["avoiders"] = nlohmann::json::parse(to_json(r.avoiders));
  j["two_stack_sortable"] = nlohmann::json::parse(to_json(r.sortable));
  return j.dump();
}

std::string describe(const VerificationReport& r) {
  std::string out = r.claim + " n=" + std::to_string(r.min_n) + ".." + std::to_string(r.max_n) + ": " +
                    (r.passed ? "pass" : "FAIL") + " (" + std::to_string(r.millis) + " ms)";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out += "\n  witness at n=" + std::to_string(c.n) + ": ";
    if (!c.object.empty()) out += c.object;
    if (!c.image.empty()) out += " -> " + c.image;
    out += " [" + c.detail + "]";
  }
  return out;
}

} // namespace betaperm
