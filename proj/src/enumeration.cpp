#include "betaperm/enumeration.hpp"

#include "betaperm/bijection.hpp"
#include "betaperm/error.hpp"
#include "betaperm/patterns.hpp"
#include "betaperm/sorting.hpp"

#include <algorithm>
#include <numeric>

namespace betaperm {

BigInt count_formula(int n) {
  if (n < 1) throw InvalidInput("count_formula requires n >= 1");
  auto factorial = [](int m) {
    BigInt f = 1;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
  };
  return 2 * factorial(3 * n) / (factorial(2 * n + 1) * factorial(n + 1));
}

// --- trees ----------------------------------------------------------------

void TreeGrammar::extend_to(int edges) {
  if (edges < 0) throw InvalidInput("edge count must be nonnegative");
  if (all_.empty()) {
    all_.push_back({BetaTree::single_node()});
    indecomposable_.emplace_back();
  }
  while (static_cast<int>(all_.size()) <= edges) {
    const int e = static_cast<int>(all_.size());
    std::vector<BetaTree> indec;
    for (const auto& t : all_[e - 1]) {
      const int top = t.is_single_node() ? 1 : t.root().label;
      for (int i = 1; i <= top; ++i) indec.push_back(lambda_op(i, t));
    }
    std::vector<BetaTree> all = indec;
    for (int j = 1; j < e; ++j)
      for (const auto& u : indecomposable_[j])
        for (const auto& v : all_[e - j]) all.push_back(tree_sum(u, v));
    indecomposable_.push_back(std::move(indec));
    all_.push_back(std::move(all));
  }
}

const std::vector<BetaTree>& TreeGrammar::trees(int edges) {
  extend_to(edges);
  return all_[edges];
}

const std::vector<BetaTree>& TreeGrammar::indecomposable(int edges) {
  extend_to(edges);
  return indecomposable_[edges];
}

std::vector<BetaTree> gen_trees(int edges) { return TreeGrammar().trees(edges); }

// --- avoiders -------------------------------------------------------------

void AvoiderGrammar::extend_to(int n) {
  if (n < 0) throw InvalidInput("length must be nonnegative");
  if (all_.empty()) {
    all_.push_back({Permutation{}});
    indecomposable_.emplace_back();
  }
  while (static_cast<int>(all_.size()) <= n) {
    const int m = static_cast<int>(all_.size());
    std::vector<Permutation> indec;
    for (const auto& p : all_[m - 1]) {
      const int top = std::max(lmax(p), 1);
      for (int i = 1; i <= top; ++i) indec.push_back(detail::phi_unchecked(i, p));
    }
    std::vector<Permutation> all = indec;
    for (int j = 1; j < m; ++j)
      for (const auto& u : indecomposable_[j])
        for (const auto& v : all_[m - j]) all.push_back(direct_sum(u, v));
    indecomposable_.push_back(std::move(indec));
    all_.push_back(std::move(all));
  }
}

const std::vector<Permutation>& AvoiderGrammar::avoiders(int n) {
  extend_to(n);
  return all_[n];
}

const std::vector<Permutation>& AvoiderGrammar::indecomposable(int n) {
  extend_to(n);
  return indecomposable_[n];
}

std::vector<Permutation> gen_avoiders(int n) { return AvoiderGrammar().avoiders(n); }

// --- plane trees ----------------------------------------------------------

namespace {

// Root-with-children forests: forest[e] lists child sequences using e edges.
std::vector<std::vector<PlaneTree>> plane_tree_table(int edges) {
  std::vector<std::vector<PlaneTree>> table(edges + 1);
  table[0].push_back(PlaneTree{});
  for (int e = 1; e <= edges; ++e) {
    // First child subtree uses j edges plus the edge to it.
    for (int j = 0; j < e; ++j) {
      for (const auto& first : table[j]) {
        for (const auto& rest : table[e - 1 - j]) {
          PlaneTree t;
          t.children.push_back(first);
          t.children.insert(t.children.end(), rest.children.begin(), rest.children.end());
          table[e].push_back(std::move(t));
        }
      }
    }
  }
  return table;
}

} // namespace

std::vector<PlaneTree> gen_plane_trees(int edges) {
  if (edges < 0) throw InvalidInput("edge count must be nonnegative");
  return plane_tree_table(edges)[edges];
}

// --- brute force ----------------------------------------------------------

void brute_filter(int n, const PermPredicate& keep, const PermVisitor& visit) {
  if (n < 0) throw InvalidInput("length must be nonnegative");
  if (n > kMaxScanLength)
    throw InvalidInput("refusing to scan S_" + std::to_string(n) + "; the limit is n = " +
                       std::to_string(kMaxScanLength));
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  do {
    Permutation p = Permutation::trusted(letters);
    if (keep(p)) visit(p);
  } while (std::next_permutation(letters.begin(), letters.end()));
}

std::vector<Permutation> brute_filter(int n, const PermPredicate& keep) {
  std::vector<Permutation> out;
  brute_filter(n, keep, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

// --- families -------------------------------------------------------------

FamilyKind parse_family(std::string_view name) {
  if (name == "avoiders") return FamilyKind::avoiders;
  if (name == "trees") return FamilyKind::trees;
  if (name == "all-perms") return FamilyKind::all_perms;
  if (name == "two-stack-sortable") return FamilyKind::two_stack_sortable;
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

std::string_view name_of(FamilyKind kind) {
  switch (kind) {
  case FamilyKind::avoiders: return "avoiders";
  case FamilyKind::trees: return "trees";
  case FamilyKind::all_perms: return "all-perms";
  case FamilyKind::two_stack_sortable: return "two-stack-sortable";
  }
  return "?";
}

bool is_tree_family(FamilyKind kind) { return kind == FamilyKind::trees; }

namespace {

void check_domain(const EnumerationDomain& d) {
  if (d.size < 0) throw InvalidInput("family size must be nonnegative");
  if (d.k && *d.k < 1) throw InvalidInput("class filter k must be at least 1");
  if (d.size > kMaxScanLength)
    throw InvalidInput("family size " + std::to_string(d.size) + " exceeds the limit " +
                       std::to_string(kMaxScanLength));
}

bool keep_perm(const EnumerationDomain& d, const Permutation& p) {
  if (d.k && lmax(p) != *d.k) return false;
  if (d.indecomposable_only && !is_indecomposable(p)) return false;
  return true;
}

} // namespace

void for_each_perm(const EnumerationDomain& domain, const PermVisitor& visit) {
  check_domain(domain);
  auto filtered = [&](const Permutation& p) {
    if (keep_perm(domain, p)) visit(p);
  };
  switch (domain.kind) {
  case FamilyKind::avoiders: {
    AvoiderGrammar grammar;
    for (const auto& p : grammar.avoiders(domain.size)) filtered(p);
    return;
  }
  case FamilyKind::all_perms:
    brute_filter(domain.size, [](const Permutation&) { return true; }, filtered);
    return;
  case FamilyKind::two_stack_sortable:
    brute_filter(domain.size, [](const Permutation& p) { return is_k_stack_sortable(p, 2); },
                 filtered);
    return;
  case FamilyKind::trees:
    throw InvalidInput("trees are not a permutation family");
  }
}

void for_each_tree(const EnumerationDomain& domain,
                   const std::function<void(const BetaTree&)>& visit) {
  check_domain(domain);
  if (domain.kind != FamilyKind::trees) throw InvalidInput("not a tree family");
  TreeGrammar grammar;
  for (const auto& t : grammar.trees(domain.size)) {
    if (domain.k && root_label(t) != *domain.k) continue;
    if (domain.indecomposable_only && sub(t) != 1) continue;
    visit(t);
  }
}

std::size_t family_size(const EnumerationDomain& domain) {
  std::size_t count = 0;
  if (is_tree_family(domain.kind))
    for_each_tree(domain, [&](const BetaTree&) { ++count; });
  else
    for_each_perm(domain, [&](const Permutation&) { ++count; });
  return count;
}

} // namespace betaperm
