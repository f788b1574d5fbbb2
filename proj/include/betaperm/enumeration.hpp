#pragma once

#include "betaperm/beta_tree.hpp"
#include "betaperm/permutation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace betaperm {

using BigInt = boost::multiprecision::cpp_int;

/// 2 (3n)! / ((2n+1)! (n+1)!), the common size of every family counted here.
BigInt count_formula(int n);

/// Largest length accepted by the exhaustive S_n scans.
inline constexpr int kMaxScanLength = 11;

/// Trees by number of edges, built from the single node with lambda and
/// canonical sums (indecomposable first summand). Results are cached.
class TreeGrammar {
public:
  const std::vector<BetaTree>& trees(int edges);
  /// Trees whose root has exactly one child.
  const std::vector<BetaTree>& indecomposable(int edges);

private:
  void extend_to(int edges);
  std::vector<std::vector<BetaTree>> all_;
  std::vector<std::vector<BetaTree>> indecomposable_;
};

/// Avoiders by length, built from the empty permutation with phi and direct
/// sums. Results are cached.
class AvoiderGrammar {
public:
  const std::vector<Permutation>& avoiders(int n);
  const std::vector<Permutation>& indecomposable(int n);

private:
  void extend_to(int n);
  std::vector<std::vector<Permutation>> all_;
  std::vector<std::vector<Permutation>> indecomposable_;
};

std::vector<BetaTree> gen_trees(int edges);
std::vector<Permutation> gen_avoiders(int n);
/// Every unlabeled rooted plane tree with the given number of edges.
std::vector<PlaneTree> gen_plane_trees(int edges);

using PermPredicate = std::function<bool(const Permutation&)>;
using PermVisitor = std::function<void(const Permutation&)>;

/// Visits every permutation of length n satisfying `keep`, in lexicographic
/// order. Refuses n > kMaxScanLength.
void brute_filter(int n, const PermPredicate& keep, const PermVisitor& visit);
std::vector<Permutation> brute_filter(int n, const PermPredicate& keep);

enum class FamilyKind { avoiders, trees, all_perms, two_stack_sortable };

FamilyKind parse_family(std::string_view name);
std::string_view name_of(FamilyKind kind);
bool is_tree_family(FamilyKind kind);

/// A finite family. `size` counts letters, or edges for trees. `k` keeps
/// only objects with k left-to-right maxima (root label k for trees).
struct EnumerationDomain {
  FamilyKind kind = FamilyKind::avoiders;
  int size = 0;
  std::optional<int> k;
  bool indecomposable_only = false;
};

/// Visits the permutations of a permutation family.
void for_each_perm(const EnumerationDomain& domain, const PermVisitor& visit);
/// Visits the trees of the tree family.
void for_each_tree(const EnumerationDomain& domain, const std::function<void(const BetaTree&)>& visit);
std::size_t family_size(const EnumerationDomain& domain);

} // namespace betaperm
