#pragma once

#include "betaperm/error.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace betaperm {

/// A labeled rooted plane tree with no labeling constraints.
struct TreeNode {
  int label = 1;
  std::vector<TreeNode> children;

  bool is_leaf() const noexcept { return children.empty(); }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
  friend std::strong_ordering operator<=>(const TreeNode&, const TreeNode&) = default;
};

enum class ViolationKind {
  leaf_label,     // leaf label is not 1
  root_sum,       // root label differs from the sum of its children's labels
  internal_range, // non-root internal label outside 1..sum of children
};

struct TreeViolation {
  std::vector<std::size_t> path; // child indices from the root
  ViolationKind kind;
  int label;
  int child_sum;

  std::string describe() const;
};

class InvalidTree : public InvalidInput {
public:
  explicit InvalidTree(std::vector<TreeViolation> violations);
  const std::vector<TreeViolation>& violations() const noexcept { return violations_; }

private:
  std::vector<TreeViolation> violations_;
};

std::vector<TreeViolation> find_violations(const TreeNode& root);

/// A rooted plane tree satisfying the beta(1,0) labeling rules: leaves are
/// labeled 1, the root carries the sum of its children's labels, and every
/// other internal node carries a label between 1 and that sum.
///
/// The single-node tree is stored as a leaf with label 1; its root statistic
/// is nevertheless reported as 0.
class BetaTree {
public:
  BetaTree() = default;
  /// Throws InvalidTree listing every violated rule.
  explicit BetaTree(TreeNode root);
  /// No validation; the caller guarantees the labeling rules.
  static BetaTree trusted(TreeNode root) noexcept;

  static BetaTree single_node() { return BetaTree(); }
  static BetaTree edge();

  const TreeNode& root() const noexcept { return root_; }
  bool is_single_node() const noexcept { return root_.is_leaf(); }
  std::size_t node_count() const noexcept;
  std::size_t edge_count() const noexcept { return node_count() - 1; }

  friend bool operator==(const BetaTree&, const BetaTree&) = default;
  friend std::strong_ordering operator<=>(const BetaTree&, const BetaTree&) = default;

private:
  TreeNode root_{};
};

struct ValidationResult {
  std::optional<BetaTree> tree;
  std::vector<TreeViolation> violations;

  bool ok() const noexcept { return tree.has_value(); }
};

ValidationResult validate(TreeNode raw);

/// "(label child child ...)", one space between tokens.
std::string to_string(const TreeNode& node);
std::string to_string(const BetaTree& t);
/// Syntax errors throw ParseError; labeling errors throw InvalidTree.
TreeNode parse_tree_node(std::string_view text);
BetaTree parse_tree(std::string_view text);

// --- composition --------------------------------------------------------

/// Root labels add; subtrees of `u` are followed by those of `v`.
BetaTree tree_sum(const BetaTree& u, const BetaTree& v);
/// New root above `t`; both get label `i` (1 <= i <= root label of t, or
/// i = 1 when t is the single node).
BetaTree lambda_op(int i, const BetaTree& t);
/// The rightmost leaf of `u` becomes the root of `v`, relabeled 1.
BetaTree tree_obslash(const BetaTree& u, const BetaTree& v);
/// Hangs a new rightmost leaf on the i-th node of the right path (the root
/// being the first) and adds 1 to every other label on the new right path.
BetaTree gamma_op(int i, const BetaTree& t);

struct Atom {
  friend bool operator==(const Atom&, const Atom&) = default;
};
struct SumParts {
  BetaTree left;  // first subtree, as an indecomposable tree
  BetaTree right; // the remaining subtrees
  friend bool operator==(const SumParts&, const SumParts&) = default;
};
struct LambdaParts {
  int label;
  BetaTree inner;
  friend bool operator==(const LambdaParts&, const LambdaParts&) = default;
};
struct ObslashParts {
  BetaTree upper; // above the topmost label-1 internal node of the right path
  BetaTree lower; // hangs from that node
  friend bool operator==(const ObslashParts&, const ObslashParts&) = default;
};
struct GammaParts {
  int position;
  BetaTree inner;
  friend bool operator==(const GammaParts&, const GammaParts&) = default;
};

using PrimalDecomposition = std::variant<Atom, SumParts, LambdaParts>;
using DualDecomposition = std::variant<Atom, ObslashParts, GammaParts>;

PrimalDecomposition decompose(const BetaTree& t);
DualDecomposition decompose_dual(const BetaTree& t);
BetaTree recompose(const PrimalDecomposition& d);
BetaTree recompose(const DualDecomposition& d);

// --- statistics ----------------------------------------------------------

struct TreeStats {
  int leaves = 0;
  int internal = 0;
  int root = 0;
  int sub = 0;
  int lpath = 0;
  int rpath = 0;
  int lsub = 0;
  int rsub = 0;
  int stem = 0;
  int stemh = 0;
  int stemhm = 0;

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

int leaves(const BetaTree& t);
int internal_nodes(const BetaTree& t);
/// 0 for the single node.
int root_label(const BetaTree& t);
int sub(const BetaTree& t);
int lpath(const BetaTree& t);
int rpath(const BetaTree& t);
int lsub(const BetaTree& t);
int rsub(const BetaTree& t);
int stem(const BetaTree& t);
/// Leftmost-leaf deletion procedure; 0 for the single node.
int stemhm(const BetaTree& t);
/// stemhm of the mirror image.
int stemh(const BetaTree& t);
/// Number of leading gamma steps in the dual decomposition of `t`.
int gamma_depth(const BetaTree& t);
/// stemh read off the dual decomposition: gamma_depth, plus one when the
/// remaining core is an obslash product rather than the single node.
int stemh_dual(const BetaTree& t);
TreeStats tree_stats(const BetaTree& t);

// --- symmetries ----------------------------------------------------------

BetaTree mirror(const BetaTree& t);
/// h(leaf) = leaf, h(lambda_i t) = gamma_i h(t), h(u + v) = h(v) obslash h(u).
BetaTree involution_h(const BetaTree& t);

/// An unlabeled rooted plane tree.
struct PlaneTree {
  std::vector<PlaneTree> children;
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
  friend std::strong_ordering operator<=>(const PlaneTree&, const PlaneTree&) = default;
};

std::string to_string(const PlaneTree& t);
PlaneTree parse_plane_tree(std::string_view text);
/// Root labeled by its child count, every other node by 1.
BetaTree label_plane_tree(const PlaneTree& t);
PlaneTree forget_labels(const BetaTree& t);
/// Applies h to the canonical labeling. Throws std::logic_error if the
/// image has a non-root label other than 1.
PlaneTree h_unlabeled(const PlaneTree& t);

} // namespace betaperm
