#include "betaperm/beta_tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace betaperm {

namespace {

int child_label_sum(const TreeNode& node) {
  int sum = 0;
  for (const auto& c : node.children) sum += c.label;
  return sum;
}

void collect_violations(const TreeNode& node, bool is_root, std::vector<std::size_t>& path,
                        std::vector<TreeViolation>& out) {
  if (node.is_leaf()) {
    if (node.label != 1) out.push_back({path, ViolationKind::leaf_label, node.label, 0});
    return;
  }
  const int sum = child_label_sum(node);
  if (is_root && node.label != sum)
    out.push_back({path, ViolationKind::root_sum, node.label, sum});
  if (!is_root && (node.label < 1 || node.label > sum))
    out.push_back({path, ViolationKind::internal_range, node.label, sum});
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    collect_violations(node.children[i], false, path, out);
    path.pop_back();
  }
}

std::size_t count_nodes(const TreeNode& node) {
  std::size_t n = 1;
  for (const auto& c : node.children) n += count_nodes(c);
  return n;
}

TreeNode& rightmost_leaf(TreeNode& node) {
  TreeNode* cur = &node;
  while (!cur->is_leaf()) cur = &cur->children.back();
  return *cur;
}

void require_edge(const BetaTree& t, const char* op) {
  if (t.is_single_node())
    throw InvalidInput(std::string(op) + " requires trees with at least one edge");
}

} // namespace

std::string TreeViolation::describe() const {
  std::string where = "root";
  for (auto i : path) where += "." + std::to_string(i);
  switch (kind) {
  case ViolationKind::leaf_label:
    return where + ": leaf has label " + std::to_string(label) + ", expected 1";
  case ViolationKind::root_sum:
    return where + ": root label " + std::to_string(label) + " differs from child sum " +
           std::to_string(child_sum);
  case ViolationKind::internal_range:
    return where + ": label " + std::to_string(label) + " outside 1.." + std::to_string(child_sum);
  }
  return where;
}

namespace {

std::string summarize(const std::vector<TreeViolation>& v) {
  std::string out = "invalid beta(1,0)-tree";
  for (const auto& x : v) out += "; " + x.describe();
  return out;
}

} // namespace

InvalidTree::InvalidTree(std::vector<TreeViolation> violations)
    : InvalidInput(summarize(violations)), violations_(std::move(violations)) {}

std::vector<TreeViolation> find_violations(const TreeNode& root) {
  std::vector<TreeViolation> out;
  std::vector<std::size_t> path;
  collect_violations(root, true, path, out);
  return out;
}

BetaTree::BetaTree(TreeNode root) : root_(std::move(root)) {
  auto violations = find_violations(root_);
  if (!violations.empty()) throw InvalidTree(std::move(violations));
}

BetaTree BetaTree::trusted(TreeNode root) noexcept {
  BetaTree t;
  t.root_ = std::move(root);
  return t;
}

BetaTree BetaTree::edge() { return trusted(TreeNode{1, {TreeNode{}}}); }

std::size_t BetaTree::node_count() const noexcept { return count_nodes(root_); }

ValidationResult validate(TreeNode raw) {
  ValidationResult result;
  result.violations = find_violations(raw);
  if (result.violations.empty()) result.tree = BetaTree::trusted(std::move(raw));
  return result;
}

// --- text format ---------------------------------------------------------

namespace {

void write_node(const TreeNode& node, std::string& out) {
  out += '(';
  out += std::to_string(node.label);
  for (const auto& c : node.children) {
    out += ' ';
    write_node(c, out);
  }
  out += ')';
}

class TreeReader {
public:
  explicit TreeReader(std::string_view text) : text_(text) {}

  TreeNode read_document() {
    skip_space();
    TreeNode node = read_node();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
    return node;
  }

  PlaneTree read_plane_document() {
    skip_space();
    PlaneTree t = read_plane();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
    return t;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
    if (text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  TreeNode read_node() {
    if (++depth_ > kMaxDepth) throw ParseError("tree nested too deeply", pos_);
    expect('(');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a label", start);
    TreeNode node;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, node.label);
    if (ec != std::errc{}) throw ParseError("label out of range", start);
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '(') {
      node.children.push_back(read_node());
      skip_space();
    }
    expect(')');
    --depth_;
    return node;
  }

  PlaneTree read_plane() {
    if (++depth_ > kMaxDepth) throw ParseError("tree nested too deeply", pos_);
    expect('(');
    skip_space();
    PlaneTree t;
    while (pos_ < text_.size() && text_[pos_] == '(') {
      t.children.push_back(read_plane());
      skip_space();
    }
    expect(')');
    --depth_;
    return t;
  }

  static constexpr int kMaxDepth = 10000;
  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

} // namespace

std::string to_string(const TreeNode& node) {
  std::string out;
  write_node(node, out);
  return out;
}

std::string to_string(const BetaTree& t) { return to_string(t.root()); }

TreeNode parse_tree_node(std::string_view text) { return TreeReader(text).read_document(); }

BetaTree parse_tree(std::string_view text) { return BetaTree(parse_tree_node(text)); }

// --- composition ---------------------------------------------------------

BetaTree tree_sum(const BetaTree& u, const BetaTree& v) {
  require_edge(u, "tree_sum");
  require_edge(v, "tree_sum");
  TreeNode root{u.root().label + v.root().label, u.root().children};
  root.children.insert(root.children.end(), v.root().children.begin(), v.root().children.end());
  return BetaTree::trusted(std::move(root));
}

BetaTree lambda_op(int i, const BetaTree& t) {
  if (t.is_single_node()) {
    if (i != 1) throw InvalidInput("lambda on the single node requires i = 1");
    return BetaTree::edge();
  }
  if (i < 1 || i > t.root().label)
    throw InvalidInput("lambda index " + std::to_string(i) + " outside 1.." +
                       std::to_string(t.root().label));
  TreeNode child = t.root();
  child.label = i;
  return BetaTree::trusted(TreeNode{i, {std::move(child)}});
}

BetaTree tree_obslash(const BetaTree& u, const BetaTree& v) {
  require_edge(u, "tree_obslash");
  require_edge(v, "tree_obslash");
  TreeNode root = u.root();
  TreeNode& junction = rightmost_leaf(root);
  junction = v.root();
  junction.label = 1;
  return BetaTree::trusted(std::move(root));
}

BetaTree gamma_op(int i, const BetaTree& t) {
  if (t.is_single_node()) {
    if (i != 1) throw InvalidInput("gamma on the single node requires i = 1");
    return BetaTree::edge();
  }
  const int k = rpath(t);
  if (i < 1 || i > k)
    throw InvalidInput("gamma index " + std::to_string(i) + " outside 1.." + std::to_string(k));
  TreeNode root = t.root();
  TreeNode* node = &root;
  for (int depth = 0;; ++depth) {
    node->label += 1;
    if (depth == i - 1) break;
    node = &node->children.back();
  }
  node->children.push_back(TreeNode{});
  return BetaTree::trusted(std::move(root));
}

PrimalDecomposition decompose(const BetaTree& t) {
  const TreeNode& root = t.root();
  if (root.is_leaf()) return Atom{};
  if (root.children.size() == 1) {
    TreeNode inner = root.children.front();
    if (!inner.is_leaf()) inner.label = child_label_sum(inner);
    return LambdaParts{root.label, BetaTree::trusted(std::move(inner))};
  }
  const TreeNode& first = root.children.front();
  TreeNode left{first.label, {first}};
  TreeNode right{root.label - first.label, {root.children.begin() + 1, root.children.end()}};
  return SumParts{BetaTree::trusted(std::move(left)), BetaTree::trusted(std::move(right))};
}

DualDecomposition decompose_dual(const BetaTree& t) {
  if (t.is_single_node()) return Atom{};
  // Topmost label-1 internal non-root node on the right path.
  TreeNode upper = t.root();
  TreeNode* node = &upper.children.back();
  while (!node->is_leaf()) {
    if (node->label == 1) {
      TreeNode lower = std::move(*node);
      lower.label = child_label_sum(lower);
      *node = TreeNode{};
      return ObslashParts{BetaTree::trusted(std::move(upper)), BetaTree::trusted(std::move(lower))};
    }
    node = &node->children.back();
  }
  const int i = rpath(t);
  TreeNode inner = t.root();
  TreeNode* cur = &inner;
  for (int depth = 0; depth < i - 1; ++depth) {
    cur->label -= 1;
    cur = &cur->children.back();
  }
  cur->label -= 1;
  cur->children.pop_back();
  if (inner.is_leaf()) return GammaParts{i, BetaTree::single_node()};
  return GammaParts{i, BetaTree::trusted(std::move(inner))};
}

BetaTree recompose(const PrimalDecomposition& d) {
  struct Visitor {
    BetaTree operator()(const Atom&) const { return BetaTree::single_node(); }
    BetaTree operator()(const SumParts& s) const { return tree_sum(s.left, s.right); }
    BetaTree operator()(const LambdaParts& l) const { return lambda_op(l.label, l.inner); }
  };
  return std::visit(Visitor{}, d);
}

BetaTree recompose(const DualDecomposition& d) {
  struct Visitor {
    BetaTree operator()(const Atom&) const { return BetaTree::single_node(); }
    BetaTree operator()(const ObslashParts& o) const { return tree_obslash(o.upper, o.lower); }
    BetaTree operator()(const GammaParts& g) const { return gamma_op(g.position, g.inner); }
  };
  return std::visit(Visitor{}, d);
}

// --- statistics ----------------------------------------------------------

namespace {

void count_kinds(const TreeNode& node, int& leaf_count, int& internal_count) {
  if (node.is_leaf()) {
    ++leaf_count;
    return;
  }
  ++internal_count;
  for (const auto& c : node.children) count_kinds(c, leaf_count, internal_count);
}

template <bool Left>
const TreeNode& next_on_path(const TreeNode& node) {
  return Left ? node.children.front() : node.children.back();
}

template <bool Left>
int path_length(const TreeNode& root) {
  int len = 0;
  for (const TreeNode* n = &root; !n->is_leaf(); n = &next_on_path<Left>(*n)) ++len;
  return len;
}

template <bool Left>
int ones_below_root(const TreeNode& root) {
  int count = 0;
  for (const TreeNode* n = &root; !n->is_leaf();) {
    n = &next_on_path<Left>(*n);
    if (n->label == 1) ++count;
  }
  return count;
}

} // namespace

int leaves(const BetaTree& t) {
  int l = 0, i = 0;
  count_kinds(t.root(), l, i);
  return l;
}

int internal_nodes(const BetaTree& t) {
  int l = 0, i = 0;
  count_kinds(t.root(), l, i);
  return i;
}

int root_label(const BetaTree& t) { return t.is_single_node() ? 0 : t.root().label; }
int sub(const BetaTree& t) { return static_cast<int>(t.root().children.size()); }
int lpath(const BetaTree& t) { return path_length<true>(t.root()); }
int rpath(const BetaTree& t) { return path_length<false>(t.root()); }
int lsub(const BetaTree& t) { return ones_below_root<true>(t.root()); }
int rsub(const BetaTree& t) { return ones_below_root<false>(t.root()); }

int stem(const BetaTree& t) {
  int count = 0;
  const TreeNode* n = &t.root();
  while (!n->is_leaf()) {
    ++count;
    if (n->children.size() != 1) break;
    n = &n->children.front();
  }
  return count;
}

int stemhm(const BetaTree& t) {
  if (t.is_single_node()) return 0;
  TreeNode work = t.root();
  std::vector<TreeNode*> path;
  for (int i = 1;; ++i) {
    path.clear();
    for (TreeNode* n = &work; !n->is_leaf(); n = &n->children.front()) path.push_back(n);
    const bool blocked = path.empty() ||
        std::any_of(path.begin(), path.end(), [](const TreeNode* n) { return n->label == 1; });
    if (blocked) return i;
    for (TreeNode* n : path) n->label -= 1;
    path.back()->children.erase(path.back()->children.begin());
  }
}

int stemh(const BetaTree& t) { return stemhm(mirror(t)); }

int gamma_depth(const BetaTree& t) {
  int depth = 0;
  BetaTree cur = t;
  for (;;) {
    auto d = decompose_dual(cur);
    auto* g = std::get_if<GammaParts>(&d);
    if (g == nullptr) return depth;
    ++depth;
    cur = std::move(g->inner);
  }
}

int stemh_dual(const BetaTree& t) {
  BetaTree cur = t;
  int depth = 0;
  for (;;) {
    auto d = decompose_dual(cur);
    if (std::holds_alternative<ObslashParts>(d)) return depth + 1;
    auto* g = std::get_if<GammaParts>(&d);
    if (g == nullptr) return depth;
    ++depth;
    cur = std::move(g->inner);
  }
}

TreeStats tree_stats(const BetaTree& t) {
  TreeStats s;
  count_kinds(t.root(), s.leaves, s.internal);
  s.root = root_label(t);
  s.sub = sub(t);
  s.lpath = lpath(t);
  s.rpath = rpath(t);
  s.lsub = lsub(t);
  s.rsub = rsub(t);
  s.stem = stem(t);
  s.stemh = stemh(t);
  s.stemhm = stemhm(t);
  return s;
}

// --- symmetries ----------------------------------------------------------

namespace {

void mirror_in_place(TreeNode& node) {
  std::reverse(node.children.begin(), node.children.end());
  for (auto& c : node.children) mirror_in_place(c);
}

} // namespace

BetaTree mirror(const BetaTree& t) {
  TreeNode root = t.root();
  mirror_in_place(root);
  return BetaTree::trusted(std::move(root));
}

BetaTree involution_h(const BetaTree& t) {
  struct Visitor {
    BetaTree operator()(const Atom&) const { return BetaTree::single_node(); }
    BetaTree operator()(const LambdaParts& l) const {
      return gamma_op(l.label, involution_h(l.inner));
    }
    BetaTree operator()(const SumParts& s) const {
      return tree_obslash(involution_h(s.right), involution_h(s.left));
    }
  };
  return std::visit(Visitor{}, decompose(t));
}

namespace {

void write_plane(const PlaneTree& t, std::string& out) {
  out += '(';
  for (const auto& c : t.children) write_plane(c, out);
  out += ')';
}

TreeNode ones_labeling(const PlaneTree& t) {
  TreeNode node;
  for (const auto& c : t.children) node.children.push_back(ones_labeling(c));
  return node;
}

PlaneTree strip(const TreeNode& node) {
  PlaneTree t;
  for (const auto& c : node.children) t.children.push_back(strip(c));
  return t;
}

bool non_root_all_ones(const TreeNode& node) {
  for (const auto& c : node.children)
    if (c.label != 1 || !non_root_all_ones(c)) return false;
  return true;
}

} // namespace

std::string to_string(const PlaneTree& t) {
  std::string out;
  write_plane(t, out);
  return out;
}

PlaneTree parse_plane_tree(std::string_view text) { return TreeReader(text).read_plane_document(); }

BetaTree label_plane_tree(const PlaneTree& t) {
  TreeNode root = ones_labeling(t);
  if (!root.is_leaf()) root.label = static_cast<int>(root.children.size());
  return BetaTree::trusted(std::move(root));
}

PlaneTree forget_labels(const BetaTree& t) { return strip(t.root()); }

PlaneTree h_unlabeled(const PlaneTree& t) {
  const BetaTree image = involution_h(label_plane_tree(t));
  if (!non_root_all_ones(image.root()))
    throw std::logic_error("h produced a non-root label other than 1: " + to_string(image));
  return forget_labels(image);
}

} // namespace betaperm
