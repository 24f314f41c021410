#pragma once

// Concrete unranked ordered forests and one-hole contexts: the free forest
// algebra over a finite alphabet.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forestalg {

using Label = std::string;

/// A declared finite alphabet. Order of declaration is significant: it fixes
/// letter indices in recognizers and the enumeration order of the oracle.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<Label> symbols);
  explicit Alphabet(std::vector<Label> symbols);

  /// Every distinct single character occurring as a label in `texts`.
  static Alphabet infer(const std::vector<std::string>& texts);

  const std::vector<Label>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  const Label& operator[](std::size_t i) const { return symbols_[i]; }
  std::optional<std::size_t> index(std::string_view symbol) const;
  bool contains(std::string_view symbol) const { return index(symbol).has_value(); }
  /// True when juxtaposition sugar (`bc` for b(c)) is unambiguous.
  bool single_char() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Label> symbols_;
};

/// One node of a forest or context. A hole is a childless node with an empty
/// label; it only ever occurs inside a Context.
struct Node {
  Label label;
  std::vector<Node> children;
  bool hole = false;

  friend bool operator==(const Node&, const Node&) = default;
  friend std::strong_ordering operator<=>(const Node& a, const Node& b);
};

/// Address of a node: sibling indices from the roots downward.
using NodeId = std::vector<std::size_t>;

class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Node> trees);

  static Forest leaf(Label label);
  static Forest tree(Label label, const Forest& children);

  const std::vector<Node>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  bool is_tree() const { return trees_.size() == 1; }
  /// Number of nodes.
  std::size_t size() const;

  friend Forest operator+(const Forest& a, const Forest& b);
  friend bool operator==(const Forest&, const Forest&) = default;
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    return a.trees_ <=> b.trees_;
  }

 private:
  std::vector<Node> trees_;
};

class Context {
 public:
  /// The empty context.
  Context();
  explicit Context(std::vector<Node> trees);

  /// Single-node context `a(_)`.
  static Context letter(Label label);
  static Context tree(Label label, const Context& below);

  const std::vector<Node>& trees() const { return trees_; }
  bool is_identity() const { return trees_.size() == 1 && trees_.front().hole; }
  /// Nonempty with one root above every other node, hole included.
  bool is_tree_context() const { return trees_.size() == 1 && !trees_.front().hole; }
  /// Number of nodes, hole excluded.
  std::size_t size() const;
  NodeId hole() const;

  friend bool operator==(const Context&, const Context&) = default;
  friend std::strong_ordering operator<=>(const Context& a, const Context& b) {
    return a.trees_ <=> b.trees_;
  }

 private:
  std::vector<Node> trees_;
};

Forest parse_forest(std::string_view text, const Alphabet& alphabet);
Context parse_context(std::string_view text, const Alphabet& alphabet);

std::string render(const Forest& f);
std::string render(const Context& p);
std::string render(const std::vector<Node>& trees);

/// p s: the hole of p replaced by s.
Forest substitute(const Context& p, const Forest& s);
/// q p: the hole of q replaced by p.
Context compose(const Context& q, const Context& p);

/// g + _ and _ + g.
Context insert_left(const Forest& g);
Context insert_right(const Forest& g);
Context operator+(const Forest& g, const Context& p);
Context operator+(const Context& p, const Forest& g);

/// Labels used in a forest, in order of first occurrence.
std::vector<Label> labels_of(const std::vector<Node>& trees);

/// Flattened view of a forest or context in depth-first (pre)order, with the
/// node relations: strict ancestor <, horizontal order <_h, forest order
/// <_dfs and the closest common ancestor.
class NodeTable {
 public:
  explicit NodeTable(const std::vector<Node>& trees);
  explicit NodeTable(const Forest& f) : NodeTable(f.trees()) {}
  explicit NodeTable(const Context& p) : NodeTable(p.trees()) {}

  int size() const { return static_cast<int>(label_.size()); }
  const Label& label(int x) const { return label_[x]; }
  bool is_hole(int x) const { return hole_[x]; }
  int parent(int x) const { return parent_[x]; }
  int depth(int x) const { return depth_[x]; }
  /// One past the last descendant of x in preorder.
  int subtree_end(int x) const { return end_[x]; }
  int child_count(int x) const { return child_count_[x]; }
  bool has_sibling(int x) const;

  bool ancestor(int x, int y) const { return x < y && y < end_[x]; }
  bool dfs_before(int x, int y) const { return x < y; }
  bool sibling_before(int x, int y) const { return x < y && parent_[x] == parent_[y]; }
  std::optional<int> cca(int x, int y) const;

  NodeId id(int x) const;
  int index(const NodeId& id) const;

 private:
  void build(const std::vector<Node>& trees, int parent, int depth);

  std::vector<Label> label_;
  std::vector<bool> hole_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> end_;
  std::vector<int> child_count_;
  std::vector<std::size_t> sibling_index_;
};

/// The forest induced on a preorder-sorted node subset: each kept node hangs
/// below its nearest kept ancestor; order follows the original forest order.
std::vector<Node> induced(const NodeTable& table, const std::vector<int>& kept);

}  // namespace forestalg
