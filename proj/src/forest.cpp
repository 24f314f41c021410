#include "forestalg/forest.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "forestalg/error.hpp"

namespace forestalg {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("FORESTALG_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && value > 0) {
      limits.max_v_elements = value;
      limits.max_states = value;
      limits.max_enumeration = value;
    }
  }
  return limits;
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::initializer_list<Label> symbols)
    : Alphabet(std::vector<Label>(symbols)) {}

Alphabet::Alphabet(std::vector<Label> symbols) : symbols_(std::move(symbols)) {
  std::set<Label> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw InvalidInput("alphabet contains an empty label");
    if (s.find_first_of("+()_ \t\r\n") != std::string::npos)
      throw InvalidInput("label '" + s + "' contains a reserved character");
    if (!seen.insert(s).second) throw InvalidInput("duplicate label '" + s + "'");
  }
}

Alphabet Alphabet::infer(const std::vector<std::string>& texts) {
  std::set<char> chars;
  for (const auto& t : texts)
    for (char c : t)
      if (std::string_view("+()_ \t\r\n").find(c) == std::string_view::npos &&
          static_cast<unsigned char>(c) < 0x80)
        chars.insert(c);
  std::vector<Label> symbols;
  for (char c : chars) symbols.emplace_back(1, c);
  return Alphabet(std::move(symbols));
}

std::optional<std::size_t> Alphabet::index(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return i;
  return std::nullopt;
}

bool Alphabet::single_char() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const Label& s) { return s.size() == 1; });
}

// ---------------------------------------------------------------------------
// Node / Forest / Context

std::strong_ordering operator<=>(const Node& a, const Node& b) {
  if (auto c = a.hole <=> b.hole; c != 0) return c;
  if (auto c = a.label <=> b.label; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.children.begin(), a.children.end(), b.children.begin(), b.children.end());
}

namespace {

std::size_t count_nodes(const std::vector<Node>& trees) {
  std::size_t n = 0;
  for (const auto& t : trees) n += (t.hole ? 0 : 1) + count_nodes(t.children);
  return n;
}

std::size_t count_holes(const std::vector<Node>& trees) {
  std::size_t n = 0;
  for (const auto& t : trees) n += (t.hole ? 1 : 0) + count_holes(t.children);
  return n;
}

bool find_hole(const std::vector<Node>& trees, NodeId& path) {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    path.push_back(i);
    if (trees[i].hole || find_hole(trees[i].children, path)) return true;
    path.pop_back();
  }
  return false;
}

// Replaces the (unique) hole in `trees` by the sequence `filler`.
void fill_hole(std::vector<Node>& trees, const std::vector<Node>& filler) {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].hole) {
      trees.erase(trees.begin() + static_cast<std::ptrdiff_t>(i));
      trees.insert(trees.begin() + static_cast<std::ptrdiff_t>(i), filler.begin(),
                   filler.end());
      return;
    }
    if (count_holes(trees[i].children) > 0) {
      fill_hole(trees[i].children, filler);
      return;
    }
  }
}

Node hole_node() {
  Node n;
  n.hole = true;
  return n;
}

}  // namespace

Forest::Forest(std::vector<Node> trees) : trees_(std::move(trees)) {
  if (count_holes(trees_) != 0) throw InvalidInput("a forest cannot contain a hole");
}

Forest Forest::leaf(Label label) { return tree(std::move(label), Forest{}); }

Forest Forest::tree(Label label, const Forest& children) {
  Node n;
  n.label = std::move(label);
  n.children = children.trees();
  Forest f;
  f.trees_.push_back(std::move(n));
  return f;
}

std::size_t Forest::size() const { return count_nodes(trees_); }

Forest operator+(const Forest& a, const Forest& b) {
  Forest f = a;
  f.trees_.insert(f.trees_.end(), b.trees_.begin(), b.trees_.end());
  return f;
}

Context::Context() : trees_{hole_node()} {}

Context::Context(std::vector<Node> trees) : trees_(std::move(trees)) {
  const auto holes = count_holes(trees_);
  if (holes != 1)
    throw InvalidInput("a context needs exactly one hole, found " + std::to_string(holes));
}

Context Context::letter(Label label) { return tree(std::move(label), Context{}); }

Context Context::tree(Label label, const Context& below) {
  Node n;
  n.label = std::move(label);
  n.children = below.trees();
  return Context(std::vector<Node>{std::move(n)});
}

std::size_t Context::size() const { return count_nodes(trees_); }

NodeId Context::hole() const {
  NodeId path;
  find_hole(trees_, path);
  return path;
}

Forest substitute(const Context& p, const Forest& s) {
  std::vector<Node> trees = p.trees();
  fill_hole(trees, s.trees());
  return Forest(std::move(trees));
}

Context compose(const Context& q, const Context& p) {
  std::vector<Node> trees = q.trees();
  fill_hole(trees, p.trees());
  return Context(std::move(trees));
}

Context insert_left(const Forest& g) {
  std::vector<Node> trees = g.trees();
  trees.push_back(hole_node());
  return Context(std::move(trees));
}

Context insert_right(const Forest& g) {
  std::vector<Node> trees{hole_node()};
  trees.insert(trees.end(), g.trees().begin(), g.trees().end());
  return Context(std::move(trees));
}

Context operator+(const Forest& g, const Context& p) {
  std::vector<Node> trees = g.trees();
  trees.insert(trees.end(), p.trees().begin(), p.trees().end());
  return Context(std::move(trees));
}

Context operator+(const Context& p, const Forest& g) {
  std::vector<Node> trees = p.trees();
  trees.insert(trees.end(), g.trees().begin(), g.trees().end());
  return Context(std::move(trees));
}

namespace {
void collect_labels(const std::vector<Node>& trees, std::vector<Label>& out) {
  for (const auto& t : trees) {
    if (!t.hole && std::find(out.begin(), out.end(), t.label) == out.end())
      out.push_back(t.label);
    collect_labels(t.children, out);
  }
}
}  // namespace

std::vector<Label> labels_of(const std::vector<Node>& trees) {
  std::vector<Label> out;
  collect_labels(trees, out);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {
void render_into(const std::vector<Node>& trees, std::string& out) {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i > 0) out += '+';
    const Node& n = trees[i];
    if (n.hole) {
      out += '_';
      continue;
    }
    out += n.label;
    if (!n.children.empty()) {
      out += '(';
      render_into(n.children, out);
      out += ')';
    }
  }
}
}  // namespace

std::string render(const std::vector<Node>& trees) {
  std::string out;
  render_into(trees, out);
  return out;
}

std::string render(const Forest& f) { return render(f.trees()); }
std::string render(const Context& p) { return render(p.trees()); }

// ---------------------------------------------------------------------------
// Parsing
//
//   forest := empty | item ('+' item)*
//   item   := HOLE | run [ '(' forest ')' | HOLE ]
//
// A run is a maximal sequence of label characters. Over a single-character
// alphabet a run `abc` is the chain a(b(c(...))).

namespace {

constexpr std::string_view kBox = "\xE2\x96\xA1";  // U+25A1, accepted for '_'

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  std::vector<Node> parse_all() {
    auto trees = parse_forest();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced parentheses: unexpected ')'");
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return trees;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::string_view(" \t\r\n").find(text_[pos_]) !=
                                      std::string_view::npos)
      ++pos_;
  }

  bool at_hole() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '_') return true;
    return text_.substr(pos_, kBox.size()) == kBox;
  }

  void eat_hole() { pos_ += text_[pos_] == '_' ? 1 : kBox.size(); }

  bool at_label() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::string_view("+()_ \t\r\n").find(c) == std::string_view::npos && !at_hole();
  }

  std::vector<Node> parse_forest() {
    std::vector<Node> trees;
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] == ')') return trees;
    trees.push_back(parse_item());
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        trees.push_back(parse_item());
      } else {
        return trees;
      }
    }
  }

  Node parse_item() {
    if (at_hole()) {
      eat_hole();
      return hole_node();
    }
    if (!at_label()) fail("expected a label or hole");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::string_view("+()_ \t\r\n").find(text_[pos_]) ==
                                      std::string_view::npos &&
           text_.substr(pos_, kBox.size()) != kBox)
      ++pos_;
    const std::string run(text_.substr(start, pos_ - start));

    std::vector<Label> chain;
    if (alphabet_.contains(run)) {
      chain.push_back(run);
    } else if (alphabet_.single_char() && run.size() > 1) {
      for (char c : run) {
        if (!alphabet_.contains(std::string(1, c)))
          fail("unknown label '" + std::string(1, c) + "'");
        chain.emplace_back(1, c);
      }
    } else {
      fail("unknown label '" + run + "'");
    }

    std::vector<Node> below;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      below = parse_forest();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        fail("unbalanced parentheses: missing ')'");
      ++pos_;
    } else if (at_hole()) {
      eat_hole();
      below.push_back(hole_node());
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      Node n;
      n.label = *it;
      n.children = std::move(below);
      below = std::vector<Node>{std::move(n)};
    }
    return std::move(below.front());
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(std::string_view text, const Alphabet& alphabet) {
  auto trees = Parser(text, alphabet).parse_all();
  if (count_holes(trees) != 0)
    throw ParseError("hole token in a forest expression \"" + std::string(text) + "\"");
  return Forest(std::move(trees));
}

Context parse_context(std::string_view text, const Alphabet& alphabet) {
  auto trees = Parser(text, alphabet).parse_all();
  const auto holes = count_holes(trees);
  if (holes != 1)
    throw ParseError("context \"" + std::string(text) + "\" has " + std::to_string(holes) +
                     " holes, expected exactly one");
  return Context(std::move(trees));
}

// ---------------------------------------------------------------------------
// NodeTable

NodeTable::NodeTable(const std::vector<Node>& trees) { build(trees, -1, 0); }

void NodeTable::build(const std::vector<Node>& trees, int parent, int depth) {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const int x = size();
    label_.push_back(trees[i].label);
    hole_.push_back(trees[i].hole);
    parent_.push_back(parent);
    depth_.push_back(depth);
    end_.push_back(0);
    child_count_.push_back(static_cast<int>(trees[i].children.size()));
    sibling_index_.push_back(i);
    build(trees[i].children, x, depth + 1);
    end_[x] = size();
  }
}

bool NodeTable::has_sibling(int x) const {
  const int p = parent_[x];
  if (p >= 0) return child_count_[p] > 1;
  int roots = 0;
  for (int y = 0; y < size(); ++y) roots += parent_[y] < 0 ? 1 : 0;
  return roots > 1;
}

std::optional<int> NodeTable::cca(int x, int y) const {
  while (x != y) {
    if (depth_[x] >= depth_[y]) {
      x = parent_[x];
      if (x < 0) return std::nullopt;
    } else {
      y = parent_[y];
      if (y < 0) return std::nullopt;
    }
  }
  return x;
}

NodeId NodeTable::id(int x) const {
  NodeId path;
  for (; x >= 0; x = parent_[x]) path.push_back(sibling_index_[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

int NodeTable::index(const NodeId& id) const {
  int x = -1;
  for (std::size_t step : id) {
    int child = x + 1;
    const int stop = x < 0 ? size() : end_[x];
    std::size_t k = 0;
    while (child < stop && k < step) {
      child = end_[child];
      ++k;
    }
    if (child >= stop) return -1;
    x = child;
  }
  return x;
}

std::vector<Node> induced(const NodeTable& table, const std::vector<int>& kept) {
  std::vector<Node> roots;
  // Stack of (original index, pointer path) for open kept ancestors.
  std::vector<std::pair<int, std::vector<Node>*>> open;
  for (int x : kept) {
    while (!open.empty() && !table.ancestor(open.back().first, x)) open.pop_back();
    std::vector<Node>& into = open.empty() ? roots : *open.back().second;
    Node n;
    n.label = table.label(x);
    n.hole = table.is_hole(x);
    into.push_back(std::move(n));
    open.emplace_back(x, &into.back().children);
  }
  return roots;
}

}  // namespace forestalg
