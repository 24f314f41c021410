#include "forestalg/pieces.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace forestalg {

std::string to_string(PieceVariant v) {
  switch (v) {
    case PieceVariant::plain: return "plain";
    case PieceVariant::cca: return "cca";
    case PieceVariant::horizontal: return "horizontal";
    case PieceVariant::commutative: return "commutative";
    case PieceVariant::commutative_cca: return "commutative_cca";
  }
  return "?";
}

PieceVariant parse_variant(std::string_view name) {
  if (name == "plain") return PieceVariant::plain;
  if (name == "cca") return PieceVariant::cca;
  if (name == "horizontal") return PieceVariant::horizontal;
  if (name == "commutative") return PieceVariant::commutative;
  if (name == "commutative_cca" || name == "commutative-cca") return PieceVariant::commutative_cca;
  throw InvalidInput("unknown piece variant '" + std::string(name) + "'");
}

namespace {

bool is_commutative(PieceVariant v) {
  return v == PieceVariant::commutative || v == PieceVariant::commutative_cca;
}

PieceVariant ordered_base(PieceVariant v) {
  if (v == PieceVariant::commutative) return PieceVariant::plain;
  if (v == PieceVariant::commutative_cca) return PieceVariant::cca;
  return v;
}

int table_size(const std::vector<Node>& trees) {
  int n = 0;
  for (const auto& t : trees) n += 1 + table_size(t.children);
  return n;
}

bool same_kind(const NodeTable& s, int x, const NodeTable& t, int y) {
  return s.is_hole(x) == t.is_hole(y) && s.label(x) == t.label(y);
}

// ---------------------------------------------------------------------------
// Embedding search

class EmbeddingSearch {
 public:
  EmbeddingSearch(const NodeTable& s, const NodeTable& t, PieceVariant variant)
      : s_(s), t_(t), variant_(variant), image_(s.size(), -1), used_(t.size(), false) {}

  std::optional<std::vector<int>> run() {
    if (s_.size() > t_.size()) return std::nullopt;
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool consistent(int i, int y) const {
    for (int k = 0; k < i; ++k) {
      const int x = image_[k];
      switch (variant_) {
        case PieceVariant::plain:
          if (s_.ancestor(k, i) != t_.ancestor(x, y)) return false;
          break;
        case PieceVariant::cca: {
          const auto cs = s_.cca(k, i);
          const auto ct = t_.cca(x, y);
          if (cs.has_value() != ct.has_value()) return false;
          if (cs && image_[*cs] != *ct) return false;
          break;
        }
        case PieceVariant::horizontal:
          if (s_.ancestor(k, i) != t_.ancestor(x, y)) return false;
          if (s_.ancestor(i, k) != t_.ancestor(y, x)) return false;
          if (s_.sibling_before(k, i) != t_.sibling_before(x, y)) return false;
          if (s_.sibling_before(i, k) != t_.sibling_before(y, x)) return false;
          break;
        default:
          return false;
      }
    }
    return true;
  }

  bool extend(int i) {
    if (i == s_.size()) return true;
    const bool monotone = variant_ != PieceVariant::horizontal;
    const int start = monotone && i > 0 ? image_[i - 1] + 1 : 0;
    // Leave room for the remaining nodes when the map is monotone.
    const int stop = monotone ? t_.size() - (s_.size() - i - 1) : t_.size();
    for (int y = start; y < stop; ++y) {
      if (used_[y] || !same_kind(s_, i, t_, y) || !consistent(i, y)) continue;
      image_[i] = y;
      used_[y] = true;
      if (extend(i + 1)) return true;
      used_[y] = false;
    }
    image_[i] = -1;
    return false;
  }

  const NodeTable& s_;
  const NodeTable& t_;
  PieceVariant variant_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

// A sibling reordering of a forest together with, for each preorder position
// in the reordering, the preorder position of the same node in the original.
struct Arranged {
  std::vector<Node> trees;
  std::vector<int> origin;
};

std::vector<Arranged> arrange_forest(const std::vector<Node>& trees, int base,
                                     std::size_t cap);

std::vector<Arranged> arrange_tree(const Node& node, int base, std::size_t cap) {
  std::vector<Arranged> out;
  for (auto& below : arrange_forest(node.children, base + 1, cap)) {
    Arranged a;
    Node n;
    n.label = node.label;
    n.hole = node.hole;
    n.children = std::move(below.trees);
    a.trees.push_back(std::move(n));
    a.origin.push_back(base);
    a.origin.insert(a.origin.end(), below.origin.begin(), below.origin.end());
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Arranged> arrange_forest(const std::vector<Node>& trees, int base,
                                     std::size_t cap) {
  std::vector<std::vector<Arranged>> per_tree;
  int offset = base;
  for (const auto& t : trees) {
    per_tree.push_back(arrange_tree(t, offset, cap));
    offset += 1 + table_size(t.children);
  }
  std::vector<Arranged> out;
  std::unordered_set<std::string> seen;
  std::vector<std::size_t> perm(trees.size());
  std::iota(perm.begin(), perm.end(), 0);
  // Sort by rendering so that identical siblings permute only once.
  std::vector<std::string> rendered;
  for (const auto& t : trees) rendered.push_back(render(std::vector<Node>{t}));
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return std::tie(rendered[a], a) < std::tie(rendered[b], b); });
  do {
    std::vector<Arranged> partial{Arranged{}};
    for (std::size_t k : perm) {
      std::vector<Arranged> next;
      for (const auto& p : partial) {
        for (const auto& v : per_tree[k]) {
          Arranged a = p;
          a.trees.insert(a.trees.end(), v.trees.begin(), v.trees.end());
          a.origin.insert(a.origin.end(), v.origin.begin(), v.origin.end());
          next.push_back(std::move(a));
          if (next.size() > cap) throw CapExceeded("sibling reorderings exceed the enumeration cap");
        }
      }
      partial = std::move(next);
    }
    for (auto& a : partial) {
      if (seen.insert(render(a.trees)).second) out.push_back(std::move(a));
      if (out.size() > cap) throw CapExceeded("sibling reorderings exceed the enumeration cap");
    }
  } while (std::next_permutation(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return rendered[a] < rendered[b];
  }));
  return out;
}

std::optional<Embedding> embed(const std::vector<Node>& s, const std::vector<Node>& t,
                               PieceVariant variant, const Limits& limits) {
  const NodeTable ts(s);
  const NodeTable tt(t);
  if (!is_commutative(variant)) {
    auto img = EmbeddingSearch(ts, tt, variant).run();
    if (!img) return std::nullopt;
    Embedding e;
    for (int y : *img) e.image.push_back(tt.id(y));
    return e;
  }
  const PieceVariant base = ordered_base(variant);
  for (const auto& arranged : arrange_forest(t, 0, limits.max_enumeration)) {
    const NodeTable ta(arranged.trees);
    auto img = EmbeddingSearch(ts, ta, base).run();
    if (!img) continue;
    Embedding e;
    for (int y : *img) e.image.push_back(tt.id(arranged.origin[y]));
    return e;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Deletions

void delete_at(std::vector<Node>& trees, const NodeId& path, std::size_t depth = 0) {
  const std::size_t i = path[depth];
  if (depth + 1 < path.size()) {
    delete_at(trees[i].children, path, depth + 1);
    return;
  }
  std::vector<Node> kids = std::move(trees[i].children);
  trees.erase(trees.begin() + static_cast<std::ptrdiff_t>(i));
  trees.insert(trees.begin() + static_cast<std::ptrdiff_t>(i), std::make_move_iterator(kids.begin()),
               std::make_move_iterator(kids.end()));
}

struct ClosureNode {
  std::vector<Node> trees;
  int parent;
  DeletionStep step;
};

// Breadth-first deletion closure. Stops early when `goal` is reached.
std::vector<ClosureNode> deletion_bfs(const std::vector<Node>& start, PieceVariant variant,
                                      const std::string* goal, std::size_t goal_size,
                                      const Limits& limits, int* goal_index) {
  if (variant != PieceVariant::plain && variant != PieceVariant::cca &&
      variant != PieceVariant::horizontal)
    throw InvalidInput("deletion closure is defined for plain, cca and horizontal pieces only");
  std::vector<ClosureNode> nodes;
  std::unordered_set<std::string> seen;
  nodes.push_back({start, -1, {}});
  seen.insert(render(start));
  if (goal_index) *goal_index = -1;
  if (goal && render(start) == *goal) {
    *goal_index = 0;
    return nodes;
  }
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const std::vector<Node> current = nodes[head].trees;
    const NodeTable table(current);
    int real_nodes = 0;
    for (int x = 0; x < table.size(); ++x) real_nodes += table.is_hole(x) ? 0 : 1;
    if (goal && static_cast<std::size_t>(real_nodes) <= goal_size) continue;
    for (int x = 0; x < table.size(); ++x) {
      if (!deletable(table, x, variant)) continue;
      std::vector<Node> next = current;
      const NodeId id = table.id(x);
      delete_at(next, id);
      std::string key = render(next);
      if (!seen.insert(key).second) continue;
      nodes.push_back({std::move(next), static_cast<int>(head), {id, table.label(x)}});
      if (nodes.size() > limits.max_enumeration)
        throw CapExceeded("deletion closure exceeds the enumeration cap");
      if (goal && key == *goal) {
        *goal_index = static_cast<int>(nodes.size()) - 1;
        return nodes;
      }
    }
  }
  return nodes;
}

// ---------------------------------------------------------------------------
// Subset enumeration

bool valid_subset(const NodeTable& t, const std::vector<int>& kept, PieceVariant variant) {
  switch (ordered_base(variant)) {
    case PieceVariant::plain:
      return true;
    case PieceVariant::cca: {
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
          const auto c = t.cca(kept[i], kept[j]);
          if (c && !std::binary_search(kept.begin(), kept.end(), *c)) return false;
        }
      return true;
    }
    case PieceVariant::horizontal: {
      // Parent in the induced forest = nearest kept ancestor.
      std::vector<int> induced_parent(kept.size(), -1);
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t k = i; k-- > 0;)
          if (t.ancestor(kept[k], kept[i])) {
            induced_parent[i] = kept[k];
            break;
          }
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
          const bool sib_piece = induced_parent[i] == induced_parent[j];
          const bool sib_host = t.parent(kept[i]) == t.parent(kept[j]);
          if (sib_piece != sib_host) return false;
        }
      return true;
    }
    default:
      return false;
  }
}

// Calls `visit` on every preorder-sorted subset of non-hole nodes with at most
// n elements; the hole (if any) is always included.
void for_each_subset(const NodeTable& t, std::size_t n,
                     const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> candidates;
  int hole = -1;
  for (int x = 0; x < t.size(); ++x) {
    if (t.is_hole(x))
      hole = x;
    else
      candidates.push_back(x);
  }
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    std::vector<int> kept = chosen;
    if (hole >= 0) kept.insert(std::lower_bound(kept.begin(), kept.end(), hole), hole);
    visit(kept);
    if (chosen.size() == n) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

void sort_siblings(std::vector<Node>& trees);

std::map<std::string, std::vector<Node>> collect_pieces(const std::vector<Node>& host, std::size_t n,
                                                        PieceVariant variant, const Limits& limits) {
  const NodeTable t(host);
  std::map<std::string, std::vector<Node>> out;
  std::size_t visited = 0;
  for_each_subset(t, n, [&](const std::vector<int>& kept) {
    if (++visited > limits.max_enumeration)
      throw CapExceeded("piece enumeration exceeds the enumeration cap");
    if (!valid_subset(t, kept, variant)) return;
    std::vector<Node> piece = induced(t, kept);
    if (is_commutative(variant)) sort_siblings(piece);
    out.emplace(render(piece), std::move(piece));
  });
  return out;
}

void sort_siblings(std::vector<Node>& trees) {
  for (auto& t : trees) sort_siblings(t.children);
  std::vector<std::pair<std::string, Node>> keyed;
  for (auto& t : trees) keyed.emplace_back(render(std::vector<Node>{t}), std::move(t));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  trees.clear();
  for (auto& [k, t] : keyed) trees.push_back(std::move(t));
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<Embedding> find_embedding(const Forest& s, const Forest& t, PieceVariant variant,
                                        const Limits& limits) {
  return embed(s.trees(), t.trees(), variant, limits);
}

bool is_piece(const Forest& s, const Forest& t, PieceVariant variant, const Limits& limits) {
  return find_embedding(s, t, variant, limits).has_value();
}

std::optional<Embedding> find_context_embedding(const Context& p, const Context& q,
                                                PieceVariant variant, const Limits& limits) {
  return embed(p.trees(), q.trees(), variant, limits);
}

bool is_context_piece(const Context& p, const Context& q, PieceVariant variant,
                      const Limits& limits) {
  return find_context_embedding(p, q, variant, limits).has_value();
}

bool deletable(const NodeTable& table, int x, PieceVariant variant) {
  if (table.is_hole(x)) return false;
  switch (variant) {
    case PieceVariant::plain:
      return true;
    case PieceVariant::cca:
      return table.child_count(x) <= 1;
    case PieceVariant::horizontal:
      return table.child_count(x) == 0 || !table.has_sibling(x);
    default:
      return false;
  }
}

std::optional<std::vector<DeletionStep>> deletion_sequence(const Forest& s, const Forest& t,
                                                           PieceVariant variant,
                                                           const Limits& limits) {
  const std::string goal = render(s);
  int found = -1;
  auto nodes = deletion_bfs(t.trees(), variant, &goal, s.size(), limits, &found);
  if (found < 0) return std::nullopt;
  std::vector<DeletionStep> steps;
  for (int i = found; nodes[i].parent >= 0; i = nodes[i].parent) steps.push_back(nodes[i].step);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::vector<std::string> deletion_closure(const Forest& t, PieceVariant variant,
                                          const Limits& limits) {
  auto nodes = deletion_bfs(t.trees(), variant, nullptr, 0, limits, nullptr);
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (const auto& n : nodes) out.push_back(render(n.trees));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Context> context_deletion_closure(const Context& q, PieceVariant variant,
                                              const Limits& limits) {
  auto nodes = deletion_bfs(q.trees(), variant, nullptr, 0, limits, nullptr);
  std::vector<Context> out;
  out.reserve(nodes.size());
  for (auto& n : nodes) out.emplace_back(std::move(n.trees));
  return out;
}

Forest canonical_order(const Forest& f) {
  std::vector<Node> trees = f.trees();
  sort_siblings(trees);
  return Forest(std::move(trees));
}

Context canonical_order(const Context& p) {
  std::vector<Node> trees = p.trees();
  sort_siblings(trees);
  return Context(std::move(trees));
}

std::vector<Forest> reorderings(const Forest& t, const Limits& limits) {
  std::vector<Forest> out;
  for (auto& a : arrange_forest(t.trees(), 0, limits.max_enumeration))
    out.emplace_back(std::move(a.trees));
  return out;
}

std::vector<Forest> enumerate_pieces(const Forest& t, std::size_t n, PieceVariant variant,
                                     const Limits& limits) {
  std::vector<Forest> out;
  for (auto& [key, trees] : collect_pieces(t.trees(), n, variant, limits))
    out.emplace_back(std::move(trees));
  return out;
}

std::vector<std::string> piece_signature(const Forest& t, std::size_t n, PieceVariant variant,
                                         const Limits& limits) {
  std::vector<std::string> out;
  for (auto& [key, trees] : collect_pieces(t.trees(), n, variant, limits)) out.push_back(key);
  return out;
}

std::vector<Context> enumerate_context_pieces(const Context& q, std::size_t n,
                                              PieceVariant variant, const Limits& limits) {
  std::vector<Context> out;
  for (auto& [key, trees] : collect_pieces(q.trees(), n, variant, limits))
    out.emplace_back(std::move(trees));
  return out;
}

bool sim_n(const Forest& s, const Forest& t, std::size_t n, PieceVariant variant,
           const Limits& limits) {
  return piece_signature(s, n, variant, limits) == piece_signature(t, n, variant, limits);
}

}  // namespace forestalg
