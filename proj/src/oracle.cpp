#include "forestalg/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace forestalg {

namespace {

std::string enumeration_key(const std::vector<Node>& trees) {
  std::string key = render(trees);
  for (char& c : key) {
    if (c == '+') c = '\x01';
    else if (c == '(') c = '\x02';
    else if (c == ')') c = '\x03';
  }
  return key;
}

std::size_t node_count(const std::vector<Node>& trees) {
  std::size_t n = 0;
  for (const auto& t : trees) n += (t.hole ? 0 : 1) + node_count(t.children);
  return n;
}

using Trees = std::vector<Node>;

void sort_for_enumeration(std::vector<Trees>& items) {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t i = 0; i < items.size(); ++i) keyed.emplace_back(enumeration_key(items[i]), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(
        x.first.begin(), x.first.end(), y.first.begin(), y.first.end(),
        [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
  });
  std::vector<Trees> sorted;
  sorted.reserve(items.size());
  for (auto& [key, i] : keyed) sorted.push_back(std::move(items[i]));
  items = std::move(sorted);
}

class Enumerator {
 public:
  Enumerator(const Alphabet& alphabet, const Limits& limits) : alphabet_(alphabet), limits_(limits) {}

  /// Forests with exactly k nodes, unsorted.
  const std::vector<Trees>& forests(std::size_t k) {
    while (forests_.size() <= k) {
      const std::size_t m = forests_.size();
      std::vector<Trees> out;
      if (m == 0) {
        out.emplace_back();
      } else {
        for (std::size_t j = 1; j <= m; ++j)
          for (const Trees& head : trees(j))
            for (const Trees& rest : forests(m - j)) {
              Trees f = head;
              f.insert(f.end(), rest.begin(), rest.end());
              out.push_back(std::move(f));
              charge();
            }
      }
      forests_.push_back(std::move(out));
    }
    return forests_[k];
  }

  /// Contexts with exactly k nodes (hole excluded), unsorted.
  const std::vector<Trees>& contexts(std::size_t k) {
    while (contexts_.size() <= k) {
      const std::size_t m = contexts_.size();
      std::vector<Trees> out;
      // f1 + x + f2 where x is the hole or a tree-context.
      for (std::size_t x = 0; x <= m; ++x) {
        std::vector<Trees> middles;
        if (x == 0) {
          Node hole;
          hole.hole = true;
          middles.push_back(Trees{hole});
        } else {
          for (const auto& below : contexts(x - 1))
            for (const auto& label : alphabet_.symbols()) {
              Node n;
              n.label = label;
              n.children = below;
              middles.push_back(Trees{std::move(n)});
            }
        }
        for (std::size_t left = 0; left + x <= m; ++left)
          for (const Trees& f1 : forests(left))
            for (const Trees& mid : middles)
              for (const Trees& f2 : forests(m - x - left)) {
                Trees c = f1;
                c.insert(c.end(), mid.begin(), mid.end());
                c.insert(c.end(), f2.begin(), f2.end());
                out.push_back(std::move(c));
                charge();
              }
      }
      contexts_.push_back(std::move(out));
    }
    return contexts_[k];
  }

 private:
  std::vector<Trees> trees(std::size_t k) {
    std::vector<Trees> out;
    for (const Trees& below : forests(k - 1))
      for (const auto& label : alphabet_.symbols()) {
        Node n;
        n.label = label;
        n.children = below;
        out.push_back(Trees{std::move(n)});
      }
    return out;
  }

  void charge() {
    if (++produced_ > limits_.max_enumeration)
      throw CapExceeded("enumeration exceeds the cap of " + std::to_string(limits_.max_enumeration) +
                        " items");
  }

  const Alphabet& alphabet_;
  const Limits& limits_;
  std::size_t produced_ = 0;
  std::vector<std::vector<Trees>> forests_;
  std::vector<std::vector<Trees>> contexts_;
};

}  // namespace

bool enumeration_less(const std::vector<Node>& a, const std::vector<Node>& b) {
  const std::size_t sa = node_count(a), sb = node_count(b);
  if (sa != sb) return sa < sb;
  const std::string ka = enumeration_key(a), kb = enumeration_key(b);
  return std::lexicographical_compare(
      ka.begin(), ka.end(), kb.begin(), kb.end(),
      [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
}

std::vector<Forest> enumerate_forests(const Alphabet& alphabet, std::size_t max_size,
                                      const Limits& limits) {
  Enumerator e(alphabet, limits);
  std::vector<Forest> out;
  for (std::size_t k = 0; k <= max_size; ++k) {
    std::vector<Trees> level = e.forests(k);
    sort_for_enumeration(level);
    for (auto& f : level) out.emplace_back(std::move(f));
  }
  return out;
}

std::vector<Context> enumerate_contexts(const Alphabet& alphabet, std::size_t max_size,
                                        const Limits& limits) {
  Enumerator e(alphabet, limits);
  std::vector<Context> out;
  for (std::size_t k = 0; k <= max_size; ++k) {
    std::vector<Trees> level = e.contexts(k);
    sort_for_enumeration(level);
    for (auto& c : level) out.emplace_back(std::move(c));
  }
  return out;
}

std::optional<Refutation> refute_pt(const Recognizer& r, std::size_t n, std::size_t max_size,
                                    PieceVariant variant, const Limits& limits) {
  std::map<std::vector<std::string>, std::pair<std::size_t, bool>> seen;
  const auto forests = enumerate_forests(r.morphism.alphabet, max_size, limits);
  for (std::size_t i = 0; i < forests.size(); ++i) {
    const bool in = member(r, forests[i]);
    auto [it, fresh] = seen.try_emplace(piece_signature(forests[i], n, variant, limits), i, in);
    if (fresh || it->second.second == in) continue;
    Refutation ref;
    ref.kind = RefutationKind::sim_n_violation;
    ref.s = in ? forests[i] : forests[it->second.first];
    ref.t = in ? forests[it->second.first] : forests[i];
    ref.variant = variant;
    ref.n = n;
    ref.max_size = max_size;
    return ref;
  }
  return std::nullopt;
}

std::optional<Refutation> refute_sigma1(const Recognizer& r, std::size_t max_size, const Limits& limits) {
  for (const Forest& bigger : enumerate_forests(r.morphism.alphabet, max_size, limits)) {
    if (member(r, bigger)) continue;
    const NodeTable table(bigger);
    for (int x = 0; x < table.size(); ++x) {
      // bigger = p a(t): cut out the subtree at x and leave a hole.
      const NodeId id = table.id(x);
      std::vector<Node> trees = bigger.trees();
      std::vector<Node>* level = &trees;
      for (std::size_t d = 0; d + 1 < id.size(); ++d) level = &(*level)[id[d]].children;
      Node& cut = (*level)[id.back()];
      const Forest t(cut.children);
      const Label label = cut.label;
      cut = Node{};
      cut.hole = true;
      const Context p(std::move(trees));
      if (!member(r, substitute(p, t))) continue;
      Refutation ref;
      ref.kind = RefutationKind::insertion_violation;
      ref.p = p;
      ref.q = Context::letter(label);
      ref.t = t;
      ref.max_size = max_size;
      return ref;
    }
  }
  return std::nullopt;
}

bool verify_refutation(const Recognizer& r, const Refutation& ref, const Limits& limits) {
  if (ref.kind == RefutationKind::sim_n_violation)
    return member(r, ref.s) && !member(r, ref.t) && sim_n(ref.s, ref.t, ref.n, ref.variant, limits);
  return member(r, substitute(ref.p, ref.t)) && !member(r, substitute(compose(ref.p, ref.q), ref.t)) &&
         ref.q.size() == 1;
}

// ---------------------------------------------------------------------------
// Piece-set automata

namespace {

struct PieceInfo {
  std::size_t size = 0;
  bool tree_or_empty = true;
};

class PieceSets {
 public:
  PieceSets(const Alphabet& alphabet, std::size_t n, PieceVariant variant, const Forest& target,
            PieceUniverse universe, const Limits& limits)
      : alphabet_(alphabet), n_(n), variant_(variant), limits_(limits) {
    if (universe == PieceUniverse::automatic)
      universe = n <= 2 ? PieceUniverse::full : PieceUniverse::relevant;
    if (universe == PieceUniverse::relevant) {
      // Pieces of the target, closed under the parts the transitions are
      // built from: the children of a tree and both sides of a sum. For cca
      // the children of a piece need not be a piece themselves.
      relevant_.emplace();
      std::vector<Forest> work = enumerate_pieces(target, n, variant, limits);
      while (!work.empty()) {
        const Forest f = std::move(work.back());
        work.pop_back();
        if (!relevant_->insert(render(f)).second) continue;
        const auto& trees = f.trees();
        if (trees.size() == 1) work.emplace_back(trees.front().children);
        for (std::size_t i = 1; i < trees.size(); ++i) {
          work.emplace_back(std::vector<Node>(trees.begin(), trees.begin() + static_cast<std::ptrdiff_t>(i)));
          work.emplace_back(std::vector<Node>(trees.begin() + static_cast<std::ptrdiff_t>(i), trees.end()));
        }
      }
    }
    info_[""] = PieceInfo{0, true};
  }

  using Set = std::vector<std::string>;  // sorted canonical texts

  Set sum(const Set& x, const Set& y) {
    std::set<std::string> out;
    for (const auto& p : x)
      for (const auto& q : y) {
        const PieceInfo& ip = info_.at(p);
        const PieceInfo& iq = info_.at(q);
        if (ip.size + iq.size > n_) continue;
        if (p.empty() || q.empty()) {
          out.insert(p.empty() ? q : p);
          continue;
        }
        std::string text = p + "+" + q;
        if (keep(text, PieceInfo{ip.size + iq.size, false})) out.insert(std::move(text));
      }
    return Set(out.begin(), out.end());
  }

  Set below(const Label& a, const Set& x) {
    std::set<std::string> out;
    for (const auto& p : x) {
      const PieceInfo& ip = info_.at(p);
      // Without the new root: cca keeps only pieces whose closest common
      // ancestors stay inside, i.e. trees and the empty forest.
      if (variant_ != PieceVariant::cca || ip.tree_or_empty) out.insert(p);
      if (ip.size + 1 > n_) continue;
      std::string text = p.empty() ? a : a + "(" + p + ")";
      if (keep(text, PieceInfo{ip.size + 1, true})) out.insert(std::move(text));
    }
    return Set(out.begin(), out.end());
  }

  Set direct(const Forest& f) {
    Set out;
    for (auto& text : piece_signature(f, n_, variant_, limits_))
      if (!relevant_ || relevant_->count(text)) out.push_back(std::move(text));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string name(const Set& s) const {
    std::vector<std::string> parts(s.begin(), s.end());
    std::stable_sort(parts.begin(), parts.end(), [&](const std::string& x, const std::string& y) {
      const auto sx = info_.at(x).size, sy = info_.at(y).size;
      return sx != sy ? sx < sy : x < y;
    });
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += ",";
      out += parts[i].empty() ? "0" : parts[i];
    }
    return out + "}";
  }

 private:
  bool keep(const std::string& text, PieceInfo info) {
    if (relevant_ && !relevant_->count(text)) return false;
    info_.emplace(text, info);
    return true;
  }

  const Alphabet& alphabet_;
  std::size_t n_;
  PieceVariant variant_;
  const Limits& limits_;
  std::optional<std::set<std::string>> relevant_;
  std::map<std::string, PieceInfo> info_;
};

}  // namespace

ForestAutomaton piece_automaton(const Alphabet& alphabet, std::size_t n, PieceVariant variant,
                                const Forest& target, PieceUniverse universe, const Limits& limits) {
  if (variant != PieceVariant::plain && variant != PieceVariant::cca)
    throw InvalidInput("piece-set recognizers exist for the plain and cca variants only");
  if (target.size() > n) throw InvalidInput("the target piece is larger than n");
  for (const auto& l : labels_of(target.trees()))
    if (!alphabet.contains(l)) throw InvalidInput("target label '" + l + "' is not in the alphabet");

  PieceSets sets(alphabet, n, variant, target, universe, limits);
  using Set = PieceSets::Set;
  std::map<Set, int> index;
  std::vector<Set> states;
  std::vector<Forest> reps;
  auto intern = [&](Set s, const Forest& rep) {
    auto [it, fresh] = index.try_emplace(s, static_cast<int>(states.size()));
    if (fresh) {
      if (sets.direct(rep) != s)
        throw InvalidInput("piece sets do not factorize: state " + sets.name(s) +
                           " disagrees with the pieces of " + render(rep));
      states.push_back(std::move(s));
      reps.push_back(rep);
      if (states.size() > limits.max_states)
        throw CapExceeded("piece-set automaton exceeds the cap of " + std::to_string(limits.max_states) +
                          " states");
    }
    return it->second;
  };

  intern(Set{""}, Forest{});
  std::map<std::pair<int, int>, int> plus;
  std::vector<std::vector<int>> delta(alphabet.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      const int to = intern(sets.below(alphabet[l], states[i]), Forest::tree(alphabet[l], reps[i]));
      delta[l].push_back(to);
    }
    for (std::size_t j = 0; j <= i; ++j) {
      plus[{static_cast<int>(i), static_cast<int>(j)}] = intern(sets.sum(states[i], states[j]), reps[i] + reps[j]);
      plus[{static_cast<int>(j), static_cast<int>(i)}] = intern(sets.sum(states[j], states[i]), reps[j] + reps[i]);
    }
  }

  const std::string goal = render(target);
  ForestAutomaton out;
  out.alphabet = alphabet;
  const int m = static_cast<int>(states.size());
  for (const auto& s : states) {
    out.states.push_back(sets.name(s));
    out.accept.push_back(std::binary_search(s.begin(), s.end(), goal));
  }
  out.zero = 0;
  out.plus.resize(static_cast<std::size_t>(m) * m);
  for (const auto& [key, to] : plus) out.plus[static_cast<std::size_t>(key.first) * m + key.second] = to;
  out.delta = std::move(delta);
  return out;
}

Recognizer piece_algebra(const Alphabet& alphabet, std::size_t n, PieceVariant variant,
                         const Forest& target, PieceUniverse universe, const Limits& limits) {
  return algebra_from_automaton(piece_automaton(alphabet, n, variant, target, universe, limits), limits);
}

ForestAutomaton random_automaton(std::mt19937& rng, int max_states, const Alphabet& alphabet) {
  const int n = std::uniform_int_distribution<int>(1, std::max(1, max_states))(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  ForestAutomaton a;
  a.alphabet = alphabet;
  for (int q = 0; q < n; ++q) a.states.push_back("q" + std::to_string(q));
  a.zero = 0;
  a.plus.assign(static_cast<std::size_t>(n) * n, 0);
  for (;;) {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) a.plus[p * n + q] = p == 0 ? q : q == 0 ? p : pick(rng);
    bool associative = true;
    for (int p = 1; p < n && associative; ++p)
      for (int q = 1; q < n && associative; ++q)
        for (int s = 1; s < n && associative; ++s)
          associative = a.add(a.add(p, q), s) == a.add(p, a.add(q, s));
    if (associative) break;
  }
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    std::vector<int> map(n);
    for (int& q : map) q = pick(rng);
    a.delta.push_back(std::move(map));
  }
  std::bernoulli_distribution coin(0.5);
  for (int q = 0; q < n; ++q) a.accept.push_back(coin(rng));
  return a;
}

}  // namespace forestalg
