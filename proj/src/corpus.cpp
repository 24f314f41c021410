#include "forestalg/corpus.hpp"

#include "forestalg/oracle.hpp"
#include "forestalg/pieces.hpp"

namespace forestalg {

namespace {

/// Automaton with states named in `states`; the caller fills the tables.
ForestAutomaton blank(const Alphabet& alphabet, std::vector<std::string> states) {
  ForestAutomaton a;
  a.alphabet = alphabet;
  a.states = std::move(states);
  const std::size_t n = a.states.size();
  a.plus.assign(n * n, 0);
  a.delta.assign(alphabet.size(), std::vector<int>(n, 0));
  a.accept.assign(n, false);
  return a;
}

void set_plus(ForestAutomaton& a, int p, int q, int r) { a.plus[static_cast<std::size_t>(p) * a.size() + q] = r; }

bool is_aa(const Node& t) {
  return t.label == "a" && t.children.size() == 1 && t.children[0].label == "a" &&
         t.children[0].children.empty();
}

}  // namespace

ForestAutomaton accept_all_automaton(const Alphabet& alphabet) {
  ForestAutomaton a = blank(alphabet, {"any"});
  a.accept[0] = true;
  return a;
}

// The single tree a(b(c(d))). States name the forest read so far.
ForestAutomaton abcd_automaton() {
  enum { E, D, CD, BCD, ABCD, BOT };
  ForestAutomaton a = blank(Alphabet{"a", "b", "c", "d"}, {"0", "d", "cd", "bcd", "abcd", "bot"});
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) set_plus(a, p, q, p == E ? q : q == E ? p : BOT);
  for (auto& map : a.delta) map.assign(6, BOT);
  a.delta[3][E] = D;
  a.delta[2][D] = CD;
  a.delta[1][CD] = BCD;
  a.delta[0][BCD] = ABCD;
  a.accept[ABCD] = true;
  return a;
}

// Every tree of the forest is a(a); the empty forest is accepted.
ForestAutomaton all_trees_aa_automaton() {
  enum { E, A, G, B };
  ForestAutomaton a = blank(Alphabet{"a"}, {"0", "a", "aa-forest", "bad"});
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      int r = B;
      if (p == E) r = q;
      else if (q == E) r = p;
      else if (p == G && q == G) r = G;
      set_plus(a, p, q, r);
    }
  a.delta[0] = {A, G, B, B};
  a.accept[E] = true;
  a.accept[G] = true;
  return a;
}

// The first tree's root is labeled a.
ForestAutomaton first_root_automaton() {
  enum { E, A, B };
  ForestAutomaton a = blank(Alphabet{"a", "b"}, {"0", "a-first", "b-first"});
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) set_plus(a, p, q, p == E ? q : p);
  a.delta[0] = {A, A, A};
  a.delta[1] = {B, B, B};
  a.accept[A] = true;
  return a;
}

// Trees over {a} with an even number of nodes: size parity and tree count.
ForestAutomaton even_trees_automaton() {
  // state 0 is the empty forest; 1 + 2*parity + (count>=2)
  ForestAutomaton a = blank(Alphabet{"a"}, {"0", "even/1", "even/2+", "odd/1", "odd/2+"});
  auto id = [](int parity, int many) { return 1 + 2 * parity + many; };
  auto parity = [](int s) { return (s - 1) / 2; };
  for (int p = 0; p < 5; ++p)
    for (int q = 0; q < 5; ++q) {
      if (p == 0 || q == 0) {
        set_plus(a, p, q, p == 0 ? q : p);
        continue;
      }
      set_plus(a, p, q, id((parity(p) + parity(q)) % 2, 1));
    }
  a.delta[0][0] = id(1, 0);
  for (int s = 1; s < 5; ++s) a.delta[0][s] = id((parity(s) + 1) % 2, 0);
  a.accept[id(0, 0)] = true;
  return a;
}

namespace {

/// Listed properties hold, the rest fail. The horizontal check is either
/// refuted or left open; the tree properties only apply to tree languages.
std::map<Property, Truth> verdicts(std::initializer_list<Property> holding, bool horizontal_open,
                                   bool tree_language) {
  std::map<Property, Truth> out;
  for (Property p : all_properties()) {
    if (!tree_language && (p == Property::TreePT || p == Property::TreeCcaPT)) continue;
    out[p] = Truth::no;
  }
  for (Property p : holding) out[p] = Truth::yes;
  out[Property::HorizontalPT_experimental] = horizontal_open ? Truth::unknown : Truth::no;
  return out;
}

std::vector<CorpusEntry> build_corpus() {
  using P = Property;
  const auto everything = {P::PT, P::PT_alt, P::ccaPT, P::ccaPT_alt, P::Sigma1, P::Commutative, P::CommPT, P::CommCcaPT};
  const auto cca_trees = {P::ccaPT, P::ccaPT_alt, P::Commutative, P::CommCcaPT, P::TreePT, P::TreeCcaPT};
  std::vector<CorpusEntry> out;

  out.push_back({"accept-all", "every forest over {a}", accept_all_automaton(Alphabet{"a"}),
                 [](const Forest&) { return true; }, false, verdicts(everything, true, false)});

  out.push_back({"abcd", "exactly the tree a(b(c(d)))", abcd_automaton(),
                 [](const Forest& f) { return render(f) == "a(b(c(d)))"; }, true,
                 verdicts({P::PT, P::PT_alt, P::ccaPT, P::ccaPT_alt, P::Commutative, P::CommPT, P::CommCcaPT,
                           P::TreePT, P::TreeCcaPT},
                          true, true)});

  out.push_back({"all-trees-aa", "every tree of the forest is a(a)", all_trees_aa_automaton(),
                 [](const Forest& f) {
                   for (const auto& t : f.trees())
                     if (!is_aa(t)) return false;
                   return true;
                 },
                 false, verdicts({P::Commutative}, false, false)});

  {
    const Alphabet abc{"a", "b", "c"};
    const Forest target = parse_forest("a(b+c)", abc);
    out.push_back({"cca-abc", "some a is the closest common ancestor of some b and c",
                   minimize(piece_automaton(abc, 3, PieceVariant::cca, target)),
                   [target](const Forest& f) { return is_piece(target, f, PieceVariant::cca); }, false,
                   verdicts({P::ccaPT, P::ccaPT_alt}, false, false)});
  }
  {
    const Alphabet ab{"a", "b"};
    const Forest target = parse_forest("a(b)", ab);
    out.push_back({"piece-ab", "contains the piece a(b)", minimize(piece_automaton(ab, 2, PieceVariant::plain, target)),
                   [target](const Forest& f) { return is_piece(target, f, PieceVariant::plain); }, false,
                   verdicts(everything, true, false)});
    out.push_back({"trees-piece-ab", "trees containing the piece a(b)",
                   minimize(restrict_to_trees(piece_automaton(ab, 2, PieceVariant::plain, target))),
                   [target](const Forest& f) { return f.is_tree() && is_piece(target, f, PieceVariant::plain); },
                   true, verdicts(cca_trees, false, true)});
  }
  {
    const Alphabet abc{"a", "b", "c"};
    const Forest target = parse_forest("a(a+b)+c", abc);
    out.push_back({"piece-aabc", "contains the piece a(a+b)+c",
                   minimize(piece_automaton(abc, 5, PieceVariant::plain, target)),
                   [target](const Forest& f) { return is_piece(target, f, PieceVariant::plain); }, false,
                   verdicts({P::PT, P::PT_alt, P::ccaPT, P::ccaPT_alt, P::Sigma1}, true, false)});
  }
  out.push_back({"first-root-a", "the first tree's root is a", first_root_automaton(),
                 [](const Forest& f) { return !f.empty() && f.trees().front().label == "a"; }, false,
                 verdicts({}, false, false)});
  out.push_back({"even-trees", "trees over {a} with an even number of nodes", even_trees_automaton(),
                 [](const Forest& f) { return f.is_tree() && f.size() % 2 == 0; }, true,
                 verdicts({P::Commutative}, false, true)});
  out.push_back({"all-trees", "every tree over {a,b}", restrict_to_trees(accept_all_automaton(Alphabet{"a", "b"})),
                 [](const Forest& f) { return f.is_tree(); }, true,
                 verdicts(cca_trees, false, true)});
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw InvalidInput("no corpus entry named '" + name + "'");
}

}  // namespace forestalg
