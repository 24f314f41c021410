#include <doctest.h>

#include <random>

#include "forestalg/corpus.hpp"
#include "forestalg/oracle.hpp"
#include "forestalg/piecerel.hpp"
#include "support.hpp"

using namespace forestalg;

namespace {

Recognizer syntactic_of(const std::string& name) { return syntactic(corpus_entry(name).automaton); }

bool subset(const BitMatrix& a, const BitMatrix& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.test(i, j) && !b.test(i, j)) return false;
  return true;
}

/// Random (p, q) with p a variant-piece of q; q has at most max_size nodes.
std::vector<std::pair<Context, Context>> sample_pairs(const Alphabet& alphabet, std::size_t max_size,
                                                       PieceVariant variant, int count, unsigned seed) {
  const auto contexts = enumerate_contexts(alphabet, max_size);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, contexts.size() - 1);
  std::vector<std::pair<Context, Context>> out;
  while (static_cast<int>(out.size()) < count) {
    const Context& q = contexts[pick(rng)];
    const auto pieces = enumerate_context_pieces(q, q.size(), variant);
    std::uniform_int_distribution<std::size_t> which(0, pieces.size() - 1);
    out.emplace_back(pieces[which(rng)], q);
  }
  return out;
}

/// Direct saturation under every rule, combining all pairs with all pairs.
BitMatrix naive_relation(const Recognizer& r, bool cca) {
  const ForestAlgebra& a = r.algebra();
  const ElementClass cls = classify_elements(r);
  const auto& tct = cls.tree_context_type;
  const auto& sf = cls.sum_form;
  const int n = a.v_size();
  BitMatrix m(n, n);
  std::vector<std::pair<Elem, Elem>> pairs;
  auto add = [&](Elem v, Elem w) {
    if (m.set(v, w)) pairs.emplace_back(v, w);
  };
  for (Elem v = 0; v < n; ++v) {
    add(a.unit(), v);
    add(v, v);
  }
  for (std::size_t next = 0; next < pairs.size(); ++next) {
    const auto [v, w] = pairs[next];
    if (cca)
      for (Elem l : r.morphism.letters) add(a.mul(l, v), a.mul(l, w));
    for (std::size_t i = 0; i <= next; ++i) {
      const auto [x, y] = pairs[i];
      const bool x_tree = tct[x] && tct[y], v_tree = tct[v] && tct[w];
      const bool x_sum = sf[x] && sf[y], v_sum = sf[v] && sf[w];
      if (!cca || x_tree || v_sum) add(a.mul(v, x), a.mul(w, y));
      if (!cca || v_tree || x_sum) add(a.mul(x, v), a.mul(y, w));
    }
    const Elem h = a.act(v, a.zero()), h2 = a.act(w, a.zero());
    add(a.ins_right(h), a.ins_right(h2));
    add(a.ins_left(h), a.ins_left(h2));
  }
  return m;
}

}  // namespace

TEST_SUITE("piecerel") {

TEST_CASE("the plain relation of abcd is not transitive") {
  const Recognizer s = syntactic_of("abcd");
  const Alphabet& A = s.morphism.alphabet;
  const PieceRelation rel = piece_relation_plain(s);
  auto ctx = [&](const char* text) { return eval_context(s.morphism, parse_context(text, A)); };
  const Elem a = ctx("a(_)"), aa = ctx("a(a(_))"), bd = ctx("b(d(_))"), bcd = ctx("b(c(d(_)))");
  CHECK(aa == bd);
  CHECK(rel.related(a, aa));
  CHECK(rel.related(bd, bcd));
  CHECK_FALSE(rel.related(a, bcd));
}

TEST_CASE("unit and reflexive pairs") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const Recognizer s = syntactic_of(e.name);
    const ForestAlgebra& a = s.algebra();
    for (const auto& rel : {piece_relation_plain(s), piece_relation_cca(s)})
      for (Elem v = 0; v < a.v_size(); ++v) {
        CHECK(rel.related(a.unit(), v));
        CHECK(rel.related(v, v));
      }
  }
}

TEST_CASE("rule origins") {
  const Recognizer s = syntactic_of("abcd");
  const PieceRelation rel = piece_relation_plain(s);
  const ForestAlgebra& a = s.algebra();
  CHECK(rel.origin(a.unit(), a.unit()) != PieceRule::none);
  for (Elem v = 0; v < a.v_size(); ++v)
    for (Elem w = 0; w < a.v_size(); ++w) CHECK(rel.related(v, w) == (rel.origin(v, w) != PieceRule::none));
  CHECK(to_string(PieceRule::tree_product) == "tree-product");
}

TEST_CASE("the fixpoint does not depend on the worklist order") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const Recognizer s = syntactic_of(e.name);
    CHECK(piece_relation_plain(s).on_v == piece_relation_plain(s, {true}).on_v);
    CHECK(piece_relation_cca(s).on_v == piece_relation_cca(s, {true}).on_v);
  }
}

TEST_CASE("relations match a direct saturation") {
  std::vector<Recognizer> subjects;
  for (const auto& e : corpus()) subjects.push_back(syntactic_of(e.name));
  std::mt19937 rng(3);
  for (int i = 0; i < 150; ++i) subjects.push_back(syntactic(random_automaton(rng, 4, Alphabet{"a", "b"})));
  for (const auto& s : subjects) {
    if (s.algebra().v_size() > 64) continue;
    CHECK(piece_relation_plain(s).on_v == naive_relation(s, false));
    CHECK(piece_relation_cca(s).on_v == naive_relation(s, true));
  }
}

TEST_CASE("cca relation is contained in the plain relation") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const Recognizer s = syntactic_of(e.name);
    CHECK(subset(piece_relation_cca(s).on_v, piece_relation_plain(s).on_v));
  }
}

TEST_CASE("relation on H follows from the relation on V") {
  const Recognizer s = syntactic_of("cca-abc");
  const ForestAlgebra& a = s.algebra();
  const PieceRelation rel = piece_relation_plain(s);
  for (Elem v = 0; v < a.v_size(); ++v)
    for (Elem w = 0; w < a.v_size(); ++w)
      if (rel.related(v, w)) CHECK(rel.related_h(a.act(v, a.zero()), a.act(w, a.zero())));
}

TEST_CASE("images of sampled context pieces are related") {
  for (const char* name : {"abcd", "cca-abc", "piece-aabc", "trees-piece-ab"}) {
    CAPTURE(name);
    const Recognizer s = syntactic_of(name);
    const auto plain = piece_relation_plain(s);
    const auto cca = piece_relation_cca(s);
    const std::size_t size = s.morphism.alphabet.size() > 2 ? 4 : 5;
    for (const auto& [p, q] : sample_pairs(s.morphism.alphabet, size, PieceVariant::plain, 150, 1)) {
      if (!plain.related(eval_context(s.morphism, p), eval_context(s.morphism, q)))
        FAIL_CHECK(render(p) << " / " << render(q));
    }
    for (const auto& [p, q] : sample_pairs(s.morphism.alphabet, size, PieceVariant::cca, 150, 2)) {
      if (!cca.related(eval_context(s.morphism, p), eval_context(s.morphism, q)))
        FAIL_CHECK(render(p) << " / " << render(q));
    }
  }
}

TEST_CASE("horizontal relation") {
  const Recognizer s = syntactic_of("trees-piece-ab");
  const ForestAlgebra& a = s.algebra();
  const PieceRelation small = piece_relation_horizontal(s, 2);
  const PieceRelation large = piece_relation_horizontal(s, 3);
  REQUIRE(large.bound == std::size_t{3});
  CHECK(subset(small.on_v, large.on_v));
  CHECK(subset(large.on_v, piece_relation_plain(s).on_v));
  std::vector<bool> within(static_cast<std::size_t>(a.v_size()), false);
  for (const auto& p : enumerate_contexts(s.morphism.alphabet, 3)) within[eval_context(s.morphism, p)] = true;
  for (Elem v = 0; v < a.v_size(); ++v)
    if (within[v]) CHECK(large.related(a.unit(), v));
}

TEST_CASE("horizontal and plain relations coincide on a commutative piece language") {
  const Recognizer s = syntactic_of("piece-ab");
  CHECK(piece_relation_horizontal(s, 3).on_v == piece_relation_plain(s).on_v);
}

TEST_CASE("dispatch") {
  const Recognizer s = syntactic_of("piece-ab");
  CHECK(piece_relation(s, PieceVariant::plain).variant == PieceVariant::plain);
  CHECK(piece_relation(s, PieceVariant::cca).variant == PieceVariant::cca);
  CHECK(piece_relation(s, PieceVariant::horizontal, 2).bound == std::size_t{2});
  CHECK(piece_relation(s, PieceVariant::commutative).on_v == piece_relation_plain(s).on_v);
}

}  // TEST_SUITE
