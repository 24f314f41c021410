#include <doctest.h>

#include <algorithm>

#include "forestalg/oracle.hpp"
#include "forestalg/pieces.hpp"
#include "support.hpp"

using namespace forestalg;

namespace {

const Alphabet abcd{"a", "b", "c", "d"};

Forest F(const char* text) { return parse_forest(text, abcd); }
Context C(const char* text) { return parse_context(text, abcd); }

std::vector<std::string> texts(const std::vector<Forest>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(render(f));
  std::sort(out.begin(), out.end());
  return out;
}

constexpr PieceVariant all_variants[] = {PieceVariant::plain, PieceVariant::cca, PieceVariant::horizontal,
                                         PieceVariant::commutative, PieceVariant::commutative_cca};

}  // namespace

TEST_SUITE("pieces") {

TEST_CASE("variant names round-trip") {
  for (auto v : all_variants) CHECK(parse_variant(to_string(v)) == v);
  CHECK_THROWS(parse_variant("diagonal"));
}

TEST_CASE("the running example piece") {
  const Forest t = F("a(a+bc)+b+c(a+b)");
  const auto e = find_embedding(F("a(a+b)+c"), t, PieceVariant::plain);
  REQUIRE(e.has_value());
  CHECK(e->image.size() == 4);
  CHECK(is_piece(F("a(a+b)+c"), t, PieceVariant::plain));
  CHECK_FALSE(is_piece(F("a(c+b)"), t, PieceVariant::plain));
}

TEST_CASE("removing a closest common ancestor is not a cca deletion") {
  CHECK(is_piece(F("d(a+b)"), F("d(c(a+b))"), PieceVariant::plain));
  CHECK_FALSE(is_piece(F("d(a+b)"), F("d(c(a+b))"), PieceVariant::cca));
  CHECK(is_piece(F("d(c(a+b))"), F("d(c(a+b))"), PieceVariant::cca));
  CHECK(is_piece(F("d(a)"), F("d(c(a+b))"), PieceVariant::cca));
}

TEST_CASE("the empty forest is a piece of everything") {
  for (auto v : all_variants) {
    CHECK(is_piece(Forest{}, F("a(b+c)+d"), v));
    CHECK(is_piece(Forest{}, Forest{}, v));
  }
  CHECK_FALSE(is_piece(F("a"), Forest{}, PieceVariant::plain));
}

TEST_CASE("sibling order matters except for the commutative variants") {
  CHECK_FALSE(is_piece(F("a+b"), F("b+a"), PieceVariant::plain));
  CHECK(is_piece(F("a+b"), F("b+a"), PieceVariant::commutative));
  CHECK_FALSE(is_piece(F("a(b+c)"), F("a(c+b)"), PieceVariant::cca));
  CHECK(is_piece(F("a(b+c)"), F("a(c+b)"), PieceVariant::commutative_cca));
  CHECK_FALSE(is_piece(F("d(a+b)"), F("d(c(b+a))"), PieceVariant::commutative_cca));
}

TEST_CASE("horizontal pieces keep sibling groups") {
  // c has a sibling and a child, so it cannot go; a and b never become siblings.
  CHECK_FALSE(is_piece(F("a+b"), F("c(a)+b"), PieceVariant::horizontal));
  CHECK(is_piece(F("a+b"), F("c(a)+b"), PieceVariant::plain));
  CHECK(is_piece(F("d(a+b)"), F("d(c(a+b))"), PieceVariant::horizontal));
  CHECK(is_piece(F("a+b"), F("a+c+b"), PieceVariant::horizontal));
}

TEST_CASE("context pieces") {
  CHECK(is_context_piece(Context{}, C("a(b+_)+c"), PieceVariant::plain));
  CHECK(is_context_piece(C("a(_)"), C("b(a(c(_)))"), PieceVariant::plain));
  CHECK_FALSE(is_context_piece(C("a(_)+b"), C("b+a(_)"), PieceVariant::plain));
  CHECK_FALSE(is_context_piece(C("a(_)"), C("a+_"), PieceVariant::plain));
  CHECK(is_context_piece(C("a+_"), C("a(b)+_"), PieceVariant::plain));
}

TEST_CASE("deletion sequences") {
  const auto one = deletion_sequence(F("a"), F("a(b)"), PieceVariant::plain);
  REQUIRE(one.has_value());
  REQUIRE(one->size() == 1);
  CHECK((*one)[0].label == "b");
  CHECK((*one)[0].node == NodeId{0, 0});

  const auto plain = deletion_sequence(F("d(a+b)"), F("d(c(a+b))"), PieceVariant::plain);
  REQUIRE(plain.has_value());
  CHECK(plain->size() == 1);
  CHECK((*plain)[0].label == "c");
  CHECK_FALSE(deletion_sequence(F("d(a+b)"), F("d(c(a+b))"), PieceVariant::cca).has_value());

  const auto four = deletion_sequence(F("a(a+b)+c"), F("a(a+bc)+b+c(a+b)"), PieceVariant::plain);
  REQUIRE(four.has_value());
  CHECK(four->size() == 4);
}

TEST_CASE("deletability rules") {
  const NodeTable t(F("d(c(a+b))+a"));
  // preorder: d c a b a
  CHECK(deletable(t, 0, PieceVariant::plain));
  CHECK(deletable(t, 0, PieceVariant::cca));
  CHECK_FALSE(deletable(t, 1, PieceVariant::cca));
  CHECK(deletable(t, 1, PieceVariant::horizontal));  // no siblings
  CHECK_FALSE(deletable(t, 0, PieceVariant::horizontal));
  CHECK(deletable(t, 2, PieceVariant::horizontal));  // leaf
}

TEST_CASE("piece enumeration") {
  CHECK(texts(enumerate_pieces(F("a"), 1, PieceVariant::plain)) == std::vector<std::string>{"", "a"});
  CHECK(texts(enumerate_pieces(F("a(b)"), 1, PieceVariant::plain)) == std::vector<std::string>{"", "a", "b"});
  CHECK(texts(enumerate_pieces(F("a(b+c)"), 2, PieceVariant::plain)) ==
        std::vector<std::string>{"", "a", "a(b)", "a(c)", "b", "b+c", "c"});
  CHECK(texts(enumerate_pieces(F("a(b+c)"), 2, PieceVariant::cca)) ==
        std::vector<std::string>{"", "a", "a(b)", "a(c)", "b", "c"});
}

TEST_CASE("piece equivalence") {
  const Forest s = F("a(a)+a(a)+a(a)");
  CHECK(sim_n(s, s, 2, PieceVariant::plain));
  CHECK(sim_n(s, s + F("a"), 3, PieceVariant::plain));
  CHECK_FALSE(sim_n(s, s + F("a"), 4, PieceVariant::plain));
  CHECK_FALSE(sim_n(F("a"), F("b"), 1, PieceVariant::plain));
}

TEST_CASE("pieces agree with the node subset oracle") {
  const Alphabet ab{"a", "b"};
  const auto hosts = enumerate_forests(ab, 5);
  const auto small = enumerate_forests(ab, 3);
  for (const auto& t : hosts) {
    for (bool cca : {false, true}) {
      const auto expected = testing::subset_pieces(t, 3, cca);
      const auto variant = cca ? PieceVariant::cca : PieceVariant::plain;
      const auto sig = piece_signature(t, 3, variant);
      CHECK(std::set<std::string>(sig.begin(), sig.end()) == expected);
      for (const auto& s : small) {
        const bool got = is_piece(s, t, variant);
        if (got != (expected.count(render(s)) > 0)) {
          FAIL_CHECK(render(s) << " in " << render(t) << " cca=" << cca);
        }
      }
    }
  }
}

TEST_CASE("embedding and deletion closure agree on small pairs") {
  const Alphabet ab{"a", "b"};
  const auto all = enumerate_forests(ab, 4);
  for (auto v : {PieceVariant::plain, PieceVariant::cca, PieceVariant::horizontal}) {
    for (const auto& t : all) {
      const auto closure = deletion_closure(t, v);
      const std::set<std::string> closed(closure.begin(), closure.end());
      for (const auto& s : all) {
        if (s.size() > t.size()) continue;
        CHECK(is_piece(s, t, v) == (closed.count(render(s)) > 0));
      }
    }
  }
}

TEST_CASE("commutative pieces are pieces of a reordering") {
  const Alphabet ab{"a", "b"};
  const auto all = enumerate_forests(ab, 4);
  for (const auto& t : all) {
    const auto orders = reorderings(t);
    for (const auto& s : all) {
      if (s.size() > t.size()) continue;
      bool plain = false, cca = false;
      for (const auto& r : orders) {
        plain = plain || is_piece(s, r, PieceVariant::plain);
        cca = cca || is_piece(s, r, PieceVariant::cca);
      }
      CHECK(is_piece(s, t, PieceVariant::commutative) == plain);
      CHECK(is_piece(s, t, PieceVariant::commutative_cca) == cca);
    }
  }
}

TEST_CASE("cca pieces are pieces, and pieces respect size") {
  const Alphabet ab{"a", "b"};
  for (const auto& t : enumerate_forests(ab, 4))
    for (const auto& p : enumerate_pieces(t, 4, PieceVariant::cca)) {
      CHECK(is_piece(p, t, PieceVariant::plain));
      CHECK(p.size() <= t.size());
    }
}

TEST_CASE("context piece embeddings agree with context deletion closure") {
  const Alphabet ab{"a", "b"};
  const auto contexts = enumerate_contexts(ab, 3);
  for (auto v : {PieceVariant::plain, PieceVariant::cca}) {
    for (const auto& q : contexts) {
      std::set<std::string> closed;
      for (const auto& p : context_deletion_closure(q, v)) closed.insert(render(p));
      for (const auto& p : contexts)
        if (p.size() <= q.size()) CHECK(is_context_piece(p, q, v) == (closed.count(render(p)) > 0));
    }
  }
}

}  // TEST_SUITE
