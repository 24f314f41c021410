#include <doctest.h>

#include <random>

#include "forestalg/error.hpp"
#include "forestalg/forest.hpp"
#include "forestalg/oracle.hpp"
#include "support.hpp"

using namespace forestalg;

namespace {

const Alphabet abc{"a", "b", "c"};

}  // namespace

TEST_SUITE("forest") {

TEST_CASE("parse and render the running example") {
  const Forest t = parse_forest("a(a+bc)+b+c(a+b)", abc);
  CHECK(t.trees().size() == 3);
  CHECK(t.size() == 8);
  CHECK(render(t) == "a(a+b(c))+b+c(a+b)");
  CHECK(parse_forest(render(t), abc) == t);
}

TEST_CASE("empty forest and juxtaposition") {
  CHECK(parse_forest("", abc).empty());
  CHECK(render(Forest{}) == "");
  const Forest bc = parse_forest("bc", abc);
  REQUIRE(bc.is_tree());
  CHECK(bc.trees()[0].label == "b");
  CHECK(render(bc) == "b(c)");
  CHECK(render(parse_forest("abc", abc)) == "a(b(c))");
}

TEST_CASE("contexts") {
  const Context p = parse_context("a(a+bc)+b+c(_+b)", abc);
  CHECK(render(p) == "a(a+b(c))+b+c(_+b)");
  CHECK(p.size() == 7);
  CHECK(parse_context("_", abc).is_identity());
  CHECK(parse_context("_", abc) == Context{});
  const Context a = parse_context("a(_)", abc);
  CHECK(a == Context::letter("a"));
  CHECK(a.is_tree_context());
  CHECK_FALSE(parse_context("a+_", abc).is_tree_context());
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_forest("a(", abc), ParseError);
  CHECK_THROWS_AS(parse_forest("a)", abc), ParseError);
  CHECK_THROWS_AS(parse_forest("d", abc), ParseError);
  CHECK_THROWS_AS(parse_forest("a+_", abc), ParseError);
  CHECK_THROWS_AS(parse_context("a+b", abc), ParseError);
  CHECK_THROWS_AS(parse_context("_+_", abc), ParseError);
  CHECK_THROWS_AS(parse_forest("a++b", abc), ParseError);
}

TEST_CASE("multi-character labels need separators") {
  const Alphabet words{"ab", "c"};
  CHECK_FALSE(words.single_char());
  const Forest f = parse_forest("ab(c)+c", words);
  CHECK(f.size() == 3);
  CHECK(render(f) == "ab(c)+c");
}

TEST_CASE("substitution") {
  const Context p = parse_context("a(a+bc)+b+c(_+b)", abc);
  CHECK(render(substitute(p, parse_forest("b+c(a)", abc))) == "a(a+b(c))+b+c(b+c(a)+b)");
  const Forest s = parse_forest("a(b)+c", abc);
  CHECK(substitute(Context{}, s) == s);
  CHECK(render(substitute(Context::letter("a"), Forest{})) == "a");
}

TEST_CASE("composition") {
  const Context p = parse_context("c+a(_+b)", abc);
  CHECK(compose(Context{}, p) == p);
  CHECK(compose(p, Context{}) == p);
  CHECK(render(compose(Context::letter("a"), Context::letter("b"))) == "a(b(_))");
  CHECK(render(insert_left(parse_forest("a", abc))) == "a+_");
  CHECK(render(insert_right(parse_forest("b(c)", abc))) == "_+b(c)");
}

TEST_CASE("composition and substitution laws on random samples") {
  const auto contexts = enumerate_contexts(Alphabet{"a", "b"}, 3);
  const auto forests = enumerate_forests(Alphabet{"a", "b"}, 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick_c(0, contexts.size() - 1), pick_f(0, forests.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const Context& p = contexts[pick_c(rng)];
    const Context& q = contexts[pick_c(rng)];
    const Context& r = contexts[pick_c(rng)];
    const Forest& s = forests[pick_f(rng)];
    CHECK(substitute(compose(p, q), s) == substitute(p, substitute(q, s)));
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(substitute(p, s).size() == p.size() + s.size());
  }
}

TEST_CASE("node relations on a branching tree") {
  const NodeTable t(parse_forest("a(b+c)", abc));
  REQUIRE(t.size() == 3);
  CHECK(t.ancestor(0, 1));
  CHECK(t.ancestor(0, 2));
  CHECK_FALSE(t.ancestor(1, 2));
  CHECK(t.sibling_before(1, 2));
  CHECK(t.cca(1, 2) == 0);
}

TEST_CASE("ancestor order of a chain is total and equals forest order") {
  const NodeTable t(parse_forest("a(b(c(d)))", Alphabet{"a", "b", "c", "d"}));
  for (int x = 0; x < t.size(); ++x)
    for (int y = 0; y < t.size(); ++y) CHECK(t.ancestor(x, y) == t.dfs_before(x, y));
}

TEST_CASE("forest order follows the expression text") {
  const NodeTable t(parse_forest("a(a+bc)+b+c(a+b)", abc));
  std::string word;
  for (int x = 0; x < t.size(); ++x) word += t.label(x);
  CHECK(word == "aabcbcab");
  CHECK_FALSE(t.cca(0, 5).has_value());
  CHECK(t.id(3) == NodeId{0, 1, 0});
  CHECK(t.index(NodeId{2, 1}) == 7);
}

TEST_CASE("labels are listed in order of first use") {
  CHECK(labels_of(parse_forest("c(a)+a+b", abc).trees()) == std::vector<Label>{"c", "a", "b"});
}

}  // TEST_SUITE
