#include <doctest.h>

#include <random>

#include "forestalg/corpus.hpp"
#include "forestalg/decide.hpp"
#include "forestalg/error.hpp"
#include "forestalg/oracle.hpp"
#include "support.hpp"

using namespace forestalg;

namespace {

bool is_yes(const Verdict& v) { return v.holds == Truth::yes; }

}  // namespace

TEST_SUITE("decide") {

TEST_CASE("property names") {
  for (Property p : all_properties()) {
    CHECK(parse_property(to_string(p)) == p);
    CHECK(parse_property(flag_name(p)) == p);
  }
  CHECK(flag_name(Property::CommPT) == "comm-pt");
  CHECK_THROWS(parse_property("ptt"));
}

TEST_CASE("corpus verdicts") {
  for (const auto& e : corpus()) {
    Classifier c(e.automaton);
    for (const auto& [p, expected] : e.expected) {
      CAPTURE(e.name);
      CAPTURE(to_string(p));
      const Verdict v = c.decide(p);
      CHECK(v.holds == expected);
      // a witness exactly when the answer is no
      CHECK(v.witness.has_value() == (v.holds == Truth::no));
      if (v.witness) {
        REQUIRE(v.subject);
        CHECK(replay(*v.subject, *v.witness));
      }
    }
  }
}

TEST_CASE("tree properties need a tree language") {
  Classifier c(corpus_entry("all-trees-aa").automaton);
  CHECK_THROWS_AS(c.decide(Property::TreePT), InvalidInput);
  CHECK_THROWS_AS(c.reduced(), InvalidInput);
}

TEST_CASE("a PT failure on all-trees-aa") {
  const Verdict v = decide_pt(syntactic(corpus_entry("all-trees-aa").automaton));
  REQUIRE(v.holds == Truth::no);
  REQUIRE(v.witness);
  CHECK(v.witness->left != v.witness->right);
  for (const auto& el : v.witness->elements) CHECK_FALSE(el.expression.empty());
  CHECK(v.provenance.relation_pairs > 0);
}

TEST_CASE("cca-abc fails PT through the J identity") {
  const Verdict v = decide_pt(syntactic(corpus_entry("cca-abc").automaton));
  REQUIRE(v.witness);
  const IdentityKind k = v.witness->kind;
  CHECK((k == IdentityKind::j_left || k == IdentityKind::j_right));
  CHECK(v.witness->get("u").expression == "a(_)");
  CHECK(v.witness->get("v").expression == "b(_)");
  CHECK(is_yes(decide_cca(syntactic(corpus_entry("cca-abc").automaton))));
}

TEST_CASE("alternative characterizations agree") {
  std::vector<Recognizer> subjects;
  for (const auto& e : corpus()) subjects.push_back(syntactic(e.automaton));
  std::mt19937 rng(11);
  for (int i = 0; i < 120; ++i) subjects.push_back(syntactic(random_automaton(rng, 4, Alphabet{"a", "b"})));
  int pt = 0, cca = 0;
  for (const auto& s : subjects) {
    Classifier c(s);
    const bool p = is_yes(c.decide(Property::PT));
    const bool q = is_yes(c.decide(Property::ccaPT));
    CHECK(p == is_yes(c.decide(Property::PT_alt)));
    CHECK(q == is_yes(c.decide(Property::ccaPT_alt)));
    // every piece-testable language is cca piece-testable
    if (p) CHECK(q);
    const bool comm = is_yes(c.decide(Property::Commutative));
    CHECK(is_yes(c.decide(Property::CommPT)) == (comm && p));
    CHECK(is_yes(c.decide(Property::CommCcaPT)) == (comm && q));
    if (is_yes(c.decide(Property::Sigma1))) CHECK(p);
    pt += p;
    cca += q;
  }
  // the random sample is not trivially one-sided
  CHECK(pt > 0);
  CHECK(cca < static_cast<int>(subjects.size()));
}

TEST_CASE("every witness replays on random automata") {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    Classifier c(random_automaton(rng, 4, Alphabet{"a", "b"}));
    for (Property p : {Property::PT, Property::PT_alt, Property::ccaPT, Property::ccaPT_alt, Property::Sigma1,
                       Property::Commutative}) {
      const Verdict v = c.decide(p);
      if (v.witness) CHECK(replay(*v.subject, *v.witness));
    }
  }
}

TEST_CASE("horizontal failures persist as the bound grows") {
  for (const char* name : {"all-trees-aa", "first-root-a", "even-trees", "cca-abc"}) {
    CAPTURE(name);
    const Recognizer s = syntactic(corpus_entry(name).automaton);
    const Verdict small = decide_horizontal(s, 2);
    const Verdict large = decide_horizontal(s, 4);
    CHECK(small.holds != Truth::yes);
    if (small.holds == Truth::no) CHECK(large.holds == Truth::no);
    CHECK(large.provenance.bound == std::size_t{4});
  }
}

TEST_CASE("Sigma1 on every corpus entry terminates with an answer") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    Verdict v;
    CHECK_NOTHROW(v = decide_sigma1(syntactic(e.automaton)));
    CHECK(v.holds != Truth::unknown);
  }
}

TEST_CASE("provenance records the sizes") {
  const Verdict v = decide(syntactic(corpus_entry("abcd").automaton), Property::PT);
  CHECK(v.provenance.h_syntactic == 6);
  CHECK(v.provenance.v_syntactic == 12);
  CHECK_FALSE(v.provenance.relation.empty());
  const Verdict t = decide_tree_pt(syntactic(corpus_entry("all-trees").automaton));
  REQUIRE(t.provenance.h_reduced);
  CHECK(*t.provenance.h_reduced == 1);
}

}  // TEST_SUITE
