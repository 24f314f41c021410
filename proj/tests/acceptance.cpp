// Acceptance run: one PASS/FAIL line per criterion, each with its own time
// limit. Exits nonzero when any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forestalg/corpus.hpp"
#include "forestalg/decide.hpp"
#include "forestalg/oracle.hpp"
#include "forestalg/piecerel.hpp"
#include "support.hpp"

using namespace forestalg;

namespace {

/// What a criterion reports besides pass/fail.
struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    if (ok) detail << "failed: " << what;
    ok = false;
  }
};

Recognizer syntactic_of(const std::string& name) { return syntactic(corpus_entry(name).automaton); }

const Alphabet ab{"a", "b"};

/// Corpus plus random automata with at most 4 states over one or two letters.
std::vector<Recognizer> differential_subjects(int random_count) {
  std::vector<Recognizer> out;
  for (const auto& e : corpus()) out.push_back(syntactic(e.automaton));
  std::mt19937 rng(2024);
  for (int i = 0; i < random_count; ++i)
    out.push_back(syntactic(random_automaton(rng, 4, i % 4 == 0 ? Alphabet{"a"} : ab)));
  return out;
}

void abcd_relation(Outcome& o) {
  const Recognizer s = syntactic_of("abcd");
  const Alphabet& A = s.morphism.alphabet;
  o.require(s.algebra().v_size() == 12, "|V| = 12");
  const PieceRelation rel = piece_relation_plain(s);
  auto ctx = [&](const char* text) { return eval_context(s.morphism, parse_context(text, A)); };
  const Elem a = ctx("a(_)"), aa = ctx("a(a(_))"), bd = ctx("b(d(_))"), bcd = ctx("b(c(d(_)))");
  // ∞ absorbs every context
  bool absorbing = true;
  for (Elem v = 0; v < s.algebra().v_size(); ++v)
    absorbing = absorbing && s.algebra().mul(v, aa) == aa && s.algebra().mul(aa, v) == aa;
  o.require(aa == bd && absorbing, "aa = bd = infinity");
  o.require(rel.related(a, aa), "(a, aa) related");
  o.require(rel.related(bd, bcd), "(bd, bcd) related");
  o.require(!rel.related(a, bcd), "(a, bcd) unrelated");
  o.detail << "|V| = " << s.algebra().v_size() << ", " << rel.pair_count() << " related pairs";
}

void all_trees_aa(Outcome& o) {
  const Recognizer s = syntactic_of("all-trees-aa");
  o.require(is_j_trivial(s.algebra()), "V is J-trivial");
  const Verdict v = decide_pt(s);
  o.require(v.holds == Truth::no, "decide_pt is false");
  o.require(v.witness && replay(s, *v.witness), "witness replays");
  const auto r = refute_pt(s, 2, 5);
  o.require(r && verify_refutation(s, *r), "refute_pt finds a ~2 violation up to size 5");
  if (r) o.detail << "refutation " << render(r->s) << " ~2 " << render(r->t);
}

void cca_abc(Outcome& o) {
  const Recognizer s = syntactic_of("cca-abc");
  const Verdict pt = decide_pt(s);
  o.require(pt.holds == Truth::no && pt.witness && pt.witness->kind == IdentityKind::j_left,
            "PT fails on (uv)^w = (uv)^w u");
  o.require(pt.witness && replay(s, *pt.witness), "witness replays");
  o.require(decide_cca(s).holds == Truth::yes, "decide_cca is true");
  o.require(!refute_pt(s, 3, 6, PieceVariant::cca), "no cca refutation up to size 6");
  if (pt.witness)
    o.detail << "u = " << pt.witness->get("u").expression << ", v = " << pt.witness->get("v").expression;
}

void equivalences(Outcome& o) {
  const auto subjects = differential_subjects(240);
  int disagreements = 0, pt_true = 0, cca_true = 0;
  for (const auto& s : subjects) {
    Classifier c(s);
    const bool pt = c.decide(Property::PT).holds == Truth::yes;
    const bool cca = c.decide(Property::ccaPT).holds == Truth::yes;
    disagreements += pt != (c.decide(Property::PT_alt).holds == Truth::yes);
    disagreements += cca != (c.decide(Property::ccaPT_alt).holds == Truth::yes);
    pt_true += pt;
    cca_true += cca;
  }
  o.require(disagreements == 0, "zero disagreements");
  o.detail << subjects.size() << " algebras, " << disagreements << " disagreements, PT true on " << pt_true
           << ", ccaPT true on " << cca_true;
}

void piece_languages(Outcome& o) {
  const auto hosts = enumerate_forests(ab, 6);
  int algebras = 0;
  std::size_t checks = 0;
  for (const auto& target : enumerate_forests(ab, 3))
    for (std::size_t n = std::max<std::size_t>(target.size(), 1); n <= 3; ++n)
      for (auto variant : {PieceVariant::plain, PieceVariant::cca}) {
        const Recognizer r = piece_algebra(ab, n, variant, target);
        ++algebras;
        const Verdict v = variant == PieceVariant::plain ? decide_pt(r) : decide_cca(r);
        o.require(v.holds == Truth::yes, render(target) + " decided not piecewise testable");
        for (const auto& t : hosts) {
          ++checks;
          if (member(r, t) != is_piece(target, t, variant)) {
            o.require(false, "membership of " + render(t) + " for target " + render(target));
            break;
          }
        }
      }
  o.detail << algebras << " piece algebras, " << checks << " membership checks";
}

void sigma1(Outcome& o) {
  o.require(decide_sigma1(syntactic_of("piece-aabc")).holds == Truth::yes, "piece a(a+b)+c is Sigma1");
  const Recognizer abcd = syntactic_of("abcd");
  const Verdict v = decide_sigma1(abcd);
  o.require(v.holds == Truth::no && v.witness && v.witness->kind == IdentityKind::insertion,
            "abcd fails with an insertion witness");
  const auto r = refute_sigma1(abcd, 5);
  o.require(r && r->kind == RefutationKind::insertion_violation && verify_refutation(abcd, *r),
            "insertion refutation for abcd");
  int decided = 0;
  for (const auto& s : differential_subjects(200)) {
    try {
      decide_sigma1(s);
      ++decided;
    } catch (const std::logic_error& e) {
      o.require(false, e.what());
    }
  }
  o.detail << "antisymmetry held on " << decided << " syntactic algebras";
  if (r) o.detail << "; " << render(substitute(r->p, r->t)) << " accepted, insertion of " << render(r->q) << " rejected";
}

void definitions(Outcome& o) {
  constexpr std::size_t total = 8;
  const auto all = enumerate_forests(ab, total);
  std::vector<std::vector<const Forest*>> by_size(total + 1);
  for (const auto& f : all) by_size[f.size()].push_back(&f);
  std::size_t pairs = 0;
  for (auto variant : {PieceVariant::plain, PieceVariant::cca, PieceVariant::horizontal})
    for (const auto& t : all) {
      const std::size_t room = total - t.size();
      if (room == 0) continue;  // only the empty forest, a piece of everything
      const auto closure = deletion_closure(t, variant);
      const std::set<std::string> closed(closure.begin(), closure.end());
      for (std::size_t k = 0; k <= room; ++k)
        for (const Forest* s : by_size[k]) {
          ++pairs;
          if (is_piece(*s, t, variant) != (closed.count(render(*s)) > 0)) {
            o.require(false, render(*s) + " vs " + render(t) + " (" + to_string(variant) + ")");
            return;
          }
        }
    }
  o.detail << pairs << " pairs over three variants";
}

void relation_sampling(Outcome& o) {
  // soundness: images of concrete piece pairs are related
  const std::vector<std::string> names = {"abcd", "cca-abc", "piece-aabc", "trees-piece-ab", "all-trees-aa"};
  std::map<std::string, Recognizer> subjects;
  for (const auto& name : names) subjects.emplace(name, syntactic_of(name));
  std::mt19937 rng(99);
  for (auto variant : {PieceVariant::plain, PieceVariant::cca, PieceVariant::horizontal}) {
    // horizontal relations are enumerated, so their contexts stay smaller
    const std::size_t size = variant == PieceVariant::horizontal ? 4 : 5;
    std::vector<std::vector<Context>> contexts;
    std::vector<PieceRelation> relations;
    for (const auto& name : names) {
      const Recognizer& s = subjects.at(name);
      const std::size_t bound = s.morphism.alphabet.size() > 2 ? size - 1 : size;
      contexts.push_back(enumerate_contexts(s.morphism.alphabet, bound));
      relations.push_back(piece_relation(s, variant, bound));
    }
    int landed = 0;
    for (std::size_t i = 0; i < 500; ++i) {
      const std::size_t k = i % names.size();
      const Recognizer& s = subjects.at(names[k]);
      const auto& pool = contexts[k];
      const Context& q = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      const auto pieces = enumerate_context_pieces(q, q.size(), variant);
      const Context& p = pieces[std::uniform_int_distribution<std::size_t>(0, pieces.size() - 1)(rng)];
      landed += relations[k].related(eval_context(s.morphism, p), eval_context(s.morphism, q));
    }
    o.require(landed == 500, to_string(variant) + " sample outside the relation");
    o.detail << to_string(variant) << " " << landed << "/500; ";
  }

  // completeness: every related pair of a piece-set algebra is realized by a
  // concrete piece pair. The relevant universe keeps the algebras small
  // enough that every element has a realization within the search size.
  constexpr std::size_t search = 5;
  std::vector<std::pair<Context, std::vector<Context>>> plain_pairs, cca_pairs;
  for (const auto& q : enumerate_contexts(ab, search)) {
    plain_pairs.emplace_back(q, enumerate_context_pieces(q, q.size(), PieceVariant::plain));
    cca_pairs.emplace_back(q, enumerate_context_pieces(q, q.size(), PieceVariant::cca));
  }
  std::size_t relation_pairs = 0;
  for (const auto& target : enumerate_forests(ab, 2)) {
    if (target.empty()) continue;
    for (auto variant : {PieceVariant::plain, PieceVariant::cca}) {
      const Recognizer r = piece_algebra(ab, 2, variant, target, PieceUniverse::relevant);
      const PieceRelation rel = piece_relation(r, variant);
      const int nv = r.algebra().v_size();
      BitMatrix realized(nv, nv);
      for (const auto& [q, pieces] : variant == PieceVariant::plain ? plain_pairs : cca_pairs) {
        const Elem w = eval_context(r.morphism, q);
        for (const auto& p : pieces) realized.set(eval_context(r.morphism, p), w);
      }
      relation_pairs += rel.pair_count();
      o.require(realized == rel.on_v, "realized pairs of " + render(target) + " (" + to_string(variant) + ")");
    }
  }
  o.detail << relation_pairs << " relation pairs realized by contexts up to size " << search;
}

/// Two trees with the same n-pieces and different membership.
std::optional<std::pair<Forest, Forest>> tree_refutation(const Recognizer& r, std::size_t n, std::size_t max_size) {
  std::map<std::vector<std::string>, std::pair<const Forest*, bool>> seen;
  const auto forests = enumerate_forests(r.morphism.alphabet, max_size);
  for (const auto& t : forests) {
    if (!t.is_tree()) continue;
    const bool in = member(r, t);
    const auto [it, fresh] = seen.emplace(piece_signature(t, n, PieceVariant::plain), std::make_pair(&t, in));
    if (!fresh && it->second.second != in) return std::make_pair(*it->second.first, t);
  }
  return std::nullopt;
}

void tree_variant(Outcome& o) {
  int checked = 0;
  for (const auto& e : corpus()) {
    if (!e.tree_language) continue;
    const TreeReductionCheck check = check_tree_reduction(syntactic(e.automaton));
    o.require(check.equivalence && check.congruence, e.name + ": " + check.failure);
    ++checked;
  }
  o.require(decide_tree_pt(syntactic_of("trees-piece-ab")).holds == Truth::yes, "tree-PT for trees-piece-ab");
  const Recognizer even = syntactic_of("even-trees");
  o.require(decide_tree_pt(even).holds == Truth::no, "tree-PT fails for even-trees");
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto r = tree_refutation(even, n, n + 3);
    o.require(r.has_value(), "semantic refutation for even-trees at n = " + std::to_string(n));
    if (r && n == 3) o.detail << "even-trees: " << render(r->first) << " ~3 " << render(r->second) << "; ";
  }
  o.detail << checked << " tree reductions verified";
}

void commutative(Outcome& o) {
  int checked = 0;
  for (const auto& s : differential_subjects(200)) {
    Classifier c(s);
    const bool comm = c.decide(Property::Commutative).holds == Truth::yes;
    const bool pt = c.decide(Property::PT).holds == Truth::yes;
    const bool cca = c.decide(Property::ccaPT).holds == Truth::yes;
    o.require((c.decide(Property::CommPT).holds == Truth::yes) == (comm && pt), "CommPT = Comm and PT");
    o.require((c.decide(Property::CommCcaPT).holds == Truth::yes) == (comm && cca), "CommCcaPT = Comm and ccaPT");
    ++checked;
  }
  Classifier piece_ab(corpus_entry("piece-ab").automaton);
  o.require(piece_ab.decide(Property::CommPT).holds == Truth::yes, "piece-ab is commutative PT");
  Classifier first(corpus_entry("first-root-a").automaton);
  const Verdict v = first.decide(Property::Commutative);
  o.require(v.holds == Truth::no && v.witness && replay(*v.subject, *v.witness), "first-root-a not commutative");
  for (const auto& e : corpus())
    for (auto p : {Property::Commutative, Property::CommPT, Property::CommCcaPT}) {
      Classifier c(e.automaton);
      o.require(c.decide(p).holds == e.expected.at(p), e.name + " " + to_string(p));
    }
  o.detail << checked << " algebras";
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "abcd relation is not transitive", 1, abcd_relation},
      {2, "J-trivial but not piecewise testable", 10, all_trees_aa},
      {3, "cca-abc separates PT and ccaPT", 30, cca_abc},
      {4, "characterizations agree", 300, equivalences},
      {5, "piece languages are recognized and testable", 300, piece_languages},
      {6, "Sigma1 decision", 10, sigma1},
      {7, "embedding and deletion definitions agree", 120, definitions},
      {8, "relation soundness and completeness", 120, relation_sampling},
      {9, "tree variant", 60, tree_variant},
      {10, "commutative variants", 10, commutative},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const testing::Stopwatch clock;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = clock.seconds();
    if (seconds >= c.limit_seconds) o.require(false, "over the time limit");
    failed += !o.ok;
    std::printf("criterion %2d: %s  %-46s %8.2f s (limit %g s)  %s\n", c.number, o.ok ? "PASS" : "FAIL", c.name,
                seconds, c.limit_seconds, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
