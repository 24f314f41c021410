#include "forestalg/piecerel.hpp"

#include <deque>
#include <utility>

#include "forestalg/oracle.hpp"

namespace forestalg {

std::string to_string(PieceRule rule) {
  switch (rule) {
    case PieceRule::none: return "none";
    case PieceRule::unit: return "unit";
    case PieceRule::reflexive: return "reflexive";
    case PieceRule::letter: return "letter";
    case PieceRule::product: return "product";
    case PieceRule::tree_product: return "tree-product";
    case PieceRule::sum_product: return "sum-product";
    case PieceRule::insert_right: return "insert-right";
    case PieceRule::insert_left: return "insert-left";
    case PieceRule::semantic: return "semantic";
  }
  return "none";
}

namespace {

using Pair = std::pair<Elem, Elem>;

class Builder {
 public:
  Builder(const ForestAlgebra& a, PieceVariant variant, bool lifo) : a_(a), lifo_(lifo) {
    const int n = a.v_size();
    rel_.variant = variant;
    rel_.on_v = BitMatrix(n, n);
    rel_.rule.assign(static_cast<std::size_t>(n) * n, PieceRule::none);
  }

  bool add(Elem v, Elem w, PieceRule rule) {
    if (!rel_.on_v.set(v, w)) return false;
    rel_.rule[static_cast<std::size_t>(v) * a_.v_size() + w] = rule;
    members_.emplace_back(v, w);
    work_.emplace_back(v, w);
    return true;
  }

  bool pending() const { return !work_.empty(); }

  Pair pop() {
    Pair p;
    if (lifo_) {
      p = work_.back();
      work_.pop_back();
    } else {
      p = work_.front();
      work_.pop_front();
    }
    return p;
  }

  const std::vector<Pair>& members() const { return members_; }

  PieceRelation finish() {
    const int nh = a_.h_size();
    rel_.on_h = BitMatrix(nh, nh);
    for (auto [v, w] : members_) rel_.on_h.set(a_.act(v, a_.zero()), a_.act(w, a_.zero()));
    return std::move(rel_);
  }

 private:
  const ForestAlgebra& a_;
  bool lifo_;
  PieceRelation rel_;
  std::vector<Pair> members_;
  std::deque<Pair> work_;
};

}  // namespace

PieceRelation piece_relation_plain(const Recognizer& r, RelationOptions options) {
  const ForestAlgebra& a = r.algebra();
  Builder b(a, PieceVariant::plain, options.lifo);
  // The relation is the submonoid of V x V generated by the seed pairs and
  // the insertion pairs; it is enough to close under right multiplication by
  // generators, adding r.g for every known r when a generator appears.
  std::vector<Pair> gens;
  BitMatrix is_gen(a.v_size(), a.v_size());
  auto add_gen = [&](Pair g, PieceRule rule) {
    if (!is_gen.set(g.first, g.second)) return;
    gens.push_back(g);
    b.add(g.first, g.second, rule);
    const std::size_t known = b.members().size();
    for (std::size_t i = 0; i < known; ++i) {
      const auto [v, w] = b.members()[i];
      b.add(a.mul(v, g.first), a.mul(w, g.second), PieceRule::product);
    }
  };

  b.add(a.unit(), a.unit(), PieceRule::reflexive);
  std::vector<Elem> v_gens = r.morphism.letters;
  for (int h = 0; h < a.h_size(); ++h) {
    v_gens.push_back(a.ins_left(h));
    v_gens.push_back(a.ins_right(h));
  }
  for (Elem x : v_gens) {
    add_gen({a.unit(), x}, PieceRule::unit);
    add_gen({x, x}, PieceRule::reflexive);
  }
  while (b.pending()) {
    const auto [v, w] = b.pop();
    for (std::size_t i = 0; i < gens.size(); ++i)
      b.add(a.mul(v, gens[i].first), a.mul(w, gens[i].second), PieceRule::product);
    const Elem h = a.act(v, a.zero()), h2 = a.act(w, a.zero());
    add_gen({a.ins_right(h), a.ins_right(h2)}, PieceRule::insert_right);
    add_gen({a.ins_left(h), a.ins_left(h2)}, PieceRule::insert_left);
  }
  // On a surjective morphism the seeds already yield (□, v) and (v, v) for
  // every v; unreachable elements get them explicitly.
  for (int v = 0; v < a.v_size(); ++v) {
    b.add(a.unit(), v, PieceRule::unit);
    b.add(v, v, PieceRule::reflexive);
  }
  return b.finish();
}

PieceRelation piece_relation_cca(const Recognizer& r, RelationOptions options) {
  const ForestAlgebra& a = r.algebra();
  const ElementClass cls = classify_elements(r);
  const auto& tct = cls.tree_context_type;
  const auto& sf = cls.sum_form;
  Builder b(a, PieceVariant::cca, options.lifo);
  // Both restricted factor sets are closed under products, so a pair obtained
  // as a product of two of them never needs to act as that factor again.
  BitMatrix tct_derived(a.v_size(), a.v_size()), sf_derived(a.v_size(), a.v_size());
  auto is_tct = [&](Pair p) { return tct[p.first] && tct[p.second]; };
  auto is_sf = [&](Pair p) { return sf[p.first] && sf[p.second]; };
  std::vector<Pair> tct_pairs, sf_pairs;  // generators only
  std::size_t classified = 0;
  auto sync = [&] {
    for (; classified < b.members().size(); ++classified) {
      const Pair p = b.members()[classified];
      if (is_tct(p) && !tct_derived.test(p.first, p.second)) tct_pairs.push_back(p);
      if (is_sf(p) && !sf_derived.test(p.first, p.second)) sf_pairs.push_back(p);
    }
  };
  auto product = [&](Pair x, Pair y, PieceRule rule) {
    const Pair p{a.mul(x.first, y.first), a.mul(x.second, y.second)};
    if (!b.add(p.first, p.second, rule)) return;
    if (is_tct(x) && is_tct(y)) tct_derived.set(p.first, p.second);
    if (is_sf(x) && is_sf(y)) sf_derived.set(p.first, p.second);
  };

  for (int v = 0; v < a.v_size(); ++v) {
    b.add(a.unit(), v, PieceRule::unit);
    b.add(v, v, PieceRule::reflexive);
  }
  while (b.pending()) {
    sync();
    const Pair p = b.pop();
    const auto [v, w] = p;
    for (Elem l : r.morphism.letters) b.add(a.mul(l, v), a.mul(l, w), PieceRule::letter);

    // Every pair is combined with every generator known when it is processed;
    // generators found later meet it when they are processed themselves.
    const std::size_t n_tct = tct_pairs.size(), n_sf = sf_pairs.size(), n_all = b.members().size();
    for (std::size_t i = 0; i < n_tct; ++i) product(p, tct_pairs[i], PieceRule::tree_product);
    if (is_tct(p) && !tct_derived.test(v, w))
      for (std::size_t i = 0; i < n_all; ++i) product(b.members()[i], p, PieceRule::tree_product);
    if (is_sf(p) && !sf_derived.test(v, w))
      for (std::size_t i = 0; i < n_all; ++i) product(p, b.members()[i], PieceRule::sum_product);
    for (std::size_t i = 0; i < n_sf; ++i) product(sf_pairs[i], p, PieceRule::sum_product);

    const Elem h = a.act(v, a.zero()), h2 = a.act(w, a.zero());
    b.add(a.ins_right(h), a.ins_right(h2), PieceRule::insert_right);
    b.add(a.ins_left(h), a.ins_left(h2), PieceRule::insert_left);
  }
  return b.finish();
}

PieceRelation piece_relation_horizontal(const Recognizer& r, std::size_t bound, const Limits& limits) {
  Builder b(r.algebra(), PieceVariant::horizontal, false);
  for (const Context& q : enumerate_contexts(r.morphism.alphabet, bound, limits)) {
    const Elem w = eval_context(r.morphism, q);
    for (const Context& p : enumerate_context_pieces(q, bound, PieceVariant::horizontal, limits))
      b.add(eval_context(r.morphism, p), w, PieceRule::semantic);
  }
  PieceRelation rel = b.finish();
  rel.bound = bound;
  return rel;
}

PieceRelation piece_relation(const Recognizer& r, PieceVariant variant, std::size_t bound,
                             const Limits& limits) {
  switch (variant) {
    case PieceVariant::plain:
    case PieceVariant::commutative: return piece_relation_plain(r);
    case PieceVariant::cca:
    case PieceVariant::commutative_cca: return piece_relation_cca(r);
    case PieceVariant::horizontal: return piece_relation_horizontal(r, bound, limits);
  }
  return piece_relation_plain(r);
}

}  // namespace forestalg
