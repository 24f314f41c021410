#pragma once

// Piece relations on the elements of a finite forest algebra, as least
// fixpoints of rule systems (plain and cca) or, for horizontal pieces, by
// bounded semantic enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forestalg/algebra.hpp"
#include "forestalg/bit_matrix.hpp"
#include "forestalg/pieces.hpp"

namespace forestalg {

/// Rule that first put a pair into the relation.
enum class PieceRule : std::uint8_t {
  none,
  unit,         // (□, v)
  reflexive,    // (v, v)
  letter,       // (α(a)v, α(a)v') from (v, v')
  product,      // (vw, v'w') from (v, v') and (w, w')
  tree_product, // as product, w and w' tree-context-types
  sum_product,  // as product, v and v' of the form g+□+h
  insert_right, // (□+v0, □+v'0) from (v, v')
  insert_left,  // (v0+□, v'0+□) from (v, v')
  semantic,     // images of a concrete context pair
};

std::string to_string(PieceRule rule);

struct PieceRelation {
  PieceVariant variant = PieceVariant::plain;
  BitMatrix on_v;  // on_v.test(v, w): v is related to w
  BitMatrix on_h;  // (v0, w0) for every related (v, w)
  std::vector<PieceRule> rule;  // per pair v * |V| + w
  std::optional<std::size_t> bound;  // horizontal only: context size bound

  bool related(Elem v, Elem w) const { return on_v.test(v, w); }
  bool related_h(Elem g, Elem h) const { return on_h.test(g, h); }
  std::size_t pair_count() const { return on_v.count(); }
  PieceRule origin(Elem v, Elem w) const { return rule[static_cast<std::size_t>(v) * on_v.cols() + w]; }
};

struct RelationOptions {
  /// Process the worklist last-in first-out instead of first-in first-out.
  /// The fixpoint must not depend on it.
  bool lifo = false;
};

/// Least relation closed under: □ R v; v R v; vw R v'w' when v R v' and
/// w R w'; (□+v0) R (□+v'0) and (v0+□) R (v'0+□) when v R v'. Requires a
/// surjective morphism.
PieceRelation piece_relation_plain(const Recognizer& r, RelationOptions options = {});

/// The cca rule system: unit and reflexive seeds, letter prefixing, products
/// restricted to tree-context-type right factors or g+□+h left factors, and
/// the two insertion rules.
PieceRelation piece_relation_cca(const Recognizer& r, RelationOptions options = {});

/// Images of all horizontal-piece context pairs p ⊩ q with |q| <= bound. An
/// under-approximation of the true relation.
PieceRelation piece_relation_horizontal(const Recognizer& r, std::size_t bound,
                                        const Limits& limits = {});

/// Dispatch; `bound` is only used for the horizontal variant.
PieceRelation piece_relation(const Recognizer& r, PieceVariant variant, std::size_t bound = 4,
                             const Limits& limits = {});

}  // namespace forestalg
