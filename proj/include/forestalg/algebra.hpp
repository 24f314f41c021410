#pragma once

// Finite forest algebras (H, V): ingestion from forest automata, axiom
// checks, evaluation morphisms, reachability, syntactic quotients, idempotent
// powers, element classification, the J-order and tree reduction.

#include <optional>
#include <string>
#include <vector>

#include "forestalg/bit_matrix.hpp"
#include "forestalg/error.hpp"
#include "forestalg/forest.hpp"

namespace forestalg {

/// Index of an element of H or V, in declaration order.
using Elem = int;

/// Ingestion form of a recognizer: an additive state monoid (Q, plus, zero)
/// with one unary map per letter and a set of accepting states.
struct ForestAutomaton {
  Alphabet alphabet;
  std::vector<std::string> states;
  int zero = 0;
  std::vector<int> plus;                // |Q| x |Q|, row-major
  std::vector<std::vector<int>> delta;  // per letter, |Q| entries
  std::vector<bool> accept;

  int size() const { return static_cast<int>(states.size()); }
  int add(int p, int q) const { return plus[static_cast<std::size_t>(p) * states.size() + q]; }

  friend bool operator==(const ForestAutomaton&, const ForestAutomaton&) = default;
};

struct CheckReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Table shapes, index ranges and the monoid laws of (Q, plus, zero).
CheckReport check_automaton(const ForestAutomaton& automaton);

/// Drops states not reachable from zero under plus and the letter maps.
ForestAutomaton restrict_reachable(const ForestAutomaton& automaton);

/// Coarsest congruence of the reachable part saturating the accepting set
/// (partition refinement under letters and left/right addition). The result
/// has exactly the horizontal monoid of the syntactic forest algebra.
ForestAutomaton minimize(const ForestAutomaton& automaton);

/// Product with the three-state counter {empty, one tree, more}, accepting
/// only single trees accepted by `automaton`.
ForestAutomaton restrict_to_trees(const ForestAutomaton& automaton);

/// Finite forest algebra with dense operation tables.
class ForestAlgebra {
 public:
  ForestAlgebra() = default;

  /// Builds the algebra from the action table and the insertion elements;
  /// addition in H and multiplication in V are derived (faithfulness is
  /// required, and checked). Throws InvalidInput on inconsistent tables.
  static ForestAlgebra from_action(std::vector<std::string> h_names,
                                   std::vector<std::string> v_names,
                                   const std::vector<std::vector<Elem>>& act,
                                   std::vector<Elem> ins_left, std::vector<Elem> ins_right);

  /// Builds from all tables, without validation.
  static ForestAlgebra from_tables(std::vector<std::string> h_names,
                                   std::vector<std::string> v_names, Elem zero, Elem unit,
                                   std::vector<Elem> add, std::vector<Elem> mul,
                                   std::vector<Elem> act, std::vector<Elem> ins_left,
                                   std::vector<Elem> ins_right);

  int h_size() const { return static_cast<int>(h_names_.size()); }
  int v_size() const { return static_cast<int>(v_names_.size()); }
  Elem zero() const { return zero_; }
  Elem unit() const { return unit_; }

  Elem add(Elem g, Elem h) const { return add_[static_cast<std::size_t>(g) * h_names_.size() + h]; }
  Elem mul(Elem v, Elem w) const { return mul_[static_cast<std::size_t>(v) * v_names_.size() + w]; }
  Elem act(Elem v, Elem h) const { return act_[static_cast<std::size_t>(v) * h_names_.size() + h]; }
  /// g + _
  Elem ins_left(Elem g) const { return ins_left_[g]; }
  /// _ + g
  Elem ins_right(Elem g) const { return ins_right_[g]; }

  const std::string& h_name(Elem h) const { return h_names_[h]; }
  const std::string& v_name(Elem v) const { return v_names_[v]; }
  const std::vector<std::string>& h_names() const { return h_names_; }
  const std::vector<std::string>& v_names() const { return v_names_; }
  void rename_v(std::vector<std::string> names) { v_names_ = std::move(names); }
  void rename_h(std::vector<std::string> names) { h_names_ = std::move(names); }

  friend bool operator==(const ForestAlgebra&, const ForestAlgebra&) = default;

 private:
  std::vector<std::string> h_names_, v_names_;
  Elem zero_ = 0, unit_ = 0;
  std::vector<Elem> add_, mul_, act_, ins_left_, ins_right_;
};

/// Exhaustive check of the forest algebra axioms.
CheckReport check_axioms(const ForestAlgebra& algebra);

/// Forest algebra morphism from the free algebra, fixed by letter images.
struct Morphism {
  ForestAlgebra algebra;
  Alphabet alphabet;
  std::vector<Elem> letters;  // image of a(_) per letter

  Elem letter(const Label& a) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

struct Recognizer {
  Morphism morphism;
  std::vector<bool> accept;  // over H

  const ForestAlgebra& algebra() const { return morphism.algebra; }
  bool accepts(Elem h) const { return accept[h]; }

  friend bool operator==(const Recognizer&, const Recognizer&) = default;
};

Elem eval_forest(const Morphism& m, const Forest& s);
Elem eval_context(const Morphism& m, const Context& p);
bool member(const Recognizer& r, const Forest& s);

/// V is the transformation monoid of Q generated by the letter maps and the
/// maps h -> g+h, h -> h+g. Throws CapExceeded past limits.max_v_elements.
Recognizer algebra_from_automaton(const ForestAutomaton& automaton, const Limits& limits = {});

struct Reachability {
  std::vector<bool> h;
  std::vector<bool> v;
  bool complete() const;
};

/// Least H_r, V_r containing 0, the unit and the letters, closed under the
/// algebra operations.
Reachability reachable(const Morphism& m);

/// Subalgebra on the reachable elements, with V elements that act identically
/// on H_r merged so the action stays faithful.
Recognizer restrict_to_reachable(const Recognizer& r);

/// Quotient by the syntactic congruence of the accepting set. Restricts to the
/// reachable part first when needed.
Recognizer syntactic_quotient(const Recognizer& r);

/// Shortest known realizing forest per H element and context per V element.
struct Representatives {
  std::vector<Forest> h;
  std::vector<Context> v;
};
Representatives representatives(const Morphism& m);

/// Syntactic recognizer, with V elements named by their shortest contexts.
Recognizer syntactic(const Recognizer& r);
Recognizer syntactic(const ForestAutomaton& automaton, const Limits& limits = {});

/// Whether there is an isomorphism of algebras commuting with the morphisms
/// and preserving acceptance.
bool isomorphic(const Recognizer& a, const Recognizer& b);

Elem idempotent_power_v(const ForestAlgebra& algebra, Elem v);
Elem idempotent_power_h(const ForestAlgebra& algebra, Elem h);

struct ElementClass {
  std::vector<bool> tree_type;          // H: image of some tree
  std::vector<bool> non_tree_image;     // H: image of 0 or of a forest of >= 2 trees
  std::vector<bool> tree_context_type;  // V: image of some tree-context
  std::vector<bool> sum_form;           // V: of the form g + _ + h
  Reachability reachable;
};
ElementClass classify_elements(const Recognizer& r);

struct JOrder {
  BitMatrix leq;  // leq(m, n) iff m in V n V
  bool j_trivial = true;
  bool identity_holds = true;  // (uv)^w u = (uv)^w = v (uv)^w for all u, v
  std::optional<std::pair<Elem, Elem>> violation;  // (u, v) breaking the identity
};
JOrder j_order(const ForestAlgebra& algebra);
bool is_j_trivial(const ForestAlgebra& algebra);

/// Element-level tree reduction relation, verified before quotienting.
struct TreeReductionCheck {
  BitMatrix related;
  bool equivalence = true;
  bool congruence = true;
  std::string failure;  // witness triple when a check fails
};
TreeReductionCheck check_tree_reduction(const Recognizer& r);

/// Why the recognized language is not a tree language (an accepted element
/// that is not a tree-type, or is also the image of 0 or of several trees).
std::optional<std::string> tree_language_violation(const Recognizer& r);

/// Quotient identifying H elements that no tree-context separates (distinct
/// tree-types are never merged). Only the trees of the language are kept
/// track of: the accepting set is the image of the original one, so forests
/// of several trees may become accepted. Throws InvalidInput when an accepted
/// element is not a tree-type or the relation fails verification.
Recognizer tree_reduction(const Recognizer& r);

}  // namespace forestalg
