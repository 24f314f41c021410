#pragma once

// Decision procedures. Every procedure works on the syntactic recognizer of
// its input and reports either "holds" or the first violated identity
// instance, with elements named and realized by concrete forests/contexts.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forestalg/algebra.hpp"
#include "forestalg/piecerel.hpp"

namespace forestalg {

enum class Property {
  PT,
  PT_alt,
  ccaPT,
  ccaPT_alt,
  Sigma1,
  Commutative,
  CommPT,
  CommCcaPT,
  TreePT,
  TreeCcaPT,
  HorizontalPT_experimental,
};

std::string to_string(Property p);
/// Accepts the names above and the CLI spellings (pt, pt-alt, cca, ...).
Property parse_property(std::string_view name);
/// Command line spelling, e.g. "comm-pt".
std::string flag_name(Property p);
const std::vector<Property>& all_properties();

enum class Truth { yes, no, unknown };
std::string to_string(Truth t);

/// Identity instances a witness can violate.
enum class IdentityKind {
  pt_left,        // u^w v = u^w, v below u
  pt_right,       // v u^w = u^w, v below u
  j_left,         // (uv)^w u = (uv)^w
  j_right,        // v (uv)^w = (uv)^w
  alt_left,       // vh + w(vuh) = w(vuh)
  alt_right,      // w(vuh) + vh = w(vuh)
  cca_middle,     // u^w h = u^w v h
  cca_right,      // u^w h = v u^w h
  cca_sum_right,  // w.h = w.h + g
  cca_sum_left,   // w.h = g + w.h
  alt7,           // (uv)^w h = (uv)^w u h
  alt8,           // (uv)^w = v (uv)^w
  alt9_middle,    // (u(_+vwh))^w g = (u(_+vwh))^w u(_+vh) g
  alt9_right,     // (u(_+vwh))^w g = u(_+vh) (u(_+vwh))^w g
  insertion,      // w h in X but w v h not in X
  commutative,    // g + h = h + g
};

std::string to_string(IdentityKind k);
/// The equation in text form, e.g. "u^w v = u^w".
std::string equation(IdentityKind k);

struct WitnessElement {
  std::string role;  // u, v, w, h, g, n, m
  bool in_h = false;
  Elem value = 0;
  std::string name;        // element name in the subject algebra
  std::string expression;  // shortest known realizing forest or context
};

struct Witness {
  IdentityKind kind = IdentityKind::pt_left;
  std::vector<WitnessElement> elements;
  bool sides_in_h = false;
  Elem left = 0, right = 0;  // evaluated sides

  const WitnessElement& get(std::string_view role) const;
};

/// Both sides of the identity instance, recomputed with algebra operations.
std::pair<Elem, Elem> evaluate(const ForestAlgebra& algebra, const Witness& w);
/// True when re-evaluation reproduces the recorded, distinct sides (for
/// insertion witnesses: the left side accepted and the right one not).
bool replay(const Recognizer& subject, const Witness& w);

struct Provenance {
  int h_input = 0, v_input = 0;
  int h_syntactic = 0, v_syntactic = 0;
  std::optional<int> h_reduced, v_reduced;  // tree variants
  std::string relation;                     // piece relation used, if any
  std::size_t relation_pairs = 0;
  std::optional<std::size_t> bound;         // horizontal enumeration bound
  std::vector<std::string> notes;
};

struct Verdict {
  Property property = Property::PT;
  Truth holds = Truth::yes;
  std::optional<Witness> witness;
  Provenance provenance;
  /// The algebra the witness refers to (syntactic, or tree-reduced).
  std::shared_ptr<const Recognizer> subject;
};

struct DecideOptions {
  std::size_t horizontal_bound = 4;
  Limits limits;
};

/// Shares the syntactic recognizer and derived data between properties.
class Classifier {
 public:
  explicit Classifier(const Recognizer& input, DecideOptions options = {});
  explicit Classifier(const ForestAutomaton& automaton, DecideOptions options = {});

  Verdict decide(Property p);
  const Recognizer& syntactic_recognizer() const { return *syntactic_; }
  /// Tree reduction of the syntactic recognizer; throws InvalidInput when the
  /// language is not a tree language.
  std::shared_ptr<const Recognizer> reduced();

 private:
  Verdict pt(const std::shared_ptr<const Recognizer>& subject, Property p);
  Verdict pt_alt();
  Verdict cca(const std::shared_ptr<const Recognizer>& subject, Property p);
  Verdict cca_alt();
  Verdict sigma1();
  Verdict commutative();
  Verdict horizontal();
  Verdict base(Property p, const std::shared_ptr<const Recognizer>& subject) const;
  void realize(Verdict& v);

  DecideOptions options_;
  int h_input_ = 0, v_input_ = 0;
  std::shared_ptr<const Recognizer> syntactic_;
  std::shared_ptr<const Recognizer> reduced_;
};

Verdict decide(const Recognizer& r, Property p, const DecideOptions& options = {});
Verdict decide_pt(const Recognizer& r);
Verdict decide_pt_alt(const Recognizer& r);
Verdict decide_cca(const Recognizer& r);
Verdict decide_cca_alt(const Recognizer& r);
Verdict decide_sigma1(const Recognizer& r);
Verdict decide_commutative(const Recognizer& r);
Verdict decide_comm_pt(const Recognizer& r);
Verdict decide_comm_cca(const Recognizer& r);
Verdict decide_tree_pt(const Recognizer& r);
Verdict decide_tree_cca(const Recognizer& r);
Verdict decide_horizontal(const Recognizer& r, std::size_t bound);

}  // namespace forestalg
