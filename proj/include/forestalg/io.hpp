#pragma once

// JSON formats: forest automata, raw algebra tables, verdicts and relation
// dumps. Serialization is canonical, so files written here round-trip
// byte for byte.

#include <optional>
#include <string>

#include <json.hpp>

#include "forestalg/algebra.hpp"
#include "forestalg/decide.hpp"
#include "forestalg/oracle.hpp"
#include "forestalg/piecerel.hpp"

namespace forestalg {

using Json = nlohmann::ordered_json;

/// {alphabet, states, zero, plus, delta, accept}; states and accept by name.
Json to_json(const ForestAutomaton& a);
ForestAutomaton automaton_from_json(const Json& j);

/// {alphabet, H, V, act, insL, insR, letters, accept}; act is |V| rows of |H|
/// entries, letters align with alphabet, accept lists H names.
Json to_json(const Recognizer& r);
/// Validates the tables with check_axioms; throws InvalidInput on failure.
Recognizer recognizer_from_json(const Json& j);

/// Either form above. The automaton is kept when the file held one; the
/// recognizer is then built from its minimized form.
struct LoadedRecognizer {
  std::optional<ForestAutomaton> automaton;
  Recognizer recognizer;
};
LoadedRecognizer load_recognizer(const Json& j, const Limits& limits = {});
LoadedRecognizer load_recognizer_file(const std::string& path, const Limits& limits = {});

Json to_json(const Verdict& v);
Json to_json(const Witness& w, const ForestAlgebra& algebra);
Json to_json(const PieceRelation& rel, const ForestAlgebra& algebra, bool with_rules = false);
Json to_json(const Refutation& r);

/// Two-space indented text with a trailing newline; arrays of scalars are
/// kept on one line.
std::string dump(const Json& j);

}  // namespace forestalg
