#pragma once

// Bundled example languages. Each entry has an automaton, a direct membership
// predicate written independently of it, and the verdicts it must produce.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "forestalg/algebra.hpp"
#include "forestalg/decide.hpp"

namespace forestalg {

struct CorpusEntry {
  std::string name;
  std::string description;
  ForestAutomaton automaton;
  std::function<bool(const Forest&)> predicate;
  bool tree_language = false;
  std::map<Property, Truth> expected;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

/// Individual automata, also used directly by tests.
ForestAutomaton accept_all_automaton(const Alphabet& alphabet);
ForestAutomaton abcd_automaton();
ForestAutomaton all_trees_aa_automaton();
ForestAutomaton first_root_automaton();
ForestAutomaton even_trees_automaton();

}  // namespace forestalg
