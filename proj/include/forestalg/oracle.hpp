#pragma once

// Brute-force semantic checks at small scale: exhaustive forest and context
// enumeration, refuters for piecewise testability and closure under
// insertion, piece-set recognizers and random automata.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "forestalg/algebra.hpp"
#include "forestalg/pieces.hpp"

namespace forestalg {

/// Size first, then canonical text with '+' < '(' < ')' < label bytes.
bool enumeration_less(const std::vector<Node>& a, const std::vector<Node>& b);

/// Every forest with at most max_size nodes, exactly once, in enumeration
/// order. Throws CapExceeded past limits.max_enumeration.
std::vector<Forest> enumerate_forests(const Alphabet& alphabet, std::size_t max_size,
                                      const Limits& limits = {});
/// Every context with at most max_size nodes (hole excluded), same order.
std::vector<Context> enumerate_contexts(const Alphabet& alphabet, std::size_t max_size,
                                        const Limits& limits = {});

enum class RefutationKind { sim_n_violation, insertion_violation };

struct Refutation {
  RefutationKind kind = RefutationKind::sim_n_violation;
  // sim_n_violation: s ~n t, s in L, t not in L.
  Forest s, t;
  // insertion_violation: p t in L, p q t not in L (t is shared with above).
  Context p, q;
  PieceVariant variant = PieceVariant::plain;
  std::size_t n = 0;
  std::size_t max_size = 0;
};

/// First pair (in enumeration order of the later forest) of forests up to
/// max_size with the same variant-pieces of size <= n and different
/// membership.
std::optional<Refutation> refute_pt(const Recognizer& r, std::size_t n, std::size_t max_size,
                                    PieceVariant variant = PieceVariant::plain,
                                    const Limits& limits = {});

/// First forest s' up to max_size and node x of s' such that deleting x gives
/// a member while s' is not one. Reported as (p, a(_), t) with s' = p a t.
std::optional<Refutation> refute_sigma1(const Recognizer& r, std::size_t max_size,
                                        const Limits& limits = {});

/// Re-checks membership through the recognizer and, for sim_n violations,
/// piece equivalence through the pieces module.
bool verify_refutation(const Recognizer& r, const Refutation& refutation, const Limits& limits = {});

/// Which pieces a piece-set state tracks.
enum class PieceUniverse {
  full,      // every piece of size <= n
  relevant,  // pieces of the target, their children and summands
  automatic, // full for n <= 2, relevant above
};

/// Automaton whose states are the sets of variant-pieces (plain or cca) of
/// size <= n of the input, restricted to the universe, accepting the sets
/// that contain `target`. Transitions are computed from the piece sets; every
/// newly found state is re-checked against direct enumeration on a realizing
/// forest. Throws CapExceeded past limits.max_states.
ForestAutomaton piece_automaton(const Alphabet& alphabet, std::size_t n, PieceVariant variant,
                                const Forest& target,
                                PieceUniverse universe = PieceUniverse::automatic,
                                const Limits& limits = {});
/// Recognizer of { t : target is a variant-piece of t }.
Recognizer piece_algebra(const Alphabet& alphabet, std::size_t n, PieceVariant variant,
                         const Forest& target, PieceUniverse universe = PieceUniverse::automatic,
                         const Limits& limits = {});

/// Random automaton with 1..max_states states: an associative plus with
/// identity found by rejection sampling, random letter maps and accept set.
ForestAutomaton random_automaton(std::mt19937& rng, int max_states, const Alphabet& alphabet);

}  // namespace forestalg
