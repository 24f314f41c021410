#pragma once

// Piece relations on concrete forests and contexts, in every variant. These
// are the semantic ground truth the algebraic modules are checked against.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forestalg/error.hpp"
#include "forestalg/forest.hpp"

namespace forestalg {

enum class PieceVariant { plain, cca, horizontal, commutative, commutative_cca };

std::string to_string(PieceVariant v);
PieceVariant parse_variant(std::string_view name);

/// Injective node map from the piece into the host. For the commutative
/// variants the map goes into the original host nodes after the sibling
/// reordering that makes the embedding order-preserving.
struct Embedding {
  std::vector<NodeId> image;
};

std::optional<Embedding> find_embedding(const Forest& s, const Forest& t, PieceVariant variant,
                                        const Limits& limits = {});
bool is_piece(const Forest& s, const Forest& t, PieceVariant variant, const Limits& limits = {});

/// As above for contexts; the hole is a distinguished leaf mapped to the hole.
std::optional<Embedding> find_context_embedding(const Context& p, const Context& q,
                                                PieceVariant variant, const Limits& limits = {});
bool is_context_piece(const Context& p, const Context& q, PieceVariant variant,
                      const Limits& limits = {});

/// Removing one node and splicing its children into its place.
struct DeletionStep {
  NodeId node;  // address in the forest before this step
  Label label;
};

/// Whether a node may be deleted under the variant's closure rule: any node
/// (plain), a node with at most one child (cca), a leaf or a node without
/// siblings (horizontal). Holes are never deleted.
bool deletable(const NodeTable& table, int x, PieceVariant variant);

/// Shortest single-node deletion sequence turning t into s, if any. Only
/// plain, cca and horizontal are defined by deletion.
std::optional<std::vector<DeletionStep>> deletion_sequence(const Forest& s, const Forest& t,
                                                           PieceVariant variant,
                                                           const Limits& limits = {});
/// Every forest reachable from t by deletions, t included, as canonical text.
std::vector<std::string> deletion_closure(const Forest& t, PieceVariant variant,
                                          const Limits& limits = {});
/// Context analogue of deletion_closure (the hole is never removed).
std::vector<Context> context_deletion_closure(const Context& q, PieceVariant variant,
                                              const Limits& limits = {});

/// Siblings sorted recursively by rendering; representative of the class of
/// all reorderings.
Forest canonical_order(const Forest& f);
Context canonical_order(const Context& p);

/// Distinct sibling reorderings of t. Throws CapExceeded past the limit.
std::vector<Forest> reorderings(const Forest& t, const Limits& limits = {});

/// All variant-pieces of t with at most n nodes, sorted, deduplicated; the
/// commutative variants return canonical_order representatives.
std::vector<Forest> enumerate_pieces(const Forest& t, std::size_t n, PieceVariant variant,
                                     const Limits& limits = {});
/// Canonical text of the pieces above; the signature used by sim_n.
std::vector<std::string> piece_signature(const Forest& t, std::size_t n, PieceVariant variant,
                                         const Limits& limits = {});
/// Context pieces of q (hole kept) with at most n nodes, hole excluded.
std::vector<Context> enumerate_context_pieces(const Context& q, std::size_t n,
                                              PieceVariant variant, const Limits& limits = {});

/// s and t have the same variant-pieces of size at most n.
bool sim_n(const Forest& s, const Forest& t, std::size_t n, PieceVariant variant,
           const Limits& limits = {});

}  // namespace forestalg
