#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "locale_lab/frame.hpp"

namespace locale_lab {

inline constexpr std::size_t kDefaultCanonicalBudget = 200'000;

/// Canonical form of a directed graph on `n` vertices, used on Hasse
/// diagrams. Two graphs get equal strings iff they are isomorphic.
///
/// Individualization-refinement: vertices start colored by (in-degree,
/// out-degree, depth), colors are refined to equitability, and non-singleton
/// cells are split by backtracking. The lexicographically least relabelled
/// edge list over all leaves wins. Automorphisms found at leaves prune
/// branches that lie in the same orbit. Throws BoundExceeded once more than
/// `node_budget` search nodes are visited.
std::string canonical_digraph_form(std::size_t n, std::span<const OrderPair> edges,
                                   std::size_t node_budget = kDefaultCanonicalBudget);

/// Canonical form of the covering digraph; equal iff the lattices are isomorphic.
std::string canonical_form(const Frame& L, std::size_t node_budget = kDefaultCanonicalBudget);

/// 64-bit FNV-1a of a canonical form, rendered as 16 hex digits.
std::string canonical_hash(std::string_view form);

}  // namespace locale_lab
