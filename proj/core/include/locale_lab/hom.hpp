#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "locale_lab/frame.hpp"

namespace locale_lab {

inline constexpr std::size_t kDefaultHomNodeBudget = 2'000'000;

/// A map between finite frames preserving 0, 1, binary meets and binary
/// joins. On finite frames this is the same as a frame homomorphism, since
/// every join is a finite one.
struct FrameHom {
  Frame source;
  Frame target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  friend bool operator==(const FrameHom& h, const FrameHom& k) { return h.map == k.map; }
};

/// Checks the homomorphism conditions for an arbitrary element map.
bool is_frame_hom(const Frame& L, const Frame& M, std::span<const Elem> map);

/// All homomorphisms L -> M, in lexicographic order of their images along a
/// fixed linear extension of L. Throws BoundExceeded when the backtracking
/// visits more than `node_budget` partial assignments.
std::vector<FrameHom> enumerate_homs(const Frame& L, const Frame& M,
                                     std::size_t node_budget = kDefaultHomNodeBudget);

/// Pointwise order h <= k in the target.
bool hom_leq(const FrameHom& h, const FrameHom& k);

}  // namespace locale_lab
