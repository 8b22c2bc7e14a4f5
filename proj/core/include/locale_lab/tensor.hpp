#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "locale_lab/bitset.hpp"
#include "locale_lab/frame.hpp"
#include "locale_lab/sublocale.hpp"

namespace locale_lab {

/// Default cap on |L| * |M| for coproduct construction.
inline constexpr std::size_t kDefaultTensorBound = 64;
/// Largest |L| * |M| the raw downset scan accepts.
inline constexpr std::size_t kRawCpIdealScanLimit = 24;

/// Membership matrices over L x M are stored row-major: cell (a, b) is bit
/// a * |M| + b. Transposition swaps the roles of L and M.
inline std::size_t cell_index(const Frame& M, Elem a, Elem b) { return a * M.size() + b; }

/// Least cp-ideal containing `cells`: the least fixed point of downward
/// closure, the empty-join condition (all (0, b) and (a, 0)), and join closure
/// of each row and column. Finite index sets reduce the join condition to
/// "the join of the whole row (column) slice is in D".
Bitset saturate(const Frame& L, const Frame& M, Bitset cells);

/// Downset ↓(a, b) together with all cells having a zero coordinate.
Bitset basic_rect_cells(const Frame& L, const Frame& M, Elem a, Elem b);

/// Downward closed in both coordinates and saturated.
bool is_cp_ideal(const Frame& L, const Frame& M, const Bitset& cells);

/// Every cp-ideal of L x M, generated as the closure of the basic rectangles
/// under saturated unions. Sorted by (size, bits).
std::vector<Bitset> enumerate_cp_ideals(const Frame& L, const Frame& M, std::size_t bound = kDefaultTensorBound);

/// Reference enumeration: scans all 2^(|L||M|) subsets of L x M.
std::vector<Bitset> enumerate_cp_ideals_raw(const Frame& L, const Frame& M);

/// The frame coproduct L (+) M, its elements being the cp-ideals of L x M
/// ordered by inclusion.
class TensorFrame {
 public:
  /// Throws BoundExceeded when |L| * |M| > bound.
  static TensorFrame build(const Frame& L, const Frame& M, std::size_t bound = kDefaultTensorBound);

  const Frame& left() const { return left_; }
  const Frame& right() const { return right_; }
  const Frame& frame() const { return frame_; }
  std::size_t size() const { return frame_.size(); }
  /// Built from a single frame with itself, so the diagonal is available.
  bool is_square() const { return left_.same_as(right_); }

  const Bitset& cells(Elem d) const { return ideals_[d]; }
  bool contains(Elem d, Elem a, Elem b) const { return ideals_[d].test(cell_index(right_, a, b)); }
  std::optional<Elem> find(const Bitset& cells) const;
  /// Element whose cells are saturate(cells).
  Elem saturated(const Bitset& cells) const;

  /// a (+) b; the closed formula is checked against saturate({(a, b)}).
  Elem basic_rect(Elem a, Elem b) const;
  /// iota_1(a) = a (+) 1, iota_2(b) = 1 (+) b.
  Elem inject_left(Elem a) const;
  Elem inject_right(Elem b) const;
  /// pi_1(D) = join {a : (a, 1) in D}; pi_2 symmetrically.
  Elem project_left(Elem d) const;
  Elem project_right(Elem d) const;

  /// The pairs of an element with no zero coordinate, as label pairs.
  std::vector<std::pair<std::string, std::string>> pair_labels(Elem d) const;

 private:
  TensorFrame(Frame L, Frame M, std::vector<Bitset> ideals);

  Frame left_, right_, frame_;
  std::vector<Bitset> ideals_;
  std::unordered_map<Bitset, Elem, BitsetHash> index_;
};

/// (1, 1)(a) = {(u, v) : u & v <= a}, as an element of L (+) L.
Elem diagonal_point(const TensorFrame& LL, Elem a);

/// D_L, the image of a -> (1, 1)(a). Checked to be a sublocale of L (+) L and
/// the map checked injective (throws InternalInconsistency otherwise).
Sublocale diagonal(const TensorFrame& LL);

/// d_L = {(a, b) : a & b = 0}, cross-checked against the join of the basic
/// rectangles a (+) b with a & b = 0.
Elem d_element(const TensorFrame& LL);

}  // namespace locale_lab
