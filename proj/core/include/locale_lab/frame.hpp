#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locale_lab/bitset.hpp"
#include "locale_lab/error.hpp"

namespace locale_lab {

/// Index of an element inside a Frame.
using Elem = std::uint32_t;
using OrderPair = std::pair<Elem, Elem>;

/// Default element cap for corpus frames.
inline constexpr std::size_t kDefaultMaxFrame = 32;
/// Hard cap for any validated frame, tensors included.
inline constexpr std::size_t kDefaultValidationLimit = 4096;
/// Up to this size distributivity is checked over all triples; larger frames
/// use the join-irreducible criterion.
inline constexpr std::size_t kBruteForceDistributivityLimit = 128;

/// A finite frame: a bounded distributive lattice with cached order, meet,
/// join and Heyting arrow tables.
///
/// Frames are immutable once validated and cheap to copy (the tables are
/// shared). Every finite distributive lattice is a frame: arbitrary joins are
/// finite joins and finite meets distribute over them.
class Frame {
 public:
  /// The trivial frame (one element, bottom == top).
  Frame();

  std::size_t size() const;
  Elem bottom() const;
  Elem top() const;
  bool is_trivial() const { return bottom() == top(); }
  /// True when both handles share the same validated tables.
  bool same_as(const Frame& other) const { return d_ == other.d_; }

  bool leq(Elem a, Elem b) const;
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const;
  Elem join(Elem a, Elem b) const;
  /// Heyting arrow: the largest c with c & a <= b.
  Elem arrow(Elem a, Elem b) const;
  Elem pseudocomplement(Elem a) const { return arrow(a, bottom()); }

  /// Folds of the binary operations; the empty meet is top, the empty join bottom.
  Elem meet_all(std::span<const Elem> xs) const;
  Elem join_all(std::span<const Elem> xs) const;
  Elem meet_all(const Bitset& xs) const;
  Elem join_all(const Bitset& xs) const;

  /// {x : x <= a} and {x : a <= x}.
  const Bitset& down(Elem a) const;
  const Bitset& up(Elem a) const;

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<OrderPair> covers() const;

  const std::string& label(Elem a) const;
  const std::vector<std::string>& labels() const;
  std::optional<Elem> find(std::string_view label) const;
  /// Like find(), but throws InvalidInput for unknown labels.
  Elem at(std::string_view label) const;

  std::vector<std::string> labels_of(std::span<const Elem> xs) const;
  std::vector<std::string> labels_of(const Bitset& xs) const;

  friend Frame validate_frame(std::vector<Bitset> leq_rows, std::vector<std::string> labels,
                              std::size_t max_elements);

  struct Data;

 private:
  explicit Frame(std::shared_ptr<const Data> data) : d_(std::move(data)) {}
  std::shared_ptr<const Data> d_;
};

/// Validates a candidate order on `n` elements and builds a Frame.
///
/// `relation` lists pairs (a, b) meaning a <= b; covers suffice, the
/// reflexive-transitive closure is taken. Throws LocaleError with kind
/// NotAPartialOrder, NoBoundedLattice or NotDistributive (each with a witness),
/// or BoundExceeded when n > max_elements. Empty labels default to indices.
///
/// The NotDistributive witness (a, b, c) satisfies a & (b v c) !=
/// (a & b) v (a & c). Up to kBruteForceDistributivityLimit elements it is the
/// least such triple in index order.
Frame validate_frame(std::size_t n, std::span<const OrderPair> relation,
                     std::vector<std::string> labels = {},
                     std::size_t max_elements = kDefaultValidationLimit);

/// Same, with the relation given row-wise: leq_rows[a] contains b when a <= b.
Frame validate_frame(std::vector<Bitset> leq_rows, std::vector<std::string> labels = {},
                     std::size_t max_elements = kDefaultValidationLimit);

inline Elem heyting_arrow(const Frame& L, Elem a, Elem b) { return L.arrow(a, b); }
inline Elem pseudocomplement(const Frame& L, Elem a) { return L.pseudocomplement(a); }

/// Elements p != 1 with x & y <= p implying x <= p or y <= p. Sorted.
std::vector<Elem> primes(const Frame& L);

/// {a* : a in L}, computed alongside {a : a = a**}; throws
/// InternalInconsistency if the two descriptions disagree. Sorted.
std::vector<Elem> booleanization(const Frame& L);

/// Booleanization is exactly {0, 1} and 0 != 1.
bool is_irreducible(const Frame& L);

/// Every element is complemented (the Booleanization is all of L).
bool is_boolean(const Frame& L);

}  // namespace locale_lab
