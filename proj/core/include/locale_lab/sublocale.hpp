#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locale_lab/bitset.hpp"
#include "locale_lab/frame.hpp"

namespace locale_lab {

inline constexpr std::size_t kDefaultSublocaleBound = 12;
/// Largest frame the raw 2^n subset scan accepts.
inline constexpr std::size_t kRawSublocaleScanLimit = 20;

/// A subset of a frame closed under all meets and under x -> (-) for every x.
struct Sublocale {
  Frame parent;
  Bitset members;

  bool contains(Elem a) const { return members.test(a); }
  std::size_t size() const { return members.count(); }
  friend bool operator==(const Sublocale& s, const Sublocale& t) { return s.members == t.members; }
};

/// Why a subset fails to be a sublocale: "missing top", "meet" (witness x, y)
/// or "arrow" (witness a, s with a -> s outside).
struct SublocaleFailure {
  std::string reason;
  std::vector<Elem> witness;
};

/// First failing condition in index order, or nullopt for a sublocale.
std::optional<SublocaleFailure> sublocale_failure(const Frame& L, const Bitset& candidate);
bool is_sublocale(const Frame& L, const Bitset& candidate);

/// Wraps a checked subset; throws InvalidInput if it is not a sublocale.
Sublocale make_sublocale(const Frame& L, Bitset members);

/// o(a) = {a -> b : b in L}.
Sublocale open_sublocale(const Frame& L, Elem a);
/// c(a) = up-set of a.
Sublocale closed_sublocale(const Frame& L, Elem a);
/// The least sublocale {1}.
Sublocale least_sublocale(const Frame& L);
Sublocale whole_sublocale(const Frame& L);

/// Closure of a subset under binary meets, with top added (the empty meet).
Bitset meet_closure(const Frame& L, Bitset xs);

/// Least sublocale containing `seeds`: meet closure of {a -> x : a in L, x in seeds}.
Sublocale generated_sublocale(const Frame& L, const Bitset& seeds);

/// Intersection; the empty family gives L.
Sublocale sublocale_meet(const Frame& L, std::span<const Sublocale> family);
/// Join in S(L). Computed as the meet closure of the union: the union of
/// sublocales is closed under x -> (-), and x -> (-) preserves meets, so the
/// closure is already a sublocale and equals {meet M : M subset of union}.
/// The empty family gives {1}.
Sublocale sublocale_join(const Frame& L, std::span<const Sublocale> family);

/// c(meet S): the least closed sublocale containing S.
Sublocale closure(const Sublocale& S);
/// Intersection of the open sublocales containing S.
Sublocale fitting(const Sublocale& S);
bool is_closed(const Sublocale& S);
bool is_fitted(const Sublocale& S);

/// b(p) = {p, 1}; throws InvalidInput when p is not prime.
Sublocale one_point(const Frame& L, Elem p);

/// The frame surjection onto S: the least member above a. Checks
/// nu(a) -> s == a -> s for all members s (throws InternalInconsistency).
Elem nucleus_image(const Sublocale& S, Elem a);

/// All sublocales, by closure-based generation from {1}: each found sublocale
/// is extended by one missing element and re-closed. Sorted by (size, members).
/// Throws BoundExceeded when |L| > max_elements.
std::vector<Sublocale> enumerate_sublocales(const Frame& L, std::size_t max_elements = kDefaultSublocaleBound);

/// Reference enumeration by scanning all 2^n subsets; same ordering.
std::vector<Sublocale> enumerate_sublocales_raw(const Frame& L);

/// The frame structure a sublocale carries: inherited order and meets, joins
/// given by nu_S of the parent join. Validated through validate_frame.
/// Labels are the parent's labels.
Frame induced_frame(const Sublocale& S);

}  // namespace locale_lab
