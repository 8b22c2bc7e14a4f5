#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "locale_lab/bitset.hpp"
#include "locale_lab/frame.hpp"

namespace locale_lab {

inline constexpr std::size_t kDefaultMaxPoset = 5;
/// Largest k the raw relation scan accepts.
inline constexpr std::size_t kRawPosetScanLimit = 4;
/// Largest point count whose down- or up-set lattice we build by subset scan.
inline constexpr std::size_t kMaxLatticePoints = 12;

/// A finite poset. leq[a] holds every b with a <= b. Also used as the
/// specialization order of a finite T0 space.
struct FinPoset {
  std::size_t n = 0;
  std::vector<Bitset> leq;
  std::vector<std::string> labels;

  bool le(std::size_t a, std::size_t b) const { return leq[a].test(b); }
};

/// Reflexive-transitive closure of `relation`; throws NotAPartialOrder on a
/// cycle. Empty labels default to p0, p1, ...
FinPoset make_poset(std::size_t n, std::span<const OrderPair> relation, std::vector<std::string> labels = {});

FinPoset chain_poset(std::size_t n);
FinPoset antichain_poset(std::size_t n);

std::vector<OrderPair> poset_covers(const FinPoset& P);
/// Canonical form of the Hasse digraph; equal iff the posets are isomorphic.
std::string poset_canonical_form(const FinPoset& P);

/// One poset per isomorphism class on k points, sorted by canonical form.
/// Built by adding a new maximal point above every downset of each class on
/// k - 1 points, then deduplicating. Throws BoundExceeded when k > bound.
std::vector<FinPoset> enumerate_posets(std::size_t k, std::size_t bound = kDefaultMaxPoset);

/// Reference enumeration: every relation on k labelled points, filtered to
/// partial orders and deduplicated. Same order as enumerate_posets.
std::vector<FinPoset> enumerate_posets_raw(std::size_t k);

/// Down-closed subsets of P ordered by inclusion. Each element is labelled by
/// its maximal points joined with '+', the empty downset by "0".
Frame downset_frame(const FinPoset& P);

/// Opens of the finite T0 space whose specialization order is X, where x <= y
/// means x lies in the closure of {y}; opens are then the up-closed sets.
/// Labels name the minimal points of each open, the empty open is "0".
Frame alexandrov_frame(const FinPoset& X);

/// Componentwise order on X x Y, labels "(x,y)".
FinPoset product_space(const FinPoset& X, const FinPoset& Y);

/// Specialization order of the Sierpinski space: the closed point "c" lies
/// below the open point "o".
FinPoset sierpinski_space();

/// Named frames with stable labels: one, two, C3, C4, B4, B8, sierpinski2.
struct Fixture {
  std::string name;
  Frame frame;
};
std::vector<Fixture> fixtures();
Frame fixture(std::string_view name);

struct CorpusEntry {
  std::string id;
  Frame frame;
  std::string canonical;
  std::string hash;
  /// "fixture" or "poset:<k>".
  std::string origin;
};

/// Downset frames of every poset with at most max_poset points (k >= 1), plus
/// the fixtures, kept when at most max_frame elements and deduplicated by
/// canonical form. A fixture lends its name and labels to its class; other
/// entries are named L<size>_<first 8 hash digits>. Sorted by (size, canonical
/// form).
std::vector<CorpusEntry> build_corpus(std::size_t max_poset = kDefaultMaxPoset,
                                      std::size_t max_frame = kDefaultMaxFrame);

/// One JSON object per line: id, elements, leq (covers), canonical_hash.
void write_corpus_jsonl(std::ostream& out, std::span<const CorpusEntry> corpus);
/// Reads the same format back; every frame is re-validated and its hash
/// recomputed (a mismatch throws InternalInconsistency).
std::vector<CorpusEntry> read_corpus_jsonl(std::istream& in);

}  // namespace locale_lab
