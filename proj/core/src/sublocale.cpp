#include "locale_lab/sublocale.hpp"

#include <algorithm>
#include <unordered_set>

#include "locale_lab/frame.hpp"

namespace locale_lab {

std::optional<SublocaleFailure> sublocale_failure(const Frame& L, const Bitset& s) {
  if (s.size() != L.size()) return SublocaleFailure{"size mismatch", {}};
  if (!s.test(L.top())) return SublocaleFailure{"missing top", {L.top()}};
  const auto members = s.indices();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Elem x = static_cast<Elem>(members[i]), y = static_cast<Elem>(members[j]);
      if (!s.test(L.meet(x, y))) return SublocaleFailure{"meet", {x, y}};
    }
  for (Elem a = 0; a < L.size(); ++a)
    for (auto x : members)
      if (!s.test(L.arrow(a, static_cast<Elem>(x)))) return SublocaleFailure{"arrow", {a, static_cast<Elem>(x)}};
  return std::nullopt;
}

bool is_sublocale(const Frame& L, const Bitset& candidate) { return !sublocale_failure(L, candidate); }

Sublocale make_sublocale(const Frame& L, Bitset members) {
  if (auto f = sublocale_failure(L, members))
    throw LocaleError(ErrorKind::InvalidInput, "not a sublocale (" + f->reason + ")", L.labels_of(f->witness));
  return Sublocale{L, std::move(members)};
}

Sublocale open_sublocale(const Frame& L, Elem a) {
  Bitset m(L.size());
  for (Elem b = 0; b < L.size(); ++b) m.set(L.arrow(a, b));
  return Sublocale{L, std::move(m)};
}

Sublocale closed_sublocale(const Frame& L, Elem a) { return Sublocale{L, L.up(a)}; }

Sublocale least_sublocale(const Frame& L) {
  Bitset m(L.size());
  m.set(L.top());
  return Sublocale{L, std::move(m)};
}

Sublocale whole_sublocale(const Frame& L) { return Sublocale{L, Bitset::full(L.size())}; }

Bitset meet_closure(const Frame& L, Bitset xs) {
  xs.set(L.top());
  std::vector<Elem> all;
  xs.for_each([&](std::size_t x) { all.push_back(static_cast<Elem>(x)); });
  // Every new element is met against every element seen so far.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Elem m = L.meet(all[i], all[j]);
      if (!xs.test(m)) {
        xs.set(m);
        all.push_back(m);
      }
    }
  }
  return xs;
}

Sublocale generated_sublocale(const Frame& L, const Bitset& seeds) {
  Bitset arrows(L.size());
  seeds.for_each([&](std::size_t x) {
    for (Elem a = 0; a < L.size(); ++a) arrows.set(L.arrow(a, static_cast<Elem>(x)));
  });
  return Sublocale{L, meet_closure(L, std::move(arrows))};
}

Sublocale sublocale_meet(const Frame& L, std::span<const Sublocale> family) {
  Bitset m = Bitset::full(L.size());
  for (const auto& s : family) m &= s.members;
  return Sublocale{L, std::move(m)};
}

Sublocale sublocale_join(const Frame& L, std::span<const Sublocale> family) {
  Bitset u(L.size());
  for (const auto& s : family) u |= s.members;
  return Sublocale{L, meet_closure(L, std::move(u))};
}

Sublocale closure(const Sublocale& S) { return closed_sublocale(S.parent, S.parent.meet_all(S.members)); }

Sublocale fitting(const Sublocale& S) {
  const Frame& L = S.parent;
  Bitset m = Bitset::full(L.size());
  for (Elem a = 0; a < L.size(); ++a) {
    Sublocale o = open_sublocale(L, a);
    if (S.members.is_subset_of(o.members)) m &= o.members;
  }
  return Sublocale{L, std::move(m)};
}

bool is_closed(const Sublocale& S) { return closure(S) == S; }
bool is_fitted(const Sublocale& S) { return fitting(S) == S; }

Sublocale one_point(const Frame& L, Elem p) {
  auto ps = primes(L);
  if (!std::binary_search(ps.begin(), ps.end(), p))
    throw LocaleError(ErrorKind::InvalidInput, "one-point sublocale needs a prime", {L.label(p)});
  Bitset m(L.size());
  m.set(p);
  m.set(L.top());
  return make_sublocale(L, std::move(m));
}

Elem nucleus_image(const Sublocale& S, Elem a) {
  const Frame& L = S.parent;
  Elem nu = L.meet_all(S.members & L.up(a));
  S.members.for_each([&](std::size_t s) {
    if (L.arrow(nu, static_cast<Elem>(s)) != L.arrow(a, static_cast<Elem>(s)))
      throw LocaleError(ErrorKind::InternalInconsistency, "(LM) fails for the nucleus image",
                        {L.label(a), L.label(static_cast<Elem>(s))});
  });
  return nu;
}

namespace {

void sort_sublocales(std::vector<Sublocale>& v) {
  std::sort(v.begin(), v.end(), [](const Sublocale& a, const Sublocale& b) {
    auto ca = a.members.count(), cb = b.members.count();
    if (ca != cb) return ca < cb;
    return a.members < b.members;
  });
}

}  // namespace

std::vector<Sublocale> enumerate_sublocales(const Frame& L, std::size_t max_elements) {
  if (L.size() > max_elements) throw_bound("sublocale enumeration frame size", L.size(), max_elements);
  std::vector<Bitset> principal;
  for (Elem x = 0; x < L.size(); ++x) {
    Bitset seed(L.size());
    seed.set(x);
    principal.push_back(generated_sublocale(L, seed).members);
  }
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> frontier{least_sublocale(L).members};
  seen.insert(frontier.front());
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Bitset current = frontier[head];
    Bitset missing = Bitset::full(L.size()) - current;
    missing.for_each([&](std::size_t x) {
      Bitset next = meet_closure(L, principal[x] | current);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    });
  }
  std::vector<Sublocale> out;
  out.reserve(frontier.size());
  for (auto& m : frontier) out.push_back(Sublocale{L, std::move(m)});
  sort_sublocales(out);
  return out;
}

std::vector<Sublocale> enumerate_sublocales_raw(const Frame& L) {
  const std::size_t n = L.size();
  if (n > kRawSublocaleScanLimit) throw_bound("raw sublocale scan frame size", n, kRawSublocaleScanLimit);
  std::vector<Sublocale> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Bitset m(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((bits >> i) & 1U) m.set(i);
    if (is_sublocale(L, m)) out.push_back(Sublocale{L, std::move(m)});
  }
  sort_sublocales(out);
  return out;
}

Frame induced_frame(const Sublocale& S) {
  const Frame& L = S.parent;
  std::vector<Elem> members;
  S.members.for_each([&](std::size_t x) { members.push_back(static_cast<Elem>(x)); });
  const std::size_t k = members.size();
  std::vector<Bitset> rows(k, Bitset(k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(L.label(members[i]));
    for (std::size_t j = 0; j < k; ++j)
      if (L.leq(members[i], members[j])) rows[i].set(j);
  }
  Frame F = validate_frame(std::move(rows), std::move(labels));
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) {
      if (members[F.meet(i, j)] != L.meet(members[i], members[j]))
        throw LocaleError(ErrorKind::InternalInconsistency, "sublocale meet differs from the parent meet");
      if (members[F.join(i, j)] != nucleus_image(S, L.join(members[i], members[j])))
        throw LocaleError(ErrorKind::InternalInconsistency, "sublocale join differs from nu(parent join)");
    }
  return F;
}

}  // namespace locale_lab
