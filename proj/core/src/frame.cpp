#include "locale_lab/frame.hpp"

#include <algorithm>
#include <unordered_map>

namespace locale_lab {

struct Frame::Data {
  std::size_t n = 1;
  Elem bottom = 0;
  Elem top = 0;
  std::vector<Bitset> up;    // up[a] = {x : a <= x}
  std::vector<Bitset> down;  // down[a] = {x : x <= a}
  std::vector<Elem> meet;    // row-major n*n
  std::vector<Elem> join;
  std::vector<Elem> arrow;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Elem> index;
};

namespace {

std::shared_ptr<const Frame::Data> trivial_data() {
  static const auto data = [] {
    Frame::Data d;
    Bitset one(1);
    one.set(0);
    d.up = {one};
    d.down = {one};
    d.meet = d.join = d.arrow = {0};
    d.labels = {"1"};
    d.index = {{"1", 0}};
    return std::make_shared<const Frame::Data>(std::move(d));
  }();
  return data;
}

}  // namespace

Frame::Frame() : d_(trivial_data()) {}

std::size_t Frame::size() const { return d_->n; }
Elem Frame::bottom() const { return d_->bottom; }
Elem Frame::top() const { return d_->top; }
bool Frame::leq(Elem a, Elem b) const { return d_->up[a].test(b); }
Elem Frame::meet(Elem a, Elem b) const { return d_->meet[a * d_->n + b]; }
Elem Frame::join(Elem a, Elem b) const { return d_->join[a * d_->n + b]; }
Elem Frame::arrow(Elem a, Elem b) const { return d_->arrow[a * d_->n + b]; }
const Bitset& Frame::down(Elem a) const { return d_->down[a]; }
const Bitset& Frame::up(Elem a) const { return d_->up[a]; }
const std::string& Frame::label(Elem a) const { return d_->labels[a]; }
const std::vector<std::string>& Frame::labels() const { return d_->labels; }

Elem Frame::meet_all(std::span<const Elem> xs) const {
  Elem r = top();
  for (Elem x : xs) r = meet(r, x);
  return r;
}

Elem Frame::join_all(std::span<const Elem> xs) const {
  Elem r = bottom();
  for (Elem x : xs) r = join(r, x);
  return r;
}

Elem Frame::meet_all(const Bitset& xs) const {
  Elem r = top();
  xs.for_each([&](std::size_t x) { r = meet(r, static_cast<Elem>(x)); });
  return r;
}

Elem Frame::join_all(const Bitset& xs) const {
  Elem r = bottom();
  xs.for_each([&](std::size_t x) { r = join(r, static_cast<Elem>(x)); });
  return r;
}

std::vector<OrderPair> Frame::covers() const {
  std::vector<OrderPair> out;
  const std::size_t n = size();
  for (Elem a = 0; a < n; ++a) {
    Bitset strictly_above = up(a);
    strictly_above.reset(a);
    strictly_above.for_each([&](std::size_t b) {
      // b covers a iff nothing in (a, b).
      Bitset between = strictly_above & down(static_cast<Elem>(b));
      between.reset(b);
      if (between.none()) out.emplace_back(a, static_cast<Elem>(b));
    });
  }
  return out;
}

std::optional<Elem> Frame::find(std::string_view label) const {
  auto it = d_->index.find(std::string(label));
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

Elem Frame::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw LocaleError(ErrorKind::InvalidInput, "unknown element label", {std::string(label)});
}

std::vector<std::string> Frame::labels_of(std::span<const Elem> xs) const {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (Elem x : xs) out.push_back(label(x));
  return out;
}

std::vector<std::string> Frame::labels_of(const Bitset& xs) const {
  std::vector<std::string> out;
  xs.for_each([&](std::size_t x) { out.push_back(label(static_cast<Elem>(x))); });
  return out;
}

Frame validate_frame(std::size_t n, std::span<const OrderPair> relation, std::vector<std::string> labels,
                     std::size_t max_elements) {
  if (n == 0) throw LocaleError(ErrorKind::InvalidInput, "a frame needs at least one element");
  if (n > max_elements) throw_bound("frame size", n, max_elements);
  std::vector<Bitset> rows(n, Bitset(n));
  for (auto [a, b] : relation) {
    if (a >= n || b >= n) throw LocaleError(ErrorKind::InvalidInput, "relation mentions an element out of range");
    rows[a].set(b);
  }
  return validate_frame(std::move(rows), std::move(labels), max_elements);
}

Frame validate_frame(std::vector<Bitset> up, std::vector<std::string> labels, std::size_t max_elements) {
  const std::size_t n = up.size();
  if (n == 0) throw LocaleError(ErrorKind::InvalidInput, "a frame needs at least one element");
  if (n > max_elements) throw_bound("frame size", n, max_elements);
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw LocaleError(ErrorKind::InvalidInput, "label count does not match element count");

  Frame::Data d;
  d.n = n;
  for (Elem i = 0; i < n; ++i) {
    if (!d.index.emplace(labels[i], i).second)
      throw LocaleError(ErrorKind::InvalidInput, "duplicate element label", {labels[i]});
  }

  // Reflexive-transitive closure (Warshall, row-wise).
  for (Elem i = 0; i < n; ++i) up[i].set(i);
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (i != k && up[i].test(k)) up[i] |= up[k];

  std::vector<Bitset> down(n, Bitset(n));
  for (Elem a = 0; a < n; ++a) up[a].for_each([&](std::size_t b) { down[b].set(a); });

  for (Elem a = 0; a < n; ++a) {
    Bitset both = up[a] & down[a];
    both.reset(a);
    if (both.any()) {
      Elem b = static_cast<Elem>(both.first());
      throw LocaleError(ErrorKind::NotAPartialOrder, "relation is not antisymmetric",
                        {labels[std::min(a, b)], labels[std::max(a, b)]});
    }
  }

  std::optional<Elem> bottom, top;
  for (Elem a = 0; a < n; ++a) {
    if (up[a].count() == n) bottom = a;
    if (down[a].count() == n) top = a;
  }
  if (!bottom) throw LocaleError(ErrorKind::NoBoundedLattice, "no least element");
  if (!top) throw LocaleError(ErrorKind::NoBoundedLattice, "no greatest element");
  d.bottom = *bottom;
  d.top = *top;

  // The meet of a and b is the element whose down set is down(a) & down(b);
  // joins dually.
  std::unordered_map<Bitset, Elem, BitsetHash> by_down, by_up;
  for (Elem a = 0; a < n; ++a) {
    by_down.emplace(down[a], a);
    by_up.emplace(up[a], a);
  }
  d.meet.assign(n * n, 0);
  d.join.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      auto m = by_down.find(down[a] & down[b]);
      if (m == by_down.end())
        throw LocaleError(ErrorKind::NoBoundedLattice, "pair has no meet", {labels[a], labels[b]});
      d.meet[a * n + b] = d.meet[b * n + a] = m->second;
      auto j = by_up.find(up[a] & up[b]);
      if (j == by_up.end())
        throw LocaleError(ErrorKind::NoBoundedLattice, "pair has no join", {labels[a], labels[b]});
      d.join[a * n + b] = d.join[b * n + a] = j->second;
    }
  }

  // Join-irreducibles: non-bottom elements that are not the join of the
  // elements strictly below them.
  Bitset irreducible(n);
  std::vector<Elem> irr;
  for (Elem a = 0; a < n; ++a) {
    if (a == d.bottom) continue;
    Elem below = d.bottom;
    down[a].for_each([&](std::size_t x) {
      if (x != a) below = d.join[below * n + x];
    });
    if (below != a) irreducible.set(a), irr.push_back(a);
  }

  if (n <= kBruteForceDistributivityLimit) {
    for (Elem a = 0; a < n; ++a) {
      const Elem* ma = &d.meet[a * n];
      for (Elem b = 0; b < n; ++b) {
        const Elem* jb = &d.join[b * n];
        const Elem* jab = &d.join[ma[b] * n];
        for (Elem c = 0; c < n; ++c) {
          if (ma[jb[c]] != jab[ma[c]])
            throw LocaleError(ErrorKind::NotDistributive, "meet does not distribute over join",
                              {labels[a], labels[b], labels[c]});
        }
      }
    }
  } else {
    // x -> down(x) & J always preserves meets and is injective; the lattice is
    // distributive iff it also preserves binary joins. A join-irreducible j
    // below x v y but below neither gives j & (x v y) = j > (j & x) v (j & y).
    std::vector<Bitset> phi(n);
    for (Elem a = 0; a < n; ++a) phi[a] = down[a] & irreducible;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x + 1; y < n; ++y) {
        Bitset extra = phi[d.join[x * n + y]] - (phi[x] | phi[y]);
        if (extra.any())
          throw LocaleError(ErrorKind::NotDistributive, "meet does not distribute over join",
                            {labels[extra.first()], labels[x], labels[y]});
      }
  }

  // a -> b = join of {c : c & a <= b}, already the join of the
  // join-irreducibles in that set; in a distributive lattice the join is
  // itself in the set.
  d.arrow.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    const Elem* ma = &d.meet[a * n];
    for (Elem b = 0; b < n; ++b) {
      const Bitset& below_b = down[b];
      Elem r = d.bottom;
      for (Elem j : irr)
        if (below_b.test(ma[j])) r = d.join[r * n + j];
      if (!below_b.test(ma[r]))
        throw LocaleError(ErrorKind::InternalInconsistency, "Heyting arrow missing", {labels[a], labels[b]});
      d.arrow[a * n + b] = r;
    }
  }

  d.up = std::move(up);
  d.down = std::move(down);
  d.labels = std::move(labels);
  return Frame(std::make_shared<const Frame::Data>(std::move(d)));
}

std::vector<Elem> primes(const Frame& L) {
  std::vector<Elem> out;
  const Elem n = static_cast<Elem>(L.size());
  for (Elem p = 0; p < n; ++p) {
    if (p == L.top()) continue;
    bool prime = true;
    for (Elem x = 0; x < n && prime; ++x) {
      if (L.leq(x, p)) continue;
      for (Elem y = 0; y < n; ++y) {
        if (!L.leq(y, p) && L.leq(L.meet(x, y), p)) {
          prime = false;
          break;
        }
      }
    }
    if (prime) out.push_back(p);
  }
  return out;
}

std::vector<Elem> booleanization(const Frame& L) {
  const Elem n = static_cast<Elem>(L.size());
  Bitset images(n), fixed(n);
  for (Elem a = 0; a < n; ++a) {
    images.set(L.pseudocomplement(a));
    if (L.pseudocomplement(L.pseudocomplement(a)) == a) fixed.set(a);
  }
  if (images != fixed)
    throw LocaleError(ErrorKind::InternalInconsistency, "{a*} and {a : a = a**} differ");
  std::vector<Elem> out;
  images.for_each([&](std::size_t a) { out.push_back(static_cast<Elem>(a)); });
  return out;
}

bool is_irreducible(const Frame& L) {
  if (L.is_trivial()) return false;
  auto b = booleanization(L);
  return b.size() == 2;
}

bool is_boolean(const Frame& L) { return booleanization(L).size() == L.size(); }

}  // namespace locale_lab
