#include "locale_lab/tensor.hpp"

#include <algorithm>
#include <unordered_set>

namespace locale_lab {
namespace {

/// Precomputed cell geometry for repeated saturation over one L x M.
class Saturator {
 public:
  Saturator(const Frame& L, const Frame& M) : L_(L), M_(M), cells_(L.size() * M.size()) {
    const Elem nl = static_cast<Elem>(L.size()), nm = static_cast<Elem>(M.size());
    cell_down_.assign(cells_, Bitset(cells_));
    zeros_ = Bitset(cells_);
    for (Elem a = 0; a < nl; ++a)
      for (Elem b = 0; b < nm; ++b) {
        Bitset& d = cell_down_[cell_index(M, a, b)];
        L.down(a).for_each([&](std::size_t x) {
          M.down(b).for_each([&](std::size_t y) { d.set(cell_index(M, static_cast<Elem>(x), static_cast<Elem>(y))); });
        });
        if (a == L.bottom() || b == M.bottom()) zeros_.set(cell_index(M, a, b));
      }
  }

  std::size_t cells() const { return cells_; }
  const Bitset& zeros() const { return zeros_; }
  const Bitset& cell_down(std::size_t c) const { return cell_down_[c]; }

  Bitset downclose(const Bitset& d) const {
    Bitset out(cells_);
    d.for_each([&](std::size_t c) { out |= cell_down_[c]; });
    return out;
  }

  Bitset saturate(Bitset d) const {
    const Elem nl = static_cast<Elem>(L_.size()), nm = static_cast<Elem>(M_.size());
    d |= zeros_;
    while (true) {
      d = downclose(d);
      bool changed = false;
      for (Elem b = 0; b < nm; ++b) {
        Elem j = L_.bottom();
        for (Elem a = 0; a < nl; ++a)
          if (d.test(cell_index(M_, a, b))) j = L_.join(j, a);
        if (!d.test(cell_index(M_, j, b))) d.set(cell_index(M_, j, b)), changed = true;
      }
      for (Elem a = 0; a < nl; ++a) {
        Elem j = M_.bottom();
        for (Elem b = 0; b < nm; ++b)
          if (d.test(cell_index(M_, a, b))) j = M_.join(j, b);
        if (!d.test(cell_index(M_, a, j))) d.set(cell_index(M_, a, j)), changed = true;
      }
      if (!changed) return d;
    }
  }

 private:
  const Frame& L_;
  const Frame& M_;
  std::size_t cells_;
  std::vector<Bitset> cell_down_;
  Bitset zeros_;
};

void sort_ideals(std::vector<Bitset>& v) {
  std::sort(v.begin(), v.end(), [](const Bitset& a, const Bitset& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
}

}  // namespace

Bitset saturate(const Frame& L, const Frame& M, Bitset cells) { return Saturator(L, M).saturate(std::move(cells)); }

Bitset basic_rect_cells(const Frame& L, const Frame& M, Elem a, Elem b) {
  Bitset out(L.size() * M.size());
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < M.size(); ++y)
      if ((L.leq(x, a) && M.leq(y, b)) || x == L.bottom() || y == M.bottom()) out.set(cell_index(M, x, y));
  return out;
}

bool is_cp_ideal(const Frame& L, const Frame& M, const Bitset& cells) {
  if (cells.size() != L.size() * M.size()) return false;
  return Saturator(L, M).saturate(cells) == cells;
}

std::vector<Bitset> enumerate_cp_ideals(const Frame& L, const Frame& M, std::size_t bound) {
  if (L.size() * M.size() > bound) throw_bound("tensor cell count |L|*|M|", L.size() * M.size(), bound);
  Saturator sat(L, M);
  std::vector<Bitset> rects;
  {
    std::unordered_set<Bitset, BitsetHash> distinct;
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < M.size(); ++b) {
        Bitset r = sat.saturate(sat.cell_down(cell_index(M, a, b)));
        if (distinct.insert(r).second) rects.push_back(std::move(r));
      }
  }
  // Every cp-ideal is the saturated union of the rectangles it contains, so
  // closing {bottom} under "saturate(D | rect)" reaches all of them.
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> found{sat.saturate(Bitset(sat.cells()))};
  seen.insert(found.front());
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Bitset current = found[head];
    for (const auto& r : rects) {
      if (r.is_subset_of(current)) continue;
      Bitset next = sat.saturate(current | r);
      if (seen.insert(next).second) found.push_back(std::move(next));
    }
  }
  sort_ideals(found);
  return found;
}

std::vector<Bitset> enumerate_cp_ideals_raw(const Frame& L, const Frame& M) {
  const std::size_t cells = L.size() * M.size();
  if (cells > kRawCpIdealScanLimit) throw_bound("raw cp-ideal scan cell count", cells, kRawCpIdealScanLimit);
  const Elem nl = static_cast<Elem>(L.size()), nm = static_cast<Elem>(M.size());
  std::vector<Bitset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    auto in = [&](Elem a, Elem b) { return (bits >> cell_index(M, a, b)) & 1U; };
    bool ok = true;
    // Downset.
    for (Elem a = 0; a < nl && ok; ++a)
      for (Elem b = 0; b < nm && ok; ++b)
        if (in(a, b))
          for (Elem x = 0; x < nl && ok; ++x)
            for (Elem y = 0; y < nm && ok; ++y)
              if (L.leq(x, a) && M.leq(y, b) && !in(x, y)) ok = false;
    // Join condition for every subfamily of a row or column slice, the empty
    // family included.
    for (Elem b = 0; b < nm && ok; ++b) {
      std::vector<Elem> col;
      for (Elem a = 0; a < nl; ++a)
        if (in(a, b)) col.push_back(a);
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << col.size()) && ok; ++sub) {
        Elem j = L.bottom();
        for (std::size_t i = 0; i < col.size(); ++i)
          if ((sub >> i) & 1U) j = L.join(j, col[i]);
        if (!in(j, b)) ok = false;
      }
    }
    for (Elem a = 0; a < nl && ok; ++a) {
      std::vector<Elem> row;
      for (Elem b = 0; b < nm; ++b)
        if (in(a, b)) row.push_back(b);
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << row.size()) && ok; ++sub) {
        Elem j = M.bottom();
        for (std::size_t i = 0; i < row.size(); ++i)
          if ((sub >> i) & 1U) j = M.join(j, row[i]);
        if (!in(a, j)) ok = false;
      }
    }
    if (!ok) continue;
    Bitset d(cells);
    for (std::size_t c = 0; c < cells; ++c)
      if ((bits >> c) & 1U) d.set(c);
    out.push_back(std::move(d));
  }
  sort_ideals(out);
  return out;
}

TensorFrame TensorFrame::build(const Frame& L, const Frame& M, std::size_t bound) {
  return TensorFrame(L, M, enumerate_cp_ideals(L, M, bound));
}

TensorFrame::TensorFrame(Frame L, Frame M, std::vector<Bitset> ideals)
    : left_(std::move(L)), right_(std::move(M)), ideals_(std::move(ideals)) {
  const std::size_t n = ideals_.size();
  for (Elem i = 0; i < n; ++i) index_.emplace(ideals_[i], i);

  std::vector<Bitset> rows(n, Bitset(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (ideals_[i].is_subset_of(ideals_[j])) rows[i].set(j);

  // Label each element by its maximal pairs with no zero coordinate.
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Elem i = 0; i < n; ++i) {
    auto pairs = pair_labels(i);
    std::string s;
    if (pairs.empty()) s = "0";
    for (const auto& [a, b] : pairs) {
      if (!s.empty()) s += '|';
      s += '(' + a + ',' + b + ')';
    }
    labels.push_back(std::move(s));
  }
  frame_ = validate_frame(std::move(rows), std::move(labels));
}

std::vector<std::pair<std::string, std::string>> TensorFrame::pair_labels(Elem d) const {
  std::vector<std::pair<std::string, std::string>> out;
  const Bitset& c = ideals_[d];
  for (Elem a = 0; a < left_.size(); ++a) {
    if (a == left_.bottom()) continue;
    for (Elem b = 0; b < right_.size(); ++b) {
      if (b == right_.bottom() || !c.test(cell_index(right_, a, b))) continue;
      bool maximal = true;
      for (Elem x = 0; x < left_.size() && maximal; ++x)
        for (Elem y = 0; y < right_.size() && maximal; ++y)
          if ((x != a || y != b) && left_.leq(a, x) && right_.leq(b, y) && c.test(cell_index(right_, x, y)))
            maximal = false;
      if (maximal) out.emplace_back(left_.label(a), right_.label(b));
    }
  }
  return out;
}

std::optional<Elem> TensorFrame::find(const Bitset& cells) const {
  auto it = index_.find(cells);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem TensorFrame::saturated(const Bitset& cells) const {
  auto e = find(saturate(left_, right_, cells));
  if (!e) throw LocaleError(ErrorKind::InternalInconsistency, "saturated set missing from the tensor");
  return *e;
}

Elem TensorFrame::basic_rect(Elem a, Elem b) const {
  Bitset formula = basic_rect_cells(left_, right_, a, b);
  Bitset seed(left_.size() * right_.size());
  seed.set(cell_index(right_, a, b));
  if (saturate(left_, right_, seed) != formula)
    throw LocaleError(ErrorKind::InternalInconsistency, "a (+) b differs from the least cp-ideal containing (a, b)",
                      {left_.label(a), right_.label(b)});
  auto e = find(formula);
  if (!e) throw LocaleError(ErrorKind::InternalInconsistency, "basic rectangle missing from the tensor");
  return *e;
}

Elem TensorFrame::inject_left(Elem a) const { return basic_rect(a, right_.top()); }
Elem TensorFrame::inject_right(Elem b) const { return basic_rect(left_.top(), b); }

Elem TensorFrame::project_left(Elem d) const {
  Elem j = left_.bottom();
  for (Elem a = 0; a < left_.size(); ++a)
    if (contains(d, a, right_.top())) j = left_.join(j, a);
  return j;
}

Elem TensorFrame::project_right(Elem d) const {
  Elem j = right_.bottom();
  for (Elem b = 0; b < right_.size(); ++b)
    if (contains(d, left_.top(), b)) j = right_.join(j, b);
  return j;
}

namespace {

void require_square(const TensorFrame& LL) {
  if (!LL.is_square())
    throw LocaleError(ErrorKind::InvalidInput, "the diagonal needs a tensor built from one frame with itself");
}

}  // namespace

Elem diagonal_point(const TensorFrame& LL, Elem a) {
  require_square(LL);
  const Frame& L = LL.left();
  Bitset cells(L.size() * L.size());
  for (Elem u = 0; u < L.size(); ++u)
    for (Elem v = 0; v < L.size(); ++v)
      if (L.leq(L.meet(u, v), a)) cells.set(cell_index(L, u, v));
  auto e = LL.find(cells);
  if (!e) throw LocaleError(ErrorKind::InternalInconsistency, "(1,1)(a) is not a cp-ideal", {L.label(a)});
  return *e;
}

Sublocale diagonal(const TensorFrame& LL) {
  require_square(LL);
  const Frame& L = LL.left();
  Bitset members(LL.size());
  for (Elem a = 0; a < L.size(); ++a) members.set(diagonal_point(LL, a));
  if (members.count() != L.size())
    throw LocaleError(ErrorKind::InternalInconsistency, "a -> (1,1)(a) is not injective");
  return make_sublocale(LL.frame(), std::move(members));
}

Elem d_element(const TensorFrame& LL) {
  require_square(LL);
  const Frame& L = LL.left();
  Bitset cells(L.size() * L.size());
  Elem joined = LL.frame().bottom();
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (L.meet(a, b) == L.bottom()) {
        cells.set(cell_index(L, a, b));
        joined = LL.frame().join(joined, LL.basic_rect(a, b));
      }
  auto e = LL.find(cells);
  if (!e || *e != joined)
    throw LocaleError(ErrorKind::InternalInconsistency, "the two descriptions of d_L disagree");
  return *e;
}

}  // namespace locale_lab
