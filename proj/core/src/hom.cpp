#include "locale_lab/hom.hpp"

#include <algorithm>
#include <numeric>

namespace locale_lab {

bool is_frame_hom(const Frame& L, const Frame& M, std::span<const Elem> map) {
  if (map.size() != L.size()) return false;
  if (map[L.bottom()] != M.bottom() || map[L.top()] != M.top()) return false;
  const Elem n = static_cast<Elem>(L.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      if (map[L.meet(x, y)] != M.meet(map[x], map[y])) return false;
      if (map[L.join(x, y)] != M.join(map[x], map[y])) return false;
    }
  return true;
}

namespace {

struct Constraint {
  Elem x, y;
};

class HomSearch {
 public:
  HomSearch(const Frame& L, const Frame& M, std::size_t budget) : L_(L), M_(M), budget_(budget) {
    const Elem n = static_cast<Elem>(L.size());
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Elem{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Elem a, Elem b) { return L.down(a).count() < L.down(b).count(); });
    pos_.resize(n);
    for (Elem i = 0; i < n; ++i) pos_[order_[i]] = i;

    // Each pair is checked once all of x, y, x & y and x | y carry images.
    triggered_.resize(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x + 1; y < n; ++y) {
        Elem t = std::max({pos_[x], pos_[y], pos_[L.meet(x, y)], pos_[L.join(x, y)]});
        triggered_[t].push_back({x, y});
      }

    lower_covers_.resize(n);
    for (auto [a, b] : L.covers()) lower_covers_[b].push_back(a);
    image_.assign(n, 0);
  }

  std::vector<FrameHom> run() {
    go(0);
    return std::move(found_);
  }

 private:
  void go(Elem i) {
    if (++nodes_ > budget_) throw_bound("homomorphism search nodes", nodes_, budget_);
    const Elem n = static_cast<Elem>(L_.size());
    if (i == n) {
      found_.push_back(FrameHom{L_, M_, image_});
      return;
    }
    const Elem x = order_[i];
    Bitset candidates = Bitset::full(M_.size());
    if (x == L_.bottom()) {
      candidates = Bitset(M_.size());
      candidates.set(M_.bottom());
    }
    if (x == L_.top()) {
      Bitset only(M_.size());
      only.set(M_.top());
      candidates &= only;
    }
    for (Elem y : lower_covers_[x]) candidates &= M_.up(image_[y]);

    candidates.for_each([&](std::size_t c) {
      image_[x] = static_cast<Elem>(c);
      if (consistent(i)) go(i + 1);
    });
  }

  bool consistent(Elem i) const {
    for (const auto& [x, y] : triggered_[i]) {
      if (image_[L_.meet(x, y)] != M_.meet(image_[x], image_[y])) return false;
      if (image_[L_.join(x, y)] != M_.join(image_[x], image_[y])) return false;
    }
    return true;
  }

  const Frame& L_;
  const Frame& M_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Elem> order_, pos_;
  std::vector<std::vector<Constraint>> triggered_;
  std::vector<std::vector<Elem>> lower_covers_;
  std::vector<Elem> image_;
  std::vector<FrameHom> found_;
};

}  // namespace

std::vector<FrameHom> enumerate_homs(const Frame& L, const Frame& M, std::size_t node_budget) {
  // 0 and 1 must land on 0 and 1; a trivial source has 0 == 1.
  if (L.is_trivial() && !M.is_trivial()) return {};
  auto homs = HomSearch(L, M, node_budget).run();
  for (const auto& h : homs)
    if (!is_frame_hom(L, M, h.map))
      throw LocaleError(ErrorKind::InternalInconsistency, "enumerated map is not a homomorphism");
  return homs;
}

bool hom_leq(const FrameHom& h, const FrameHom& k) {
  for (Elem x = 0; x < h.map.size(); ++x)
    if (!h.target.leq(h.map[x], k.map[x])) return false;
  return true;
}

}  // namespace locale_lab
