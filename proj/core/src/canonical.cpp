#include "locale_lab/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>

namespace locale_lab {
namespace {

using Color = std::uint32_t;
using Coloring = std::vector<Color>;
using Certificate = std::vector<std::uint64_t>;

class Canonizer {
 public:
  Canonizer(std::size_t n, std::span<const OrderPair> edges, std::size_t budget)
      : n_(n), out_(n), in_(n), budget_(budget) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw LocaleError(ErrorKind::InvalidInput, "edge endpoint out of range");
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
    edges_.assign(edges.begin(), edges.end());
  }

  Certificate run() {
    Coloring c = initial();
    refine(c);
    std::vector<Elem> prefix;
    search(c, prefix);
    return best_->cert;
  }

 private:
  struct Leaf {
    Certificate cert;
    Coloring labeling;
  };

  Coloring initial() const {
    // Depth = longest path from a source; vertices on cycles keep depth 0.
    std::vector<std::size_t> indeg(n_), depth(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) indeg[v] = in_[v].size();
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < n_; ++v)
      if (indeg[v] == 0) queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (Elem w : out_[u]) {
        depth[w] = std::max(depth[w], depth[u] + 1);
        if (--indeg[w] == 0) queue.push_back(w);
      }
    }
    std::vector<std::vector<Color>> sig(n_);
    for (std::size_t v = 0; v < n_; ++v)
      sig[v] = {static_cast<Color>(in_[v].size()), static_cast<Color>(out_[v].size()),
                static_cast<Color>(depth[v])};
    return rank(sig);
  }

  Coloring rank(const std::vector<std::vector<Color>>& sig) const {
    std::vector<std::size_t> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    Coloring c(n_);
    Color next = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++next;
      c[idx[i]] = next;
    }
    return c;
  }

  static std::size_t cell_count(const Coloring& c) {
    if (c.empty()) return 0;
    return *std::max_element(c.begin(), c.end()) + 1;
  }

  // Refines to the coarsest equitable coloring finer than c. Colors are ranks
  // of signatures that start with the old color, so cell order is preserved.
  void refine(Coloring& c) const {
    std::vector<std::vector<Color>> sig(n_);
    for (std::size_t v = 0; v < n_; ++v) sig[v] = {c[v]};
    c = rank(sig);  // dense colors 0..k-1
    std::size_t cells = cell_count(c);
    while (cells < n_) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(c[v]);
        std::size_t mark = s.size();
        for (Elem w : out_[v]) s.push_back(c[w]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
        s.push_back(static_cast<Color>(n_));  // separator, larger than any color
        mark = s.size();
        for (Elem w : in_[v]) s.push_back(c[w]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
      }
      Coloring next = rank(sig);
      std::size_t next_cells = cell_count(next);
      c = std::move(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
  }

  // Smallest non-singleton cell, lowest color on ties.
  std::vector<Elem> target_cell(const Coloring& c) const {
    std::vector<std::size_t> sizes(cell_count(c), 0);
    for (Color x : c) ++sizes[x];
    std::optional<Color> pick;
    for (Color x = 0; x < sizes.size(); ++x)
      if (sizes[x] > 1 && (!pick || sizes[x] < sizes[*pick])) pick = x;
    std::vector<Elem> cell;
    if (!pick) return cell;
    for (std::size_t v = 0; v < n_; ++v)
      if (c[v] == *pick) cell.push_back(static_cast<Elem>(v));
    return cell;
  }

  Certificate certificate(const Coloring& c) const {
    Certificate cert;
    cert.reserve(edges_.size());
    for (auto [u, v] : edges_) cert.push_back((std::uint64_t{c[u]} << 32) | c[v]);
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  void record_automorphism(const Coloring& lab_a, const Coloring& lab_b) {
    std::vector<Elem> inv(n_);
    for (std::size_t v = 0; v < n_; ++v) inv[lab_a[v]] = static_cast<Elem>(v);
    std::vector<Elem> gamma(n_);
    bool identity = true;
    for (std::size_t v = 0; v < n_; ++v) {
      gamma[v] = inv[lab_b[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  void leaf(const Coloring& c) {
    Certificate cert = certificate(c);
    if (!first_) {
      first_ = Leaf{cert, c};
      best_ = Leaf{std::move(cert), c};
      return;
    }
    if (cert == first_->cert) {
      record_automorphism(first_->labeling, c);
      return;
    }
    if (cert == best_->cert) {
      record_automorphism(best_->labeling, c);
    } else if (cert < best_->cert) {
      best_ = Leaf{std::move(cert), c};
    }
  }

  // Union-find roots of the orbits of the stored automorphisms that fix the
  // prefix pointwise.
  std::vector<Elem> orbits(const std::vector<Elem>& prefix) const {
    std::vector<Elem> parent(n_);
    std::iota(parent.begin(), parent.end(), Elem{0});
    auto find = [&](Elem x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Elem p) { return g[p] == p; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        Elem a = find(static_cast<Elem>(v)), b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < n_; ++v) parent[v] = find(static_cast<Elem>(v));
    return parent;
  }

  void search(const Coloring& c, std::vector<Elem>& prefix) {
    if (++nodes_ > budget_) throw_bound("canonical labeling search nodes", nodes_, budget_);
    std::vector<Elem> cell = target_cell(c);
    if (cell.empty()) {
      leaf(c);
      return;
    }
    std::vector<Elem> explored;
    for (Elem w : cell) {
      if (!explored.empty()) {
        auto orbit = orbits(prefix);
        bool equivalent = std::any_of(explored.begin(), explored.end(),
                                      [&](Elem x) { return orbit[x] == orbit[w]; });
        if (equivalent) continue;
      }
      explored.push_back(w);
      Coloring child(n_);
      for (std::size_t u = 0; u < n_; ++u)
        child[u] = 2 * c[u] + ((c[u] == c[w] && u != w) ? 1 : 0);
      refine(child);
      prefix.push_back(w);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  std::size_t n_;
  std::vector<std::vector<Elem>> out_, in_;
  std::vector<OrderPair> edges_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::optional<Leaf> first_, best_;
  std::vector<std::vector<Elem>> automorphisms_;
};

}  // namespace

std::string canonical_digraph_form(std::size_t n, std::span<const OrderPair> edges, std::size_t node_budget) {
  std::string out = std::to_string(n) + ":";
  if (n == 0) return out;
  Certificate cert = Canonizer(n, edges, node_budget).run();
  for (std::uint64_t e : cert) {
    out += std::to_string(e >> 32);
    out += '>';
    out += std::to_string(e & 0xffffffffULL);
    out += ',';
  }
  return out;
}

std::string canonical_form(const Frame& L, std::size_t node_budget) {
  auto covers = L.covers();
  return canonical_digraph_form(L.size(), covers, node_budget);
}

std::string canonical_hash(std::string_view form) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : form) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace locale_lab
