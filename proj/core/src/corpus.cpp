#include "locale_lab/corpus.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>

#include "locale_lab/canonical.hpp"
#include "locale_lab/frame_json.hpp"
#include "locale_lab/parallel.hpp"

namespace locale_lab {
namespace {

FinPoset from_rows(std::vector<Bitset> rows, std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rows[a].test(b) && rows[b].test(a)) {
        std::vector<std::string> w;
        if (!labels.empty()) w = {labels[a], labels[b]};
        throw LocaleError(ErrorKind::NotAPartialOrder, "poset relation has a cycle", std::move(w));
      }
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  if (labels.size() != n) throw LocaleError(ErrorKind::InvalidInput, "label count differs from point count");
  return FinPoset{n, std::move(rows), std::move(labels)};
}

// Subsets of P's points closed downward (up == false) or upward, as bitmasks
// in increasing order.
std::vector<std::uint32_t> closed_subsets(const FinPoset& P, bool up) {
  if (P.n > kMaxLatticePoints) throw_bound("points for a downset lattice", P.n, kMaxLatticePoints);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1U << P.n); ++mask) {
    bool ok = true;
    for (std::size_t x = 0; x < P.n && ok; ++x) {
      if (!((mask >> x) & 1U)) continue;
      for (std::size_t y = 0; y < P.n && ok; ++y)
        if (!((mask >> y) & 1U) && (up ? P.le(x, y) : P.le(y, x))) ok = false;
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

Frame subset_lattice(const FinPoset& P, bool up) {
  auto sets = closed_subsets(P, up);
  const std::size_t m = sets.size();
  std::vector<Bitset> rows(m, Bitset(m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if ((sets[i] & sets[j]) == sets[i]) rows[i].set(j);
    // Name a set by its generators: maximal points of a downset, minimal
    // points of an upset.
    std::string s;
    for (std::size_t x = 0; x < P.n; ++x) {
      if (!((sets[i] >> x) & 1U)) continue;
      bool extreme = true;
      for (std::size_t y = 0; y < P.n && extreme; ++y)
        if (y != x && ((sets[i] >> y) & 1U) && (up ? P.le(y, x) : P.le(x, y))) extreme = false;
      if (!extreme) continue;
      if (!s.empty()) s += '+';
      s += P.labels[x];
    }
    labels.push_back(s.empty() ? "0" : s);
  }
  return validate_frame(std::move(rows), std::move(labels));
}

void sort_by_form(std::vector<FinPoset>& v) {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t i = 0; i < v.size(); ++i) keyed.emplace_back(poset_canonical_form(v[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<FinPoset> out;
  for (auto& [form, i] : keyed) out.push_back(std::move(v[i]));
  v = std::move(out);
}

Frame frame_from_covers(std::vector<std::string> labels, std::initializer_list<std::pair<const char*, const char*>> covers) {
  std::vector<OrderPair> rel;
  auto idx = [&](const char* s) {
    return static_cast<Elem>(std::find(labels.begin(), labels.end(), s) - labels.begin());
  };
  for (auto [a, b] : covers) rel.emplace_back(idx(a), idx(b));
  const std::size_t n = labels.size();
  return validate_frame(n, rel, std::move(labels));
}

}  // namespace

FinPoset make_poset(std::size_t n, std::span<const OrderPair> relation, std::vector<std::string> labels) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
  for (auto [a, b] : relation) {
    if (a >= n || b >= n) throw LocaleError(ErrorKind::InvalidInput, "poset relation index out of range");
    rows[a].set(b);
  }
  return from_rows(std::move(rows), std::move(labels));
}

FinPoset chain_poset(std::size_t n) {
  std::vector<OrderPair> rel;
  for (Elem i = 1; i < n; ++i) rel.emplace_back(i - 1, i);
  return make_poset(n, rel);
}

FinPoset antichain_poset(std::size_t n) { return make_poset(n, {}); }

std::vector<OrderPair> poset_covers(const FinPoset& P) {
  std::vector<OrderPair> out;
  for (Elem a = 0; a < P.n; ++a)
    for (Elem b = 0; b < P.n; ++b) {
      if (a == b || !P.le(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < P.n && cover; ++c)
        if (c != a && c != b && P.le(a, c) && P.le(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::string poset_canonical_form(const FinPoset& P) {
  auto covers = poset_covers(P);
  return canonical_digraph_form(P.n, covers);
}

std::vector<FinPoset> enumerate_posets(std::size_t k, std::size_t bound) {
  if (k > bound) throw_bound("poset size", k, bound);
  std::vector<FinPoset> reps{FinPoset{}};
  for (std::size_t m = 1; m <= k; ++m) {
    std::vector<std::vector<std::pair<std::string, FinPoset>>> grown(reps.size());
    parallel_for(reps.size(), [&](std::size_t r) {
      const FinPoset& base = reps[r];
      for (std::uint32_t below : closed_subsets(base, false)) {
        std::vector<Bitset> rows(m, Bitset(m));
        for (std::size_t i = 0; i + 1 < m; ++i) {
          base.leq[i].for_each([&](std::size_t j) { rows[i].set(j); });
          if ((below >> i) & 1U) rows[i].set(m - 1);
        }
        rows[m - 1].set(m - 1);
        FinPoset P = from_rows(std::move(rows), {});
        std::string form = poset_canonical_form(P);
        grown[r].emplace_back(std::move(form), std::move(P));
      }
    });
    std::map<std::string, FinPoset> classes;
    for (auto& batch : grown)
      for (auto& [form, P] : batch) classes.try_emplace(std::move(form), std::move(P));
    reps.clear();
    for (auto& [form, P] : classes) reps.push_back(std::move(P));
  }
  return reps;
}

std::vector<FinPoset> enumerate_posets_raw(std::size_t k) {
  if (k > kRawPosetScanLimit) throw_bound("raw poset scan size", k, kRawPosetScanLimit);
  std::vector<OrderPair> off;
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      if (i != j) off.emplace_back(i, j);
  std::map<std::string, FinPoset> classes;
  for (std::uint32_t bits = 0; bits < (1U << off.size()); ++bits) {
    std::vector<Bitset> rows(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i) rows[i].set(i);
    for (std::size_t t = 0; t < off.size(); ++t)
      if ((bits >> t) & 1U) rows[off[t].first].set(off[t].second);
    bool order = true;
    for (std::size_t a = 0; a < k && order; ++a)
      for (std::size_t b = 0; b < k && order; ++b) {
        if (a != b && rows[a].test(b) && rows[b].test(a)) order = false;
        for (std::size_t c = 0; c < k && order; ++c)
          if (rows[a].test(b) && rows[b].test(c) && !rows[a].test(c)) order = false;
      }
    if (!order) continue;
    FinPoset P = from_rows(std::move(rows), {});
    std::string form = poset_canonical_form(P);
    classes.try_emplace(std::move(form), std::move(P));
  }
  std::vector<FinPoset> out;
  for (auto& [form, P] : classes) out.push_back(std::move(P));
  sort_by_form(out);
  return out;
}

Frame downset_frame(const FinPoset& P) { return subset_lattice(P, false); }
Frame alexandrov_frame(const FinPoset& X) { return subset_lattice(X, true); }

FinPoset product_space(const FinPoset& X, const FinPoset& Y) {
  const std::size_t n = X.n * Y.n;
  std::vector<Bitset> rows(n, Bitset(n));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < X.n; ++x)
    for (std::size_t y = 0; y < Y.n; ++y) {
      labels.push_back("(" + X.labels[x] + "," + Y.labels[y] + ")");
      for (std::size_t u = 0; u < X.n; ++u)
        for (std::size_t v = 0; v < Y.n; ++v)
          if (X.le(x, u) && Y.le(y, v)) rows[x * Y.n + y].set(u * Y.n + v);
    }
  return from_rows(std::move(rows), std::move(labels));
}

FinPoset sierpinski_space() {
  const OrderPair rel[] = {{0, 1}};
  return make_poset(2, rel, {"c", "o"});
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  out.push_back({"one", Frame()});
  out.push_back({"two", frame_from_covers({"0", "1"}, {{"0", "1"}})});
  out.push_back({"C3", frame_from_covers({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}})});
  out.push_back({"C4", frame_from_covers({"0", "p", "q", "1"}, {{"0", "p"}, {"p", "q"}, {"q", "1"}})});
  out.push_back({"B4", frame_from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}})});
  out.push_back({"B8", frame_from_covers({"0", "x", "y", "z", "xy", "xz", "yz", "1"},
                                         {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "xy"}, {"y", "xy"},
                                          {"x", "xz"}, {"z", "xz"}, {"y", "yz"}, {"z", "yz"}, {"xy", "1"},
                                          {"xz", "1"}, {"yz", "1"}})});
  out.push_back({"sierpinski2", alexandrov_frame(product_space(sierpinski_space(), sierpinski_space()))});
  return out;
}

Frame fixture(std::string_view name) {
  for (auto& f : fixtures())
    if (f.name == name) return f.frame;
  throw LocaleError(ErrorKind::InvalidInput, "unknown fixture", {std::string(name)});
}

std::vector<CorpusEntry> build_corpus(std::size_t max_poset, std::size_t max_frame) {
  std::vector<FinPoset> posets;
  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k <= max_poset; ++k)
    for (auto& P : enumerate_posets(k, max_poset)) {
      posets.push_back(std::move(P));
      sizes.push_back(k);
    }

  std::vector<std::optional<CorpusEntry>> from_posets(posets.size());
  parallel_for(posets.size(), [&](std::size_t i) {
    Frame F = downset_frame(posets[i]);
    if (F.size() > max_frame) return;
    std::string form = canonical_form(F);
    std::string hash = canonical_hash(form);
    from_posets[i] = CorpusEntry{"", std::move(F), std::move(form), std::move(hash), "poset:" + std::to_string(sizes[i])};
  });

  std::map<std::string, CorpusEntry> classes;
  for (auto& fx : fixtures()) {
    if (fx.frame.size() > max_frame) continue;
    std::string form = canonical_form(fx.frame);
    std::string hash = canonical_hash(form);
    classes.try_emplace(form, CorpusEntry{fx.name, fx.frame, form, std::move(hash), "fixture"});
  }
  for (auto& e : from_posets)
    if (e) classes.try_emplace(e->canonical, std::move(*e));

  std::vector<CorpusEntry> out;
  for (auto& [form, e] : classes) out.push_back(std::move(e));
  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.frame.size() != b.frame.size()) return a.frame.size() < b.frame.size();
    return a.canonical < b.canonical;
  });
  std::map<std::string, int> used;
  for (auto& e : out) {
    if (!e.id.empty()) continue;
    std::string id = "L" + std::to_string(e.frame.size()) + "_" + e.hash.substr(0, 8);
    if (int n = used[id]++) id += "_" + std::to_string(n);
    e.id = std::move(id);
  }
  return out;
}

void write_corpus_jsonl(std::ostream& out, std::span<const CorpusEntry> corpus) {
  for (const auto& e : corpus) {
    nlohmann::json frame = frame_to_json(e.frame);
    nlohmann::ordered_json line;
    line["id"] = e.id;
    line["elements"] = frame["elements"];
    line["leq"] = frame["leq"];
    line["canonical_hash"] = e.hash;
    out << line.dump() << '\n';
  }
}

std::vector<CorpusEntry> read_corpus_jsonl(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw LocaleError(ErrorKind::InvalidInput, "corpus line " + std::to_string(lineno) + ": " + e.what());
    }
    Frame F = frame_from_json(doc);
    std::string form = canonical_form(F);
    std::string hash = canonical_hash(form);
    std::string id = doc.value("id", "line" + std::to_string(lineno));
    if (doc.contains("canonical_hash") && doc["canonical_hash"] != hash)
      throw LocaleError(ErrorKind::InternalInconsistency, "canonical hash mismatch on re-ingest", {id});
    out.push_back(CorpusEntry{std::move(id), std::move(F), std::move(form), std::move(hash), "jsonl"});
  }
  return out;
}

}  // namespace locale_lab
