#include "locale_lab/separation.hpp"

#include <algorithm>

namespace locale_lab {
namespace {

std::vector<std::string> labels(const Frame& L, std::initializer_list<Elem> xs) {
  std::vector<std::string> out;
  for (Elem x : xs) out.push_back(L.label(x));
  return out;
}

// Pairs (a, b) with 1 != a and a not <= b, in index order; f returns true on
// success. Returns the first failing pair.
template <class F>
Verdict over_separation_pairs(const Frame& L, F&& ok) {
  for (Elem a = 0; a < L.size(); ++a) {
    if (a == L.top()) continue;
    for (Elem b = 0; b < L.size(); ++b)
      if (!L.leq(a, b) && !ok(a, b)) return Verdict::fail(labels(L, {a, b}));
  }
  return Verdict::pass();
}

template <class F>
Verdict over_nonleq_pairs(const Frame& L, F&& ok) {
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (!L.leq(a, b) && !ok(a, b)) return Verdict::fail(labels(L, {a, b}));
  return Verdict::pass();
}

template <class F>
Verdict over_nonzero(const Frame& L, F&& ok) {
  for (Elem a = 0; a < L.size(); ++a)
    if (a != L.bottom() && !ok(a)) return Verdict::fail(labels(L, {a}));
  return Verdict::pass();
}

template <class P>
bool exists_elem(const Frame& L, P&& p) {
  for (Elem c = 0; c < L.size(); ++c)
    if (p(c)) return true;
  return false;
}

bool f_condition(const Frame& L, int i, Elem a, Elem b, Elem u, Elem v) {
  const Elem top = L.top();
  const Elem ua = L.arrow(u, a), vb = L.arrow(v, b);
  switch (i) {
    case 1: return !L.leq(u, a) && !L.leq(v, b) && L.join(ua, vb) == top;
    case 2: return L.lt(a, u) && L.lt(b, v) && L.join(ua, vb) == top;
    case 3: return L.leq(v, a) && L.lt(a, u) && !L.leq(v, b) && L.join(ua, vb) == top;
    case 4: return ua != a && vb != b && L.join(u, v) == top;
    case 5: return L.leq(a, u) && L.leq(b, v) && ua != a && vb != b && L.join(u, v) == top;
    case 6: return L.leq(a, u) && ua != a && !L.leq(L.meet(a, vb), b) && L.join(u, v) == top;
    default: throw LocaleError(ErrorKind::InvalidInput, "(F) conditions are numbered 1 to 6");
  }
}

// For each x, the union over u in sets[x] of partner(u).
std::vector<Bitset> reach(const Frame& L, const std::vector<Bitset>& sets, const std::vector<Bitset>& partner) {
  std::vector<Bitset> out(L.size(), Bitset(L.size()));
  for (Elem x = 0; x < L.size(); ++x) sets[x].for_each([&](std::size_t u) { out[x] |= partner[u]; });
  return out;
}

std::string render_hom(const Frame& L, const FrameHom& h) {
  std::string s;
  for (Elem x = 0; x < L.size(); ++x) {
    if (x) s += ',';
    s += L.label(x) + ':' + h.target.label(h(x));
  }
  return s;
}

}  // namespace

bool is_axiom_name(std::string_view name) {
  return std::find(kAxiomNames.begin(), kAxiomNames.end(), name) != kAxiomNames.end();
}

Verdict check_regular(const Frame& L) {
  for (Elem a = 0; a < L.size(); ++a) {
    Elem j = L.bottom();
    for (Elem b = 0; b < L.size(); ++b)
      if (L.join(L.pseudocomplement(b), a) == L.top()) j = L.join(j, b);
    if (j != a) return Verdict::fail(labels(L, {a}));
  }
  return Verdict::pass();
}

Verdict check_fit(const Frame& L) {
  return over_nonleq_pairs(L, [&](Elem a, Elem b) {
    return exists_elem(L, [&](Elem c) { return L.join(a, c) == L.top() && !L.leq(L.arrow(c, b), b); });
  });
}

Verdict check_subfit(const Frame& L) {
  return over_nonleq_pairs(L, [&](Elem a, Elem b) {
    return exists_elem(L, [&](Elem c) { return L.join(a, c) == L.top() && L.join(b, c) != L.top(); });
  });
}

Verdict check_weakly_subfit(const Frame& L) {
  return over_nonzero(L, [&](Elem a) {
    return exists_elem(L, [&](Elem c) { return c != L.top() && L.join(a, c) == L.top(); });
  });
}

Verdict check_prefit(const Frame& L) {
  return over_nonzero(L, [&](Elem a) {
    return exists_elem(L, [&](Elem c) { return c != L.bottom() && L.join(a, L.pseudocomplement(c)) == L.top(); });
  });
}

Verdict check_T1(const Frame& L) {
  for (Elem p : primes(L))
    for (Elem a = 0; a < L.size(); ++a)
      if (L.lt(p, a) && a != L.top()) return Verdict::fail(labels(L, {p, a}));
  return Verdict::pass();
}

Verdict check_pt_fit(const Frame& L) {
  for (Elem p : primes(L)) {
    Sublocale point = one_point(L, p);
    Sublocale fit = fitting(point);
    if (!(fit == point)) {
      std::vector<std::string> w{L.label(p)};
      for (auto& s : L.labels_of(fit.members)) w.push_back(std::move(s));
      return Verdict::fail(std::move(w));
    }
  }
  return Verdict::pass();
}

Verdict check_H(const Frame& L) {
  const std::size_t n = L.size();
  std::vector<Bitset> not_below(n, Bitset(n)), disjoint(n, Bitset(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem u = 0; u < n; ++u) {
      if (!L.leq(u, x)) not_below[x].set(u);
      if (L.meet(x, u) == L.bottom()) disjoint[x].set(u);
    }
  auto r = reach(L, not_below, disjoint);
  return over_separation_pairs(L, [&](Elem a, Elem b) { return r[a].intersects(not_below[b]); });
}

Verdict check_F(const Frame& L) {
  const std::size_t n = L.size();
  std::vector<Bitset> moved(n, Bitset(n)), cobounded(n, Bitset(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem u = 0; u < n; ++u) {
      if (L.arrow(u, x) != x) moved[x].set(u);
      if (L.join(x, u) == L.top()) cobounded[x].set(u);
    }
  auto r = reach(L, moved, cobounded);
  return over_separation_pairs(L, [&](Elem a, Elem b) { return r[a].intersects(moved[b]); });
}

Verdict check_F_condition(const Frame& L, int i) {
  if (i < 1 || i > 6) throw LocaleError(ErrorKind::InvalidInput, "(F) conditions are numbered 1 to 6");
  return over_separation_pairs(L, [&](Elem a, Elem b) {
    for (Elem u = 0; u < L.size(); ++u)
      for (Elem v = 0; v < L.size(); ++v)
        if (f_condition(L, i, a, b, u, v)) return true;
    return false;
  });
}

std::array<Verdict, 6> check_F_equivalences(const Frame& L) {
  std::array<Verdict, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = check_F_condition(L, i + 1);
  for (int i = 1; i < 6; ++i)
    if (out[i].holds() != out[0].holds()) {
      std::vector<std::string> w;
      for (int j = 0; j < 6; ++j) w.push_back(out[j].holds() ? "true" : "false");
      throw LocaleError(ErrorKind::EquivalenceViolation, "the six (F) conditions disagree", std::move(w));
    }
  return out;
}

Verdict check_anti_urysohn(const Frame& L) {
  for (Elem a = 0; a < L.size(); ++a) {
    if (a == L.bottom()) continue;
    for (Elem b = 0; b < L.size(); ++b)
      if (b != L.bottom() && L.join(L.pseudocomplement(a), L.pseudocomplement(b)) == L.top())
        return Verdict::fail(labels(L, {a, b}));
  }
  return Verdict::pass();
}

Verdict check_irreducible(const Frame& L) {
  if (L.is_trivial()) return Verdict::fail(labels(L, {L.top()}));
  for (Elem x : booleanization(L))
    if (x != L.bottom() && x != L.top()) return Verdict::fail(labels(L, {x}));
  return Verdict::pass();
}

bool fit_geometric(const Frame& L) {
  for (Elem a = 0; a < L.size(); ++a)
    if (!is_fitted(closed_sublocale(L, a))) return false;
  return true;
}

bool subfit_geometric(const Frame& L) {
  for (Elem a = 0; a < L.size(); ++a) {
    Sublocale open = open_sublocale(L, a);
    std::vector<Sublocale> inside;
    for (Elem b = 0; b < L.size(); ++b) {
      Sublocale c = closed_sublocale(L, b);
      if (c.members.is_subset_of(open.members)) inside.push_back(std::move(c));
    }
    if (!(sublocale_join(L, inside) == open)) return false;
  }
  return true;
}

bool T1_geometric(const Frame& L) {
  for (Elem p : primes(L))
    if (!is_closed(one_point(L, p))) return false;
  return true;
}

std::optional<DiagonalData> diagonal_data(const Frame& L, std::size_t tensor_bound) {
  if (L.size() * L.size() > tensor_bound) return std::nullopt;
  TensorFrame t = TensorFrame::build(L, L, tensor_bound);
  Sublocale diag = diagonal(t);
  Elem d = d_element(t);
  return DiagonalData{std::move(t), std::move(diag), d};
}

namespace {

Verdict compare_to_diagonal(const DiagonalData& dd, const Sublocale& hull) {
  Bitset extra = hull.members - dd.diagonal.members;
  if (extra.none()) return Verdict::pass();
  Elem x = static_cast<Elem>(extra.first());
  return Verdict::fail({dd.tensor.frame().label(x)});
}

}  // namespace

Verdict check_strongly_hausdorff(const DiagonalData& dd) {
  Sublocale closed = closed_sublocale(dd.tensor.frame(), dd.d);
  if (!(closure(dd.diagonal) == closed))
    throw LocaleError(ErrorKind::InternalInconsistency, "closure of the diagonal differs from c(d_L)");
  return compare_to_diagonal(dd, closed);
}

Verdict check_F_separated(const DiagonalData& dd) { return compare_to_diagonal(dd, fitting(dd.diagonal)); }

Verdict check_strongly_hausdorff(const Frame& L, std::size_t tensor_bound) {
  auto dd = diagonal_data(L, tensor_bound);
  if (!dd) return Verdict::skip("bound", tensor_bound);
  return check_strongly_hausdorff(*dd);
}

Verdict check_F_separated(const Frame& L, std::size_t tensor_bound) {
  auto dd = diagonal_data(L, tensor_bound);
  if (!dd) return Verdict::skip("bound", tensor_bound);
  return check_F_separated(*dd);
}

Verdict check_totally_unordered_bounded(const Frame& L, std::span<const HomTarget> targets, std::size_t tu_bound,
                                        std::size_t hom_budget) {
  for (const auto& t : targets) {
    if (t.frame.size() > tu_bound) continue;
    std::vector<FrameHom> homs;
    try {
      homs = enumerate_homs(L, t.frame, hom_budget);
    } catch (const LocaleError& e) {
      if (e.kind() != ErrorKind::BoundExceeded) throw;
      return Verdict::skip("hom budget", hom_budget);
    }
    for (const auto& h : homs)
      for (const auto& k : homs)
        if (!(h == k) && hom_leq(h, k)) return Verdict::fail({t.id, render_hom(L, h), render_hom(L, k)});
  }
  Verdict v = Verdict::pass();
  v.bound = tu_bound;
  return v;
}

const Verdict* AxiomReport::find(std::string_view name) const {
  for (const auto& [k, v] : verdicts)
    if (k == name) return &v;
  return nullptr;
}

const Verdict& AxiomReport::at(std::string_view name) const {
  if (const Verdict* v = find(name)) return *v;
  throw LocaleError(ErrorKind::InvalidInput, "axiom not in report", {std::string(name)});
}

AxiomReport evaluate_axioms(const Frame& L, std::string frame_id, std::span<const std::string> selection,
                            std::span<const HomTarget> tu_targets, const SeparationOptions& options) {
  for (const auto& s : selection)
    if (!is_axiom_name(s)) throw LocaleError(ErrorKind::InvalidInput, "unknown axiom", {s});
  auto wanted = [&](std::string_view name) {
    return selection.empty() || std::find(selection.begin(), selection.end(), name) != selection.end();
  };

  AxiomReport r;
  r.frame = std::move(frame_id);
  r.tu_bound = options.tu_bound;

  std::optional<std::optional<DiagonalData>> built;
  auto get_diag = [&]() -> const DiagonalData* {
    if (options.diagonal) return options.diagonal;
    if (!built) built = diagonal_data(L, options.tensor_bound);
    return *built ? &**built : nullptr;
  };

  for (std::string_view name : kAxiomNames) {
    if (!wanted(name)) continue;
    Verdict v;
    if (name == "regular") v = check_regular(L);
    else if (name == "fit") v = check_fit(L);
    else if (name == "subfit") v = check_subfit(L);
    else if (name == "weakly_subfit") v = check_weakly_subfit(L);
    else if (name == "prefit") v = check_prefit(L);
    else if (name == "T1") v = check_T1(L);
    else if (name == "pt_fit") v = check_pt_fit(L);
    else if (name == "H") v = check_H(L);
    else if (name == "F") v = check_F(L);
    else if (name.size() == 3 && name.substr(0, 2) == "F_") v = check_F_condition(L, name[2] - '0');
    else if (name == "anti_urysohn") v = check_anti_urysohn(L);
    else if (name == "irreducible") v = check_irreducible(L);
    else if (name == "sH" || name == "F_sep") {
      const DiagonalData* dd = get_diag();
      if (!dd) v = Verdict::skip("bound", options.tensor_bound);
      else v = name == "sH" ? check_strongly_hausdorff(*dd) : check_F_separated(*dd);
    } else if (name == "T_U") {
      v = check_totally_unordered_bounded(L, tu_targets, options.tu_bound, options.hom_budget);
    }
    r.verdicts.emplace_back(std::string(name), std::move(v));
  }
  return r;
}

nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["value"] = v.value ? nlohmann::ordered_json(*v.value) : nlohmann::ordered_json(nullptr);
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (v.bound) j["bound"] = *v.bound;
  if (!v.skipped.empty()) j["skipped"] = v.skipped;
  return j;
}

nlohmann::ordered_json to_json(const AxiomReport& r) {
  nlohmann::ordered_json j;
  j["frame"] = r.frame;
  j["tu_bound"] = r.tu_bound;
  nlohmann::ordered_json ax = nlohmann::ordered_json::object();
  for (const auto& [name, v] : r.verdicts) ax[name] = to_json(v);
  j["axioms"] = std::move(ax);
  return j;
}

}  // namespace locale_lab
