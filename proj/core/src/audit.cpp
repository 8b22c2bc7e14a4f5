#include "locale_lab/audit.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "locale_lab/canonical.hpp"
#include "locale_lab/parallel.hpp"

namespace locale_lab {

// ---------------------------------------------------------------- expectations

std::size_t Expectations::index(std::string_view axiom) const {
  auto it = std::find(axioms.begin(), axioms.end(), axiom);
  if (it == axioms.end()) throw LocaleError(ErrorKind::InvalidInput, "unknown axiom in expectations", {std::string(axiom)});
  return static_cast<std::size_t>(it - axioms.begin());
}

std::vector<std::vector<bool>> Expectations::closure() const {
  const std::size_t n = axioms.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = true;
  for (const auto& [a, b] : edges) c[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (c[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (c[k][j]) c[i][j] = true;
  return c;
}

Expectations default_expectations() {
  Expectations e;
  e.axioms = {"regular", "fit", "subfit", "weakly_subfit", "prefit", "sH",
              "F_sep",   "H",   "F",      "T_U",           "pt_fit", "T1"};
  e.edges = {{"regular", "sH"},   {"regular", "fit"},      {"fit", "prefit"},     {"fit", "subfit"},
             {"prefit", "weakly_subfit"}, {"subfit", "weakly_subfit"}, {"fit", "F_sep"},  {"F_sep", "T_U"},
             {"sH", "T_U"},       {"F_sep", "F"},          {"sH", "H"},           {"T_U", "pt_fit"},
             {"F", "pt_fit"},     {"H", "pt_fit"},         {"T_U", "T1"},         {"F", "T1"},
             {"H", "T1"}};
  e.not_finitely_witnessable = {{"pt_fit", "T1"}, {"T1", "pt_fit"}};
  return e;
}

Expectations expectations_from_json(const nlohmann::json& doc) {
  Expectations e;
  try {
    e.axioms = doc.at("axioms").get<std::vector<std::string>>();
    for (const auto& p : doc.at("edges")) e.edges.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    if (doc.contains("not_finitely_witnessable"))
      for (const auto& p : doc.at("not_finitely_witnessable"))
        e.not_finitely_witnessable.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  } catch (const nlohmann::json::exception& ex) {
    throw LocaleError(ErrorKind::InvalidInput, std::string("malformed expectations: ") + ex.what());
  }
  for (const auto& a : e.axioms)
    if (!is_axiom_name(a)) throw LocaleError(ErrorKind::InvalidInput, "expectations name an unknown axiom", {a});
  for (const auto& [a, b] : e.edges) e.index(a), e.index(b);
  for (const auto& [a, b] : e.not_finitely_witnessable) e.index(a), e.index(b);
  return e;
}

Expectations load_expectations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LocaleError(ErrorKind::InvalidInput, "cannot open " + path.string());
  try {
    return expectations_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& ex) {
    throw LocaleError(ErrorKind::InvalidInput, path.string() + ": " + ex.what());
  }
}

nlohmann::ordered_json to_json(const Expectations& e) {
  nlohmann::ordered_json j;
  j["axioms"] = e.axioms;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : e.edges) j["edges"].push_back({a, b});
  j["not_finitely_witnessable"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : e.not_finitely_witnessable) j["not_finitely_witnessable"].push_back({a, b});
  return j;
}

std::string_view to_string(PairStatus s) {
  switch (s) {
    case PairStatus::HoldsOnCorpus: return "holds-on-corpus";
    case PairStatus::Refuted: return "refuted";
    case PairStatus::UnrefutedAtBound: return "unrefuted-at-this-bound";
    case PairStatus::NotFinitelyWitnessable: return "not-finitely-witnessable";
  }
  return "?";
}

const PairResult& ImplicationMatrix::at(std::string_view from, std::string_view to) const {
  for (const auto& p : pairs)
    if (p.from == from && p.to == to) return p;
  throw LocaleError(ErrorKind::InvalidInput, "pair not in matrix", {std::string(from), std::string(to)});
}

bool AuditResult::ok() const {
  if (!violations.empty()) return false;
  return std::all_of(theorems.begin(), theorems.end(), [](const TheoremCheck& t) { return t.passed(); });
}

// ---------------------------------------------------------------- per-frame laws

std::optional<std::string> heyting_law_failure(const Frame& L) {
  const Elem n = static_cast<Elem>(L.size()), top = L.top();
  auto fail = [&](const char* rule, std::initializer_list<Elem> xs) {
    std::string s = rule;
    for (Elem x : xs) s += " " + L.label(x);
    return s;
  };
  for (Elem a = 0; a < n; ++a) {
    if (L.arrow(top, a) != a) return fail("H1", {a});
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = L.arrow(a, b);
      if (L.leq(a, b) != (ab == top)) return fail("H2", {a, b});
      if (!L.leq(a, L.arrow(b, a))) return fail("H3", {a, b});
      if (ab != L.arrow(a, L.meet(a, b))) return fail("H4", {a, b});
      if (L.meet(a, ab) != L.meet(a, b)) return fail("H5", {a, b});
      if (a != L.meet(L.join(a, b), L.arrow(b, a))) return fail("H8", {a, b});
      if (!L.leq(a, L.arrow(ab, b))) return fail("H9", {a, b});
      if (L.arrow(L.arrow(ab, b), b) != ab) return fail("H10", {a, b});
      for (Elem c = 0; c < n; ++c) {
        if ((L.meet(a, b) == L.meet(a, c)) != (ab == L.arrow(a, c))) return fail("H6", {a, b, c});
        const Elem lhs = L.arrow(L.meet(a, b), c);
        if (lhs != L.arrow(a, L.arrow(b, c)) || lhs != L.arrow(b, L.arrow(a, c))) return fail("H7", {a, b, c});
        if (L.leq(c, ab) != L.leq(L.meet(c, a), b)) return fail("adjunction", {a, b, c});
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> diagonal_failure(const DiagonalData& dd) {
  const TensorFrame& t = dd.tensor;
  const Frame& L = t.left();
  const Elem n = static_cast<Elem>(L.size());
  if (dd.diagonal.members.count() != L.size()) return "|D_L| differs from |L|";
  std::optional<std::string> out;
  dd.diagonal.members.for_each([&](std::size_t d) {
    if (out) return;
    for (Elem a = 0; a < n && !out; ++a)
      for (Elem b = 0; b < n && !out; ++b)
        if (t.contains(static_cast<Elem>(d), a, b) != t.contains(static_cast<Elem>(d), b, a))
          out = "asymmetric member " + t.frame().label(static_cast<Elem>(d));
  });
  if (out) return out;
  if (t.frame().meet_all(dd.diagonal.members) != dd.d) return "meet of D_L differs from d_L";
  return std::nullopt;
}

// ---------------------------------------------------------------- audit

namespace {

constexpr std::size_t kFailureCap = 20;

struct FrameWork {
  AxiomReport report;
  bool boolean = false;
  std::optional<std::string> heyting;
  bool diagonal_checked = false;
  std::optional<std::string> diagonal;
  bool fit_geo = false, subfit_geo = false, t1_geo = false;
  bool heredity_checked = false;
  std::optional<std::string> heredity;
};

FrameWork evaluate_frame(const CorpusEntry& e, std::span<const HomTarget> targets, const AuditOptions& o) {
  FrameWork w;
  const Frame& L = e.frame;
  w.boolean = is_boolean(L);
  w.heyting = heyting_law_failure(L);

  auto dd = diagonal_data(L, o.tensor_bound);
  if (dd) {
    w.diagonal_checked = true;
    w.diagonal = diagonal_failure(*dd);
  }
  SeparationOptions so{o.tensor_bound, o.tu_bound, o.hom_budget, dd ? &*dd : nullptr};
  w.report = evaluate_axioms(L, e.id, {}, targets, so);

  w.fit_geo = fit_geometric(L);
  w.subfit_geo = subfit_geometric(L);
  w.t1_geo = T1_geometric(L);

  if (L.size() <= o.sublocale_bound) {
    w.heredity_checked = true;
    const bool f = w.report.at("F").holds();
    for (const auto& S : enumerate_sublocales(L, o.sublocale_bound)) {
      Frame induced = induced_frame(S);
      if (f && !has_property_F(induced)) {
        w.heredity = e.id + ":{" ;
        for (const auto& s : L.labels_of(S.members)) *w.heredity += s + ",";
        w.heredity->back() = '}';
        break;
      }
    }
  }
  return w;
}

void add_failure(TheoremCheck& t, std::string what) {
  if (t.failures.size() < kFailureCap) t.failures.push_back(std::move(what));
}

// A per-frame implication p => q over decided verdicts.
TheoremCheck implication_check(std::string name, std::string statement, const std::vector<FrameRecord>& frames,
                               std::string_view p, std::string_view q) {
  TheoremCheck t{std::move(name), std::move(statement)};
  for (const auto& f : frames) {
    const Verdict &vp = f.report.at(p), &vq = f.report.at(q);
    if (!vp.decided() || !vq.decided()) {
      ++t.skipped;
      continue;
    }
    ++t.checked;
    if (vp.holds() && !vq.holds()) add_failure(t, f.entry.id);
  }
  return t;
}

ImplicationMatrix build_matrix(const std::vector<FrameRecord>& frames, const Expectations& ex,
                               std::vector<std::string>& violations) {
  ImplicationMatrix m;
  m.axioms = ex.axioms;
  auto closed = ex.closure();
  auto nfw = [&](const std::string& a, const std::string& b) {
    return std::find(ex.not_finitely_witnessable.begin(), ex.not_finitely_witnessable.end(), std::pair(a, b)) !=
           ex.not_finitely_witnessable.end();
  };
  for (std::size_t i = 0; i < ex.axioms.size(); ++i)
    for (std::size_t j = 0; j < ex.axioms.size(); ++j) {
      PairResult p;
      p.from = ex.axioms[i];
      p.to = ex.axioms[j];
      p.expected = closed[i][j];
      for (const auto& f : frames) {
        const Verdict &a = f.report.at(p.from), &b = f.report.at(p.to);
        if (!a.decided() || !b.decided()) continue;
        ++p.compared;
        if (!p.witness && a.holds() && !b.holds()) p.witness = f.entry.id;
      }
      if (p.witness) {
        p.status = PairStatus::Refuted;
        if (p.expected) violations.push_back(p.from + "->" + p.to + "@" + *p.witness);
      } else if (p.expected) {
        p.status = PairStatus::HoldsOnCorpus;
      } else if (nfw(p.from, p.to)) {
        p.status = PairStatus::NotFinitelyWitnessable;
      } else {
        p.status = PairStatus::UnrefutedAtBound;
      }
      m.pairs.push_back(std::move(p));
    }
  return m;
}

FiniteCollapse build_collapse(const std::vector<FrameRecord>& frames, const ImplicationMatrix& m) {
  FiniteCollapse c;
  const std::size_t n = m.axioms.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto holds = [&](std::size_t i, std::size_t j) { return !m.pairs[i * n + j].witness.has_value(); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (holds(i, j) && holds(j, i)) parent[find(j)] = find(i);
  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(m.axioms[i]);
  for (auto& [root, g] : groups) c.classes.push_back(std::move(g));

  for (const auto& a : m.axioms) {
    bool agrees = true;
    for (const auto& f : frames) {
      const Verdict& v = f.report.at(a);
      if (v.decided() && v.holds() != f.boolean) agrees = false;
    }
    if (agrees) c.boolean_class.push_back(a);
  }
  for (const auto& p : m.pairs)
    if (!p.expected && !p.witness) c.observed.emplace_back(p.from, p.to);
  return c;
}

bool has_middle_element(const Frame& L) { return L.size() >= 3; }

}  // namespace

AuditResult run_audit(const AuditOptions& options, const Expectations& expected) {
  return run_audit(build_corpus(options.max_poset, options.max_frame), options, expected);
}

AuditResult run_audit(std::vector<CorpusEntry> corpus, const AuditOptions& options, const Expectations& expected) {
  AuditResult r;
  r.options = options;

  std::vector<HomTarget> targets;
  for (const auto& e : corpus)
    if (e.frame.size() <= options.tu_bound) targets.push_back({e.id, e.frame});

  std::vector<FrameWork> work(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) { work[i] = evaluate_frame(corpus[i], targets, options); });

  for (std::size_t i = 0; i < corpus.size(); ++i)
    r.frames.push_back(FrameRecord{std::move(corpus[i]), std::move(work[i].report), work[i].boolean});
  const auto& frames = r.frames;

  r.matrix = build_matrix(frames, expected, r.violations);
  r.collapse = build_collapse(frames, r.matrix);

  auto per_frame = [&](std::string name, std::string statement, auto&& failure) {
    TheoremCheck t{std::move(name), std::move(statement)};
    for (std::size_t i = 0; i < frames.size(); ++i) {
      std::optional<std::optional<std::string>> res = failure(i);
      if (!res) {
        ++t.skipped;
        continue;
      }
      ++t.checked;
      if (*res) add_failure(t, frames[i].entry.id + ": " + **res);
    }
    r.theorems.push_back(std::move(t));
  };
  using Outcome = std::optional<std::optional<std::string>>;
  const Outcome pass = std::optional<std::string>{};

  per_frame("heyting_rules", "(H1)-(H10) and the meet/arrow adjunction hold for all element triples",
            [&](std::size_t i) -> Outcome { return work[i].heyting; });

  per_frame("F_conditions_agree", "the six (F) conditions agree with each other and with the (F) decision",
            [&](std::size_t i) -> Outcome {
              const auto& rep = frames[i].report;
              const bool f = rep.at("F").holds();
              for (int k = 1; k <= 6; ++k)
                if (rep.at("F_" + std::to_string(k)).holds() != f)
                  return std::optional<std::string>("condition " + std::to_string(k) + " disagrees");
              return pass;
            });

  r.theorems.push_back(implication_check("F_separated_implies_F", "an F-separated frame satisfies (F)", frames,
                                         "F_sep", "F"));
  r.theorems.push_back(implication_check("fit_implies_F", "fit implies (F)", frames, "fit", "F"));
  r.theorems.push_back(implication_check("F_implies_T1", "(F) implies (T1)", frames, "F", "T1"));

  per_frame("F_hereditary", "(F) passes to every sublocale with its induced frame structure",
            [&](std::size_t i) -> Outcome {
              if (!work[i].heredity_checked) return std::nullopt;
              return work[i].heredity;
            });

  {
    TheoremCheck t{"F_binary_products", "the coproduct of two frames with (F) has (F)"};
    std::vector<std::size_t> with_f;
    for (std::size_t i = 0; i < frames.size(); ++i)
      if (frames[i].report.at("F").holds()) with_f.push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < with_f.size(); ++x)
      for (std::size_t y = x; y < with_f.size(); ++y) {
        const auto &L = frames[with_f[x]].entry.frame, &M = frames[with_f[y]].entry.frame;
        if (L.size() * M.size() <= options.tensor_bound) pairs.emplace_back(with_f[x], with_f[y]);
        else ++t.skipped;
      }
    std::vector<char> ok(pairs.size(), 0);
    parallel_for(pairs.size(), [&](std::size_t p) {
      const auto& [i, j] = pairs[p];
      TensorFrame tf = TensorFrame::build(frames[i].entry.frame, frames[j].entry.frame, options.tensor_bound);
      ok[p] = has_property_F(tf.frame()) ? 1 : 0;
    });
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      ++t.checked;
      if (!ok[p]) add_failure(t, frames[pairs[p].first].entry.id + "+" + frames[pairs[p].second].entry.id);
    }
    r.theorems.push_back(std::move(t));
  }

  r.theorems.push_back(implication_check("H_implies_pt_fit", "(H) implies (pt-fit)", frames, "H", "pt_fit"));
  r.theorems.push_back(implication_check("F_implies_pt_fit", "(F) implies (pt-fit)", frames, "F", "pt_fit"));
  r.theorems.push_back(
      implication_check("T_U_implies_pt_fit", "bounded (T_U) implies (pt-fit)", frames, "T_U", "pt_fit"));
  r.theorems.push_back(implication_check("sH_implies_H", "strongly Hausdorff implies (H)", frames, "sH", "H"));
  r.theorems.push_back(
      implication_check("F_sep_implies_T_U", "F-separated implies bounded (T_U)", frames, "F_sep", "T_U"));
  r.theorems.push_back(implication_check("regular_implies_fit", "regular implies fit", frames, "regular", "fit"));
  r.theorems.push_back(implication_check("fit_implies_subfit", "fit implies subfit", frames, "fit", "subfit"));
  r.theorems.push_back(
      implication_check("subfit_implies_weakly_subfit", "subfit implies weakly subfit", frames, "subfit", "weakly_subfit"));

  per_frame("fit_iff_closed_sublocales_fitted", "fit exactly when every closed sublocale is fitted",
            [&](std::size_t i) -> Outcome {
              if (frames[i].report.at("fit").holds() != work[i].fit_geo) return std::optional<std::string>("mismatch");
              return pass;
            });
  per_frame("subfit_iff_opens_are_joins_of_closed",
            "subfit exactly when every open sublocale is a join of closed sublocales", [&](std::size_t i) -> Outcome {
              if (frames[i].report.at("subfit").holds() != work[i].subfit_geo)
                return std::optional<std::string>("mismatch");
              return pass;
            });
  per_frame("T1_iff_points_closed", "(T1) exactly when every one-point sublocale is closed",
            [&](std::size_t i) -> Outcome {
              if (frames[i].report.at("T1").holds() != work[i].t1_geo) return std::optional<std::string>("mismatch");
              return pass;
            });

  for (const auto& f : frames)
    if (f.entry.frame.size() == 2) r.degenerate.push_back(f.entry.id);
  per_frame("irreducible_excludes_F", "no frame with an element strictly between 0 and 1 is irreducible with (F)",
            [&](std::size_t i) -> Outcome {
              if (!has_middle_element(frames[i].entry.frame)) return std::nullopt;
              const auto& rep = frames[i].report;
              if (rep.at("irreducible").holds() && rep.at("F").holds())
                return std::optional<std::string>("irreducible with (F)");
              return pass;
            });
  per_frame("anti_urysohn_excludes_F", "no frame with an element strictly between 0 and 1 is anti-Urysohn with (F)",
            [&](std::size_t i) -> Outcome {
              if (!has_middle_element(frames[i].entry.frame)) return std::nullopt;
              const auto& rep = frames[i].report;
              if (rep.at("anti_urysohn").holds() && rep.at("F").holds())
                return std::optional<std::string>("anti-Urysohn with (F)");
              return pass;
            });

  per_frame("diagonal_structure", "D_L is symmetric, has |L| members, and meets to d_L",
            [&](std::size_t i) -> Outcome {
              if (!work[i].diagonal_checked) return std::nullopt;
              return work[i].diagonal;
            });
  per_frame("sH_iff_boolean", "on finite frames the closed-diagonal check agrees with Booleanness",
            [&](std::size_t i) -> Outcome {
              const Verdict& v = frames[i].report.at("sH");
              if (!v.decided()) return std::nullopt;
              if (v.holds() != frames[i].boolean) return std::optional<std::string>("mismatch");
              return pass;
            });

  {
    TheoremCheck t{"tensor_spatiality", "Omega(X) (+) Omega(Y) is isomorphic to Omega(X x Y) for small spaces"};
    std::vector<FinPoset> spaces;
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, options.max_poset); ++k)
      for (auto& P : enumerate_posets(k, options.max_poset)) spaces.push_back(std::move(P));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Frame> omega;
    for (const auto& X : spaces) omega.push_back(alexandrov_frame(X));
    for (std::size_t x = 0; x < spaces.size(); ++x)
      for (std::size_t y = 0; y < spaces.size(); ++y)
        if (omega[x].size() * omega[y].size() <= options.tensor_bound) pairs.emplace_back(x, y);
        else ++t.skipped;
    std::vector<char> ok(pairs.size(), 0);
    parallel_for(pairs.size(), [&](std::size_t p) {
      const auto& [x, y] = pairs[p];
      TensorFrame tf = TensorFrame::build(omega[x], omega[y], options.tensor_bound);
      ok[p] = canonical_form(tf.frame()) == canonical_form(alexandrov_frame(product_space(spaces[x], spaces[y])));
    });
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      ++t.checked;
      if (!ok[p])
        add_failure(t, poset_canonical_form(spaces[pairs[p].first]) + " x " + poset_canonical_form(spaces[pairs[p].second]));
    }
    r.theorems.push_back(std::move(t));
  }
  return r;
}

// ---------------------------------------------------------------- output

nlohmann::ordered_json to_json(const AuditResult& r) {
  using J = nlohmann::ordered_json;
  J j;
  const auto& o = r.options;
  J corpus;
  corpus["max_poset"] = o.max_poset;
  corpus["max_frame"] = o.max_frame;
  corpus["tensor_bound"] = o.tensor_bound;
  corpus["tu_bound"] = o.tu_bound;
  corpus["sublocale_bound"] = o.sublocale_bound;
  corpus["frames"] = r.frames.size();
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& f : r.frames) ++sizes[f.entry.frame.size()];
  J hist = J::object();
  for (auto [s, c] : sizes) hist[std::to_string(s)] = c;
  corpus["sizes"] = std::move(hist);
  j["corpus"] = std::move(corpus);

  j["ok"] = r.ok();
  j["violations"] = r.violations;

  J matrix;
  matrix["axioms"] = r.matrix.axioms;
  J pairs = J::array();
  for (const auto& p : r.matrix.pairs) {
    if (p.from == p.to) continue;
    J e;
    e["from"] = p.from;
    e["to"] = p.to;
    e["expected"] = p.expected;
    e["status"] = to_string(p.status);
    if (p.witness) e["witness"] = *p.witness;
    e["compared"] = p.compared;
    pairs.push_back(std::move(e));
  }
  matrix["pairs"] = std::move(pairs);
  j["implications"] = std::move(matrix);

  J theorems = J::array();
  for (const auto& t : r.theorems) {
    J e;
    e["name"] = t.name;
    e["statement"] = t.statement;
    e["status"] = t.passed() ? "pass" : "fail";
    e["checked"] = t.checked;
    e["skipped"] = t.skipped;
    if (!t.failures.empty()) e["failures"] = t.failures;
    theorems.push_back(std::move(e));
  }
  j["theorems"] = std::move(theorems);

  J collapse;
  collapse["classes"] = r.collapse.classes;
  collapse["boolean_class"] = r.collapse.boolean_class;
  J observed = J::array();
  for (const auto& [a, b] : r.collapse.observed) observed.push_back({a, b});
  collapse["observed"] = std::move(observed);
  collapse["note"] =
      "implications seen on every corpus frame without a proof behind them; finite frames are spatial, so several "
      "axioms coincide there";
  j["finite_collapse"] = std::move(collapse);
  j["degenerate"] = r.degenerate;

  J frames = J::array();
  for (const auto& f : r.frames) {
    J e;
    e["id"] = f.entry.id;
    e["size"] = f.entry.frame.size();
    e["hash"] = f.entry.hash;
    e["origin"] = f.entry.origin;
    e["boolean"] = f.boolean;
    e["axioms"] = to_json(f.report)["axioms"];
    frames.push_back(std::move(e));
  }
  j["frames"] = std::move(frames);
  return j;
}

std::string implication_dot(const AuditResult& r, const Expectations& expected) {
  std::ostringstream out;
  out << "digraph separation {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& a : expected.axioms) out << "  \"" << a << "\";\n";
  for (const auto& [a, b] : expected.edges) out << "  \"" << a << "\" -> \"" << b << "\" [style=solid];\n";
  for (const auto& p : r.matrix.pairs) {
    if (p.expected || p.from == p.to) continue;
    if (p.status == PairStatus::UnrefutedAtBound)
      out << "  \"" << p.from << "\" -> \"" << p.to << "\" [style=dashed, color=gray];\n";
    else if (p.status == PairStatus::NotFinitelyWitnessable)
      out << "  \"" << p.from << "\" -> \"" << p.to << "\" [style=dotted, label=\"no finite witness\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace locale_lab
