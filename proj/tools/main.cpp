// locale-lab: separation axioms on finite frames.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "locale_lab/audit.hpp"
#include "locale_lab/canonical.hpp"
#include "locale_lab/corpus.hpp"
#include "locale_lab/frame_json.hpp"
#include "locale_lab/separation.hpp"
#include "locale_lab/tensor.hpp"

namespace {

using namespace locale_lab;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitEdgeViolated = 3;
constexpr int kExitTheoremFailed = 4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw LocaleError(ErrorKind::InvalidInput, "cannot write " + out_path);
  out << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int report_error(const LocaleError& e) {
  nlohmann::ordered_json j;
  j["error"] = to_string(e.kind());
  j["message"] = e.what();
  if (!e.witness().empty()) j["witness"] = e.witness();
  std::cerr << j.dump() << "\n";
  return e.kind() == ErrorKind::ExpectedEdgeViolated ? kExitEdgeViolated : kExitInput;
}

std::vector<HomTarget> tu_targets(std::size_t max_poset, std::size_t tu_bound) {
  std::vector<HomTarget> out;
  for (auto& e : build_corpus(max_poset, std::max(tu_bound, std::size_t{1})))
    if (e.frame.size() <= tu_bound) out.push_back({e.id, e.frame});
  return out;
}

struct CheckArgs {
  std::string file;
  std::string axioms = "all";
  std::size_t tensor_bound = kDefaultTensorBound;
  std::size_t tu_bound = kDefaultTuBound;
  std::size_t max_poset = kDefaultMaxPoset;
  std::string out;
};

int cmd_check(const CheckArgs& a) {
  Frame L = load_frame_file(a.file);
  std::vector<std::string> selection;
  if (a.axioms != "all") {
    std::stringstream ss(a.axioms);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) selection.push_back(item);
  }
  bool wants_tu = selection.empty() || std::find(selection.begin(), selection.end(), "T_U") != selection.end();
  std::vector<HomTarget> targets;
  if (wants_tu) targets = tu_targets(a.max_poset, a.tu_bound);
  SeparationOptions opts;
  opts.tensor_bound = a.tensor_bound;
  opts.tu_bound = a.tu_bound;
  std::string id = std::filesystem::path(a.file).stem().string();
  AxiomReport r = evaluate_axioms(L, id, selection, targets, opts);
  auto j = to_json(r);
  j["size"] = L.size();
  j["canonical_hash"] = canonical_hash(canonical_form(L));
  emit(dump(j), a.out);
  return 0;
}

struct TensorArgs {
  std::string left, right;
  bool dump_elements = false;
  std::size_t tensor_bound = kDefaultTensorBound;
  std::string out;
};

int cmd_tensor(const TensorArgs& a) {
  Frame L = load_frame_file(a.left), M = load_frame_file(a.right);
  nlohmann::ordered_json j;
  j["left"] = a.left;
  j["right"] = a.right;
  if (L.size() * M.size() > a.tensor_bound) {
    std::cerr << "warning: |L|*|M| = " << L.size() * M.size() << " exceeds the tensor bound " << a.tensor_bound
              << "; skipped\n";
    j["skipped"] = "bound";
    j["bound"] = a.tensor_bound;
    emit(dump(j), a.out);
    return 0;
  }
  TensorFrame t = TensorFrame::build(L, M, a.tensor_bound);
  const std::string form = canonical_form(t.frame());
  j["size"] = t.size();
  j["canonical_hash"] = canonical_hash(form);
  j["isomorphic_to_left"] = form == canonical_form(L);
  j["isomorphic_to_right"] = form == canonical_form(M);
  if (a.dump_elements) {
    nlohmann::ordered_json elems = nlohmann::ordered_json::array();
    for (Elem d = 0; d < t.size(); ++d) {
      nlohmann::ordered_json e;
      e["label"] = t.frame().label(d);
      nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
      for (const auto& [x, y] : t.pair_labels(d)) pairs.push_back({x, y});
      e["maximal_pairs"] = std::move(pairs);
      e["cells"] = t.cells(d).count();
      elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    j["frame"] = frame_to_json(t.frame());
  }
  emit(dump(j), a.out);
  return 0;
}

struct AuditArgs {
  AuditOptions options;
  std::string expected;
  std::string out;
};

Expectations expectations_for(const std::string& path) {
  return path.empty() ? default_expectations() : load_expectations(path);
}

int cmd_audit(const AuditArgs& a) {
  Expectations ex = expectations_for(a.expected);
  AuditResult r = run_audit(a.options, ex);
  emit(dump(to_json(r)), a.out);
  if (!r.violations.empty()) {
    std::vector<std::string> w = r.violations;
    return report_error(LocaleError(ErrorKind::ExpectedEdgeViolated, "a proved implication fails on the corpus", w));
  }
  for (const auto& t : r.theorems)
    if (!t.passed()) {
      std::cerr << "theorem check failed: " << t.name << "\n";
      return kExitTheoremFailed;
    }
  return 0;
}

struct ExportArgs {
  bool dot = false;
  bool jsonl = false;
  AuditOptions options;
  std::string expected;
  std::string out;
};

int cmd_export(const ExportArgs& a) {
  if (a.dot == a.jsonl) throw LocaleError(ErrorKind::InvalidInput, "choose exactly one of --dot and --jsonl");
  if (a.jsonl) {
    auto corpus = build_corpus(a.options.max_poset, a.options.max_frame);
    std::ostringstream ss;
    write_corpus_jsonl(ss, corpus);
    emit(ss.str(), a.out);
    return 0;
  }
  Expectations ex = expectations_for(a.expected);
  AuditResult r = run_audit(a.options, ex);
  emit(implication_dot(r, ex), a.out);
  return r.violations.empty() ? 0 : kExitEdgeViolated;
}

void add_corpus_options(CLI::App* cmd, AuditOptions& o) {
  cmd->add_option("--max-poset", o.max_poset, "largest poset size for the corpus")->capture_default_str();
  cmd->add_option("--max-frame", o.max_frame, "largest corpus frame")->capture_default_str();
  cmd->add_option("--tensor-bound", o.tensor_bound, "cap on |L|*|M| for coproducts")->capture_default_str();
  cmd->add_option("--tu-bound", o.tu_bound, "largest corpus frame (T_U) maps into")->capture_default_str();
  cmd->add_option("--sublocale-bound", o.sublocale_bound, "largest frame whose sublocales are enumerated")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separation axioms on finite frames"};
  app.set_version_flag("--version", std::string(LOCALE_LAB_VERSION));
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "evaluate separation axioms on one frame");
  c->add_option("file", check.file, "frame JSON file")->required();
  c->add_option("--axioms", check.axioms, "comma-separated axiom names, or 'all'")->capture_default_str();
  c->add_option("--tensor-bound", check.tensor_bound, "cap on |L|^2 for the diagonal checks")->capture_default_str();
  c->add_option("--tu-bound", check.tu_bound, "largest corpus frame (T_U) maps into")->capture_default_str();
  c->add_option("--max-poset", check.max_poset, "poset bound of the (T_U) target corpus")->capture_default_str();
  c->add_option("--out", check.out, "write the report here instead of stdout");

  TensorArgs tensor;
  auto* t = app.add_subcommand("tensor", "build the coproduct of two frames");
  t->add_option("left", tensor.left, "frame JSON file")->required();
  t->add_option("right", tensor.right, "frame JSON file")->required();
  t->add_flag("--dump", tensor.dump_elements, "list every element");
  t->add_option("--tensor-bound", tensor.tensor_bound, "cap on |L|*|M|")->capture_default_str();
  t->add_option("--out", tensor.out, "write the summary here instead of stdout");

  AuditArgs audit;
  auto* a = app.add_subcommand("audit", "check the implication diagram and theorem suite over the corpus");
  add_corpus_options(a, audit.options);
  a->add_option("--expected", audit.expected, "expected implications (JSON); built-in copy by default");
  a->add_option("--out", audit.out, "write the report here instead of stdout");

  ExportArgs exp;
  auto* e = app.add_subcommand("export", "export the implication graph or the corpus");
  e->add_flag("--dot", exp.dot, "implication graph in DOT");
  e->add_flag("--jsonl", exp.jsonl, "corpus as JSON lines");
  add_corpus_options(e, exp.options);
  e->add_option("--expected", exp.expected, "expected implications (JSON); built-in copy by default");
  e->add_option("--out", exp.out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c) return cmd_check(check);
    if (*t) return cmd_tensor(tensor);
    if (*a) return cmd_audit(audit);
    if (*e) return cmd_export(exp);
  } catch (const LocaleError& err) {
    return report_error(err);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  }
  return 0;
}
