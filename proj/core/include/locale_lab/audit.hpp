#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "locale_lab/corpus.hpp"
#include "locale_lab/separation.hpp"

namespace locale_lab {

/// The proved implications among the separation axioms, as committed in
/// data/implications.json.
struct Expectations {
  std::vector<std::string> axioms;
  std::vector<std::pair<std::string, std::string>> edges;
  /// Ordered pairs that are known to be non-implications only through
  /// infinite (pointless) examples.
  std::vector<std::pair<std::string, std::string>> not_finitely_witnessable;

  /// Reflexive-transitive closure of `edges`: closed[i][j] when axiom i
  /// implies axiom j.
  std::vector<std::vector<bool>> closure() const;
  std::size_t index(std::string_view axiom) const;
};

/// The built-in copy of data/implications.json.
Expectations default_expectations();
Expectations expectations_from_json(const nlohmann::json& doc);
Expectations load_expectations(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const Expectations& e);

struct AuditOptions {
  std::size_t max_poset = kDefaultMaxPoset;
  std::size_t max_frame = kDefaultMaxFrame;
  std::size_t tensor_bound = kDefaultTensorBound;
  std::size_t tu_bound = kDefaultTuBound;
  std::size_t sublocale_bound = kDefaultSublocaleBound;
  std::size_t hom_budget = kDefaultHomNodeBudget;
};

enum class PairStatus { HoldsOnCorpus, Refuted, UnrefutedAtBound, NotFinitelyWitnessable };
std::string_view to_string(PairStatus s);

struct PairResult {
  std::string from, to;
  bool expected = false;
  PairStatus status = PairStatus::HoldsOnCorpus;
  /// First corpus frame (in corpus order) where `from` holds and `to` fails.
  std::optional<std::string> witness;
  std::size_t compared = 0;
};

struct ImplicationMatrix {
  std::vector<std::string> axioms;
  std::vector<PairResult> pairs;  // row-major over axioms x axioms

  const PairResult& at(std::string_view from, std::string_view to) const;
};

/// One theorem-level invariant executed over the corpus.
struct TheoremCheck {
  TheoremCheck() = default;
  TheoremCheck(std::string n, std::string s) : name(std::move(n)), statement(std::move(s)) {}

  std::string name;
  std::string statement;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;  // frame ids or pair ids, capped

  bool passed() const { return failures.empty(); }
};

/// Axioms that agree on every corpus frame, grouped.
struct FiniteCollapse {
  std::vector<std::vector<std::string>> classes;
  /// Axioms whose verdicts coincide with Booleanness on the corpus.
  std::vector<std::string> boolean_class;
  /// Non-edges of the expectation graph that hold on the corpus.
  std::vector<std::pair<std::string, std::string>> observed;
};

struct FrameRecord {
  CorpusEntry entry;
  AxiomReport report;
  bool boolean = false;
};

struct AuditResult {
  AuditOptions options;
  std::vector<FrameRecord> frames;
  ImplicationMatrix matrix;
  std::vector<TheoremCheck> theorems;
  FiniteCollapse collapse;
  /// Expected edges refuted on the corpus, as "from->to@frame".
  std::vector<std::string> violations;
  /// Non-trivial frames with no element strictly between 0 and 1 (the
  /// two-element frame), excluded from the obstruction checks.
  std::vector<std::string> degenerate;

  bool ok() const;
};

/// Builds the corpus and evaluates every axiom, the implication matrix and the
/// theorem suite. Per-frame work runs through parallel_for; the result does
/// not depend on the thread count.
AuditResult run_audit(const AuditOptions& options, const Expectations& expected);

/// Same, on a given corpus.
AuditResult run_audit(std::vector<CorpusEntry> corpus, const AuditOptions& options, const Expectations& expected);

nlohmann::ordered_json to_json(const AuditResult& r);

/// Axioms as nodes; solid edges are the expected (proved) ones, dashed edges
/// the additionally observed corpus implications, dotted edges the pairs that
/// admit no finite witness.
std::string implication_dot(const AuditResult& r, const Expectations& expected);

/// The (H1)-(H10) Heyting rules over every element triple; returns the name of
/// the first failing rule with its triple, or nullopt.
std::optional<std::string> heyting_law_failure(const Frame& L);

/// For the diagonal D_L in L (+) L: every member is symmetric, the meet of
/// the members is d_L, and |D_L| = |L|. Returns a description of the first
/// failure, or nullopt.
std::optional<std::string> diagonal_failure(const DiagonalData& dd);

}  // namespace locale_lab
