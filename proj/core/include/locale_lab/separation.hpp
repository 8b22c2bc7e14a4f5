#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "locale_lab/frame.hpp"
#include "locale_lab/hom.hpp"
#include "locale_lab/sublocale.hpp"
#include "locale_lab/tensor.hpp"

namespace locale_lab {

/// Element cap for the frames (T_U) quantifies over.
inline constexpr std::size_t kDefaultTuBound = 8;

/// Outcome of one axiom on one frame. `value` is empty when the check was
/// skipped because a bound was exceeded; `skipped` then names the reason.
/// Witnesses are element labels of the least failing tuple in index order.
struct Verdict {
  std::optional<bool> value;
  std::vector<std::string> witness;
  std::optional<std::size_t> bound;
  std::string skipped;

  static Verdict pass() { return Verdict{true, {}, std::nullopt, {}}; }
  static Verdict fail(std::vector<std::string> w) { return Verdict{false, std::move(w), std::nullopt, {}}; }
  static Verdict skip(std::string why, std::size_t bound) { return Verdict{std::nullopt, {}, bound, std::move(why)}; }

  bool holds() const { return value.value_or(false); }
  bool decided() const { return value.has_value(); }
};

/// Report keys, in report order.
inline constexpr std::array<std::string_view, 20> kAxiomNames{
    "regular", "fit",  "subfit", "weakly_subfit", "prefit", "T1",  "pt_fit",
    "H",       "F",    "F_1",    "F_2",           "F_3",    "F_4", "F_5",
    "F_6",     "anti_urysohn", "irreducible", "sH", "F_sep", "T_U"};

bool is_axiom_name(std::string_view name);

Verdict check_regular(const Frame& L);
Verdict check_fit(const Frame& L);
Verdict check_subfit(const Frame& L);
Verdict check_weakly_subfit(const Frame& L);
Verdict check_prefit(const Frame& L);
/// Witness (p, a) with p prime and p < a < 1.
Verdict check_T1(const Frame& L);
/// Witness: the prime p followed by the labels of fitting(b(p)).
Verdict check_pt_fit(const Frame& L);
Verdict check_H(const Frame& L);
/// Condition (iv) of the (F) characterization, decided through the downsets
/// U_a = {u : u -> a != a} rather than a four-fold search.
Verdict check_F(const Frame& L);
Verdict check_anti_urysohn(const Frame& L);
Verdict check_irreducible(const Frame& L);

/// Condition i (1..6) of the (F) characterization by exhaustive (u, v) search.
Verdict check_F_condition(const Frame& L, int i);

/// All six conditions; throws EquivalenceViolation when they disagree.
std::array<Verdict, 6> check_F_equivalences(const Frame& L);

inline bool is_regular(const Frame& L) { return check_regular(L).holds(); }
inline bool is_fit(const Frame& L) { return check_fit(L).holds(); }
inline bool is_subfit(const Frame& L) { return check_subfit(L).holds(); }
inline bool is_weakly_subfit(const Frame& L) { return check_weakly_subfit(L).holds(); }
inline bool is_prefit(const Frame& L) { return check_prefit(L).holds(); }
inline bool is_T1(const Frame& L) { return check_T1(L).holds(); }
inline bool is_pt_fit(const Frame& L) { return check_pt_fit(L).holds(); }
inline bool is_hausdorff_H(const Frame& L) { return check_H(L).holds(); }
inline bool has_property_F(const Frame& L) { return check_F(L).holds(); }
inline bool is_anti_urysohn(const Frame& L) { return check_anti_urysohn(L).holds(); }

/// Every closed sublocale is fitted.
bool fit_geometric(const Frame& L);
/// Every open sublocale is the join of the closed sublocales inside it.
bool subfit_geometric(const Frame& L);
/// b(p) is closed for every prime p.
bool T1_geometric(const Frame& L);

/// L (+) L with its diagonal and d_L, built once and shared by the diagonal
/// checks.
struct DiagonalData {
  TensorFrame tensor;
  Sublocale diagonal;
  Elem d;
};

/// nullopt when |L|^2 exceeds the bound.
std::optional<DiagonalData> diagonal_data(const Frame& L, std::size_t tensor_bound = kDefaultTensorBound);

/// closure(D_L) = D_L, i.e. c(d_L) = D_L. Witness: least tensor element of
/// c(d_L) outside D_L.
Verdict check_strongly_hausdorff(const DiagonalData& dd);
/// fitting(D_L) = D_L. Witness: least tensor element of fitting(D_L) outside D_L.
Verdict check_F_separated(const DiagonalData& dd);
Verdict check_strongly_hausdorff(const Frame& L, std::size_t tensor_bound = kDefaultTensorBound);
Verdict check_F_separated(const Frame& L, std::size_t tensor_bound = kDefaultTensorBound);

/// A frame (T_U) may map into, with the id reported in witnesses.
struct HomTarget {
  std::string id;
  Frame frame;
};

/// Bounded (T_U): no two distinct homs h <= k from L into any target. A true
/// verdict carries `tu_bound`; a witness is (target id, h, k) with each map
/// rendered as "x:h(x),..." over the labels of L.
Verdict check_totally_unordered_bounded(const Frame& L, std::span<const HomTarget> targets, std::size_t tu_bound,
                                        std::size_t hom_budget = kDefaultHomNodeBudget);

struct SeparationOptions {
  std::size_t tensor_bound = kDefaultTensorBound;
  std::size_t tu_bound = kDefaultTuBound;
  std::size_t hom_budget = kDefaultHomNodeBudget;
  /// Precomputed diagonal data for the frame, reused instead of rebuilding
  /// L (+) L.
  const DiagonalData* diagonal = nullptr;
};

struct AxiomReport {
  std::string frame;
  std::size_t tu_bound = 0;
  /// In kAxiomNames order, restricted to the selection.
  std::vector<std::pair<std::string, Verdict>> verdicts;

  const Verdict* find(std::string_view name) const;
  const Verdict& at(std::string_view name) const;
};

/// Evaluates the selected axioms (all when `selection` is empty). Unknown
/// names throw InvalidInput. The six (F) conditions are reported as evaluated,
/// without the agreement check of check_F_equivalences.
AxiomReport evaluate_axioms(const Frame& L, std::string frame_id, std::span<const std::string> selection,
                            std::span<const HomTarget> tu_targets, const SeparationOptions& options = {});

nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const AxiomReport& r);

}  // namespace locale_lab
