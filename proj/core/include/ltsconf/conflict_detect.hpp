#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ltsconf/critical_pair.hpp"
#include "ltsconf/rules.hpp"

namespace ltsconf {

/// True when the action sets already rule out any conflict: neither rule
/// deletes a label the other one matches on. Labels with variables compare
/// by name only.
bool prefilter_actions(const Rule& r0, const Rule& r1);

/// Transition-only independence test: every transition matched by both
/// lies in both interface images.
bool parallel_independent(const Rule& r0, const Match& m0, const Rule& r1, const Match& m1);

/// Outgoing-label screen for a seed pair: the two states share an outgoing
/// label that at least one of them deletes.
bool seed_passes_screen(const Rule& r0, const Rule& r1, StateId s, StateId t);

/// Injective partial morphism L^r0 -> L^r1 relating states that could be
/// matched onto the same host state without breaking the gluing condition
/// of either rule.
struct ConflictCompatibilityMorphism {
  PartialMorphism morphism;  // labels compared after unification
  std::pair<StateId, StateId> seed;
  PatternUnifier unifier;
};

/// Maximal morphisms with a connected domain containing s -> t and at least
/// one related transition, in canonical order.
std::vector<ConflictCompatibilityMorphism> enumerate_ccms(const Rule& r0, const Rule& r1,
                                                          StateId s, StateId t);

/// Related L^r0 states where the two patterns diverge: some incident
/// transition (on either side) is not related.
std::set<StateId> boundary(const ConflictCompatibilityMorphism& f, const Rule& r0,
                           const Rule& r1);

/// Glues the two left patterns along `f`. L^r0 states keep their rank as
/// ids (0, 1, ...), the unrelated L^r1 states follow. Returns nullopt when
/// a match violates gluing, the matches are independent, or they coincide
/// for a rule paired with itself.
std::optional<CriticalPair> build_conflict_situation(const ConflictCompatibilityMorphism& f,
                                                     const Rule& r0, const Rule& r1);

enum class DetectionStage { prefilter, non_deleting, full };

struct Detection {
  DetectionStage stage = DetectionStage::full;
  std::vector<CriticalPair> pairs;
  std::size_t seeds = 0;      // seeds passing the screen
  std::size_t morphisms = 0;  // morphisms enumerated from them
};

/// Staged detection: action prefilter, non-deleting shortcut, then the
/// morphism search over all screened seeds. Results are deduplicated and
/// pairs whose situation strictly contains another pair's are dropped.
Detection detect(const Rule& r0, const Rule& r1);

std::vector<CriticalPair> detect_critical_pairs(const Rule& r0, const Rule& r1);

/// Drops pairs whose situation strictly contains another pair's situation.
std::vector<CriticalPair> keep_minimal(std::vector<CriticalPair> pairs);

}  // namespace ltsconf
