#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ltsconf/critical_pair.hpp"
#include "ltsconf/rules.hpp"
#include "ltsconf/transform.hpp"

namespace ltsconf {

enum class Outcome { joinable, not_joinable, inconclusive };

std::string to_string(Outcome o);

struct JoinabilityVerdict {
  Outcome outcome = Outcome::inconclusive;
  /// Derivation steps after the critical pair itself (both sides summed);
  /// meaningful for joinable verdicts.
  unsigned steps_used = 0;
  /// The two one-step results with their per-state cover loops.
  Lts covered0;
  Lts covered1;
  /// Joinable: the isomorphic reducts reached from each side.
  std::optional<Lts> joined0;
  std::optional<Lts> joined1;
  std::size_t reducts0 = 0;
  std::size_t reducts1 = 0;
  /// Matches refused because they would delete a persisting state.
  std::size_t refused = 0;
};

struct ResolveOptions {
  unsigned max_steps = kDefaultMaxSteps;
  StepObserver observer;
};

/// Applies the cover-augmented rules of the pair to its situation, keeps the
/// cover loops present on both sides (renamed after their situation state),
/// then searches both sides' derivations for an isomorphic pair of reducts.
/// Throws ltsconf::Error if the pair's rules are not in `sys`.
JoinabilityVerdict strongly_joinable(const CriticalPair& pair, const RuleSystem& sys,
                                     const ResolveOptions& options = {});

enum class Verdict { confluent, not_confluent, inconclusive };
enum class CheckMode { eager, exhaustive };

std::string to_string(Verdict v);
std::string to_string(CheckMode m);

struct PairReport {
  CriticalPair pair;
  JoinabilityVerdict verdict;
};

struct ConfluenceReport {
  Verdict verdict = Verdict::confluent;
  CheckMode mode = CheckMode::eager;
  unsigned max_steps = kDefaultMaxSteps;
  std::vector<PairReport> pairs;
  std::size_t resolved = 0;
  std::size_t failed = 0;
  std::size_t undecided = 0;
  /// Eager mode stopped before examining every rule pair.
  bool stopped_early = false;
};

struct ConfluenceOptions {
  unsigned max_steps = kDefaultMaxSteps;
  CheckMode mode = CheckMode::eager;
  StepObserver observer;
};

/// Local confluence check over every unordered pair of rules, each rule
/// also paired with itself. Termination of the system is assumed, not
/// checked. Throws ltsconf::Error for an empty or invalid system.
ConfluenceReport check_confluence(const RuleSystem& sys, const ConfluenceOptions& options = {});

}  // namespace ltsconf
