#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ltsconf/lts.hpp"
#include "ltsconf/matching.hpp"
#include "ltsconf/rules.hpp"

namespace ltsconf {

inline constexpr unsigned kDefaultMaxSteps = 50;

/// One rule application G => H. States of G that survive keep their ids in
/// H; states created from R get ids above every id of G.
struct DirectTransformation {
  std::string rule;
  Lts before;
  Lts after;
  Match match;
  PartialMorphism comatch;  // R -> H
  PartialMorphism track;    // G -> H, undefined on deleted states
};

/// Throws ltsconf::Error when `m` is not a valid match of `r` on `host`.
DirectTransformation direct_transform(const Lts& host, const Rule& r, const Match& m);

/// Track of a two-step derivation: `first` then `second`.
PartialMorphism compose_tracks(const PartialMorphism& first, const PartialMorphism& second);

/// Called after every direct transformation performed by an exploration.
using StepObserver = std::function<void(const Rule&, const DirectTransformation&)>;

/// Process-wide hook run after every direct_transform call, for test
/// instrumentation. Not synchronised; pass an empty function to remove it.
void set_transformation_hook(StepObserver hook);

struct ExploreOptions {
  unsigned max_steps = kDefaultMaxSteps;
  /// Treat reserved self-loops as persistence covers: before each step the
  /// covers on unmatched states are dropped, and matches that would delete
  /// a covered state are refused and recorded.
  bool covered = false;
  /// Safety valve on the number of distinct LTSs kept.
  std::size_t max_reducts = 20000;
  StepObserver observer;
};

struct Reduct {
  Lts lts;
  PartialMorphism track;  // from the start LTS
  unsigned depth = 0;
  bool normal = false;  // no rule applies at all
};

struct Exploration {
  /// Every LTS reached, one per isomorphism class, in discovery order.
  std::vector<Reduct> reducts;
  /// Some branch still had applicable matches when a bound was reached.
  bool exhausted = false;
  /// Refused matches (covered mode only).
  std::vector<Match> violations;
};

/// Breadth-first exploration of all derivations from `start`.
Exploration explore(const Lts& start, const RuleSystem& sys, const ExploreOptions& options);

struct NormalForms {
  std::vector<Reduct> forms;
  bool exhausted = false;
};

NormalForms derive_normal_forms(const Lts& host, const RuleSystem& sys,
                                unsigned max_steps = kDefaultMaxSteps, bool covered = false,
                                const StepObserver& observer = {});

}  // namespace ltsconf
