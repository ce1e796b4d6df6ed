#pragma once

#include <cstddef>
#include <vector>

#include "ltsconf/critical_pair.hpp"
#include "ltsconf/rules.hpp"

namespace ltsconf::oracle {

/// Brute-force reference for critical-pair detection. Exponential on
/// purpose; it only reuses the LTS, rule and matching primitives.

struct Limits {
  std::size_t max_states = 6;
  std::size_t max_transitions = 8;
};

/// One way of laying the two left patterns over each other.
struct Overlap {
  /// L^r0 -> L^r1; transitions are related only when their glued images
  /// coincide.
  PartialMorphism identification;
  PatternUnifier unifier;
  Lts glued;
  Match match0;  // induced, not necessarily satisfying gluing
  Match match1;
};

/// Every non-empty, label-respecting, injective identification of states
/// (and the transitions between identified states), each once.
/// Throws ltsconf::Error when a pattern exceeds `limits`.
std::vector<Overlap> enumerate_overlaps(const Rule& r0, const Rule& r1, const Limits& limits = {});

/// Independence checked on states and transitions: everything matched by
/// both lies in both interface images.
bool parallel_independent_full(const Rule& r0, const Match& m0, const Rule& r1, const Match& m1);

/// Overlaps that relate a transition, have a connected related part, give
/// two valid matches and are maximal among such overlaps; kept when the
/// matches conflict (and differ, for a rule paired with itself). Pairs
/// whose situation strictly contains another's are dropped.
std::vector<CriticalPair> oracle_critical_pairs(const Rule& r0, const Rule& r1,
                                                const Limits& limits = {});

}  // namespace ltsconf::oracle
