#pragma once

#include <string>
#include <vector>

#include "ltsconf/lts.hpp"
#include "ltsconf/matching.hpp"

namespace ltsconf {

/// Two conflicting direct transformations on a minimal host: the situation
/// is the union of both match images.
struct CriticalPair {
  std::string rule0;
  std::string rule1;
  Lts situation;
  Match match0;
  Match match1;
};

/// True when some isomorphism between the situations carries match0 to
/// match0 and match1 to match1 (and the rule names agree). Fresh constants
/// introduced by unification may be renamed along the way.
bool same_critical_pair(const CriticalPair& a, const CriticalPair& b);

/// Deterministic ordering used for reports and result sets.
bool critical_pair_less(const CriticalPair& a, const CriticalPair& b);

/// Pairs equal up to `same_critical_pair`, each element of one side paired
/// with a distinct element of the other.
bool same_pair_sets(const std::vector<CriticalPair>& a, const std::vector<CriticalPair>& b);

}  // namespace ltsconf
