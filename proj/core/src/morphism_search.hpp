#pragma once

#include <functional>

#include "ltsconf/lts.hpp"

namespace ltsconf::detail {

enum class SearchMode { embedding, bijection };
enum class LabelMatch { exact, unify };

/// Return false to stop the search.
using MorphismVisitor = std::function<bool(const PartialMorphism&, const Bindings&)>;

/// Backtracking enumeration of injective total morphisms pattern -> host.
/// Pattern states are visited in breadth-first order from the transition
/// whose label name is rarest in the host; candidates for later states are
/// drawn from the neighbours of the already placed parent. Solutions are
/// reported in a deterministic order. In unify mode pattern variables bind
/// to host constants, one value per variable.
void search_morphisms(const Lts& pattern, const Lts& host, SearchMode mode, LabelMatch labels,
                      const MorphismVisitor& visit);

}  // namespace ltsconf::detail
