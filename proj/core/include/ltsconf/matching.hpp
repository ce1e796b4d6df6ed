#pragma once

#include <string>
#include <vector>

#include "ltsconf/lts.hpp"
#include "ltsconf/rules.hpp"

namespace ltsconf {

/// Injective total morphism L -> host satisfying the gluing condition,
/// together with the constants bound to the pattern's variables.
struct Match {
  std::string rule;
  PartialMorphism morphism;
  Bindings bindings;

  friend bool operator==(const Match&, const Match&) = default;
};

/// Orders matches by state assignment, then bindings.
bool match_less(const Match& a, const Match& b);

/// All matches of `r` on `host`, each once, in canonical order.
std::vector<Match> find_matches(const Rule& r, const Lts& host);

/// No dangling transitions: every host transition touching the image of a
/// non-glue state is itself matched.
bool check_gluing(const Rule& r, const PartialMorphism& candidate, const Lts& host);

/// Full check of a match: valid injective total morphism under its
/// bindings, plus the gluing condition.
bool is_valid_match(const Rule& r, const Match& m, const Lts& host);

/// m(L) and m(K) inside the host.
Lts left_image(const Rule& r, const Match& m);
Lts interface_image(const Rule& r, const Match& m);

/// Matches on a host that carries cover self-loops. Matching ignores the
/// covers; a match that places a non-glue pattern state on a covered state
/// is reported as violating instead of usable.
struct CoverMatches {
  std::vector<Match> usable;
  std::vector<Match> violating;
};

CoverMatches find_matches_covered(const Rule& r, const Lts& host);

}  // namespace ltsconf
