#include "ltsconf/matching.hpp"

#include <algorithm>
#include <tuple>

#include "morphism_search.hpp"

namespace ltsconf {

bool match_less(const Match& a, const Match& b) {
  return std::tie(a.rule, a.morphism.states, a.bindings) <
         std::tie(b.rule, b.morphism.states, b.bindings);
}

std::vector<Match> find_matches(const Rule& r, const Lts& host) {
  std::vector<Match> out;
  detail::search_morphisms(r.left, host, detail::SearchMode::embedding,
                           detail::LabelMatch::unify,
                           [&](const PartialMorphism& m, const Bindings& b) {
                             if (check_gluing(r, m, host)) out.push_back({r.name, m, b});
                             return true;
                           });
  std::sort(out.begin(), out.end(), match_less);
  return out;
}

bool check_gluing(const Rule& r, const PartialMorphism& candidate, const Lts& host) {
  std::set<Transition> matched;
  for (const auto& [_, v] : candidate.transitions) matched.insert(v);
  for (StateId s : r.left.states()) {
    if (r.interface.has_state(s)) continue;
    StateId p = candidate.states.at(s);
    for (auto i : host.outgoing(p)) {
      if (!matched.contains(host.transitions()[i])) return false;
    }
    for (auto i : host.incoming(p)) {
      if (!matched.contains(host.transitions()[i])) return false;
    }
  }
  return true;
}

bool is_valid_match(const Rule& r, const Match& m, const Lts& host) {
  return m.morphism.total_on(r.left) &&
         is_valid_morphism(m.morphism, r.left, host, &m.bindings) &&
         check_gluing(r, m.morphism, host);
}

Lts left_image(const Rule& r, const Match& m) { return image(r.left, m.morphism); }

Lts interface_image(const Rule& r, const Match& m) { return image(r.interface, m.morphism); }

CoverMatches find_matches_covered(const Rule& r, const Lts& host) {
  CoverMatches out;
  for (auto& m : find_matches(r, strip_reserved(host))) {
    bool violating = false;
    for (StateId s : r.left.states()) {
      if (r.interface.has_state(s)) continue;
      for (auto i : host.outgoing(m.morphism.states.at(s))) {
        violating = violating || host.transitions()[i].label.reserved();
      }
    }
    (violating ? out.violating : out.usable).push_back(std::move(m));
  }
  return out;
}

}  // namespace ltsconf
