#include "ltsconf/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "ltsconf/error.hpp"
#include "ltsconf/matching.hpp"

namespace ltsconf::oracle {

namespace {

void check_limits(const Rule& r, const Limits& limits) {
  if (r.left.state_count() > limits.max_states ||
      r.left.transition_count() > limits.max_transitions) {
    throw Error("rule '" + r.name + "' is too large for the oracle");
  }
}

class Enumerator {
 public:
  Enumerator(const Rule& r0, const Rule& r1) : r0_(r0), r1_(r1) {}

  std::vector<Overlap> run() {
    pick_state(0);
    return std::move(out_);
  }

 private:
  void pick_state(std::size_t k) {
    const auto& s0 = r0_.left.states();
    if (k == s0.size()) {
      if (!states_.empty()) start_transitions();
      return;
    }
    pick_state(k + 1);
    for (StateId t : r1_.left.states()) {
      if (taken_.contains(t)) continue;
      states_[s0[k]] = t;
      taken_.insert(t);
      pick_state(k + 1);
      taken_.erase(t);
      states_.erase(s0[k]);
    }
  }

  void start_transitions() {
    pairs_.clear();
    used_.clear();
    pick_transition(0, PatternUnifier{});
  }

  void pick_transition(std::size_t i, const PatternUnifier& u) {
    const auto& t0 = r0_.left.transitions();
    if (i == t0.size()) {
      emit(u);
      return;
    }
    pick_transition(i + 1, u);
    const auto& x = t0[i];
    auto src = states_.find(x.source);
    auto dst = states_.find(x.target);
    if (src == states_.end() || dst == states_.end()) return;
    for (const auto& y : r1_.left.transitions()) {
      if (y.source != src->second || y.target != dst->second || used_.contains(y)) continue;
      PatternUnifier next = u;
      if (!next.unify(x.label, y.label)) continue;
      pairs_[x] = y;
      used_.insert(y);
      pick_transition(i + 1, next);
      used_.erase(y);
      pairs_.erase(x);
    }
  }

  void emit(const PatternUnifier& u) {
    Overlap o;
    o.unifier = u;
    o.match0.rule = r0_.name;
    o.match1.rule = r1_.name;
    // Glue: r0 states first by rank, then the unidentified r1 states.
    std::vector<StateId> states;
    StateId next = 0;
    std::map<StateId, StateId> from1;
    for (StateId s : r0_.left.states()) {
      o.match0.morphism.states[s] = next;
      if (auto it = states_.find(s); it != states_.end()) from1[it->second] = next;
      states.push_back(next++);
    }
    for (StateId t : r1_.left.states()) {
      if (auto it = from1.find(t); it != from1.end()) {
        o.match1.morphism.states[t] = it->second;
      } else {
        o.match1.morphism.states[t] = next;
        states.push_back(next++);
      }
    }
    std::vector<Transition> transitions;
    std::map<Transition, std::vector<Transition>> landed0;
    for (const auto& x : r0_.left.transitions()) {
      Transition h{o.match0.morphism.states.at(x.source), u.instantiate(x.label, 0),
                   o.match0.morphism.states.at(x.target)};
      o.match0.morphism.transitions[x] = h;
      landed0[h].push_back(x);
      transitions.push_back(h);
      if (x.label.has_variable()) {
        o.match0.bindings[x.label.variable()] = u.value_of({0, x.label.variable()});
      }
    }
    for (const auto& y : r1_.left.transitions()) {
      Transition h{o.match1.morphism.states.at(y.source), u.instantiate(y.label, 1),
                   o.match1.morphism.states.at(y.target)};
      o.match1.morphism.transitions[y] = h;
      transitions.push_back(h);
      if (y.label.has_variable()) {
        o.match1.bindings[y.label.variable()] = u.value_of({1, y.label.variable()});
      }
      if (auto it = landed0.find(h); it != landed0.end()) {
        for (const auto& x : it->second) o.identification.transitions[x] = y;
      }
    }
    o.identification.states = states_;
    o.glued = Lts(std::move(states), std::move(transitions));

    auto key = std::make_pair(o.identification.states, o.identification.transitions);
    if (!seen_.insert(key).second) return;
    out_.push_back(std::move(o));
  }

  const Rule& r0_;
  const Rule& r1_;
  std::map<StateId, StateId> states_;
  std::set<StateId> taken_;
  std::map<Transition, Transition> pairs_;
  std::set<Transition> used_;
  std::set<std::pair<std::map<StateId, StateId>, std::map<Transition, Transition>>> seen_;
  std::vector<Overlap> out_;
};

bool related_part_connected(const Overlap& o) {
  std::set<StateId> states;
  for (const auto& [s, _] : o.identification.states) states.insert(s);
  std::vector<Transition> transitions;
  for (const auto& [x, _] : o.identification.transitions) transitions.push_back(x);
  return is_weakly_connected(Lts({states.begin(), states.end()}, std::move(transitions)));
}

bool includes(const Overlap& big, const Overlap& small) {
  const auto& bs = big.identification.states;
  const auto& ss = small.identification.states;
  const auto& bt = big.identification.transitions;
  const auto& st = small.identification.transitions;
  return std::includes(bs.begin(), bs.end(), ss.begin(), ss.end()) &&
         std::includes(bt.begin(), bt.end(), st.begin(), st.end());
}

std::set<StateId> image_states(const PartialMorphism& m, const Lts& of) {
  std::set<StateId> out;
  for (StateId s : of.states()) out.insert(m.states.at(s));
  return out;
}

std::set<Transition> image_transitions(const PartialMorphism& m, const Lts& of) {
  std::set<Transition> out;
  for (const auto& t : of.transitions()) out.insert(m.transitions.at(t));
  return out;
}

template <typename T>
std::set<T> meet(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

std::vector<Overlap> enumerate_overlaps(const Rule& r0, const Rule& r1, const Limits& limits) {
  check_limits(r0, limits);
  check_limits(r1, limits);
  return Enumerator(r0, r1).run();
}

bool parallel_independent_full(const Rule& r0, const Match& m0, const Rule& r1, const Match& m1) {
  auto both_states = meet(image_states(m0.morphism, r0.left), image_states(m1.morphism, r1.left));
  auto kept_states =
      meet(image_states(m0.morphism, r0.interface), image_states(m1.morphism, r1.interface));
  auto both_transitions =
      meet(image_transitions(m0.morphism, r0.left), image_transitions(m1.morphism, r1.left));
  auto kept_transitions = meet(image_transitions(m0.morphism, r0.interface),
                               image_transitions(m1.morphism, r1.interface));
  return std::includes(kept_states.begin(), kept_states.end(), both_states.begin(),
                       both_states.end()) &&
         std::includes(kept_transitions.begin(), kept_transitions.end(),
                       both_transitions.begin(), both_transitions.end());
}

std::vector<CriticalPair> oracle_critical_pairs(const Rule& r0, const Rule& r1,
                                                const Limits& limits) {
  auto overlaps = enumerate_overlaps(r0, r1, limits);
  std::vector<const Overlap*> valid;
  for (const auto& o : overlaps) {
    if (o.identification.transitions.empty() || !related_part_connected(o)) continue;
    if (!is_valid_match(r0, o.match0, o.glued) || !is_valid_match(r1, o.match1, o.glued)) {
      continue;
    }
    valid.push_back(&o);
  }

  std::vector<CriticalPair> pairs;
  for (const auto* o : valid) {
    bool maximal = std::none_of(valid.begin(), valid.end(), [&](const Overlap* other) {
      return other != o && includes(*other, *o);
    });
    if (!maximal) continue;
    if (parallel_independent_full(r0, o->match0, r1, o->match1)) continue;
    if (r0.name == r1.name && o->match0.morphism == o->match1.morphism &&
        o->match0.bindings == o->match1.bindings) {
      continue;
    }
    CriticalPair p{r0.name, r1.name, o->glued, o->match0, o->match1};
    bool known = std::any_of(pairs.begin(), pairs.end(),
                             [&](const CriticalPair& q) { return same_critical_pair(p, q); });
    if (!known) pairs.push_back(std::move(p));
  }

  // Minimality: a situation that strictly contains another one is dropped.
  std::vector<CriticalPair> out;
  for (const auto& p : pairs) {
    bool dominated = std::any_of(pairs.begin(), pairs.end(), [&](const CriticalPair& q) {
      const auto& a = q.situation;
      const auto& b = p.situation;
      bool strictly = a.state_count() <= b.state_count() &&
                      a.transition_count() <= b.transition_count() &&
                      (a.state_count() < b.state_count() ||
                       a.transition_count() < b.transition_count());
      return strictly && find_embedding(a, b).has_value();
    });
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), critical_pair_less);
  return out;
}

}  // namespace ltsconf::oracle
