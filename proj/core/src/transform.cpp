#include "ltsconf/transform.hpp"

#include <deque>
#include <map>

#include "ltsconf/error.hpp"

namespace ltsconf {

namespace {

StepObserver& transformation_hook() {
  static StepObserver hook;
  return hook;
}

}  // namespace

void set_transformation_hook(StepObserver hook) { transformation_hook() = std::move(hook); }

DirectTransformation direct_transform(const Lts& host, const Rule& r, const Match& m) {
  if (!is_valid_match(r, m, host)) {
    throw Error("invalid match of rule '" + r.name + "'");
  }
  std::set<StateId> gone_states;
  for (StateId s : deleted_states(r)) gone_states.insert(m.morphism.states.at(s));
  std::set<Transition> gone_transitions;
  for (const auto& t : deleted_transitions(r)) gone_transitions.insert(m.morphism.transitions.at(t));

  DirectTransformation dt;
  dt.rule = r.name;
  dt.before = host;
  dt.match = m;

  std::vector<StateId> states;
  for (StateId s : host.states()) {
    if (!gone_states.contains(s)) {
      states.push_back(s);
      dt.track.states.emplace(s, s);
    }
  }
  std::vector<Transition> transitions;
  for (const auto& t : host.transitions()) {
    if (!gone_transitions.contains(t)) {
      transitions.push_back(t);
      dt.track.transitions.emplace(t, t);
    }
  }

  std::map<StateId, StateId> preimage;  // R-state -> K-state
  for (const auto& [k, y] : r.into_right.states) preimage.emplace(y, k);
  StateId fresh = host.max_state() ? *host.max_state() + 1 : 0;
  for (StateId y : r.right.states()) {
    auto k = preimage.find(y);
    StateId h = k != preimage.end() ? m.morphism.states.at(k->second) : fresh++;
    dt.comatch.states.emplace(y, h);
    if (k == preimage.end()) states.push_back(h);
  }
  for (const auto& t : r.right.transitions()) {
    Transition h{dt.comatch.states.at(t.source), instantiate(t.label, m.bindings),
                 dt.comatch.states.at(t.target)};
    dt.comatch.transitions.emplace(t, h);
    transitions.push_back(h);
  }
  dt.after = Lts(std::move(states), std::move(transitions));
  if (transformation_hook()) transformation_hook()(r, dt);
  return dt;
}

PartialMorphism compose_tracks(const PartialMorphism& first, const PartialMorphism& second) {
  return compose(second, first);
}

namespace {

Lts drop_covers_outside(const Lts& g, const std::set<StateId>& keep) {
  std::vector<Transition> kept;
  for (const auto& t : g.transitions()) {
    if (!t.label.reserved() || keep.contains(t.source)) kept.push_back(t);
  }
  return Lts(g.states(), std::move(kept));
}

}  // namespace

Exploration explore(const Lts& start, const RuleSystem& sys, const ExploreOptions& options) {
  Exploration out;
  std::map<std::string, std::vector<std::size_t>> seen;
  auto remember = [&](Reduct r) -> bool {
    auto& bucket = seen[fingerprint(r.lts)];
    for (auto i : bucket) {
      if (isomorphic(out.reducts[i].lts, r.lts)) return false;
    }
    bucket.push_back(out.reducts.size());
    out.reducts.push_back(std::move(r));
    return true;
  };

  remember({start, identity_on(start), 0, false});
  for (std::size_t next = 0; next < out.reducts.size(); ++next) {
    std::vector<std::pair<const Rule*, Match>> usable;
    bool refused = false;
    for (const auto& rule : sys.rules) {
      const Lts& here = out.reducts[next].lts;
      if (options.covered) {
        auto found = find_matches_covered(rule, here);
        for (auto& m : found.usable) usable.emplace_back(&rule, std::move(m));
        refused = refused || !found.violating.empty();
        for (auto& m : found.violating) out.violations.push_back(std::move(m));
      } else {
        for (auto& m : find_matches(rule, here)) usable.emplace_back(&rule, std::move(m));
      }
    }
    if (usable.empty()) {
      out.reducts[next].normal = !refused;
      continue;
    }
    if (out.reducts[next].depth >= options.max_steps) {
      out.exhausted = true;
      continue;
    }
    for (const auto& [rule, m] : usable) {
      // Copies: `remember` may reallocate the reduct vector.
      Lts here = out.reducts[next].lts;
      PartialMorphism track = out.reducts[next].track;
      unsigned depth = out.reducts[next].depth;
      if (options.covered) {
        std::set<StateId> matched;
        for (const auto& [_, h] : m.morphism.states) matched.insert(h);
        here = drop_covers_outside(here, matched);
      }
      auto dt = direct_transform(here, *rule, m);
      if (options.observer) options.observer(*rule, dt);
      if (out.reducts.size() >= options.max_reducts) {
        out.exhausted = true;
        continue;
      }
      remember({dt.after, compose_tracks(track, dt.track), depth + 1, false});
    }
  }
  return out;
}

NormalForms derive_normal_forms(const Lts& host, const RuleSystem& sys, unsigned max_steps,
                                bool covered, const StepObserver& observer) {
  ExploreOptions options;
  options.max_steps = max_steps;
  options.covered = covered;
  options.observer = observer;
  auto all = explore(host, sys, options);
  NormalForms out;
  out.exhausted = all.exhausted;
  for (auto& r : all.reducts) {
    if (r.normal) out.forms.push_back(std::move(r));
  }
  return out;
}

}  // namespace ltsconf
