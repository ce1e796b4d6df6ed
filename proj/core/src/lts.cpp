#include "ltsconf/lts.hpp"

#include <algorithm>
#include <queue>

#include "ltsconf/error.hpp"
#include "morphism_search.hpp"

namespace ltsconf {

std::string to_string(const Transition& t) {
  return std::to_string(t.source) + " -" + t.label.str() + "-> " + std::to_string(t.target);
}

Lts::Lts(std::vector<StateId> states, std::vector<Transition> transitions)
    : states_(std::move(states)), transitions_(std::move(transitions)) {
  std::sort(states_.begin(), states_.end());
  states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
  out_.resize(states_.size());
  in_.resize(states_.size());
  for (std::uint32_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    if (!has_state(t.source) || !has_state(t.target)) {
      throw Error("transition " + to_string(t) + " uses an undeclared state");
    }
    out_[position(t.source)].push_back(i);
    in_[position(t.target)].push_back(i);
  }
}

std::set<Label> Lts::actions() const {
  std::set<Label> out;
  for (const auto& t : transitions_) out.insert(t.label);
  return out;
}

bool Lts::has_state(StateId s) const {
  return std::binary_search(states_.begin(), states_.end(), s);
}

bool Lts::has_transition(const Transition& t) const {
  return std::binary_search(transitions_.begin(), transitions_.end(), t);
}

std::size_t Lts::position(StateId s) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), s);
  if (it == states_.end() || *it != s) throw Error("unknown state " + std::to_string(s));
  return static_cast<std::size_t>(it - states_.begin());
}

std::span<const std::uint32_t> Lts::outgoing(StateId s) const { return out_[position(s)]; }

std::span<const std::uint32_t> Lts::incoming(StateId s) const { return in_[position(s)]; }

std::optional<StateId> Lts::max_state() const {
  if (states_.empty()) return std::nullopt;
  return states_.back();
}

std::optional<StateId> PartialMorphism::state(StateId s) const {
  auto it = states.find(s);
  if (it == states.end()) return std::nullopt;
  return it->second;
}

bool PartialMorphism::injective() const {
  std::set<StateId> seen;
  for (const auto& [_, v] : states) {
    if (!seen.insert(v).second) return false;
  }
  std::set<Transition> images;
  for (const auto& [_, v] : transitions) {
    if (!images.insert(v).second) return false;
  }
  return true;
}

bool PartialMorphism::total_on(const Lts& from) const {
  return std::all_of(from.states().begin(), from.states().end(),
                     [&](StateId s) { return states.contains(s); }) &&
         std::all_of(from.transitions().begin(), from.transitions().end(),
                     [&](const Transition& t) { return transitions.contains(t); });
}

PartialMorphism PartialMorphism::inverse() const {
  PartialMorphism inv;
  for (const auto& [k, v] : states) inv.states.emplace(v, k);
  for (const auto& [k, v] : transitions) inv.transitions.emplace(v, k);
  return inv;
}

PartialMorphism compose(const PartialMorphism& outer, const PartialMorphism& inner) {
  PartialMorphism out;
  for (const auto& [k, v] : inner.states) {
    if (auto w = outer.states.find(v); w != outer.states.end()) out.states.emplace(k, w->second);
  }
  for (const auto& [k, v] : inner.transitions) {
    if (auto w = outer.transitions.find(v); w != outer.transitions.end()) {
      out.transitions.emplace(k, w->second);
    }
  }
  return out;
}

PartialMorphism identity_on(const Lts& g) {
  PartialMorphism m;
  for (StateId s : g.states()) m.states.emplace(s, s);
  for (const auto& t : g.transitions()) m.transitions.emplace(t, t);
  return m;
}

bool is_valid_morphism(const PartialMorphism& m, const Lts& from, const Lts& to,
                       const Bindings* bindings) {
  for (const auto& [s, v] : m.states) {
    if (!from.has_state(s) || !to.has_state(v)) return false;
  }
  if (!m.injective()) return false;
  for (const auto& [t, v] : m.transitions) {
    if (!from.has_transition(t) || !to.has_transition(v)) return false;
    auto src = m.state(t.source);
    auto dst = m.state(t.target);
    if (!src || !dst || *src != v.source || *dst != v.target) return false;
    Label expected = bindings ? instantiate(t.label, *bindings) : t.label;
    if (expected != v.label) return false;
  }
  return true;
}

bool is_weakly_connected(const Lts& g) {
  if (g.state_count() <= 1) return true;
  std::set<StateId> seen{g.states().front()};
  std::queue<StateId> todo;
  todo.push(g.states().front());
  while (!todo.empty()) {
    StateId u = todo.front();
    todo.pop();
    for (auto i : g.outgoing(u)) {
      if (seen.insert(g.transitions()[i].target).second) todo.push(g.transitions()[i].target);
    }
    for (auto i : g.incoming(u)) {
      if (seen.insert(g.transitions()[i].source).second) todo.push(g.transitions()[i].source);
    }
  }
  return seen.size() == g.state_count();
}

Lts context_lts(const Lts& g, StateId p) {
  if (!g.has_state(p)) throw Error("context of unknown state " + std::to_string(p));
  std::vector<StateId> states{p};
  std::vector<Transition> transitions;
  for (auto i : g.outgoing(p)) {
    transitions.push_back(g.transitions()[i]);
    states.push_back(g.transitions()[i].target);
  }
  for (auto i : g.incoming(p)) {
    transitions.push_back(g.transitions()[i]);
    states.push_back(g.transitions()[i].source);
  }
  return Lts(std::move(states), std::move(transitions));
}

std::optional<PartialMorphism> find_embedding(const Lts& g0, const Lts& g1) {
  std::optional<PartialMorphism> found;
  detail::search_morphisms(g0, g1, detail::SearchMode::embedding, detail::LabelMatch::exact,
                           [&](const PartialMorphism& m, const Bindings&) {
                             found = m;
                             return false;
                           });
  return found;
}

namespace {

std::multiset<Label> label_multiset(const Lts& g) {
  std::multiset<Label> out;
  for (const auto& t : g.transitions()) out.insert(t.label);
  return out;
}

}  // namespace

std::optional<PartialMorphism> isomorphic(const Lts& g0, const Lts& g1) {
  if (g0.state_count() != g1.state_count() || g0.transition_count() != g1.transition_count()) {
    return std::nullopt;
  }
  if (label_multiset(g0) != label_multiset(g1)) return std::nullopt;
  std::optional<PartialMorphism> found;
  detail::search_morphisms(g0, g1, detail::SearchMode::bijection, detail::LabelMatch::exact,
                           [&](const PartialMorphism& m, const Bindings&) {
                             found = m;
                             return false;
                           });
  return found;
}

std::string fingerprint(const Lts& g) {
  // Per-state signature: sorted outgoing and incoming labels, self-loops
  // marked separately; the fingerprint is the sorted list of signatures.
  std::vector<std::string> signatures;
  for (StateId s : g.states()) {
    std::vector<std::string> parts;
    for (auto i : g.outgoing(s)) {
      const auto& t = g.transitions()[i];
      parts.push_back((t.target == s ? "@" : ">") + t.label.str());
    }
    for (auto i : g.incoming(s)) {
      const auto& t = g.transitions()[i];
      if (t.source != s) parts.push_back("<" + t.label.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string sig;
    for (const auto& p : parts) sig += p + ",";
    signatures.push_back(std::move(sig));
  }
  std::sort(signatures.begin(), signatures.end());
  std::string out = std::to_string(g.state_count()) + "/" + std::to_string(g.transition_count());
  for (const auto& s : signatures) out += "|" + s;
  return out;
}

Lts combine(const Lts& g0, const Lts& g1, CombineMode mode) {
  std::vector<StateId> states;
  std::vector<Transition> transitions;
  const auto& s0 = g0.states();
  const auto& s1 = g1.states();
  const auto& t0 = g0.transitions();
  const auto& t1 = g1.transitions();
  switch (mode) {
    case CombineMode::union_of:
      std::set_union(s0.begin(), s0.end(), s1.begin(), s1.end(), std::back_inserter(states));
      std::set_union(t0.begin(), t0.end(), t1.begin(), t1.end(),
                     std::back_inserter(transitions));
      break;
    case CombineMode::intersection:
      std::set_intersection(s0.begin(), s0.end(), s1.begin(), s1.end(),
                            std::back_inserter(states));
      std::set_intersection(t0.begin(), t0.end(), t1.begin(), t1.end(),
                            std::back_inserter(transitions));
      break;
    case CombineMode::difference: {
      std::set_difference(t0.begin(), t0.end(), t1.begin(), t1.end(),
                          std::back_inserter(transitions));
      std::set<StateId> keep;
      std::set_difference(s0.begin(), s0.end(), s1.begin(), s1.end(),
                          std::inserter(keep, keep.end()));
      for (const auto& t : transitions) {
        keep.insert(t.source);
        keep.insert(t.target);
      }
      states.assign(keep.begin(), keep.end());
      break;
    }
  }
  return Lts(std::move(states), std::move(transitions));
}

Lts restrict_to(const Lts& g, const std::set<StateId>& states,
                const std::set<Transition>& transitions) {
  std::vector<StateId> s;
  for (StateId x : g.states()) {
    if (states.contains(x)) s.push_back(x);
  }
  std::vector<Transition> t;
  for (const auto& x : g.transitions()) {
    if (transitions.contains(x)) t.push_back(x);
  }
  return Lts(std::move(s), std::move(t));
}

Lts image(const Lts& g, const PartialMorphism& m) {
  std::vector<StateId> states;
  for (StateId s : g.states()) states.push_back(m.states.at(s));
  std::vector<Transition> transitions;
  for (const auto& t : g.transitions()) transitions.push_back(m.transitions.at(t));
  return Lts(std::move(states), std::move(transitions));
}

Lts strip_reserved(const Lts& g) {
  std::vector<Transition> kept;
  for (const auto& t : g.transitions()) {
    if (!t.label.reserved()) kept.push_back(t);
  }
  return Lts(g.states(), std::move(kept));
}

}  // namespace ltsconf
