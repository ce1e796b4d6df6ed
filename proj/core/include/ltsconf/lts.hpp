#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ltsconf/label.hpp"

namespace ltsconf {

using StateId = std::uint32_t;

struct Transition {
  StateId source = 0;
  Label label;
  StateId target = 0;

  friend auto operator<=>(const Transition&, const Transition&) = default;
  friend bool operator==(const Transition&, const Transition&) = default;
};

std::string to_string(const Transition& t);

/// Finite labelled transition system. Immutable once built: states are kept
/// sorted, transitions sorted and deduplicated, with adjacency indices.
class Lts {
 public:
  Lts() = default;

  /// Throws ltsconf::Error when a transition names an undeclared state.
  Lts(std::vector<StateId> states, std::vector<Transition> transitions);

  const std::vector<StateId>& states() const noexcept { return states_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  std::set<Label> actions() const;

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t transition_count() const noexcept { return transitions_.size(); }
  bool empty() const noexcept { return states_.empty(); }

  bool has_state(StateId s) const;
  bool has_transition(const Transition& t) const;

  /// Indices into transitions() of the edges leaving / entering `s`.
  /// A self-loop appears in both lists. `s` must be a state.
  std::span<const std::uint32_t> outgoing(StateId s) const;
  std::span<const std::uint32_t> incoming(StateId s) const;

  /// Largest state id, or nullopt for the empty LTS.
  std::optional<StateId> max_state() const;

  friend bool operator==(const Lts& a, const Lts& b) {
    return a.states_ == b.states_ && a.transitions_ == b.transitions_;
  }

 private:
  std::size_t position(StateId s) const;

  std::vector<StateId> states_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
};

/// Partial map between two LTSs: states and transitions, each optional.
struct PartialMorphism {
  std::map<StateId, StateId> states;
  std::map<Transition, Transition> transitions;

  std::optional<StateId> state(StateId s) const;
  bool injective() const;
  bool total_on(const Lts& from) const;

  /// Requires injective().
  PartialMorphism inverse() const;

  friend bool operator==(const PartialMorphism&, const PartialMorphism&) = default;
};

/// `outer` after `inner`; undefined wherever either is.
PartialMorphism compose(const PartialMorphism& outer, const PartialMorphism& inner);

/// Identity on every state and transition of `g`.
PartialMorphism identity_on(const Lts& g);

/// Checks that `m` is an injective partial morphism from `from` to `to`:
/// mapped states exist on both sides, mapped transitions have mapped
/// endpoints and land on the transition with the same label. With
/// `bindings`, source labels are instantiated before the comparison.
bool is_valid_morphism(const PartialMorphism& m, const Lts& from, const Lts& to,
                       const Bindings* bindings = nullptr);

bool is_weakly_connected(const Lts& g);

/// The state `p`, its neighbours and every transition touching `p`.
/// Throws ltsconf::Error when `p` is not a state of `g`.
Lts context_lts(const Lts& g, StateId p);

/// Some injective total morphism g0 -> g1 (exact labels), if any.
std::optional<PartialMorphism> find_embedding(const Lts& g0, const Lts& g1);

/// Some bijective morphism g0 -> g1 whose inverse is also a morphism.
std::optional<PartialMorphism> isomorphic(const Lts& g0, const Lts& g1);

/// Cheap isomorphism invariant: equal LTSs up to renaming get equal
/// fingerprints.
std::string fingerprint(const Lts& g);

enum class CombineMode { union_of, intersection, difference };

/// Set operations over a shared identifier space. Difference drops the
/// transitions and states of g1 but keeps states still needed as endpoints
/// of surviving transitions.
Lts combine(const Lts& g0, const Lts& g1, CombineMode mode);

/// Sub-LTS induced by an explicit list of states and transitions.
Lts restrict_to(const Lts& g, const std::set<StateId>& states,
                const std::set<Transition>& transitions);

/// Image of `g` under a total morphism (states and transitions).
Lts image(const Lts& g, const PartialMorphism& m);

/// Drops every transition whose label uses the reserved prefix.
Lts strip_reserved(const Lts& g);

}  // namespace ltsconf
