#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ltsconf/lts.hpp"

namespace ltsconf {

/// Transformation rule L <- K -> R. The interface K is a sub-LTS of L with
/// the same state ids, so the inclusion K -> L is implicit; `into_right` is
/// the injective morphism K -> R.
struct Rule {
  std::string name;
  Lts left;
  Lts interface;
  Lts right;
  PartialMorphism into_right;

  /// The inclusion K -> L as an explicit morphism.
  PartialMorphism into_left() const { return identity_on(interface); }
};

struct RuleSystem {
  std::vector<Rule> rules;

  /// nullptr when no rule has that name.
  const Rule* find(std::string_view name) const;
};

struct Violation {
  char clause;  // 'a' .. 'd'
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string str() const;
};

/// Structural checks:
///  (a) K is included in L and into_right is a total injective morphism;
///  (b) L and R are weakly connected;
///  (c) no deleted transition reappears between the corresponding glue
///      states, and no deleted state is recreated with the same context;
///  (d) every variable used in R also occurs in L.
ValidationReport validate_rule(const Rule& r);

/// Throws ltsconf::Error naming the rule and its violations.
void require_valid(const Rule& r);

/// Checks every rule and that names are unique. Throws ltsconf::Error.
void require_valid(const RuleSystem& sys);

std::set<StateId> glue_states(const Rule& r);

/// Labels of L-transitions without a K-preimage.
std::set<Label> deletion_labels(const Rule& r);

std::vector<Transition> deleted_transitions(const Rule& r);
std::vector<StateId> deleted_states(const Rule& r);

/// True when L and K coincide, i.e. the rule removes nothing.
bool is_non_deleting(const Rule& r);

/// The unparameterised cover label added by kappa_augment.
Label kappa_label();

/// Per-state cover label used during resolution.
Label kappa_label(StateId s);

/// Copy of `r` whose right pattern carries a cover self-loop at the image
/// of every interface state. Throws when `r` already uses a reserved label.
Rule kappa_augment(const Rule& r);

}  // namespace ltsconf
