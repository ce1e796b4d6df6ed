#include "ltsconf/rules.hpp"

#include <algorithm>
#include <tuple>

#include "ltsconf/error.hpp"

namespace ltsconf {

const Rule* RuleSystem::find(std::string_view name) const {
  for (const auto& r : rules) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::string ValidationReport::str() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += "(";
    out += v.clause;
    out += ") " + v.message;
  }
  return out;
}

namespace {

std::set<unsigned> variables_of(const Lts& g) {
  std::set<unsigned> vars;
  for (const auto& t : g.transitions()) {
    if (t.label.has_variable()) vars.insert(t.label.variable());
  }
  return vars;
}

void check_interface(const Rule& r, ValidationReport& report) {
  for (StateId s : r.interface.states()) {
    if (!r.left.has_state(s)) {
      report.violations.push_back(
          {'a', "interface state " + std::to_string(s) + " is not in the left pattern"});
    }
  }
  for (const auto& t : r.interface.transitions()) {
    if (!r.left.has_transition(t)) {
      report.violations.push_back(
          {'a', "interface transition " + to_string(t) + " is not in the left pattern"});
    }
  }
  const auto& g = r.into_right;
  for (StateId s : r.interface.states()) {
    if (!g.states.contains(s)) {
      report.violations.push_back(
          {'a', "interface state " + std::to_string(s) + " has no image in the right pattern"});
    }
  }
  for (const auto& [k, v] : g.states) {
    if (!r.interface.has_state(k)) {
      report.violations.push_back(
          {'a', "mapped state " + std::to_string(k) + " is not an interface state"});
    } else if (!r.right.has_state(v)) {
      report.violations.push_back(
          {'a', "interface state " + std::to_string(k) + " maps to unknown right state " +
                    std::to_string(v)});
    }
  }
  if (!g.injective()) {
    report.violations.push_back({'a', "interface-to-right mapping is not injective"});
  }
  for (const auto& t : r.interface.transitions()) {
    auto s = g.state(t.source);
    auto d = g.state(t.target);
    if (!s || !d) continue;
    Transition img{*s, t.label, *d};
    if (!r.right.has_transition(img)) {
      report.violations.push_back({'a', "interface transition " + to_string(t) +
                                            " has no image " + to_string(img) + " in R"});
    }
  }
}

// Transitions around `x` in `g`, with `x` replaced by a placeholder and
// neighbours renamed through `rename`; self-loops keep the placeholder on
// both ends.
std::set<std::tuple<int, Label, StateId>> context_shape(
    const Lts& g, StateId x, const std::map<StateId, StateId>* rename) {
  std::set<std::tuple<int, Label, StateId>> shape;
  auto name = [&](StateId s) { return rename ? rename->at(s) : s; };
  for (auto i : g.outgoing(x)) {
    const auto& t = g.transitions()[i];
    if (t.target == x) {
      shape.emplace(0, t.label, 0);
    } else {
      shape.emplace(1, t.label, name(t.target));
    }
  }
  for (auto i : g.incoming(x)) {
    const auto& t = g.transitions()[i];
    if (t.source != x) shape.emplace(2, t.label, name(t.source));
  }
  return shape;
}

void check_well_specified(const Rule& r, ValidationReport& report) {
  const auto& g = r.into_right.states;
  for (const auto& t : deleted_transitions(r)) {
    auto s = g.find(t.source);
    auto d = g.find(t.target);
    if (s == g.end() || d == g.end()) continue;
    Transition again{s->second, t.label, d->second};
    if (r.right.has_transition(again)) {
      report.violations.push_back({'c', "deleted transition " + to_string(t) +
                                            " is recreated as " + to_string(again)});
    }
  }
  std::set<StateId> images;
  for (const auto& [_, v] : g) images.insert(v);
  for (StateId x : deleted_states(r)) {
    bool all_glue = true;
    for (auto i : r.left.outgoing(x)) {
      StateId v = r.left.transitions()[i].target;
      all_glue = all_glue && (v == x || g.contains(v));
    }
    for (auto i : r.left.incoming(x)) {
      StateId v = r.left.transitions()[i].source;
      all_glue = all_glue && (v == x || g.contains(v));
    }
    if (!all_glue) continue;
    auto wanted = context_shape(r.left, x, &g);
    for (StateId y : r.right.states()) {
      if (images.contains(y)) continue;
      if (context_shape(r.right, y, nullptr) == wanted) {
        report.violations.push_back({'c', "deleted state " + std::to_string(x) +
                                              " is recreated as state " + std::to_string(y) +
                                              " with the same transitions"});
      }
    }
  }
}

}  // namespace

ValidationReport validate_rule(const Rule& r) {
  ValidationReport report;
  check_interface(r, report);
  if (!is_weakly_connected(r.left)) {
    report.violations.push_back({'b', "left pattern is not weakly connected"});
  }
  if (!is_weakly_connected(r.right)) {
    report.violations.push_back({'b', "right pattern is not weakly connected"});
  }
  // The well-specifiedness checks rely on K being a proper sub-LTS of L.
  if (report.ok()) check_well_specified(r, report);
  auto left_vars = variables_of(r.left);
  for (unsigned v : variables_of(r.right)) {
    if (!left_vars.contains(v)) {
      report.violations.push_back(
          {'d', "variable #" + std::to_string(v) + " occurs in R but not in L"});
    }
  }
  return report;
}

void require_valid(const Rule& r) {
  auto report = validate_rule(r);
  if (!report.ok()) throw Error("rule '" + r.name + "' is invalid: " + report.str());
}

void require_valid(const RuleSystem& sys) {
  std::set<std::string> names;
  for (const auto& r : sys.rules) {
    if (!names.insert(r.name).second) throw Error("duplicate rule name '" + r.name + "'");
    require_valid(r);
  }
}

std::set<StateId> glue_states(const Rule& r) {
  return {r.interface.states().begin(), r.interface.states().end()};
}

std::set<Label> deletion_labels(const Rule& r) {
  std::set<Label> out;
  for (const auto& t : deleted_transitions(r)) out.insert(t.label);
  return out;
}

std::vector<Transition> deleted_transitions(const Rule& r) {
  std::vector<Transition> out;
  for (const auto& t : r.left.transitions()) {
    if (!r.interface.has_transition(t)) out.push_back(t);
  }
  return out;
}

std::vector<StateId> deleted_states(const Rule& r) {
  std::vector<StateId> out;
  for (StateId s : r.left.states()) {
    if (!r.interface.has_state(s)) out.push_back(s);
  }
  return out;
}

bool is_non_deleting(const Rule& r) {
  return r.left.state_count() == r.interface.state_count() &&
         r.left.transition_count() == r.interface.transition_count();
}

Label kappa_label() { return Label::plain(std::string(kReservedPrefix)); }

Label kappa_label(StateId s) {
  return Label::with_constant(std::string(kReservedPrefix), std::to_string(s));
}

Rule kappa_augment(const Rule& r) {
  for (const Lts* g : {&r.left, &r.interface, &r.right}) {
    for (const auto& t : g->transitions()) {
      if (t.label.reserved()) {
        throw Error("rule '" + r.name + "' already uses reserved label " + t.label.str());
      }
    }
  }
  Rule out = r;
  std::vector<Transition> transitions = r.right.transitions();
  for (StateId s : r.interface.states()) {
    StateId y = r.into_right.states.at(s);
    transitions.push_back({y, kappa_label(), y});
  }
  out.right = Lts(r.right.states(), std::move(transitions));
  return out;
}

}  // namespace ltsconf
