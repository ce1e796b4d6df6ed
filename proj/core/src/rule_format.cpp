#include "ltsconf/rule_format.hpp"

#include <charconv>
#include <optional>
#include <set>

#include "ltsconf/error.hpp"
#include "text_util.hpp"

namespace ltsconf {

namespace {

struct Draft {
  std::string name;
  std::size_t line = 0;
  std::vector<StateId> left_states, interface_states, right_states;
  std::vector<Transition> left, interface, right;
  std::map<StateId, StateId> map;
};

StateId parse_state(const std::string& word, std::size_t line) {
  StateId value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (word.empty() || ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError("expected a state number, got '" + word + "'", line);
  }
  return value;
}

Transition parse_transition(const std::vector<std::string>& w, std::size_t line) {
  if (w.size() != 4) throw ParseError("expected '" + w[0] + " <from> \"label\" <to>'", line);
  Label label;
  try {
    label = Label::parse(w[2]);
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
  if (label.reserved()) throw ParseError("reserved label " + label.str(), line);
  return {parse_state(w[1], line), std::move(label), parse_state(w[3], line)};
}

Lts build(std::vector<StateId> states, std::vector<Transition> transitions, const char* part,
          const Draft& d) {
  try {
    return Lts(std::move(states), std::move(transitions));
  } catch (const Error& e) {
    throw ParseError("rule '" + d.name + "', " + part + ": " + e.what(), d.line);
  }
}

Rule finish(Draft& d) {
  Rule r;
  r.name = d.name;
  r.left = build(d.left_states, d.left, "left", d);
  r.interface = build(d.interface_states, d.interface, "interface", d);
  r.right = build(d.right_states, d.right, "right", d);
  r.into_right.states = d.map;
  for (const auto& t : r.interface.transitions()) {
    auto s = d.map.find(t.source);
    auto e = d.map.find(t.target);
    if (s != d.map.end() && e != d.map.end()) {
      r.into_right.transitions.emplace(t, Transition{s->second, t.label, e->second});
    }
  }
  auto report = validate_rule(r);
  if (!report.ok()) throw ParseError("rule '" + r.name + "': " + report.str(), d.line);
  return r;
}

}  // namespace

RuleSystem parse_rules(std::string_view text) {
  RuleSystem sys;
  std::optional<Draft> draft;
  bool header = false;
  std::set<std::string> names;
  std::vector<std::string> w;
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t line = i + 1;
    auto trimmed = detail::trim(lines[i]);
    if (trimmed.empty() || trimmed.starts_with("//")) continue;
    if (!detail::words(trimmed, w)) throw ParseError("unterminated quote", line);
    const std::string& key = w[0];
    if (!header) {
      if (key != "ltsrules" || w.size() != 2) throw ParseError("expected 'ltsrules 1'", line);
      if (w[1] != "1") throw ParseError("unsupported rule format version " + w[1], line);
      header = true;
      continue;
    }
    if (key == "rule") {
      if (draft) throw ParseError("rule '" + draft->name + "' is missing 'end'", line);
      if (w.size() != 2) throw ParseError("expected 'rule <name>'", line);
      if (!names.insert(w[1]).second) throw ParseError("duplicate rule name '" + w[1] + "'", line);
      draft.emplace();
      draft->name = w[1];
      draft->line = line;
      continue;
    }
    if (!draft) throw ParseError("'" + key + "' outside a rule block", line);
    if (key == "end") {
      if (w.size() != 1) throw ParseError("unexpected text after 'end'", line);
      sys.rules.push_back(finish(*draft));
      draft.reset();
    } else if (key == "left-states" || key == "interface-states" || key == "right-states") {
      auto& states = key == "left-states"        ? draft->left_states
                     : key == "interface-states" ? draft->interface_states
                                                 : draft->right_states;
      for (std::size_t k = 1; k < w.size(); ++k) states.push_back(parse_state(w[k], line));
    } else if (key == "left") {
      draft->left.push_back(parse_transition(w, line));
    } else if (key == "interface") {
      draft->interface.push_back(parse_transition(w, line));
    } else if (key == "right") {
      draft->right.push_back(parse_transition(w, line));
    } else if (key == "map") {
      if (w.size() != 3) throw ParseError("expected 'map <interface-state> <right-state>'", line);
      StateId k = parse_state(w[1], line);
      if (!draft->map.emplace(k, parse_state(w[2], line)).second) {
        throw ParseError("interface state " + w[1] + " is mapped twice", line);
      }
    } else {
      throw ParseError("unknown keyword '" + key + "'", line);
    }
  }
  if (!header) throw ParseError("missing 'ltsrules 1' header", 0);
  if (draft) throw ParseError("rule '" + draft->name + "' is missing 'end'", draft->line);
  if (sys.rules.empty()) throw ParseError("the document contains no rules", 0);
  return sys;
}

std::string write_rules(const RuleSystem& sys) {
  std::string out = "ltsrules 1\n";
  auto states = [&](const char* key, const Lts& g) {
    out += key;
    for (StateId s : g.states()) out += " " + std::to_string(s);
    out += "\n";
  };
  auto transitions = [&](const char* key, const Lts& g) {
    for (const auto& t : g.transitions()) {
      out += std::string(key) + " " + std::to_string(t.source) + " \"" + t.label.str() + "\" " +
             std::to_string(t.target) + "\n";
    }
  };
  for (const auto& r : sys.rules) {
    out += "rule " + r.name + "\n";
    states("left-states", r.left);
    transitions("left", r.left);
    states("interface-states", r.interface);
    transitions("interface", r.interface);
    states("right-states", r.right);
    transitions("right", r.right);
    for (const auto& [k, v] : r.into_right.states) {
      out += "map " + std::to_string(k) + " " + std::to_string(v) + "\n";
    }
    out += "end\n";
  }
  return out;
}

}  // namespace ltsconf
