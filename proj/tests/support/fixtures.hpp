#pragma once

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ltsconf/aut.hpp"
#include "ltsconf/lts.hpp"
#include "ltsconf/rule_format.hpp"
#include "ltsconf/rules.hpp"

namespace ltsconf::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(LTSCONF_FIXTURES) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline RuleSystem fixture_rules(const std::string& name) { return parse_rules(read_fixture(name)); }
inline Lts fixture_aut(const std::string& name) { return parse_aut(read_fixture(name)); }

using Edge = std::tuple<StateId, const char*, StateId>;

// Shorthand for small LTSs: every endpoint becomes a state, plus `extra`.
inline Lts make_lts(std::initializer_list<Edge> edges, std::vector<StateId> extra = {}) {
  std::vector<Transition> ts;
  for (const auto& [s, l, t] : edges) {
    ts.push_back({s, Label::parse(l), t});
    extra.push_back(s);
    extra.push_back(t);
  }
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  return Lts(std::move(extra), std::move(ts));
}

inline std::multiset<std::string> label_multiset(const Lts& g) {
  std::multiset<std::string> out;
  for (const auto& t : g.transitions()) out.insert(t.label.str());
  return out;
}

}  // namespace ltsconf::testing

namespace ltsconf::testing {

// Rule from explicit parts; into_right transitions follow the state map.
inline Rule make_rule(std::string name, Lts left, Lts interface, Lts right,
                      std::map<StateId, StateId> map) {
  Rule r;
  r.name = std::move(name);
  r.left = std::move(left);
  r.interface = std::move(interface);
  r.right = std::move(right);
  r.into_right.states = std::move(map);
  for (const auto& t : r.interface.transitions()) {
    auto s = r.into_right.states.find(t.source);
    auto e = r.into_right.states.find(t.target);
    if (s != r.into_right.states.end() && e != r.into_right.states.end()) {
      r.into_right.transitions.emplace(t, Transition{s->second, t.label, e->second});
    }
  }
  return r;
}

}  // namespace ltsconf::testing
