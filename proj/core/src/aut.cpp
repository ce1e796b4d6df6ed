#include "ltsconf/aut.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "ltsconf/error.hpp"
#include "text_util.hpp"

namespace ltsconf {

namespace {

std::size_t parse_number(std::string_view s, std::size_t line, const char* what) {
  s = detail::trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(s) + "'", line);
  }
  return value;
}

}  // namespace

Lts parse_aut(std::string_view text) {
  auto lines = detail::split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && detail::trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw ParseError("missing 'des' header", 0);

  std::string_view header = detail::trim(lines[i]);
  std::size_t header_line = i + 1;
  if (!header.starts_with("des") || header.back() != ')') {
    throw ParseError("malformed header, expected 'des (i, m, n)'", header_line);
  }
  header.remove_prefix(3);
  header = detail::trim(header);
  if (header.empty() || header.front() != '(') {
    throw ParseError("malformed header, expected 'des (i, m, n)'", header_line);
  }
  auto fields = detail::split(header.substr(1, header.size() - 2), ',');
  if (fields.size() != 3) throw ParseError("header needs three numbers", header_line);
  std::size_t initial = parse_number(fields[0], header_line, "initial state");
  std::size_t declared = parse_number(fields[1], header_line, "transition count");
  std::size_t n = parse_number(fields[2], header_line, "state count");
  if (n == 0) throw ParseError("an LTS needs at least one state", header_line);
  if (initial >= n) throw ParseError("initial state out of range", header_line);

  std::vector<Transition> transitions;
  std::size_t count = 0;
  for (++i; i < lines.size(); ++i) {
    std::string_view line = detail::trim(lines[i]);
    std::size_t number = i + 1;
    if (line.empty()) continue;
    if (line.front() != '(' || line.back() != ')') {
      throw ParseError("expected '(from, \"label\", to)'", number);
    }
    line = line.substr(1, line.size() - 2);
    auto first = line.find(',');
    auto last = line.rfind(',');
    if (first == std::string_view::npos || first == last) {
      throw ParseError("expected '(from, \"label\", to)'", number);
    }
    std::size_t from = parse_number(line.substr(0, first), number, "source state");
    std::size_t to = parse_number(line.substr(last + 1), number, "target state");
    std::string_view label = detail::trim(line.substr(first + 1, last - first - 1));
    if (label.size() >= 2 && label.front() == '"' && label.back() == '"') {
      label = label.substr(1, label.size() - 2);
    }
    if (from >= n || to >= n) throw ParseError("state index out of range", number);
    Label parsed;
    try {
      parsed = Label::parse(label);
    } catch (const Error& e) {
      throw ParseError(e.what(), number);
    }
    if (parsed.has_variable()) {
      throw ParseError("variables are not allowed in an LTS: " + parsed.str(), number);
    }
    if (parsed.reserved()) throw ParseError("reserved label " + parsed.str(), number);
    transitions.push_back(
        {static_cast<StateId>(from), std::move(parsed), static_cast<StateId>(to)});
    ++count;
  }
  if (count != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " transitions, found " +
                         std::to_string(count),
                     header_line);
  }
  std::vector<StateId> states(n);
  for (std::size_t s = 0; s < n; ++s) states[s] = static_cast<StateId>(s);
  Lts g(std::move(states), std::move(transitions));
  if (g.transition_count() != count) {
    throw ParseError("duplicate transitions", header_line);
  }
  if (!is_weakly_connected(g)) throw ParseError("the LTS is not weakly connected", 0);
  return g;
}

std::string write_aut(const Lts& g) {
  std::map<StateId, StateId> number;
  for (StateId root : g.states()) {
    if (number.contains(root)) continue;
    std::queue<StateId> todo;
    number.emplace(root, static_cast<StateId>(number.size()));
    todo.push(root);
    while (!todo.empty()) {
      StateId u = todo.front();
      todo.pop();
      std::vector<StateId> next;
      for (auto t : g.outgoing(u)) next.push_back(g.transitions()[t].target);
      for (auto t : g.incoming(u)) next.push_back(g.transitions()[t].source);
      for (StateId v : next) {
        if (number.emplace(v, static_cast<StateId>(number.size())).second) todo.push(v);
      }
    }
  }
  std::vector<std::tuple<StateId, std::string, StateId>> lines;
  for (const auto& t : g.transitions()) {
    lines.emplace_back(number.at(t.source), t.label.str(), number.at(t.target));
  }
  std::sort(lines.begin(), lines.end());
  std::string out = "des (0, " + std::to_string(lines.size()) + ", " +
                    std::to_string(g.state_count()) + ")\n";
  for (const auto& [from, label, to] : lines) {
    out += "(" + std::to_string(from) + ", \"" + label + "\", " + std::to_string(to) + ")\n";
  }
  return out;
}

}  // namespace ltsconf
