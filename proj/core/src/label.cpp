#include "ltsconf/label.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ltsconf/error.hpp"

namespace ltsconf {

namespace {

bool is_token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
         c == ':' || c == '!' || c == '?' || c == '+' || c == '*' || c == '/' || c == '<' ||
         c == '>' || c == '=' || c == '@' || c == '&' || c == '|' || c == '^' || c == '~' ||
         c == '\'';
}

bool is_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_token_char);
}

}  // namespace

Label Label::plain(std::string name) {
  Label l;
  l.name_ = std::move(name);
  return l;
}

Label Label::with_constant(std::string name, std::string value) {
  Label l;
  l.name_ = std::move(name);
  l.kind_ = ParamKind::constant;
  l.constant_ = std::move(value);
  return l;
}

Label Label::with_variable(std::string name, unsigned index) {
  Label l;
  l.name_ = std::move(name);
  l.kind_ = ParamKind::variable;
  l.variable_ = index;
  return l;
}

Label Label::parse(std::string_view text) {
  if (auto hash = text.find('#'); hash != std::string_view::npos) {
    auto name = text.substr(0, hash);
    auto digits = text.substr(hash + 1);
    unsigned index = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (!is_token(name) || digits.empty() || ec != std::errc{} ||
        ptr != digits.data() + digits.size() || index == 0) {
      throw Error("malformed variable label '" + std::string(text) + "'");
    }
    return with_variable(std::string(name), index);
  }
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw Error("malformed label '" + std::string(text) + "'");
    auto name = text.substr(0, open);
    auto value = text.substr(open + 1, text.size() - open - 2);
    if (!is_token(name) || !is_token(value)) {
      throw Error("malformed label '" + std::string(text) + "'");
    }
    return with_constant(std::string(name), std::string(value));
  }
  if (!is_token(text)) throw Error("malformed label '" + std::string(text) + "'");
  return plain(std::string(text));
}

std::string Label::str() const {
  switch (kind_) {
    case ParamKind::none:
      return name_;
    case ParamKind::constant:
      return name_ + "(" + constant_ + ")";
    case ParamKind::variable:
      return name_ + "#" + std::to_string(variable_);
  }
  return name_;
}

Label instantiate(const Label& label, const Bindings& bindings) {
  if (!label.has_variable()) return label;
  auto it = bindings.find(label.variable());
  if (it == bindings.end()) return label;
  return Label::with_constant(label.name(), it->second);
}

bool unify_into(const Label& pattern, const Label& host, Bindings& bindings) {
  if (pattern.name() != host.name()) return false;
  using K = Label::ParamKind;
  switch (pattern.kind()) {
    case K::none:
      return host.kind() == K::none;
    case K::constant:
      return host.kind() == K::constant && host.constant() == pattern.constant();
    case K::variable: {
      if (host.kind() != K::constant) return false;
      auto [it, inserted] = bindings.emplace(pattern.variable(), host.constant());
      return inserted || it->second == host.constant();
    }
  }
  return false;
}

bool may_coincide(const Label& a, const Label& b) {
  if (a.has_variable() || b.has_variable()) return a.name() == b.name();
  return a == b;
}

PatternUnifier::Var PatternUnifier::find(Var v) const {
  for (auto it = parent_.find(v); it != parent_.end() && it->second != v;
       it = parent_.find(v)) {
    v = it->second;
  }
  return v;
}

bool PatternUnifier::bind(const Var& v, const std::string& value) {
  auto root = find(v);
  parent_.try_emplace(v, v);
  auto it = value_.find(root);
  if (it != value_.end()) return it->second == value;
  value_[root] = value;
  return true;
}

bool PatternUnifier::join(const Var& a, const Var& b) {
  parent_.try_emplace(a, a);
  parent_.try_emplace(b, b);
  auto ra = find(a);
  auto rb = find(b);
  if (ra == rb) return true;
  auto va = value_.find(ra);
  auto vb = value_.find(rb);
  if (va != value_.end() && vb != value_.end() && va->second != vb->second) return false;
  auto keep = std::min(ra, rb);
  auto drop = std::max(ra, rb);
  parent_[drop] = keep;
  if (auto vd = value_.find(drop); vd != value_.end()) {
    value_[keep] = vd->second;
    value_.erase(vd);
  }
  return true;
}

bool PatternUnifier::unify(const Label& left, const Label& right) {
  if (left.name() != right.name()) return false;
  using K = Label::ParamKind;
  if (left.kind() == K::none || right.kind() == K::none) {
    return left.kind() == right.kind();
  }
  if (left.kind() == K::constant && right.kind() == K::constant) {
    return left.constant() == right.constant();
  }
  PatternUnifier trial = *this;
  bool ok = false;
  if (left.kind() == K::variable && right.kind() == K::variable) {
    ok = trial.join({0, left.variable()}, {1, right.variable()});
  } else if (left.kind() == K::variable) {
    ok = trial.bind({0, left.variable()}, right.constant());
  } else {
    ok = trial.bind({1, right.variable()}, left.constant());
  }
  if (ok) *this = std::move(trial);
  return ok;
}

std::string PatternUnifier::value_of(Var var) const {
  auto root = find(var);
  if (auto it = value_.find(root); it != value_.end()) return it->second;
  // Roots are the smallest class member, so the fresh name is canonical.
  return std::string(1, kFreshMarker) + (root.first == 0 ? "p" : "q") +
         std::to_string(root.second);
}

Label PatternUnifier::instantiate(const Label& label, int side) const {
  if (!label.has_variable()) return label;
  return Label::with_constant(label.name(), value_of({side, label.variable()}));
}

std::vector<std::pair<PatternUnifier::Var, std::string>> PatternUnifier::canonical() const {
  std::vector<std::pair<Var, std::string>> out;
  out.reserve(parent_.size());
  for (const auto& [var, _] : parent_) out.emplace_back(var, value_of(var));
  return out;
}

}  // namespace ltsconf
