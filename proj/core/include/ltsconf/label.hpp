#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ltsconf {

/// Labels whose name starts with this prefix are reserved for the cover
/// self-loops introduced while resolving conflicts.
inline constexpr std::string_view kReservedPrefix = "__kappa";

/// Transition label: an action name with an optional parameter.
///
/// Host systems only carry constant parameters, written `name(value)`.
/// Rule patterns may additionally carry variables, written `name#k` with
/// k >= 1; a variable binds to one constant per match.
class Label {
 public:
  enum class ParamKind : unsigned char { none, constant, variable };

  Label() = default;

  static Label plain(std::string name);
  static Label with_constant(std::string name, std::string value);
  static Label with_variable(std::string name, unsigned index);

  /// Parses `name`, `name(value)` or `name#k`. Throws ltsconf::Error.
  static Label parse(std::string_view text);

  const std::string& name() const noexcept { return name_; }
  ParamKind kind() const noexcept { return kind_; }
  const std::string& constant() const noexcept { return constant_; }
  unsigned variable() const noexcept { return variable_; }
  bool has_variable() const noexcept { return kind_ == ParamKind::variable; }
  bool reserved() const noexcept { return name_.starts_with(kReservedPrefix); }

  std::string str() const;

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;

 private:
  std::string name_;
  ParamKind kind_ = ParamKind::none;
  std::string constant_;
  unsigned variable_ = 0;
};

/// Variable index -> constant value, scoped to one match.
using Bindings = std::map<unsigned, std::string>;

/// Replaces bound variables by their constants; unbound variables stay.
Label instantiate(const Label& label, const Bindings& bindings);

/// One-sided unification of a pattern label against a host label.
/// Extends `bindings` on success; leaves it untouched on failure.
bool unify_into(const Label& pattern, const Label& host, Bindings& bindings);

/// Conservative comparison used by the cheap screens: labels involving a
/// variable compare by name only, others compare exactly.
bool may_coincide(const Label& a, const Label& b);

/// Two-sided unification between the variables of two rule patterns (side 0
/// and side 1). Variables of different sides are distinct even when they
/// share an index.
class PatternUnifier {
 public:
  using Var = std::pair<int, unsigned>;  // (side, index)

  /// Unifies `left` (side 0) with `right` (side 1). On failure the unifier
  /// is unchanged.
  bool unify(const Label& left, const Label& right);

  /// Label of `side` with every variable replaced by its class constant, or
  /// by a fresh constant named after the smallest class member.
  Label instantiate(const Label& label, int side) const;

  /// Constant assigned to `var` (bound or fresh).
  std::string value_of(Var var) const;

  /// Canonical (variable, class constant-or-fresh) listing; equal listings
  /// mean equal unifiers over the variables mentioned.
  std::vector<std::pair<Var, std::string>> canonical() const;

  friend bool operator==(const PatternUnifier& a, const PatternUnifier& b) {
    return a.canonical() == b.canonical();
  }

 private:
  Var find(Var v) const;
  bool bind(const Var& v, const std::string& value);
  bool join(const Var& a, const Var& b);

  std::map<Var, Var> parent_;
  std::map<Var, std::string> value_;  // keyed by class root
};

/// Fresh constants always start with this character, which the input
/// formats do not accept in constants.
inline constexpr char kFreshMarker = '$';

}  // namespace ltsconf
