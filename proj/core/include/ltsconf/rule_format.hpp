#pragma once

#include <string>
#include <string_view>

#include "ltsconf/rules.hpp"

namespace ltsconf {

/// Rule documents, one block per rule:
///
///   ltsrules 1
///   rule r0
///   left-states 0 1
///   left 0 "receive#1" 1
///   interface-states 0 1
///   right-states 0 1 2
///   right 0 "receive#1" 2
///   right 2 "postprocess#1" 1
///   map 0 0
///   map 1 1
///   end
///
/// `interface` lines list K-transitions; `map k r` gives the image of
/// interface state k in the right pattern. Lines starting with `//` are
/// comments. Every rule is validated; failures raise ltsconf::ParseError
/// naming the rule.
RuleSystem parse_rules(std::string_view text);

/// Inverse of parse_rules.
std::string write_rules(const RuleSystem& sys);

}  // namespace ltsconf
