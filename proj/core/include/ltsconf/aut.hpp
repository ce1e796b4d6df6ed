#pragma once

#include <string>
#include <string_view>

#include "ltsconf/lts.hpp"

namespace ltsconf {

/// Reads an Aldebaran document:
///
///   des (initial, transitions, states)
///   (from, "label", to)
///   ...
///
/// States are 0 .. states-1. Labels are `name` or `name(constant)`; quotes
/// are optional. Variables, reserved labels, count mismatches and weakly
/// disconnected systems are rejected with ltsconf::ParseError.
Lts parse_aut(std::string_view text);

/// Canonical document: states renumbered breadth-first (ignoring
/// direction) from the lowest id, lines sorted, initial state 0.
std::string write_aut(const Lts& g);

}  // namespace ltsconf
