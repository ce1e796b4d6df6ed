#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ltsconf/conflict_resolve.hpp"
#include "ltsconf/critical_pair.hpp"
#include "ltsconf/transform.hpp"

namespace ltsconf {

enum class ReportFormat { text, json, dot };

/// "text", "json" or "dot"; throws ltsconf::Error otherwise.
ReportFormat parse_report_format(std::string_view name);

/// Confluence verdict with one entry per examined critical pair. JSON keys
/// are sorted and the output is byte-stable for equal inputs; DOT emits one
/// digraph per conflict situation with the two match images coloured.
std::string emit_report(const ConfluenceReport& report, ReportFormat format);

/// Critical pairs alone, as produced by detection or the oracle.
std::string emit_pairs(const std::vector<CriticalPair>& pairs, ReportFormat format);

/// Normal forms reached by `apply`.
std::string emit_normal_forms(const NormalForms& forms, ReportFormat format);

}  // namespace ltsconf
