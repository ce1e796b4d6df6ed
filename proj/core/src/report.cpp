#include "ltsconf/report.hpp"

#include <json.hpp>

#include "ltsconf/aut.hpp"
#include "ltsconf/error.hpp"

namespace ltsconf {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "dot") return ReportFormat::dot;
  throw Error("unknown report format '" + std::string(name) + "'");
}

namespace {

// Aut-style lines with the situation's own state ids, so that the match
// listings refer to the same numbers.
json situation_lines(const Lts& g) {
  json lines = json::array();
  lines.push_back("des (0, " + std::to_string(g.transition_count()) + ", " +
                  std::to_string(g.state_count()) + ")");
  for (const auto& t : g.transitions()) {
    lines.push_back("(" + std::to_string(t.source) + ", \"" + t.label.str() + "\", " +
                    std::to_string(t.target) + ")");
  }
  return lines;
}

json match_json(const Match& m) {
  json states = json::object();
  for (const auto& [s, h] : m.morphism.states) states[std::to_string(s)] = h;
  json bindings = json::object();
  for (const auto& [k, v] : m.bindings) bindings["#" + std::to_string(k)] = v;
  return {{"states", states}, {"bindings", bindings}};
}

json pair_json(const CriticalPair& p) {
  return {{"rules", {p.rule0, p.rule1}},
          {"situation", situation_lines(p.situation)},
          {"match0", match_json(p.match0)},
          {"match1", match_json(p.match1)}};
}

std::string lines_text(const Lts& g, const std::string& indent) {
  std::string out;
  for (const auto& t : g.transitions()) out += indent + to_string(t) + "\n";
  return out;
}

std::string pair_dot(const CriticalPair& p, const std::string& name, const std::string& title) {
  std::set<StateId> s0, s1;
  std::set<Transition> t0, t1;
  for (const auto& [_, h] : p.match0.morphism.states) s0.insert(h);
  for (const auto& [_, h] : p.match1.morphism.states) s1.insert(h);
  for (const auto& [_, h] : p.match0.morphism.transitions) t0.insert(h);
  for (const auto& [_, h] : p.match1.morphism.transitions) t1.insert(h);
  auto colour = [](bool a, bool b) { return a && b ? "purple" : a ? "blue" : "red"; };

  std::string out = "digraph " + name + " {\n";
  out += "  label=\"" + title + "\";\n";
  for (StateId s : p.situation.states()) {
    out += "  s" + std::to_string(s) + " [label=\"" + std::to_string(s) + "\", color=" +
           colour(s0.contains(s), s1.contains(s)) + "];\n";
  }
  for (const auto& t : p.situation.transitions()) {
    out += "  s" + std::to_string(t.source) + " -> s" + std::to_string(t.target) +
           " [label=\"" + t.label.str() + "\", color=" +
           colour(t0.contains(t), t1.contains(t)) + "];\n";
  }
  out += "}\n";
  return out;
}

std::string lts_dot(const Lts& g, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  for (StateId s : g.states()) {
    out += "  s" + std::to_string(s) + " [label=\"" + std::to_string(s) + "\"];\n";
  }
  for (const auto& t : g.transitions()) {
    out += "  s" + std::to_string(t.source) + " -> s" + std::to_string(t.target) +
           " [label=\"" + t.label.str() + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string describe(const JoinabilityVerdict& v) {
  std::string out = to_string(v.outcome);
  if (v.outcome == Outcome::joinable) {
    out += " after " + std::to_string(v.steps_used) + " step(s)";
  }
  return out;
}

}  // namespace

std::string emit_report(const ConfluenceReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      json pairs = json::array();
      for (const auto& pr : report.pairs) {
        json entry = pair_json(pr.pair);
        entry["outcome"] = to_string(pr.verdict.outcome);
        entry["stepsUsed"] = pr.verdict.steps_used;
        entry["refusedMatches"] = pr.verdict.refused;
        entry["reducts"] = {pr.verdict.reducts0, pr.verdict.reducts1};
        pairs.push_back(std::move(entry));
      }
      json doc = {{"verdict", to_string(report.verdict)},
                  {"mode", to_string(report.mode)},
                  {"maxSteps", report.max_steps},
                  {"terminationAssumed", true},
                  {"stoppedEarly", report.stopped_early},
                  {"counters",
                   {{"pairs", report.pairs.size()},
                    {"resolved", report.resolved},
                    {"failed", report.failed},
                    {"inconclusive", report.undecided}}},
                  {"pairs", std::move(pairs)}};
      return doc.dump(2) + "\n";
    }
    case ReportFormat::dot: {
      std::string out;
      for (std::size_t i = 0; i < report.pairs.size(); ++i) {
        const auto& pr = report.pairs[i];
        out += pair_dot(pr.pair, "pair" + std::to_string(i + 1),
                        pr.pair.rule0 + " / " + pr.pair.rule1 + ": " + describe(pr.verdict));
      }
      return out;
    }
    case ReportFormat::text: {
      std::string out = "verdict: " + to_string(report.verdict) + "\n";
      out += "mode: " + to_string(report.mode) + ", max steps: " +
             std::to_string(report.max_steps) + " (termination of the rules is assumed)\n";
      out += "critical pairs: " + std::to_string(report.pairs.size()) + " (resolved " +
             std::to_string(report.resolved) + ", failed " + std::to_string(report.failed) +
             ", inconclusive " + std::to_string(report.undecided) + ")\n";
      if (report.stopped_early) out += "stopped at the first pair that could not be joined\n";
      for (std::size_t i = 0; i < report.pairs.size(); ++i) {
        const auto& pr = report.pairs[i];
        out += "\npair " + std::to_string(i + 1) + ": " + pr.pair.rule0 + " / " +
               pr.pair.rule1 + " -> " + describe(pr.verdict) + "\n";
        out += "  situation: " + std::to_string(pr.pair.situation.state_count()) +
               " states, " + std::to_string(pr.pair.situation.transition_count()) +
               " transitions\n";
        out += lines_text(pr.pair.situation, "    ");
      }
      return out;
    }
  }
  return {};
}

std::string emit_pairs(const std::vector<CriticalPair>& pairs, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      json list = json::array();
      for (const auto& p : pairs) list.push_back(pair_json(p));
      json doc = {{"pairs", std::move(list)}, {"count", pairs.size()}};
      return doc.dump(2) + "\n";
    }
    case ReportFormat::dot: {
      std::string out;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        out += pair_dot(pairs[i], "pair" + std::to_string(i + 1),
                        pairs[i].rule0 + " / " + pairs[i].rule1);
      }
      return out;
    }
    case ReportFormat::text: {
      std::string out = "critical pairs: " + std::to_string(pairs.size()) + "\n";
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        out += "\npair " + std::to_string(i + 1) + ": " + p.rule0 + " / " + p.rule1 + "\n";
        out += lines_text(p.situation, "    ");
      }
      return out;
    }
  }
  return {};
}

std::string emit_normal_forms(const NormalForms& forms, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      json list = json::array();
      for (const auto& f : forms.forms) list.push_back(write_aut(f.lts));
      json doc = {{"normalForms", std::move(list)}, {"exhausted", forms.exhausted}};
      return doc.dump(2) + "\n";
    }
    case ReportFormat::dot: {
      std::string out;
      for (std::size_t i = 0; i < forms.forms.size(); ++i) {
        out += lts_dot(forms.forms[i].lts, "form" + std::to_string(i + 1));
      }
      return out;
    }
    case ReportFormat::text: {
      std::string out = "results: " + std::to_string(forms.forms.size()) + "\n";
      if (forms.exhausted) out += "step bound reached; LTSs at the bound are listed as well\n";
      for (const auto& f : forms.forms) out += "\n" + write_aut(f.lts);
      return out;
    }
  }
  return {};
}

}  // namespace ltsconf
