#include "ltsconf/conflict_resolve.hpp"

#include <limits>
#include <map>

#include "ltsconf/conflict_detect.hpp"
#include "ltsconf/error.hpp"

namespace ltsconf {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::joinable:
      return "joinable";
    case Outcome::not_joinable:
      return "notJoinable";
    case Outcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::confluent:
      return "confluent";
    case Verdict::not_confluent:
      return "notConfluent";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(CheckMode m) { return m == CheckMode::eager ? "eager" : "exhaustive"; }

namespace {

const Rule& rule_named(const RuleSystem& sys, const std::string& name) {
  const Rule* r = sys.find(name);
  if (!r) throw Error("critical pair refers to unknown rule '" + name + "'");
  return *r;
}

Lts name_covers(const Lts& g) {
  std::vector<Transition> transitions;
  for (const auto& t : g.transitions()) {
    if (t.label == kappa_label()) {
      transitions.push_back({t.source, kappa_label(t.source), t.target});
    } else {
      transitions.push_back(t);
    }
  }
  return Lts(g.states(), std::move(transitions));
}

Lts keep_covers(const Lts& g, const Lts& other) {
  std::vector<Transition> transitions;
  for (const auto& t : g.transitions()) {
    if (!t.label.reserved() || other.has_transition(t)) transitions.push_back(t);
  }
  return Lts(g.states(), std::move(transitions));
}

}  // namespace

JoinabilityVerdict strongly_joinable(const CriticalPair& pair, const RuleSystem& sys,
                                     const ResolveOptions& options) {
  const Rule r0 = kappa_augment(rule_named(sys, pair.rule0));
  const Rule r1 = kappa_augment(rule_named(sys, pair.rule1));
  auto step0 = direct_transform(pair.situation, r0, pair.match0);
  auto step1 = direct_transform(pair.situation, r1, pair.match1);
  if (options.observer) {
    options.observer(r0, step0);
    options.observer(r1, step1);
  }
  // Surviving situation states keep their ids, so a cover loop sitting on
  // state x marks situation state x.
  Lts named0 = name_covers(step0.after);
  Lts named1 = name_covers(step1.after);

  JoinabilityVerdict v;
  v.covered0 = keep_covers(named0, named1);
  v.covered1 = keep_covers(named1, named0);

  ExploreOptions explore_options;
  explore_options.max_steps = options.max_steps;
  explore_options.covered = true;
  explore_options.observer = options.observer;
  auto side0 = explore(v.covered0, sys, explore_options);
  auto side1 = explore(v.covered1, sys, explore_options);
  v.reducts0 = side0.reducts.size();
  v.reducts1 = side1.reducts.size();
  v.refused = side0.violations.size() + side1.violations.size();

  std::map<std::string, std::vector<const Reduct*>> by_print;
  for (const auto& r : side1.reducts) by_print[fingerprint(r.lts)].push_back(&r);
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const auto& a : side0.reducts) {
    auto it = by_print.find(fingerprint(a.lts));
    if (it == by_print.end()) continue;
    for (const auto* b : it->second) {
      if (a.depth + b->depth >= best || !isomorphic(a.lts, b->lts)) continue;
      best = a.depth + b->depth;
      v.joined0 = a.lts;
      v.joined1 = b->lts;
    }
  }
  if (v.joined0) {
    v.outcome = Outcome::joinable;
    v.steps_used = best;
  } else if (side0.exhausted || side1.exhausted) {
    v.outcome = Outcome::inconclusive;
  } else {
    v.outcome = Outcome::not_joinable;
  }
  return v;
}

ConfluenceReport check_confluence(const RuleSystem& sys, const ConfluenceOptions& options) {
  if (sys.rules.empty()) throw Error("the rule system is empty");
  require_valid(sys);
  ConfluenceReport report;
  report.mode = options.mode;
  report.max_steps = options.max_steps;
  ResolveOptions resolve;
  resolve.max_steps = options.max_steps;
  resolve.observer = options.observer;

  for (std::size_t i = 0; i < sys.rules.size(); ++i) {
    for (std::size_t j = i; j < sys.rules.size(); ++j) {
      for (auto& pair : detect_critical_pairs(sys.rules[i], sys.rules[j])) {
        auto verdict = strongly_joinable(pair, sys, resolve);
        switch (verdict.outcome) {
          case Outcome::joinable:
            ++report.resolved;
            break;
          case Outcome::not_joinable:
            ++report.failed;
            break;
          case Outcome::inconclusive:
            ++report.undecided;
            break;
        }
        bool stop = verdict.outcome == Outcome::not_joinable && options.mode == CheckMode::eager;
        report.pairs.push_back({std::move(pair), std::move(verdict)});
        if (stop) {
          report.stopped_early = true;
          report.verdict = Verdict::not_confluent;
          return report;
        }
      }
    }
  }
  if (report.failed > 0) {
    report.verdict = Verdict::not_confluent;
  } else if (report.undecided > 0) {
    report.verdict = Verdict::inconclusive;
  } else {
    report.verdict = Verdict::confluent;
  }
  return report;
}

}  // namespace ltsconf
