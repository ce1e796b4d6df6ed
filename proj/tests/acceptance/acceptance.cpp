// Exit gate: one PASS/FAIL line per acceptance criterion.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "audit.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "ltsconf/ltsconf.hpp"
#include "properties.hpp"

using namespace ltsconf;
using namespace ltsconf::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << number << " " << title;
  if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
  std::cout << std::endl;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string command = std::string("\"") + LTSCONF_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string quoted(const std::string& path) { return "\"" + path + "\""; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string show(const std::multiset<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return "{" + out + "}";
}

std::string show(const std::set<Label>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l.str();
  return "{" + out + "}";
}

std::set<Label> meet(const std::set<Label>& deleted, const std::set<Label>& used) {
  std::set<Label> out;
  for (const auto& l : deleted) {
    if (used.contains(l)) out.insert(l);
  }
  return out;
}

const Lts kChainLoopG = make_lts({{0, "a", 1}, {1, "a", 3}, {1, "b", 2}, {3, "d", 0}});

Outcome application() {
  std::filesystem::path dir(LTSCONF_WORKDIR);
  auto t0 = dir / "acceptance_t_receiver.aut";
  auto t1 = dir / "acceptance_t_sender.aut";
  std::filesystem::remove(t0);
  std::filesystem::remove(t1);
  // The receive rule recreates its own pattern, so its one-step result is
  // read off at a bound of one step (exit status 2 marks the bound).
  auto a = run_cli("apply " + quoted(fixture_path("receiver.aut")) + " " +
                   quoted(fixture_path("postprocess.rules")) + " --max-steps 1 --out " + quoted(t0));
  auto b = run_cli("apply " + quoted(fixture_path("sender.aut")) + " " +
                   quoted(fixture_path("send_wait.rules")) + " --out " + quoted(t1));
  if (a.status != 2 || b.status != 0) {
    return {false, "exit statuses " + std::to_string(a.status) + "/" + std::to_string(b.status)};
  }
  Lts expected0 = make_lts({{0, "receive(m)", 2}, {2, "postprocess(m)", 1}, {1, "compute", 0}});
  Lts expected1 = make_lts({{0, "send(m)", 1}, {1, "wait", 0}});
  Lts got0 = parse_aut(read_file(t0));
  Lts got1 = parse_aut(read_file(t1));
  auto matches = find_matches(fixture_rules("postprocess.rules").rules[0], fixture_aut("receiver.aut"));
  bool bound = matches.size() == 1 && matches[0].bindings == Bindings{{1, "m"}};
  bool ok = isomorphic(got0, expected0) && isomorphic(got1, expected1) && bound &&
            got0.state_count() == 3 && got1.state_count() == 2;
  return {ok, "receiver result " + show(label_multiset(got0)) + ", sender result " + show(label_multiset(got1))};
}

Outcome chain_loop_detection() {
  auto sys = fixture_rules("chain_loop.rules");
  const Rule& r0 = *sys.find("r0");
  const Rule& r1 = *sys.find("r1");
  auto first = meet(deletion_labels(r0), r1.left.actions());
  auto second = meet(deletion_labels(r1), r0.left.actions());
  auto d = detect(r0, r1);
  bool found = false;
  for (const auto& p : d.pairs) {
    found = found || (isomorphic(p.situation, kChainLoopG) &&
                      label_multiset(p.situation) ==
                          std::multiset<std::string>{"a", "a", "b", "d"});
  }
  bool ok = first.empty() && second == std::set<Label>{Label::plain("a")} &&
            !prefilter_actions(r0, r1) && d.stage == DetectionStage::full && found;
  return {ok, "intersections " + show(first) + " and " + show(second) + ", " +
                  std::to_string(d.pairs.size()) + " pair(s)"};
}

Outcome boundary_construction() {
  auto sys = fixture_rules("boundary.rules");
  const Rule& l0 = *sys.find("l0");
  const Rule& l1 = *sys.find("l1");
  for (const auto& f : enumerate_ccms(l0, l1, 1, 1)) {
    if (f.morphism.states != std::map<StateId, StateId>{{0, 0}, {1, 1}}) continue;
    if (f.morphism.transitions.size() != 1) continue;
    auto b = boundary(f, l0, l1);
    auto pair = build_conflict_situation(f, l0, l1);
    if (!pair) return {false, "no conflict situation"};
    Lts expected = make_lts({{1, "a", 0}, {1, "b", 2}, {2, "c", 3}, {1, "d", 4}, {4, "c", 5}});
    bool ok = b == std::set<StateId>{1} && pair->situation.state_count() == 6 &&
              pair->situation.transition_count() == 5 &&
              label_multiset(pair->situation) ==
                  std::multiset<std::string>{"a", "b", "c", "c", "d"} &&
              isomorphic(pair->situation, expected);
    return {ok, "boundary size " + std::to_string(b.size()) + ", " +
                    std::to_string(pair->situation.state_count()) + " states, " +
                    std::to_string(pair->situation.transition_count()) + " transitions"};
  }
  return {false, "morphism s0->t0, s1->t1 not enumerated"};
}

Outcome triangle_resolution() {
  auto with = check_confluence(fixture_rules("triangle.rules"));
  auto without = check_confluence(fixture_rules("triangle_without_r2.rules"));
  bool ok = with.verdict == Verdict::confluent && with.pairs.size() == 1 &&
            with.pairs[0].verdict.outcome == ltsconf::Outcome::joinable &&
            with.pairs[0].verdict.steps_used <= 2 && without.verdict == Verdict::not_confluent;
  std::string steps = with.pairs.empty() ? "-" : std::to_string(with.pairs[0].verdict.steps_used);
  return {ok, "with r2: " + to_string(with.verdict) + " in " + steps + " step(s); without: " +
                  to_string(without.verdict)};
}

Outcome double_a_joinability() {
  auto sys = fixture_rules("double_a.rules");
  auto pairs = detect_critical_pairs(sys.rules[0], sys.rules[0]);
  if (pairs.size() != 1) return {false, std::to_string(pairs.size()) + " self-overlap pairs"};
  auto v = strongly_joinable(pairs[0], sys);
  bool plain = isomorphic(strip_reserved(v.covered0), strip_reserved(v.covered1)).has_value();
  bool covered = isomorphic(v.covered0, v.covered1).has_value();
  bool ok = v.outcome == ltsconf::Outcome::not_joinable && plain && !covered;
  return {ok, to_string(v.outcome) + ", isomorphic without covers: " + (plain ? "yes" : "no") +
                  ", with covers: " + (covered ? "yes" : "no")};
}

// `counted` is the count the criterion puts a floor on.
Outcome property(const PropertyRun& run, std::size_t counted, std::size_t needed,
                 const char* unit) {
  std::string detail = std::to_string(run.instances) + " " + unit + ", " +
                       std::to_string(run.interesting) + " non-trivial, " +
                       std::to_string(run.disagreements.size()) + " disagreements";
  for (const auto& d : run.disagreements) std::cerr << d << "\n";
  return {counted >= needed && run.disagreements.empty(), detail};
}

Outcome transformation_audit(const AuditLog& log) {
  // Widen the sample beyond the fixture runs above.
  std::mt19937 rng(17);
  for (int i = 0; i < 400; ++i) {
    Rule r = random_rule(rng, "r");
    Lts host = host_with(rng, {&r}, 2, 2);
    for (const auto& m : find_matches(r, host)) direct_transform(host, r, m);
  }
  for (const auto& f : log.failures) std::cerr << f << "\n";
  return {log.checked > 0 && log.failures.empty(),
          std::to_string(log.checked) + " transformations, " +
              std::to_string(log.failures.size()) + " mismatches"};
}

Outcome determinism() {
  std::size_t files = 0;
  for (const char* f : {"postprocess.rules", "send_wait.rules", "chain_loop.rules", "boundary.rules",
                        "triangle.rules", "triangle_without_r2.rules", "double_a.rules"}) {
    std::string args = "check --format json " + quoted(fixture_path(f));
    auto a = run_cli(args);
    auto b = run_cli(args);
    if (a.out.empty() || a.out != b.out || a.status != b.status) {
      return {false, std::string("reports differ for ") + f};
    }
    ++files;
  }
  return {true, std::to_string(files) + " fixtures"};
}

}  // namespace

int main() {
  auto& log = install_audit();
  criterion(1, "send/receive rule application", application);
  criterion(2, "detection on the a/b/d example", chain_loop_detection);
  criterion(3, "conflict situation from a compatibility morphism", boundary_construction);
  criterion(4, "a/b/c triangle resolution", triangle_resolution);
  criterion(5, "double-a self-overlap strong joinability", double_a_joinability);
  criterion(6, "transition-only independence agrees with the full definition",
            [] {
              auto run = independence_equivalence(1, 500);
              return property(run, run.instances, 500, "match pairs");
            });
  criterion(7, "detection agrees with the brute-force oracle",
            [] {
              auto run = oracle_equivalence(2, 200);
              return property(run, run.instances, 200, "rule pairs");
            });
  criterion(8, "detection shortcuts are sound",
            [] {
              auto run = shortcut_soundness(3, 200);
              return property(run, run.interesting, 200, "rule pairs (non-trivial = shortcut taken)");
            });
  criterion(9, "transformation equations audit", [&] { return transformation_audit(log); });
  criterion(10, "JSON report determinism", determinism);
  return failures == 0 ? 0 : 1;
}
