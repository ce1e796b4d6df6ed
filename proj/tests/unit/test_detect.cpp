#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "ltsconf/conflict_detect.hpp"
#include "ltsconf/oracle.hpp"

using namespace ltsconf;
using namespace ltsconf::testing;

namespace {

const Lts kChainLoopG = make_lts({{0, "a", 1}, {1, "a", 3}, {1, "b", 2}, {3, "d", 0}});

CriticalPair swapped(const CriticalPair& p) {
  return {p.rule1, p.rule0, p.situation, p.match1, p.match0};
}

void check_pair_shape(const CriticalPair& p, const Rule& r0, const Rule& r1) {
  CHECK(is_weakly_connected(p.situation));
  CHECK(is_valid_match(r0, p.match0, p.situation));
  CHECK(is_valid_match(r1, p.match1, p.situation));
  CHECK(combine(left_image(r0, p.match0), left_image(r1, p.match1), CombineMode::union_of) ==
        p.situation);
  CHECK_FALSE(parallel_independent(r0, p.match0, r1, p.match1));
  if (r0.name == r1.name) CHECK_FALSE(p.match0 == p.match1);
}

}  // namespace

TEST_CASE("action prefilter") {
  auto chain_loop = fixture_rules("chain_loop.rules");
  CHECK_FALSE(prefilter_actions(chain_loop.rules[0], chain_loop.rules[1]));

  auto triangle = fixture_rules("triangle.rules");
  CHECK(prefilter_actions(triangle.rules[0], triangle.rules[2]));
  CHECK_FALSE(prefilter_actions(triangle.rules[0], triangle.rules[1]));

  Rule x = make_rule("x", make_lts({{0, "x", 1}}), Lts({0, 1}, {}), make_lts({{0, "y", 1}}),
                     {{0, 0}, {1, 1}});
  CHECK(prefilter_actions(triangle.rules[0], x));

  // Variables compare by name.
  Rule v = make_rule("v", make_lts({{0, "a#1", 1}}), Lts({0, 1}, {}),
                     make_lts({{0, "z#1", 1}}), {{0, 0}, {1, 1}});
  CHECK_FALSE(prefilter_actions(v, triangle.rules[1]));
}

TEST_CASE("independence on the transition level") {
  auto chain_loop = fixture_rules("chain_loop.rules");
  auto pairs = detect_critical_pairs(chain_loop.rules[0], chain_loop.rules[1]);
  REQUIRE_FALSE(pairs.empty());
  for (const auto& p : pairs) {
    CHECK_FALSE(parallel_independent(chain_loop.rules[0], p.match0, chain_loop.rules[1], p.match1));
  }

  auto triangle = fixture_rules("triangle.rules");
  Lts host = make_lts({{0, "a", 1}, {1, "x", 2}, {2, "a", 3}});
  auto ms = find_matches(triangle.rules[0], host);
  REQUIRE(ms.size() == 2);
  CHECK(parallel_independent(triangle.rules[0], ms[0], triangle.rules[0], ms[1]));

  // Two rules that both keep the a-transition they share.
  Lts pattern = make_lts({{0, "a", 1}});
  Rule tag = make_rule("tag", pattern, pattern, make_lts({{0, "a", 1}, {1, "t", 1}}),
                       {{0, 0}, {1, 1}});
  Rule mark = make_rule("mark", pattern, pattern, make_lts({{0, "a", 1}, {0, "u", 0}}),
                        {{0, 0}, {1, 1}});
  Lts one = make_lts({{0, "a", 1}});
  auto m0 = find_matches(tag, one);
  auto m1 = find_matches(mark, one);
  REQUIRE(m0.size() == 1);
  REQUIRE(m1.size() == 1);
  CHECK(parallel_independent(tag, m0[0], mark, m1[0]));
  CHECK(oracle::parallel_independent_full(tag, m0[0], mark, m1[0]));
}

TEST_CASE("seed screen") {
  auto sys = fixture_rules("boundary.rules");
  const Rule& l0 = *sys.find("l0");
  const Rule& l1 = *sys.find("l1");
  CHECK(seed_passes_screen(l0, l1, 1, 1));
  CHECK_FALSE(seed_passes_screen(l0, l1, 0, 0));  // no outgoing transitions
  CHECK_FALSE(seed_passes_screen(l0, l1, 1, 2));  // {a, b} against {c}
}

TEST_CASE("compatibility morphisms of the boundary example") {
  auto sys = fixture_rules("boundary.rules");
  const Rule& l0 = *sys.find("l0");
  const Rule& l1 = *sys.find("l1");
  auto fs = enumerate_ccms(l0, l1, 1, 1);
  REQUIRE(fs.size() == 1);
  const auto& f = fs[0];
  CHECK(f.morphism.states == std::map<StateId, StateId>{{0, 0}, {1, 1}});
  REQUIRE(f.morphism.transitions.size() == 1);
  CHECK(f.morphism.transitions.begin()->first.label == Label::plain("a"));
  CHECK(boundary(f, l0, l1) == std::set<StateId>{1});

  auto pair = build_conflict_situation(f, l0, l1);
  REQUIRE(pair);
  CHECK(pair->situation.state_count() == 6);
  CHECK(pair->situation.transition_count() == 5);
  CHECK(label_multiset(pair->situation) == std::multiset<std::string>{"a", "b", "c", "c", "d"});
  Lts expected = make_lts({{1, "a", 0}, {1, "b", 2}, {2, "c", 3}, {1, "d", 4}, {4, "c", 5}});
  CHECK(isomorphic(pair->situation, expected));
  check_pair_shape(*pair, l0, l1);
}

TEST_CASE("double-a rule overlaps itself crosswise") {
  auto r0 = fixture_rules("double_a.rules").rules[0];
  auto fs = enumerate_ccms(r0, r0, 0, 0);
  bool crosswise = false;
  for (const auto& f : fs) {
    if (f.morphism.states == std::map<StateId, StateId>{{0, 0}, {1, 2}, {2, 1}} &&
        f.morphism.transitions.size() == 2) {
      crosswise = true;
    }
  }
  CHECK(crosswise);

  // Brute force: every crosswise or straight full overlap is found.
  auto overlaps = oracle::enumerate_overlaps(r0, r0);
  std::size_t full = 0;
  for (const auto& o : overlaps) {
    if (o.identification.transitions.size() == 2) ++full;
  }
  CHECK(full == 2);
}

TEST_CASE("full overlap of equal patterns gives the pattern back") {
  auto triangle = fixture_rules("triangle.rules");
  auto fs = enumerate_ccms(triangle.rules[0], triangle.rules[1], 0, 0);
  REQUIRE(fs.size() == 1);
  CHECK(boundary(fs[0], triangle.rules[0], triangle.rules[1]).empty());
  auto pair = build_conflict_situation(fs[0], triangle.rules[0], triangle.rules[1]);
  REQUIRE(pair);
  CHECK(isomorphic(pair->situation, triangle.rules[0].left));
}

TEST_CASE("detection on the fixture systems") {
  auto chain_loop = fixture_rules("chain_loop.rules");
  auto d = detect(chain_loop.rules[0], chain_loop.rules[1]);
  CHECK(d.stage == DetectionStage::full);
  bool has_g = false;
  for (const auto& p : d.pairs) {
    check_pair_shape(p, chain_loop.rules[0], chain_loop.rules[1]);
    has_g = has_g || isomorphic(p.situation, kChainLoopG).has_value();
  }
  CHECK(has_g);

  auto triangle = fixture_rules("triangle.rules");
  auto p6 = detect_critical_pairs(triangle.rules[0], triangle.rules[1]);
  REQUIRE(p6.size() == 1);
  CHECK(isomorphic(p6[0].situation, make_lts({{0, "a", 1}})));
  CHECK(detect(triangle.rules[0], triangle.rules[2]).stage == DetectionStage::prefilter);

  auto r0 = fixture_rules("postprocess.rules").rules[0];
  CHECK(detect_critical_pairs(r0, r0).empty());
  CHECK(oracle::oracle_critical_pairs(r0, r0).empty());
}

TEST_CASE("non-deleting rules never conflict") {
  Lts pattern = make_lts({{0, "a", 1}});
  Rule tag = make_rule("tag", pattern, pattern, make_lts({{0, "a", 1}, {1, "t", 1}}),
                       {{0, 0}, {1, 1}});
  Rule mark = make_rule("mark", pattern, pattern, make_lts({{0, "a", 1}, {0, "u", 0}}),
                        {{0, 0}, {1, 1}});
  auto d = detect(tag, mark);
  CHECK(d.stage == DetectionStage::prefilter);  // nothing deleted at all
  CHECK(d.pairs.empty());
  CHECK(oracle::oracle_critical_pairs(tag, mark).empty());
}

TEST_CASE("detection is symmetric") {
  std::mt19937 rng(21);
  for (int i = 0; i < 150; ++i) {
    Rule a = random_rule(rng, "a");
    Rule b = random_rule(rng, "b");
    auto ab = detect_critical_pairs(a, b);
    auto ba = detect_critical_pairs(b, a);
    std::vector<CriticalPair> back;
    for (const auto& p : ba) back.push_back(swapped(p));
    CHECK(same_pair_sets(ab, back));
    for (const auto& p : ab) check_pair_shape(p, a, b);
  }
}
