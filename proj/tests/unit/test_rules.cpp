#include <doctest.h>

#include "fixtures.hpp"
#include "ltsconf/error.hpp"
#include "ltsconf/rules.hpp"

using namespace ltsconf;
using namespace ltsconf::testing;

namespace {

bool has_clause(const ValidationReport& r, char clause) {
  for (const auto& v : r.violations) {
    if (v.clause == clause) return true;
  }
  return false;
}

std::set<Label> labels(std::initializer_list<const char*> names) {
  std::set<Label> out;
  for (const char* n : names) out.insert(Label::parse(n));
  return out;
}

}  // namespace

TEST_CASE("fixture rules validate") {
  for (const char* file : {"postprocess.rules", "send_wait.rules", "send_wait_two_state.rules", "chain_loop.rules",
                           "boundary.rules", "triangle.rules", "double_a.rules"}) {
    CAPTURE(file);
    auto sys = fixture_rules(file);
    for (const auto& r : sys.rules) CHECK(validate_rule(r).ok());
    CHECK_NOTHROW(require_valid(sys));
  }
}

TEST_CASE("recreating a deleted transition between the same glue states is rejected") {
  Rule r = make_rule("again", make_lts({{0, "a", 1}}), Lts({0, 1}, {}),
                     make_lts({{0, "a", 1}}), {{0, 0}, {1, 1}});
  auto report = validate_rule(r);
  CHECK(has_clause(report, 'c'));
  CHECK_THROWS_AS(require_valid(r), Error);
}

TEST_CASE("replacing a state with an identical context is rejected") {
  // Deletes state 1 and recreates it with the same transitions around it.
  Rule r = make_rule("swap", make_lts({{0, "a", 1}}), Lts({0}, {}), make_lts({{0, "a", 2}}),
                     {{0, 0}});
  CHECK(has_clause(validate_rule(r), 'c'));

  Rule ok = make_rule("swap", make_lts({{0, "a", 1}}), Lts({0}, {}), make_lts({{0, "b", 2}}),
                      {{0, 0}});
  CHECK(validate_rule(ok).ok());
}

TEST_CASE("unbound variables in the right pattern are rejected") {
  Rule r = make_rule("unbound", make_lts({{0, "a#1", 1}}), Lts({0, 1}, {}),
                     make_lts({{0, "b#2", 1}}), {{0, 0}, {1, 1}});
  CHECK(has_clause(validate_rule(r), 'd'));
}

TEST_CASE("structural clauses") {
  // Interface state missing from L.
  Rule bad_k = make_rule("k", make_lts({{0, "a", 1}}), Lts({0, 5}, {}), make_lts({{0, "b", 1}}),
                         {{0, 0}, {5, 1}});
  CHECK(has_clause(validate_rule(bad_k), 'a'));

  // Map not total on K.
  Rule partial = make_rule("p", make_lts({{0, "a", 1}}), Lts({0, 1}, {}),
                           make_lts({{0, "b", 1}}), {{0, 0}});
  CHECK(has_clause(validate_rule(partial), 'a'));

  // Map not injective.
  Rule merge = make_rule("m", make_lts({{0, "a", 1}}), Lts({0, 1}, {}), make_lts({{0, "b", 0}}),
                         {{0, 0}, {1, 0}});
  CHECK(has_clause(validate_rule(merge), 'a'));

  // Disconnected right pattern.
  Rule split = make_rule("s", make_lts({{0, "a", 1}}), Lts({0, 1}, {}), Lts({0, 1}, {}),
                         {{0, 0}, {1, 1}});
  CHECK(has_clause(validate_rule(split), 'b'));
}

TEST_CASE("rule systems need unique names") {
  auto sys = fixture_rules("triangle.rules");
  sys.rules.push_back(sys.rules.front());
  CHECK_THROWS_AS(require_valid(sys), Error);
  CHECK(fixture_rules("triangle.rules").find("r2") != nullptr);
  CHECK(fixture_rules("triangle.rules").find("r9") == nullptr);
}

TEST_CASE("glue states") {
  auto chain_loop = fixture_rules("chain_loop.rules");
  CHECK(glue_states(*chain_loop.find("r0")) == std::set<StateId>{0, 1, 2});
  auto postprocess = fixture_rules("postprocess.rules");
  CHECK(glue_states(postprocess.rules[0]) == std::set<StateId>{0, 1});
  Rule no_k = make_rule("n", make_lts({{0, "a", 1}}), Lts(), make_lts({{0, "b", 1}}), {});
  CHECK(glue_states(no_k).empty());
}

TEST_CASE("deletion labels") {
  auto chain_loop = fixture_rules("chain_loop.rules");
  CHECK(deletion_labels(*chain_loop.find("r0")) == labels({"b"}));
  CHECK(deletion_labels(*chain_loop.find("r1")) == labels({"a", "d"}));
  Lts g = make_lts({{0, "a", 1}, {1, "b", 0}});
  Rule id = make_rule("id", g, g, g, {{0, 0}, {1, 1}});
  CHECK(deletion_labels(id).empty());
  CHECK(is_non_deleting(id));
  CHECK_FALSE(is_non_deleting(*chain_loop.find("r0")));
  for (const auto& r : chain_loop.rules) {
    for (const auto& l : deletion_labels(r)) CHECK(r.left.actions().contains(l));
  }
}

TEST_CASE("cover augmentation") {
  auto triangle = fixture_rules("triangle.rules");
  Rule r0k = kappa_augment(triangle.rules[0]);
  CHECK(r0k.right.transition_count() == triangle.rules[0].right.transition_count() + 2);
  CHECK(r0k.left == triangle.rules[0].left);
  CHECK(r0k.interface == triangle.rules[0].interface);
  CHECK(r0k.right.has_transition({0, kappa_label(), 0}));
  CHECK(r0k.right.has_transition({1, kappa_label(), 1}));
  CHECK_THROWS_AS(kappa_augment(r0k), Error);

  auto double_a = fixture_rules("double_a.rules");
  CHECK(kappa_augment(double_a.rules[0]).right.transition_count() == 2 + 3);

  Rule no_k = make_rule("n", make_lts({{0, "a", 1}}), Lts(), make_lts({{0, "b", 1}}), {});
  CHECK(kappa_augment(no_k).right == no_k.right);

  CHECK(kappa_label(4) == Label::with_constant("__kappa", "4"));
}

TEST_CASE("interface never exceeds either side") {
  for (const char* file : {"postprocess.rules", "chain_loop.rules", "boundary.rules", "double_a.rules"}) {
    for (const auto& r : fixture_rules(file).rules) {
      CHECK(r.interface.state_count() <= r.left.state_count());
      CHECK(r.interface.state_count() <= r.right.state_count());
    }
  }
}
