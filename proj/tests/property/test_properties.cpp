#include <doctest.h>

#include <iostream>

#include "properties.hpp"

using namespace ltsconf::testing;

namespace {

void report(const char* name, const PropertyRun& run) {
  std::cout << name << ": " << run.instances << " instances, " << run.interesting
            << " non-trivial, " << run.disagreements.size() << " disagreements\n";
  for (const auto& d : run.disagreements) std::cout << d << "\n";
}

}  // namespace

TEST_CASE("transition-only independence matches the full definition") {
  for (std::uint32_t seed : {101u, 202u, 303u}) {
    auto run = independence_equivalence(seed, 600);
    report("independence", run);
    CHECK(run.instances >= 600);
    CHECK(run.interesting > 0);
    CHECK(run.disagreements.empty());
  }
}

TEST_CASE("detection matches the brute-force oracle") {
  for (std::uint32_t seed : {404u, 505u}) {
    auto run = oracle_equivalence(seed, 250);
    report("oracle", run);
    CHECK(run.interesting > 20);
    CHECK(run.disagreements.empty());
  }
}

TEST_CASE("detection shortcuts are sound") {
  for (std::uint32_t seed : {606u, 707u}) {
    auto run = shortcut_soundness(seed, 150);
    report("shortcuts", run);
    CHECK(run.interesting >= 150);
    CHECK(run.disagreements.empty());
  }
}
