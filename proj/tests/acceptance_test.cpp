// Acceptance suite: runs every verification scenario and prints one
// pass/fail line per criterion. Each scenario is also registered as its own
// ctest entry through -tc=<name>.
#include <doctest.h>

#include <iostream>

#include "diagmon/verify.hpp"

namespace {

void run_scenario(const char* name) {
  const auto& scenarios = diagmon::all_scenarios();
  for (const auto& s : scenarios) {
    if (s.name != name) continue;
    const diagmon::ScenarioResult r = s.run();
    for (const auto& line : r.notes) std::cout << "  " << line << '\n';
    std::cout << r.summary_line() << std::endl;
    CHECK_MESSAGE(r.pass, r.summary_line());
    return;
  }
  FAIL("unknown scenario");
}

}  // namespace

TEST_CASE("relations") { run_scenario("relations"); }
TEST_CASE("catalan-counts") { run_scenario("catalan-counts"); }
TEST_CASE("brauer-counts") { run_scenario("brauer-counts"); }
TEST_CASE("associativity") { run_scenario("associativity"); }
TEST_CASE("involutions") { run_scenario("involutions"); }
TEST_CASE("fiber-law") { run_scenario("fiber-law"); }
TEST_CASE("k3-quotient") { run_scenario("k3-quotient"); }
TEST_CASE("zimin-fingerprints") { run_scenario("zimin-fingerprints"); }
TEST_CASE("isoterm-b21") { run_scenario("isoterm-b21"); }
TEST_CASE("refutation") { run_scenario("refutation"); }
TEST_CASE("embeddings") { run_scenario("embeddings"); }
TEST_CASE("rees-matrix") { run_scenario("rees-matrix"); }
TEST_CASE("cross-oracle") { run_scenario("cross-oracle"); }
