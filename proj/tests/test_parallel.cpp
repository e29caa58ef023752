#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hmeans/experiments.hpp"
#include "hmeans/identities.hpp"

using namespace hmeans;

// The OpenMP kernels must be drop-in replacements for the serial reference:
// same case order, same values, bit for bit.

TEST_CASE("identity grid: parallel == serial") {
    IdentityGrid grid;
    grid.max_m = 6;
    IdentitySuiteResult serial = run_identity_grid(grid, Execution::serial);
    IdentitySuiteResult parallel = run_identity_grid(grid, Execution::parallel);
    REQUIRE(serial.instances.size() == parallel.instances.size());
    CHECK(serial.failures == parallel.failures);
    for (std::size_t i = 0; i < serial.instances.size(); ++i) {
        const auto& s = serial.instances[i];
        const auto& p = parallel.instances[i];
        CHECK(s.name == p.name);
        CHECK(s.m1 == p.m1);
        CHECK(s.m2 == p.m2);
        CHECK(s.lhs == p.lhs);
        CHECK(s.rhs == p.rhs);
        CHECK(s.equal == p.equal);
    }
}

TEST_CASE("theorem suites: parallel == serial") {
    for (TheoremSuite suite : {TheoremSuite::harmonic, TheoremSuite::comparability}) {
        SuiteReport serial = run_theorem_suite(suite, Execution::serial);
        SuiteReport parallel = run_theorem_suite(suite, Execution::parallel);
        REQUIRE(serial.cases.size() == parallel.cases.size());
        CHECK(serial.failures == parallel.failures);
        for (std::size_t i = 0; i < serial.cases.size(); ++i) {
            CHECK(serial.cases[i].label == parallel.cases[i].label);
            CHECK(serial.cases[i].pass == parallel.cases[i].pass);
            CHECK(serial.cases[i].residual == parallel.cases[i].residual);  // bitwise
        }
    }
}
