#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "hmeans/divdiff.hpp"
#include "test_util.hpp"

using namespace hmeans;

TEST_CASE("confluent node bookkeeping") {
    ConfluentNodes nodes{{2.0, 1}, {1.0, 2}};
    CHECK(nodes.order() == 2);
    nodes.add(2.0, 2);  // merges, no duplicate entry
    CHECK(nodes.entries().size() == 2);
    CHECK(nodes.total_multiplicity() == 5);
    CHECK_THROWS_AS(nodes.add(3.0, 0), std::invalid_argument);
    auto flat = nodes.flattened_sorted();
    CHECK(flat == std::vector<double>{1.0, 1.0, 2.0, 2.0, 2.0});
}

TEST_CASE("newton table reproduces known divided differences") {
    FunctionModel recip = FunctionModel::power(-1);
    CHECK(divided_difference(recip, {{1.0, 1}, {2.0, 1}}) ==
          doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(divided_difference(recip, {{1.0, 2}, {2.0, 1}}) ==
          doctest::Approx(0.5).epsilon(1e-15));
    // order-4 divided difference of x^4 is its leading coefficient, 1
    FunctionModel quartic = FunctionModel::power(4);
    CHECK(divided_difference(quartic, {{1.0, 3}, {2.0, 2}}) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(divided_difference(quartic, {{0.5, 1}, {1.3, 2}, {2.0, 1}, {3.7, 1}}) ==
          doctest::Approx(1.0).epsilon(1e-13));
    // one order below the degree: the complete homogeneous sum of the nodes
    CHECK(divided_difference(quartic, {{1.0, 3}, {2.0, 1}}) ==
          doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("reciprocal closed form") {
    CHECK(divdiff_reciprocal_closed({{1.0, 1}, {2.0, 1}}) == doctest::Approx(-0.5));
    CHECK(divdiff_reciprocal_closed({{3.0, 1}, {1.0, 2}, {2.0, 1}}) ==
          doctest::Approx(-1.0 / 6.0));
    CHECK(divdiff_reciprocal_closed({{2.0, 1}}) == doctest::Approx(0.5));
    // matches the table across assorted node sets
    testutil::Rng rng(42);
    FunctionModel recip = FunctionModel::power(-1);
    for (int trial = 0; trial < 25; ++trial) {
        ConfluentNodes nodes;
        int distinct = rng.integer(1, 3);
        for (int i = 0; i < distinct; ++i)
            nodes.add(rng.uniform(0.3, 5.0), rng.integer(1, 3));
        CHECK(testutil::rel_close(divided_difference(recip, nodes),
                                  divdiff_reciprocal_closed(nodes), 1e-11));
    }
}

TEST_CASE("table stores derivative blocks on the confluent diagonal") {
    FunctionModel f = FunctionModel::log_power(1);
    std::vector<double> z{1.5, 1.5, 1.5, 2.5};
    DividedDifferenceTable<double> table(f, z);
    CHECK(table.entry(0, 0) == doctest::Approx(eval_deriv(f, 1.5, 0)));
    CHECK(table.entry(0, 1) == doctest::Approx(eval_deriv(f, 1.5, 1)));
    CHECK(table.entry(0, 2) == doctest::Approx(eval_deriv(f, 1.5, 2) / 2.0));
    CHECK(table.top() == doctest::Approx(divided_difference(f, {{1.5, 3}, {2.5, 1}})));
}

TEST_CASE("permutation invariance over entry order") {
    FunctionModel f = FunctionModel::power(2.5);
    std::vector<std::pair<double, int>> entries{{0.7, 2}, {1.4, 1}, {2.2, 3}, {4.1, 1}};
    std::vector<int> idx(entries.size());
    std::iota(idx.begin(), idx.end(), 0);
    double reference = 0.0;
    bool first = true;
    do {
        ConfluentNodes nodes;
        for (int i : idx) nodes.add(entries[i].first, entries[i].second);
        double value = divided_difference(f, nodes);
        if (first) {
            reference = value;
            first = false;
        } else {
            CHECK(value == reference);  // same sorted table, bit for bit
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("mean value bound for monotone top derivative") {
    // f = x^6 over 4 nodes: the order-3 divided difference equals
    // f'''(zeta)/3! for some zeta between the extreme nodes
    FunctionModel f = FunctionModel::power(6);
    ConfluentNodes nodes{{1.0, 1}, {1.5, 1}, {2.5, 1}, {4.0, 1}};
    double dd = divided_difference(f, nodes);
    double lo = eval_deriv(f, 1.0, 3) / 6.0;
    double hi = eval_deriv(f, 4.0, 3) / 6.0;
    CHECK(dd >= lo);
    CHECK(dd <= hi);
    // and with confluency
    ConfluentNodes conf{{1.0, 2}, {4.0, 3}};
    double dd2 = divided_difference(f, conf);
    double lo2 = eval_deriv(f, 1.0, 4) / 24.0;
    double hi2 = eval_deriv(f, 4.0, 4) / 24.0;
    CHECK(dd2 >= lo2);
    CHECK(dd2 <= hi2);
}

TEST_CASE("x-derivative of a divided difference doubles the node") {
    FunctionModel f = FunctionModel::power(3.5);
    int m1 = 2, m2 = 1;
    double a = 1.0, b = 2.0;
    for (double x : {1.2, 1.5, 1.8}) {
        double h = 1e-6;
        auto h1 = [&](double t) {
            return divided_difference(f, {{t, 1}, {a, m1 + 1}, {b, m2 + 1}});
        };
        double fd = (h1(x + h) - h1(x - h)) / (2 * h);
        double doubled = divided_difference(f, {{x, 2}, {a, m1 + 1}, {b, m2 + 1}});
        CHECK(std::abs(fd - doubled) <= 1e-6 * std::max(1.0, std::abs(doubled)));
    }
}

TEST_CASE("spitzbart closed form") {
    // matches the reciprocal closed form through the table identity
    CHECK(testutil::rel_close(spitzbart_power(3.0, 1.0, 2.0, 1, 0, -1.0),
                              divdiff_reciprocal_closed({{3.0, 1}, {1.0, 2}, {2.0, 1}}),
                              1e-12));
    // any order-4 divided difference of x^4 is 1
    CHECK(spitzbart_power(1.5, 1.0, 2.0, 2, 0, 4.0) == doctest::Approx(1.0).epsilon(1e-12));
    // table oracle at a half-integer exponent
    FunctionModel f = FunctionModel::power(2.5);
    CHECK(testutil::rel_close(spitzbart_power(1.3, 1.0, 2.0, 3, 1, 2.5),
                              divided_difference(f, {{1.3, 1}, {1.0, 4}, {2.0, 2}}), 1e-10));
    CHECK_THROWS_AS(spitzbart_power(1.0, 1.0, 2.0, 1, 0, 2.5), std::domain_error);
}

TEST_CASE("spitzbart vs newton table on a random grid") {
    testutil::Rng rng(20240817);
    int checked = 0;
    while (checked < 200) {
        double p = rng.uniform(-3.0, 6.0);
        if (std::abs(p - std::round(p)) < 1e-3) continue;  // integer p: different code path
        int m1 = rng.integer(0, 4);
        int m2 = rng.integer(0, 4);
        double a = rng.uniform(0.4, 3.0);
        double b = a + rng.uniform(0.7, 3.0);
        double x = a + (b - a) * rng.uniform(0.15, 0.85);
        double closed = spitzbart_power(x, a, b, m1, m2, p);
        double table = divided_difference(FunctionModel::power(p),
                                          {{x, 1}, {a, m1 + 1}, {b, m2 + 1}});
        CAPTURE(p);
        CAPTURE(m1);
        CAPTURE(m2);
        CHECK(testutil::rel_close(closed, table, 1e-9));
        ++checked;
    }
}
