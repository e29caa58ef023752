#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hmeans/hermite.hpp"
#include "hmeans/polynomial.hpp"
#include "test_util.hpp"

using namespace hmeans;

namespace {

FunctionModel random_model(testutil::Rng& rng) {
    switch (rng.integer(0, 3)) {
        case 0: {
            double p = rng.uniform(-3.0, 6.0);
            if (std::abs(p - std::round(p)) < 1e-3) p += 0.37;
            return FunctionModel::power(p);
        }
        case 1: return FunctionModel::log_power(rng.integer(0, 3));
        case 2: return FunctionModel::exponential();
        default: return FunctionModel::power(rng.integer(5, 9));  // integer power, high degree
    }
}

InterpolantSpec random_spec(testutil::Rng& rng, Side side) {
    InterpolantSpec spec;
    spec.m1 = rng.integer(1, 4);
    spec.m2 = rng.integer(0, spec.m1);
    spec.a = rng.uniform(0.4, 3.0);
    spec.b = spec.a + rng.uniform(0.7, 3.0);
    spec.side = side;
    return spec;
}

} // namespace

TEST_CASE("interpolation conditions, worked examples") {
    InterpolantSpec spec{2, 0, 1.0, 2.0, Side::P};
    PolynomialRep p = build_interpolant(FunctionModel::power(4), spec);
    CHECK(p(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p.derivative_at(1.0, 1) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(p.derivative_at(1.0, 2) == doctest::Approx(12.0).epsilon(1e-13));
    CHECK(p(2.0) == doctest::Approx(16.0).epsilon(1e-13));

    // m1 = m2 = 0 is the secant line
    InterpolantSpec secant{0, 0, 1.0, 3.0, Side::P};
    PolynomialRep s = build_interpolant(FunctionModel::exponential(), secant);
    CHECK(s(2.0) == doctest::Approx(0.5 * (std::exp(1.0) + std::exp(3.0))).epsilon(1e-13));

    InterpolantSpec qspec{1, 0, 1.0, 2.0, Side::Q};
    PolynomialRep q = build_interpolant(FunctionModel::power(-1), qspec);
    CHECK(q(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(q(2.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(q.derivative_at(2.0, 1) == doctest::Approx(-0.25).epsilon(1e-13));
}

TEST_CASE("interpolation conditions on a random grid") {
    testutil::Rng rng(731);
    for (int trial = 0; trial < 100; ++trial) {
        FunctionModel model = random_model(rng);
        InterpolantSpec spec = random_spec(rng, trial % 2 ? Side::P : Side::Q);
        PolynomialRep poly = build_interpolant(model, spec);
        int at_a = spec.side == Side::P ? spec.m1 : spec.m2;
        int at_b = spec.side == Side::P ? spec.m2 : spec.m1;
        for (int j = 0; j <= at_a; ++j) {
            double want = eval_deriv(model, spec.a, j);
            CHECK(std::abs(poly.derivative_at(spec.a, j) - want) <= 1e-9 * (1 + std::abs(want)));
        }
        for (int j = 0; j <= at_b; ++j) {
            double want = eval_deriv(model, spec.b, j);
            CHECK(std::abs(poly.derivative_at(spec.b, j) - want) <= 1e-9 * (1 + std::abs(want)));
        }
    }
}

TEST_CASE("explicit double-sum construction agrees with the newton form") {
    FunctionModel model = FunctionModel::power(2.5);
    InterpolantSpec spec{3, 1, 1.0, 2.0, Side::P};
    PolynomialRep newton = build_interpolant(model, spec);
    PolynomialRep explicit_form = explicit_interpolant(model, spec);
    for (int i = 0; i <= 10; ++i) {
        double x = 1.0 + i / 10.0;
        double scale = std::max(1.0, std::abs(newton(x)));
        CHECK(std::abs(explicit_form(x) - newton(x)) <= 1e-9 * scale);
    }
    // restated interpolation data
    InterpolantSpec quartic{2, 0, 1.0, 2.0, Side::P};
    CHECK(explicit_interpolant(FunctionModel::power(4), quartic)(2.0) ==
          doctest::Approx(16.0).epsilon(1e-12));
    InterpolantSpec log_spec{1, 0, 1.0, 2.0, Side::P};
    CHECK(explicit_interpolant(FunctionModel::log_power(0), log_spec)(1.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // and on random specs, both sides
    testutil::Rng rng(90210);
    for (int trial = 0; trial < 40; ++trial) {
        FunctionModel m = random_model(rng);
        InterpolantSpec s = random_spec(rng, trial % 2 ? Side::P : Side::Q);
        PolynomialRep n_form = build_interpolant(m, s);
        PolynomialRep e_form = explicit_interpolant(m, s);
        for (int i = 1; i < 10; ++i) {
            double x = s.a + (s.b - s.a) * i / 10.0;
            CHECK(std::abs(e_form(x) - n_form(x)) <= 1e-8 * std::max(1.0, std::abs(n_form(x))));
        }
    }
}

TEST_CASE("error form equals direct subtraction") {
    FunctionModel model = FunctionModel::power(4);
    InterpolantSpec spec{2, 0, 1.0, 2.0, Side::P};
    PolynomialRep p = build_interpolant(model, spec);
    double direct = eval_deriv(model, 1.5, 0) - p(1.5);
    CHECK(testutil::rel_close(error_at(model, spec, 1.5), direct, 1e-10));

    testutil::Rng rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        FunctionModel m = random_model(rng);
        InterpolantSpec s = random_spec(rng, trial % 2 ? Side::P : Side::Q);
        PolynomialRep poly = build_interpolant(m, s);
        for (int i = 1; i <= 25; ++i) {
            double x = s.a + (s.b - s.a) * i / 26.0;
            double want = eval_deriv(m, x, 0) - poly(x);
            double got = error_at(m, s, x);
            CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("error vanishes at the left node like (x-a)^(m1+1)") {
    // the step cannot be too small: a node at distance eps from the a-block
    // degrades the confluent table like machine-eps/eps^m1
    FunctionModel model = FunctionModel::power(2.5);
    InterpolantSpec spec{2, 1, 1.0, 2.0, Side::P};
    double eps = 1e-2;
    double e1 = error_at(model, spec, 1.0 + eps);
    double e2 = error_at(model, spec, 1.0 + eps / 2);
    CHECK(e1 / e2 == doctest::Approx(std::pow(2.0, spec.m1 + 1)).epsilon(0.1));
    CHECK(std::abs(error_at(model, spec, 1.0 + 1e-4)) < 1e-10);
}

TEST_CASE("error form is exactly the node product for f = x^(n+1)") {
    InterpolantSpec spec{3, 1, 1.0, 2.0, Side::P};
    int n = spec.degree_bound();
    FunctionModel model = FunctionModel::power(static_cast<double>(n + 1));
    for (double x : {1.2, 1.5, 1.9}) {
        double want = std::pow(x - spec.a, spec.m1 + 1) * std::pow(x - spec.b, spec.m2 + 1);
        CHECK(testutil::rel_close(error_at(model, spec, x), want, 1e-12));
    }
}

TEST_CASE("leading coefficient closed form") {
    InterpolantSpec spec{2, 0, 1.0, 2.0, Side::P};
    CHECK(leading_coeff(FunctionModel::power(4), spec) == doctest::Approx(5.0).epsilon(1e-12));
    // interpolant reproduces polynomials of degree <= n: x^2 has no x^3 term,
    // x^3 has coefficient 1
    CHECK(leading_coeff(FunctionModel::power(2), spec) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(leading_coeff(FunctionModel::power(3), spec) == doctest::Approx(1.0).epsilon(1e-12));
    InterpolantSpec small{1, 0, 1.0, 2.0, Side::P};
    CHECK(leading_coeff(FunctionModel::power(-1), small) == doctest::Approx(0.5).epsilon(1e-12));

    testutil::Rng rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        FunctionModel m = random_model(rng);
        InterpolantSpec s = random_spec(rng, trial % 2 ? Side::P : Side::Q);
        PolynomialRep poly = build_interpolant(m, s);
        double newton_top = poly.newton_coeffs().back();
        CHECK(std::abs(leading_coeff(m, s) - newton_top) <=
              1e-9 * std::max(1.0, std::abs(newton_top)));
    }
}

TEST_CASE("monomial conversion matches newton evaluation") {
    testutil::Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        FunctionModel m = random_model(rng);
        InterpolantSpec s = random_spec(rng, Side::P);
        PolynomialRep poly = build_interpolant(m, s);
        auto mono = poly.monomial();
        CHECK(static_cast<int>(mono.size()) - 1 == poly.degree());
        for (int i = 0; i < 5; ++i) {
            double x = rng.uniform(s.a, s.b);
            CHECK(testutil::rel_close(poly::eval(mono, x), poly(x), 1e-8));
        }
    }
}

TEST_CASE("P - Q factors through (x-a)^(m2+1) (x-b)^(m2+1)") {
    testutil::Rng rng(2025);
    for (auto [m1, m2] : {std::pair{2, 0}, std::pair{3, 1}, std::pair{4, 2}, std::pair{3, 0}}) {
        FunctionModel model = FunctionModel::power(rng.uniform(3.3, 6.7));
        InterpolantSpec base{m1, m2, 1.0, 2.0, Side::P};
        InterpolantSpec qspec = base;
        qspec.side = Side::Q;
        auto diff = poly::add(build_interpolant(model, base).monomial(),
                              poly::scale(build_interpolant(model, qspec).monomial(), -1.0));
        double biggest = 0.0;
        for (double c : diff) biggest = std::max(biggest, std::abs(c));
        auto divisor = poly::mul(poly::linear_power(-base.a, m2 + 1),
                                 poly::linear_power(-base.b, m2 + 1));
        auto [quot, rem] = poly::divmod(diff, divisor);
        for (double c : rem) CHECK(std::abs(c) <= 1e-8 * biggest);
        CHECK(static_cast<int>(quot.size()) - 1 == m1 - m2 - 1);
    }
}

TEST_CASE("degenerate m1 == m2 gives P == Q") {
    FunctionModel model = FunctionModel::power(2.5);
    InterpolantSpec p{2, 2, 1.0, 2.0, Side::P};
    InterpolantSpec q = p;
    q.side = Side::Q;
    PolynomialRep pp = build_interpolant(model, p);
    PolynomialRep qq = build_interpolant(model, q);
    for (double x : {1.1, 1.5, 1.9}) CHECK(pp(x) == doctest::Approx(qq(x)).epsilon(1e-14));
}
