#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hmeans/funcmodel.hpp"
#include "test_util.hpp"

using namespace hmeans;

TEST_CASE("derivatives of the stock models") {
    CHECK(eval_deriv(FunctionModel::power(-1), 2.0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_deriv(FunctionModel::power(-1), 1.0, 3) == doctest::Approx(-6.0).epsilon(1e-15));
    CHECK(eval_deriv(FunctionModel::log_power(0), 1.0, 2) ==
          doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(eval_deriv(FunctionModel::log_power(2), 1.0, 4) ==
          doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(eval_deriv(FunctionModel::exponential(), 0.5, 7) ==
          doctest::Approx(std::exp(0.5)).epsilon(1e-15));
    // below the log-degree threshold the log term is still present
    CHECK(eval_deriv(FunctionModel::log_power(2), std::exp(1.0), 1) ==
          doctest::Approx(2 * std::exp(1.0) * 1.0 + std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("derivatives agree with central finite differences") {
    std::vector<FunctionModel> models = {
        FunctionModel::power(2.5),  FunctionModel::power(-1.5), FunctionModel::power(4),
        FunctionModel::log_power(0), FunctionModel::log_power(3), FunctionModel::exponential(),
        FunctionModel::shifted(FunctionModel::power(2.5), {1.0, -2.0, 0.5}),
    };
    for (const auto& model : models) {
        for (double x : {0.5, 1.0, 2.0, std::exp(1.0)}) {
            for (int j = 1; j <= 5; ++j) {
                double h = x * 1e-5;
                double fd = (eval_deriv(model, x + h, j - 1) - eval_deriv(model, x - h, j - 1)) /
                            (2 * h);
                double exact = eval_deriv(model, x, j);
                CAPTURE(model.describe());
                CAPTURE(x);
                CAPTURE(j);
                CHECK(std::abs(fd - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
            }
        }
    }
}

TEST_CASE("scaling multiplies derivatives exactly") {
    FunctionModel base = FunctionModel::power(3.5);
    for (double c : {0.25, 3.0, 1e-12, 7.5e11}) {
        FunctionModel scaled = base.scaled(c);
        for (double x : {0.5, 2.0}) {
            for (int j = 0; j <= 4; ++j) {
                CHECK(eval_deriv(scaled, x, j) == c * eval_deriv(base, x, j));
            }
        }
    }
}

TEST_CASE("domain and overflow errors are loud") {
    CHECK_THROWS_AS(eval_deriv(FunctionModel::power(2), 0.0, 1), std::domain_error);
    CHECK_THROWS_AS(eval_deriv(FunctionModel::power(2), -1.0, 0), std::domain_error);
    CHECK_THROWS_AS(eval_deriv(FunctionModel::power(2000), 2.0, 0), std::range_error);
    CHECK_THROWS_AS(eval_deriv(FunctionModel::power(2), 1.0, -1), std::invalid_argument);
}

TEST_CASE("sign analysis of f^(n+1)") {
    CHECK(check_nonvanishing(FunctionModel::power(4), 3, 1.0, 2.0) == 1);
    CHECK_THROWS_AS(check_nonvanishing(FunctionModel::power(2), 3, 1.0, 2.0),
                    undefined_mean_error);
    CHECK(check_nonvanishing(FunctionModel::log_power(0), 3, 1.0, 2.0) == -1);
    CHECK(check_nonvanishing(FunctionModel::power(-1), 5, 0.3, 9.0) == 1);
    CHECK(check_nonvanishing(FunctionModel::power(-1), 4, 0.3, 9.0) == -1);
    CHECK(check_nonvanishing(FunctionModel::exponential(), 6, 0.5, 4.0) == 1);
    // polynomial offsets of degree <= n cannot disturb the sign
    FunctionModel shifted = FunctionModel::shifted(FunctionModel::power(2.5), {3.0, 1.0, -4.0});
    CHECK(check_nonvanishing(shifted, 2, 1.0, 2.0) ==
          check_nonvanishing(FunctionModel::power(2.5), 2, 1.0, 2.0));
    // x^2 log x has an inflection of its 2nd derivative inside a wide interval:
    // order n = 1 needs f'' = 2 log x + 3 nonvanishing, which fails around
    // x = e^(-3/2) ~ 0.223
    CHECK_THROWS_AS(check_nonvanishing(FunctionModel::log_power(2), 1, 0.05, 1.0),
                    undefined_mean_error);
}

TEST_CASE("model literals parse exactly") {
    CHECK(parse_model("power:-1").kind() == FuncKind::power);
    CHECK(parse_model("power:-1").exponent() == -1.0);
    CHECK(parse_model("power:2.5e-1").exponent() == 0.25);
    CHECK(parse_model("logpower:3").log_degree() == 3);
    CHECK(parse_model("exp").kind() == FuncKind::exponential);
    CHECK_THROWS_AS(parse_model("power:abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("power:1.5x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("logpower:-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("gamma:1"), std::invalid_argument);
}
